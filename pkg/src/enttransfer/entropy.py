"""Angle and entropy primitives shared by all analysis modules.

A two-qubit pure state is parametrized by its Schmidt angle theta in
[0, pi/4]; its decreasingly ordered squared Schmidt coefficients are
{cos^2 theta, sin^2 theta} and its entanglement is the binary entropy
H[cos^2 theta], measured in ebits. On this range the entanglement is a
strictly increasing bijection onto [0, 1], which is what makes the implicit
entropy-balance equation solvable by bracketed bisection.

All functions are pure; there is no shared mutable state.
"""

from __future__ import annotations

import math

from .errors import DomainError, HeadroomError
from .roots import bisect_root

QUARTER_PI = math.pi / 4

#: Slack accepted when validating angles and probabilities. Absorbs
#: floating-point dust from upstream arithmetic without admitting genuinely
#: out-of-range inputs.
DOMAIN_SLACK = 1e-12

#: Default absolute tolerance on the entropy residual of the balance solver.
ENTROPY_TOL = 1e-12

#: Default bracket width, in radians, at which angle bisections stop.
ANGLE_TOL = 1e-12


def check_angle(theta: float, name: str = "theta") -> float:
    """Validate a Schmidt angle and return it unchanged."""
    if not -DOMAIN_SLACK <= theta <= QUARTER_PI + DOMAIN_SLACK:
        raise DomainError(f"{name}={theta!r} outside the Schmidt range [0, pi/4]")
    return theta


def _entropy_pair(p: float, q: float) -> float:
    # 0 * log 0 = 0 convention: zero terms contribute nothing.
    h = 0.0
    if p > 0.0:
        h -= p * math.log2(p)
    if q > 0.0:
        h -= q * math.log2(q)
    return h


def binary_entropy(x: float) -> float:
    """Shannon entropy, in bits, of the distribution {x, 1 - x}.

    Symmetric about x = 1/2; both endpoints return exactly 0.0.
    """
    if not -DOMAIN_SLACK <= x <= 1.0 + DOMAIN_SLACK:
        raise DomainError(f"probability x={x!r} outside [0, 1]")
    x = min(max(x, 0.0), 1.0)
    return _entropy_pair(x, 1.0 - x)


def entanglement_of(theta: float) -> float:
    """Entanglement, in ebits, of the two-qubit state with Schmidt angle theta.

    Strictly increasing on [0, pi/4]: 0 at a product state, 1 at a maximally
    entangled one. The complement is computed as sin^2 rather than
    1 - cos^2, which keeps precision near theta = 0.
    """
    check_angle(theta)
    c = math.cos(theta)
    s = math.sin(theta)
    return _entropy_pair(c * c, s * s)


def angle_for_entanglement(
    ebits: float, *, angle_tol: float = ANGLE_TOL, entropy_tol: float = ENTROPY_TOL
) -> float:
    """Inverse of entanglement_of: the Schmidt angle carrying ``ebits``."""
    if not -DOMAIN_SLACK <= ebits <= 1.0 + DOMAIN_SLACK:
        raise DomainError(f"ebits={ebits!r} outside [0, 1]")
    if ebits <= 0.0:
        return 0.0
    if ebits >= 1.0:
        return QUARTER_PI
    return bisect_root(
        lambda t: entanglement_of(t) - ebits,
        0.0,
        QUARTER_PI,
        xtol=angle_tol,
        ftol=entropy_tol,
    )


def entanglement_gain(beta: float, dbeta: float) -> float:
    """Ebits released when the donor angle drops from beta to beta - dbeta."""
    check_angle(beta, "beta")
    if not -DOMAIN_SLACK <= dbeta <= beta + DOMAIN_SLACK:
        raise DomainError(f"dbeta={dbeta!r} outside [0, beta={beta!r}]")
    return entanglement_of(beta) - entanglement_of(beta - dbeta)


def solve_delta_alpha(
    alpha: float,
    beta: float,
    dbeta: float,
    *,
    entropy_tol: float = ENTROPY_TOL,
    angle_tol: float = ANGLE_TOL,
) -> float:
    """Acceptor angle increment balancing the donor's entanglement loss.

    Solves H[cos^2 beta] + H[cos^2 alpha]
         = H[cos^2(beta - dbeta)] + H[cos^2(alpha + dalpha)]
    for the unique dalpha >= 0, by bisecting the strictly increasing map
    dalpha -> H[cos^2(alpha + dalpha)] over [0, pi/4 - alpha]. Iteration
    stops once the bracket is narrower than ``angle_tol`` and the entropy
    residual is below ``entropy_tol``.

    Raises HeadroomError when the required gain would push the acceptor past
    the maximally entangled point (alpha + dalpha > pi/4).
    """
    check_angle(alpha, "alpha")
    gain = entanglement_gain(beta, dbeta)
    if gain <= 0.0:
        return 0.0
    target = entanglement_of(alpha) + gain
    room = QUARTER_PI - alpha
    top = entanglement_of(QUARTER_PI)
    if target >= top:
        # Either the acceptor lands exactly on pi/4 or the request is infeasible.
        if target - top <= entropy_tol:
            return room
        raise HeadroomError(
            f"gain of {gain:.12g} ebits exceeds acceptor headroom "
            f"{top - entanglement_of(alpha):.12g} at alpha={alpha!r}"
        )
    return bisect_root(
        lambda x: entanglement_of(alpha + x) - target,
        0.0,
        room,
        xtol=angle_tol,
        ftol=entropy_tol,
    )
