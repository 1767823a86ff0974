"""Feasibility analysis of a single reliable transfer step.

For fixed donor angle beta and decrement dbeta, the acceptor increment
dalpha is an implicit function of alpha through the entropy balance. The
three square-root slack functionals f1, f2, f3 compare the 4-dimensional
spectra before and after the step; all three are simultaneously nonnegative
only at the swap point alpha* = beta - dbeta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .entropy import (
    ANGLE_TOL,
    DOMAIN_SLACK,
    ENTROPY_TOL,
    QUARTER_PI,
    angle_for_entanglement,
    check_angle,
    entanglement_gain,
    entanglement_of,
    solve_delta_alpha,
)
from .errors import DomainError, SingularPointError
from .majorization import SLACK_TOL, majorizes, schmidt_vector_of_pair

#: A candidate alpha within this window of the swap point counts as alpha*.
ALPHA_STAR_TOL = 1e-9

#: Guard on the stored entropy-balance residual of a TransferProblem.
BALANCE_GUARD = 1e-8

REGIME_BELOW = "below"
REGIME_MIDDLE = "middle"
REGIME_ABOVE = "above"


@dataclass(frozen=True)
class TransferProblem:
    """One transfer instance: the three free parameters plus the balanced
    acceptor increment dalpha."""

    alpha: float
    beta: float
    dbeta: float
    dalpha: float

    def __post_init__(self):
        check_angle(self.alpha, "alpha")
        check_angle(self.beta, "beta")
        if not -DOMAIN_SLACK <= self.dbeta <= self.beta + DOMAIN_SLACK:
            raise DomainError(f"dbeta={self.dbeta!r} outside [0, beta={self.beta!r}]")
        if self.dalpha < -DOMAIN_SLACK:
            raise DomainError(f"dalpha={self.dalpha!r} is negative")
        check_angle(self.alpha + self.dalpha, "alpha + dalpha")
        residual = (
            entanglement_of(self.beta)
            + entanglement_of(self.alpha)
            - entanglement_of(self.beta - self.dbeta)
            - entanglement_of(self.alpha + self.dalpha)
        )
        if abs(residual) > BALANCE_GUARD:
            raise DomainError(
                f"dalpha does not balance the entropy ledger (residual {residual:.3g})"
            )

    @classmethod
    def solve(
        cls,
        alpha: float,
        beta: float,
        dbeta: float,
        *,
        entropy_tol: float = ENTROPY_TOL,
        angle_tol: float = ANGLE_TOL,
    ) -> "TransferProblem":
        """Build a problem with dalpha from the entropy-balance solver."""
        dalpha = solve_delta_alpha(
            alpha, beta, dbeta, entropy_tol=entropy_tol, angle_tol=angle_tol
        )
        return cls(alpha, beta, dbeta, dalpha)

    def before_vector(self):
        return schmidt_vector_of_pair(self.alpha, self.beta)

    def after_vector(self):
        return schmidt_vector_of_pair(self.alpha + self.dalpha, self.beta - self.dbeta)


@dataclass(frozen=True)
class FSlacks:
    """The three slack functionals and the ordering regime of the middle one."""

    f1: float
    f2: float
    f3: float
    regime_of_f2: str


def _f2_regime(problem: TransferProblem) -> str:
    if problem.alpha > problem.beta:
        return REGIME_ABOVE
    if problem.alpha + problem.dalpha < problem.beta - problem.dbeta:
        return REGIME_BELOW
    return REGIME_MIDDLE


def f_slacks(problem: TransferProblem) -> FSlacks:
    """f1, f2, f3 evaluated on the numerically sorted spectra.

    f1 and f3 compare the square roots of the largest and smallest
    coefficients; f2 compares the square roots of the two-largest prefix
    sums. Nonnegativity of all three is equivalent to the prefix-sum
    dominance test in 4 dimensions.
    """
    lam = problem.before_vector().coeffs
    lam_p = problem.after_vector().coeffs
    f1 = math.sqrt(lam_p[0]) - math.sqrt(lam[0])
    f2 = math.sqrt(lam_p[0] + lam_p[1]) - math.sqrt(lam[0] + lam[1])
    f3 = math.sqrt(lam[3]) - math.sqrt(lam_p[3])
    return FSlacks(f1=f1, f2=f2, f3=f3, regime_of_f2=_f2_regime(problem))


def f2_regime_formula(problem: TransferProblem) -> float:
    """Closed-form f2 by ordering regime; must match f_slacks(...).f2.

    The sorted-spectrum value is canonical. This expression exists so the
    regime decomposition can be cross-checked against it.
    """
    regime = _f2_regime(problem)
    if regime == REGIME_BELOW:
        return math.cos(problem.alpha + problem.dalpha) - math.cos(problem.alpha)
    if regime == REGIME_MIDDLE:
        return math.cos(problem.beta - problem.dbeta) - math.cos(problem.alpha)
    return math.cos(problem.beta - problem.dbeta) - math.cos(problem.beta)


def _log_tan_ratio(problem: TransferProblem) -> float:
    # ln tan alpha / ln tan(alpha + dalpha): singular at alpha = 0 and at
    # alpha + dalpha = pi/4. Callers fall back to finite differences there.
    if problem.alpha <= 0.0:
        raise SingularPointError("closed-form derivative is singular at alpha = 0")
    top = math.log(math.tan(problem.alpha + problem.dalpha))
    if top == 0.0:
        raise SingularPointError(
            "closed-form derivative is singular at alpha + dalpha = pi/4"
        )
    return math.log(math.tan(problem.alpha)) / top


def df1_dalpha(problem: TransferProblem) -> float:
    """Derivative of f1 with respect to alpha along the entropy balance.

    Negative everywhere on the open feasible interval, which is what pins
    f1 to a single zero crossing at the swap point.
    """
    ratio = _log_tan_ratio(problem)
    scale = math.cos(problem.alpha) / math.cos(problem.alpha + problem.dalpha)
    return math.sin(problem.alpha) * (
        math.cos(problem.beta)
        - math.cos(problem.beta - problem.dbeta) * scale * ratio
    )


def df3_dalpha(problem: TransferProblem) -> float:
    """Derivative of f3 with respect to alpha along the entropy balance.

    Vanishes at the swap point exactly when the donor sits at the critical
    angle; its sign there decides whether a catalytic window is open.
    """
    ratio = _log_tan_ratio(problem)
    scale = math.sin(problem.alpha) / math.sin(problem.alpha + problem.dalpha)
    return math.cos(problem.alpha) * (
        math.sin(problem.beta)
        - math.sin(problem.beta - problem.dbeta) * scale * ratio
    )


def alpha_star(beta: float, dbeta: float) -> float:
    """The swap point beta - dbeta: the only acceptor angle where the
    reliable step is possible."""
    check_angle(beta, "beta")
    if not -DOMAIN_SLACK <= dbeta <= beta + DOMAIN_SLACK:
        raise DomainError(f"dbeta={dbeta!r} outside [0, beta={beta!r}]")
    return beta - dbeta


def max_acceptor_angle(beta: float, dbeta: float) -> float:
    """Largest acceptor angle that still has room for the transferred ebits;
    there the balanced acceptor lands exactly on pi/4."""
    gain = entanglement_gain(beta, dbeta)
    return angle_for_entanglement(1.0 - gain)


def reliable_transfer_possible(
    problem: TransferProblem, *, tol: float = SLACK_TOL
) -> bool:
    """LOCC feasibility of the step: the final spectrum must majorize the
    initial one. True only within tolerance of the swap point (or for a
    zero decrement, which is the identity)."""
    report = majorizes(problem.before_vector(), problem.after_vector(), tol=tol)
    return report.feasible
