"""Catalytic-transfer analysis.

An ancillary entangled state can unlock an otherwise forbidden step only if
the initial and final total states are incomparable: f1 >= 0, f2 < 0,
f3 >= 0. Below the swap point the first two always hold, so the window of
catalytically reachable acceptor angles is the interval where f3 is
positive -- bounded above by the swap point and below by the second root of
f3 = 0. The window opens only when the donor angle exceeds a critical value
beta_c(dbeta).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Iterable, Optional

from .entropy import QUARTER_PI, check_angle, solve_delta_alpha
from .errors import BracketError, DomainError
from .majorization import SLACK_TOL
from .roots import bisect_root
from .transfer import TransferProblem, alpha_star, f_slacks

#: Default angle tolerance for the critical-angle and root bisections.
ROOT_TOL = 1e-9

#: Bracket inset for the lower-root bisection. f3 < 0 already holds at
#: alpha = 0; the inset only keeps clear of derivative singularities.
EDGE_INSET = 1e-6


@dataclass(frozen=True)
class CatalysisRegion:
    """Catalytic window of acceptor angles for fixed (beta, dbeta).

    Nonempty only above the critical donor angle; then the window is the
    open interval (lower_root, upper_root) with upper_root the swap point.
    At the critical angle itself the two roots are degenerate and the window
    has zero width; below it no roots exist.
    """

    beta: float
    dbeta: float
    lower_root: Optional[float]
    upper_root: Optional[float]
    nonempty: bool


def catalysis_possible(problem: TransferProblem, *, tol: float = SLACK_TOL) -> bool:
    """Incomparability of the initial and final total states.

    Requires f1 >= 0 and f3 >= 0 (within tolerance) with f2 strictly
    negative. Strictness is enforced beyond the same tolerance: at the swap
    point f2 vanishes up to rounding dust, and that boundary is classified
    as the swap point (the plain step already succeeds there), not as a
    catalysis candidate.
    """
    s = f_slacks(problem)
    return s.f1 >= -tol and s.f2 < -tol and s.f3 >= -tol


def _beta_c_residual(beta: float, dbeta: float) -> float:
    lhs = (math.sin(beta) / math.sin(beta - dbeta)) ** 2
    return lhs - math.log(math.tan(beta - dbeta)) / math.log(math.tan(beta))


def solve_beta_c(dbeta: float, tol: float = ROOT_TOL) -> float:
    """Critical donor angle above which a catalytic window opens.

    Solves (sin b / sin(b - dbeta))^2 = ln tan(b - dbeta) / ln tan b on
    (dbeta, pi/4) by bracketed bisection to angle tolerance ``tol``. At the
    root, the derivative of f3 with respect to alpha vanishes at the swap
    point, which is exactly the root-degeneracy condition.
    """
    if not 0.0 < dbeta < QUARTER_PI:
        raise DomainError(f"dbeta={dbeta!r} outside (0, pi/4)")
    if tol <= 0.0:
        raise DomainError(f"tol={tol!r} must be positive")
    lo = dbeta + 1e-12
    hi = QUARTER_PI - 1e-12
    if lo >= hi:
        raise DomainError(f"dbeta={dbeta!r} leaves no room below pi/4")
    return bisect_root(
        lambda b: _beta_c_residual(b, dbeta), lo, hi, xtol=tol
    )


def _f3(alpha: float, beta: float, dbeta: float) -> float:
    # Smallest-coefficient slack with dalpha re-solved at every trial alpha.
    dalpha = solve_delta_alpha(alpha, beta, dbeta)
    return math.sin(alpha) * math.sin(beta) - math.sin(alpha + dalpha) * math.sin(
        beta - dbeta
    )


def f3_roots(
    beta: float,
    dbeta: float,
    *,
    tol: float = ROOT_TOL,
    beta_c: Optional[float] = None,
) -> CatalysisRegion:
    """Both roots of f3 = 0 bounding the catalytic window.

    The upper root is the swap point (analytic). The lower root is bisected
    on [EDGE_INSET, upper - EDGE_INSET]; when the window is narrower than
    the inset the bracket is walked toward the swap point before bisecting.
    Pass ``beta_c`` to reuse a precomputed critical angle across a sweep.
    """
    check_angle(beta, "beta")
    if not 0.0 < dbeta <= beta + 1e-12:
        raise DomainError(f"dbeta={dbeta!r} outside (0, beta={beta!r}]")
    if beta_c is None:
        beta_c = solve_beta_c(dbeta, tol)
    upper = alpha_star(beta, dbeta)
    if beta <= beta_c:
        if beta >= beta_c - tol:
            # Degenerate window: both roots collapse onto the swap point.
            return CatalysisRegion(beta, dbeta, upper, upper, False)
        return CatalysisRegion(beta, dbeta, None, None, False)

    lo = EDGE_INSET
    inset = EDGE_INSET
    hi = upper - inset
    if hi <= lo:
        return CatalysisRegion(beta, dbeta, upper, upper, False)
    f_hi = _f3(hi, beta, dbeta)
    while f_hi <= 0.0 and inset > 1e-13:
        inset *= 0.01
        hi = upper - inset
        f_hi = _f3(hi, beta, dbeta)
    if f_hi <= 0.0:
        # No resolvable positive bump: numerically degenerate window.
        return CatalysisRegion(beta, dbeta, upper, upper, False)
    lower = bisect_root(lambda a: _f3(a, beta, dbeta), lo, hi, xtol=tol)
    return CatalysisRegion(beta, dbeta, lower, upper, True)


def region_sweep(
    dbeta_values: Iterable[float],
    grid_points: int,
    *,
    beta_max: float = QUARTER_PI,
    tol: float = ROOT_TOL,
) -> list[CatalysisRegion]:
    """Root pairs over a donor-angle grid for each decrement.

    For each dbeta the grid spans [beta_c, beta_max], so the first row is the
    degenerate window at the critical angle and every later row is nonempty.
    A point whose root bisection fails is skipped with a warning; the sweep
    continues.
    """
    if grid_points < 2:
        raise DomainError(f"grid_points={grid_points!r} must be at least 2")
    check_angle(beta_max, "beta_max")
    regions: list[CatalysisRegion] = []
    for dbeta in dbeta_values:
        beta_c = solve_beta_c(dbeta, tol)
        if beta_max < beta_c:
            continue
        for i in range(grid_points):
            beta = beta_c + (beta_max - beta_c) * i / (grid_points - 1)
            try:
                regions.append(f3_roots(beta, dbeta, tol=tol, beta_c=beta_c))
            except BracketError as exc:
                warnings.warn(
                    f"skipping beta={beta:.12g}, dbeta={dbeta:.12g}: {exc}",
                    RuntimeWarning,
                    stacklevel=2,
                )
    return regions
