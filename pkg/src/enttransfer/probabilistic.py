"""Maximum success probability of a single-copy probabilistic conversion.

When the reliable step is forbidden, the best any measurement strategy can
do is the minimum over the tail-sum ratios of the initial and final
spectra. For two qubit pairs that is three ratios; they are computed
generically from the sorted vectors so degenerate spectra are covered too.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .majorization import majorizes
from .transfer import TransferProblem, alpha_star, max_acceptor_angle


@dataclass(frozen=True)
class ProbabilityResult:
    """Best conversion probability and the index of the binding tail ratio.

    Term k compares the probability mass outside the k largest coefficients
    before and after the step (k = 1..3 for two qubit pairs). p_max is 1
    exactly when the final spectrum majorizes the initial one.
    """

    p_max: float
    binding_term: int


def p_max(problem: TransferProblem) -> ProbabilityResult:
    """Minimum tail-sum ratio of the before/after spectra, clamped to 1.

    When the step already passes the majorization test the probability is
    exactly 1 (the ratios then sit at 1 up to solver dust), so the
    p_max = 1 <=> feasible equivalence holds by construction. An exactly
    zero final tail counts as ratio one when the initial tail is zero too,
    and is left out of the minimum when the initial tail is positive (that
    mass is already reachable deterministically).
    """
    before = problem.before_vector()
    after = problem.after_vector()
    dim = max(len(before.coeffs), len(after.coeffs))
    ratios: list[tuple[int, float]] = []
    for k in range(1, dim):
        tail_before = math.fsum(before.coeffs[k:])
        tail_after = math.fsum(after.coeffs[k:])
        if tail_after == 0.0:
            if tail_before == 0.0:
                ratios.append((k, 1.0))
            continue
        ratios.append((k, tail_before / tail_after))
    if not ratios:
        return ProbabilityResult(p_max=1.0, binding_term=1)
    binding, smallest = min(ratios, key=lambda item: item[1])
    if majorizes(before, after).feasible:
        return ProbabilityResult(p_max=1.0, binding_term=binding)
    return ProbabilityResult(p_max=min(1.0, smallest), binding_term=binding)


def pmax_sweep(
    beta: float, dbeta: float, grid_points: int
) -> list[tuple[float, float, float, int]]:
    """Rows (alpha, dalpha, p_max, binding_term) over the feasible range.

    The grid spans [0, max_acceptor_angle] and the swap point is inserted,
    so the sweep attains probability 1 exactly once, there.
    """
    if grid_points < 2:
        raise DomainError(f"grid_points={grid_points!r} must be at least 2")
    top = max_acceptor_angle(beta, dbeta)
    swap = alpha_star(beta, dbeta)
    grid = {top * i / (grid_points - 1) for i in range(grid_points)}
    if 0.0 <= swap <= top:
        grid.add(swap)
    rows = []
    for alpha in sorted(grid):
        problem = TransferProblem.solve(alpha, beta, dbeta)
        result = p_max(problem)
        rows.append((alpha, problem.dalpha, result.p_max, result.binding_term))
    return rows
