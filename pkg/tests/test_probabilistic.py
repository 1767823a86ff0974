"""Maximum conversion probability and the binding tail ratio."""

import math
import random

import pytest

from enttransfer import (
    TransferProblem,
    alpha_star,
    majorizes,
    max_acceptor_angle,
    p_max,
    pmax_sweep,
)


def tail_ratios(problem):
    """Independent recomputation of the three tail-sum ratios."""
    before = problem.before_vector().coeffs
    after = problem.after_vector().coeffs
    out = {}
    for k in (1, 2, 3):
        tb = math.fsum(before[k:])
        ta = math.fsum(after[k:])
        if ta == 0.0:
            if tb == 0.0:
                out[k] = 1.0
            continue
        out[k] = tb / ta
    return out


def test_unit_probability_at_swap_point():
    for beta, dbeta in ((math.pi / 10, 0.01), (0.5, 0.1), (0.7, 0.2)):
        problem = TransferProblem.solve(alpha_star(beta, dbeta), beta, dbeta)
        assert p_max(problem).p_max == 1.0


def test_unit_probability_for_zero_decrement():
    result = p_max(TransferProblem.solve(0.3, 0.5, 0.0))
    assert result.p_max == 1.0


def test_binding_terms_switch_across_swap_point():
    beta, dbeta = math.pi / 10, 0.01
    swap = alpha_star(beta, dbeta)
    below = p_max(TransferProblem.solve(swap - 0.05, beta, dbeta))
    above = p_max(TransferProblem.solve(swap + 0.05, beta, dbeta))
    assert below.binding_term == 2
    assert above.binding_term == 1
    assert below.p_max < 1.0 and above.p_max < 1.0


def test_probability_one_iff_majorization_feasible():
    rng = random.Random(311)
    ones = 0
    for _ in range(2000):
        beta = rng.uniform(0.05, math.pi / 4)
        dbeta = rng.uniform(0.0, beta)
        # Bias toward the swap point so the feasible branch is exercised.
        if rng.random() < 0.1:
            alpha = alpha_star(beta, dbeta)
        else:
            alpha = rng.uniform(0.0, max_acceptor_angle(beta, dbeta))
        problem = TransferProblem.solve(alpha, beta, dbeta)
        result = p_max(problem)
        feasible = majorizes(problem.before_vector(), problem.after_vector()).feasible
        assert (result.p_max == 1.0) == feasible
        if abs(result.p_max - 1.0) < 1e-10:
            assert feasible
        ones += result.p_max == 1.0
    assert ones >= 150


def test_ratios_dominate_reported_probability():
    rng = random.Random(313)
    for _ in range(500):
        beta = rng.uniform(0.05, math.pi / 4)
        dbeta = rng.uniform(0.0, beta)
        alpha = rng.uniform(0.0, max_acceptor_angle(beta, dbeta))
        problem = TransferProblem.solve(alpha, beta, dbeta)
        result = p_max(problem)
        ratios = tail_ratios(problem)
        assert all(r >= result.p_max - 1e-12 for r in ratios.values())
        assert result.binding_term in ratios
        assert ratios[result.binding_term] == min(ratios.values())


def test_probability_degrades_away_from_swap_point():
    for beta, dbeta in ((math.pi / 10, 0.01), (0.5, 0.01)):
        swap = alpha_star(beta, dbeta)
        top = max_acceptor_angle(beta, dbeta)
        left = [swap - 0.1 + 0.1 * i / 50 for i in range(51)]
        right = [swap + 0.1 * i / 50 for i in range(51) if swap + 0.1 * i / 50 <= top]
        p_left = [
            p_max(TransferProblem.solve(a, beta, dbeta)).p_max for a in left
        ]
        p_right = [
            p_max(TransferProblem.solve(a, beta, dbeta)).p_max for a in right
        ]
        assert all(b >= a - 1e-12 for a, b in zip(p_left, p_left[1:]))
        assert all(b <= a + 1e-12 for a, b in zip(p_right, p_right[1:]))


def test_zero_after_tails_use_documented_conventions():
    # Full hand-off from a donor at 0.3 onto an empty acceptor is a swap:
    # both zero tails pair up and the probability is one.
    swap_case = p_max(TransferProblem.solve(0.0, 0.3, 0.3))
    assert swap_case.p_max == 1.0

    # Entangled acceptor, donor emptied completely: the final spectrum has
    # rank 2, so the k = 2, 3 tails vanish and only the first ratio binds.
    problem = TransferProblem.solve(0.2, 0.3, 0.3)
    result = p_max(problem)
    before = problem.before_vector().coeffs
    after = problem.after_vector().coeffs
    expected = (1.0 - before[0]) / (1.0 - after[0])
    assert result.binding_term == 1
    assert result.p_max == pytest.approx(min(1.0, expected), abs=1e-12)


def test_rank_increasing_edge_has_zero_probability():
    # A product acceptor cannot be probabilistically pushed to a rank-4
    # target: the smallest-tail ratio is 0/positive.
    result = p_max(TransferProblem.solve(0.0, math.pi / 10, 0.01))
    assert result.p_max == 0.0


def test_sweep_peaks_exactly_once_at_swap_point():
    beta, dbeta = math.pi / 10, 0.01
    swap = alpha_star(beta, dbeta)
    rows = pmax_sweep(beta, dbeta, 300)
    alphas = [row[0] for row in rows]
    assert alphas == sorted(alphas)
    unit_rows = [row for row in rows if row[2] == 1.0]
    assert len(unit_rows) == 1
    assert unit_rows[0][0] == swap
    assert all(row[2] < 1.0 for row in rows if row[0] != swap)


def test_sweep_trivial_for_zero_decrement():
    rows = pmax_sweep(0.5, 0.0, 50)
    assert all(row[2] == 1.0 for row in rows)
