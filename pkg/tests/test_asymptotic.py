"""Copy accounting in the many-copy limit."""

import math
import random

import pytest

from enttransfer import (
    DegenerateDilutionError,
    DomainError,
    HeadroomError,
    asymptotic_ledger,
    entanglement_of,
    max_acceptor_angle,
    solve_delta_alpha,
)

# Frozen from a 60-digit evaluation at (alpha, beta, dbeta, n) =
# (0.3, 0.6, 0.1, 10^6).
SINGLETS_ORACLE = 903094.862481601
SURPLUS_ORACLE = 161166.84470486941
INTERMEDIATE_ORACLE = 549666.3786114465


def test_ledger_matches_high_precision_oracle():
    ledger = asymptotic_ledger(0.3, 0.6, 0.1, 10**6)
    assert ledger.n == 10**6
    assert ledger.singlets_from_donor == pytest.approx(SINGLETS_ORACLE, rel=1e-12)
    assert ledger.surplus_donor_copies == pytest.approx(SURPLUS_ORACLE, rel=1e-12)
    assert ledger.acceptor_intermediate_copies == pytest.approx(
        INTERMEDIATE_ORACLE, rel=1e-12
    )
    assert ledger.donor_copies_needed == 10**6
    assert ledger.final_acceptor_copies == float(10**6)


def test_ledger_conserves_entanglement_at_every_stage():
    rng = random.Random(401)
    for _ in range(200):
        beta = rng.uniform(0.1, math.pi / 4)
        dbeta = rng.uniform(0.0, beta * 0.9)
        alpha = rng.uniform(0.0, max_acceptor_angle(beta, dbeta))
        n = rng.randrange(1, 10**7)
        dalpha = solve_delta_alpha(alpha, beta, dbeta)
        ledger = asymptotic_ledger(alpha, beta, dbeta, n)
        e_donor = entanglement_of(beta)
        e_mid = entanglement_of(beta - dbeta)
        e_acc = entanglement_of(alpha)
        e_final = entanglement_of(alpha + dalpha)
        total = n * (e_donor + e_acc)

        # Concentration: singlets carry the donor block's entanglement.
        assert ledger.singlets_from_donor == pytest.approx(n * e_donor, rel=1e-12)
        # Dilution: needed plus surplus copies carry it unchanged.
        diluted = (ledger.donor_copies_needed + ledger.surplus_donor_copies) * e_mid
        assert diluted == pytest.approx(n * e_donor, rel=1e-9)
        # Redistillation: acceptor block keeps its entanglement.
        assert ledger.acceptor_intermediate_copies * e_mid == pytest.approx(
            n * e_acc, rel=1e-9 if e_acc else None, abs=1e-9 if not e_acc else None
        )
        # Absorption: surplus tops the acceptor up to the balanced angle.
        absorbed = (
            ledger.acceptor_intermediate_copies + ledger.surplus_donor_copies
        ) * e_mid
        assert absorbed == pytest.approx(
            ledger.final_acceptor_copies * e_final, rel=1e-9
        )
        # End to end, nothing is lost.
        final_total = n * e_mid + ledger.final_acceptor_copies * e_final
        assert final_total == pytest.approx(total, rel=1e-9)


def test_ledger_identity_for_zero_decrement():
    ledger = asymptotic_ledger(0.3, 0.6, 0.0, 1000)
    assert ledger.surplus_donor_copies == 0.0
    assert ledger.singlets_from_donor == pytest.approx(
        1000 * entanglement_of(0.6), rel=1e-12
    )
    assert ledger.acceptor_intermediate_copies == pytest.approx(
        1000 * entanglement_of(0.3) / entanglement_of(0.6), rel=1e-12
    )


def test_ledger_swap_point_reproduces_state_exchange():
    # At alpha = beta - dbeta the acceptor ends exactly where the donor
    # started: the asymptotic ledger reproduces the swap accounting.
    beta, dbeta, n = 0.6, 0.1, 10**5
    alpha = beta - dbeta
    dalpha = solve_delta_alpha(alpha, beta, dbeta)
    assert entanglement_of(alpha + dalpha) == pytest.approx(
        entanglement_of(beta), abs=1e-9
    )
    ledger = asymptotic_ledger(alpha, beta, dbeta, n)
    per_copy_gain = ledger.surplus_donor_copies * entanglement_of(beta - dbeta) / n
    assert per_copy_gain == pytest.approx(
        entanglement_of(beta) - entanglement_of(beta - dbeta), rel=1e-9
    )


def test_ledger_rates_nonnegative_and_surplus_positive():
    rng = random.Random(403)
    for _ in range(100):
        beta = rng.uniform(0.1, math.pi / 4)
        dbeta = rng.uniform(1e-6, beta * 0.9)
        alpha = rng.uniform(0.0, max_acceptor_angle(beta, dbeta))
        ledger = asymptotic_ledger(alpha, beta, dbeta, 1000)
        assert ledger.singlets_from_donor >= 0
        assert ledger.surplus_donor_copies > 0
        assert ledger.acceptor_intermediate_copies >= 0
        assert ledger.final_acceptor_copies >= 0


def test_ledger_degenerate_dilution_error():
    with pytest.raises(DegenerateDilutionError):
        asymptotic_ledger(0.1, 0.3, 0.3, 100)
    with pytest.raises(DegenerateDilutionError):
        asymptotic_ledger(0.1, 0.0, 0.0, 100)


def test_ledger_headroom_error_propagates():
    with pytest.raises(HeadroomError):
        asymptotic_ledger(0.7, math.pi / 4, 0.3, 100)


def test_ledger_input_validation():
    with pytest.raises(DomainError):
        asymptotic_ledger(0.3, 0.5, 0.6, 100)  # dbeta > beta
    with pytest.raises(DomainError):
        asymptotic_ledger(0.3, 0.5, 0.1, 0)  # no copies
