"""Copy accounting in the many-copy limit, where every restriction vanishes.

The donor block is concentrated into singlets, diluted to the reduced
angle, and the surplus copies are absorbed by the acceptor side. Counts are
real-valued rates: sublinear corrections vanish in the limit, so no integer
rounding is performed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .entropy import DOMAIN_SLACK, check_angle, entanglement_of, solve_delta_alpha
from .errors import DegenerateDilutionError, DomainError


@dataclass(frozen=True)
class CopyLedger:
    """Copy counts for one asymptotic transfer of n donor/acceptor pairs.

    Total entanglement (copies times per-copy ebits) is conserved at every
    stage: concentration, dilution, redistillation, and final absorption.
    """

    n: int
    singlets_from_donor: float
    donor_copies_needed: int
    surplus_donor_copies: float
    acceptor_intermediate_copies: float
    final_acceptor_copies: float


def asymptotic_ledger(alpha: float, beta: float, dbeta: float, n: int) -> CopyLedger:
    """Fill the copy ledger for n pairs at the given angles.

    Raises DegenerateDilutionError when beta == dbeta (the dilution target
    would be a product state, whose entanglement rate is zero) and
    HeadroomError when the per-copy gain exceeds the acceptor's room.
    """
    check_angle(alpha, "alpha")
    check_angle(beta, "beta")
    if not -DOMAIN_SLACK <= dbeta <= beta + DOMAIN_SLACK:
        raise DomainError(f"dbeta={dbeta!r} outside [0, beta={beta!r}]")
    if n <= 0:
        raise DomainError(f"copy count n={n!r} must be positive")
    if beta - dbeta <= 0.0:
        raise DegenerateDilutionError(
            "intermediate donor state is a product state; dilution rate undefined"
        )
    # Surfaces headroom violations before any accounting is reported.
    solve_delta_alpha(alpha, beta, dbeta)
    e_donor = entanglement_of(beta)
    e_intermediate = entanglement_of(beta - dbeta)
    e_acceptor = entanglement_of(alpha)
    return CopyLedger(
        n=n,
        singlets_from_donor=n * e_donor,
        donor_copies_needed=n,
        surplus_donor_copies=n * (e_donor / e_intermediate - 1.0),
        acceptor_intermediate_copies=n * e_acceptor / e_intermediate,
        final_acceptor_copies=float(n),
    )
