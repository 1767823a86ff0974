"""Feasibility analysis of reliable entanglement transfer between two-qubit
pure states: majorization verdicts, the catalytic window and its critical
donor angle, maximum conversion probabilities, and asymptotic copy rates."""

from .asymptotic import CopyLedger, asymptotic_ledger
from .catalysis import (
    CatalysisRegion,
    catalysis_possible,
    f3_roots,
    region_sweep,
    solve_beta_c,
)
from .entropy import (
    QUARTER_PI,
    angle_for_entanglement,
    binary_entropy,
    entanglement_gain,
    entanglement_of,
    solve_delta_alpha,
)
from .errors import (
    BracketError,
    DegenerateDilutionError,
    DomainError,
    HeadroomError,
    SingularPointError,
)
from .majorization import (
    MajorizationReport,
    SchmidtVector,
    majorizes,
    schmidt_vector_of_pair,
    transfer_to_product_possible,
)
from .probabilistic import ProbabilityResult, p_max, pmax_sweep
from .roots import bisect_root
from .transfer import (
    FSlacks,
    TransferProblem,
    alpha_star,
    df1_dalpha,
    df3_dalpha,
    f2_regime_formula,
    f_slacks,
    max_acceptor_angle,
    reliable_transfer_possible,
)

__version__ = "0.1.0"

__all__ = [
    "BracketError",
    "CatalysisRegion",
    "CopyLedger",
    "DegenerateDilutionError",
    "DomainError",
    "FSlacks",
    "HeadroomError",
    "MajorizationReport",
    "ProbabilityResult",
    "QUARTER_PI",
    "SchmidtVector",
    "SingularPointError",
    "TransferProblem",
    "alpha_star",
    "angle_for_entanglement",
    "asymptotic_ledger",
    "binary_entropy",
    "bisect_root",
    "catalysis_possible",
    "df1_dalpha",
    "df3_dalpha",
    "entanglement_gain",
    "entanglement_of",
    "f2_regime_formula",
    "f3_roots",
    "f_slacks",
    "majorizes",
    "max_acceptor_angle",
    "p_max",
    "pmax_sweep",
    "region_sweep",
    "reliable_transfer_possible",
    "schmidt_vector_of_pair",
    "solve_beta_c",
    "solve_delta_alpha",
    "transfer_to_product_possible",
]
