"""General-dimension majorization engine.

Holds the ordered probability vectors (squared Schmidt coefficients), the
prefix-sum dominance test that decides LOCC convertibility of pure states,
and the Schmidt-number counting argument ruling out partial transfers onto
product states.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable

from .entropy import check_angle
from .errors import DomainError

#: Entries at or below this threshold count as zero Schmidt coefficients;
#: numerically constructed product states carry rounding dust.
ZERO_THRESHOLD = 1e-12

#: A prefix-sum slack above -SLACK_TOL counts as satisfied.
SLACK_TOL = 1e-12


@dataclass(frozen=True)
class SchmidtVector:
    """Squared Schmidt coefficients in nonincreasing order, summing to one."""

    coeffs: tuple[float, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise DomainError("Schmidt vector must have at least one entry")
        object.__setattr__(self, "coeffs", tuple(float(c) for c in self.coeffs))
        for c in self.coeffs:
            if not -ZERO_THRESHOLD <= c <= 1.0 + ZERO_THRESHOLD:
                raise DomainError(f"coefficient {c!r} outside [0, 1]")
        for hi, lo in zip(self.coeffs, self.coeffs[1:]):
            if lo > hi + ZERO_THRESHOLD:
                raise DomainError("coefficients are not in nonincreasing order")
        total = math.fsum(self.coeffs)
        if abs(total - 1.0) > 1e-12:
            raise DomainError(f"coefficients sum to {total!r}, not 1")

    @classmethod
    def from_unsorted(cls, values: Iterable[float]) -> "SchmidtVector":
        # sorted() is stable, so ties keep their input order and the result
        # is reproducible.
        return cls(tuple(sorted(values, reverse=True)))

    def schmidt_number(self, threshold: float = ZERO_THRESHOLD) -> int:
        """Count of coefficients strictly above the zero threshold."""
        return sum(1 for c in self.coeffs if c > threshold)

    def prefix_sums(self) -> tuple[float, ...]:
        return tuple(accumulate(self.coeffs))

    def padded(self, dim: int) -> "SchmidtVector":
        """Zero-pad to ``dim`` entries (no-op when already that long)."""
        if dim <= len(self.coeffs):
            return self
        return SchmidtVector(self.coeffs + (0.0,) * (dim - len(self.coeffs)))


@dataclass(frozen=True)
class MajorizationReport:
    """Per-prefix slacks of a candidate LOCC step.

    Slack k is the k-th prefix sum of the final spectrum minus that of the
    initial spectrum, for k = 1 .. d-1; the step is feasible when every
    slack is nonnegative up to tolerance. The k = d prefix is an identity
    (both sides sum to one) and is not reported.
    """

    slacks: tuple[float, ...]
    feasible: bool


def schmidt_vector_of_pair(alpha: float, beta: float) -> SchmidtVector:
    """Sorted 4-entry spectrum of an acceptor/donor pair of two-qubit states.

    The entries are the pairwise products of the two per-state spectra,
    sorted numerically (the ordering of the middle two entries depends on
    the angles, so no closed-form ordering is assumed).
    """
    check_angle(alpha, "alpha")
    check_angle(beta, "beta")
    ca, sa = math.cos(alpha), math.sin(alpha)
    cb, sb = math.cos(beta), math.sin(beta)
    return SchmidtVector.from_unsorted(
        ((ca * cb) ** 2, (ca * sb) ** 2, (sa * cb) ** 2, (sa * sb) ** 2)
    )


def majorizes(
    before: SchmidtVector, after: SchmidtVector, *, tol: float = SLACK_TOL
) -> MajorizationReport:
    """Does ``after`` majorize ``before``?

    Shorter vectors are zero-padded to a common dimension. Feasible iff
    every prefix sum of ``after`` dominates the matching prefix sum of
    ``before`` within ``tol`` -- the convertibility criterion for pure
    states under local operations and classical communication.
    """
    dim = max(len(before.coeffs), len(after.coeffs))
    b = before.padded(dim).prefix_sums()
    a = after.padded(dim).prefix_sums()
    slacks = tuple(ai - bi for ai, bi in zip(a[:-1], b[:-1]))
    return MajorizationReport(slacks=slacks, feasible=all(s >= -tol for s in slacks))


def transfer_to_product_possible(donor: SchmidtVector, partial: bool) -> bool:
    """Can a donor hand entanglement to an initially product acceptor?

    A partial hand-off must keep the donor's Schmidt number while leaving
    the acceptor entangled (Schmidt number at least 2), so the final total
    Schmidt number -- the product of the two -- would exceed the initial
    one. LOCC can never raise the Schmidt number, hence: impossible. A full
    hand-off is always possible; two local swaps move the whole state across.
    """
    if not partial:
        return True
    initial_total = donor.schmidt_number()
    final_total = initial_total * 2  # acceptor ends with Schmidt number >= 2
    return final_total <= initial_total
