"""Bracketed bisection, the one root finder used throughout the package.

Every implicit equation solved here has a guaranteed sign-change bracket and
a monotone (or at least single-crossing) residual, so plain bisection is
preferred over derivative-based methods: several of the residuals have
logarithmically divergent slopes at the bracket endpoints.
"""

from __future__ import annotations

import math
from typing import Callable

from .errors import BracketError


def bisect_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    *,
    xtol: float,
    ftol: float = math.inf,
    max_iter: int = 200,
) -> float:
    """Locate a root of ``f`` inside ``[lo, hi]`` by bisection.

    ``f(lo)`` and ``f(hi)`` must differ in sign (an exact zero at either
    endpoint is returned as-is). The bracket is halved until its width is at
    most ``xtol`` and the last midpoint residual is at most ``ftol``; the
    final midpoint is returned.

    Raises BracketError when the endpoints do not straddle a sign change,
    reporting both endpoint residuals.
    """
    if xtol <= 0.0:
        raise ValueError(f"xtol must be positive, got {xtol!r}")
    flo = f(lo)
    if flo == 0.0:
        return lo
    fhi = f(hi)
    if fhi == 0.0:
        return hi
    if (flo > 0.0) == (fhi > 0.0):
        raise BracketError(
            f"no sign change on [{lo:.17g}, {hi:.17g}]: "
            f"f(lo)={flo:.6g}, f(hi)={fhi:.6g}"
        )
    mid = 0.5 * (lo + hi)
    for _ in range(max_iter):
        fmid = f(mid)
        if fmid == 0.0:
            return mid
        if (fmid > 0.0) == (flo > 0.0):
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
        mid = 0.5 * (lo + hi)
        if hi - lo <= xtol and abs(fmid) <= ftol:
            break
    return mid
