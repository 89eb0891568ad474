"""Deterministic scalar root finding and line search.

Bisection and golden-section are deliberately hand-rolled: both are part of
the documented numeric contract (fixed tolerances, fixed seeding), and the
callables they drive are cheap kernel evaluations.
"""

from __future__ import annotations

import math
from typing import Callable

_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def bisect(f: Callable[[float], float], lo: float, hi: float, tol: float) -> float:
    """Root of ``f`` on a bracketing interval, to absolute tolerance ``tol``.

    ``f(lo)`` and ``f(hi)`` must have opposite signs (zero counts as a
    sign).
    """
    f_lo = f(lo)
    if f_lo == 0.0:
        return lo
    f_hi = f(hi)
    if f_hi == 0.0:
        return hi
    if (f_lo > 0.0) == (f_hi > 0.0):
        raise ValueError("interval does not bracket a root")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        f_mid = f(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0.0) == (f_lo > 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
    return 0.5 * (lo + hi)


def golden_max(
    f: Callable[[float], float], lo: float, hi: float, tol: float
) -> tuple[float, float]:
    """Golden-section maximum of ``f`` on [lo, hi].

    Endpoints are always evaluated and compete with the interior result, so
    maxima attained on the boundary are returned exactly.
    """
    a, b = lo, hi
    x1 = b - _INV_GOLDEN * (b - a)
    x2 = a + _INV_GOLDEN * (b - a)
    f1, f2 = f(x1), f(x2)
    while b - a > tol:
        if f1 > f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _INV_GOLDEN * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _INV_GOLDEN * (b - a)
            f2 = f(x2)
        if x1 >= x2:  # interval collapsed to rounding noise
            break
    best_x, best_f = (x1, f1) if f1 >= f2 else (x2, f2)
    for cand in (lo, hi):
        f_cand = f(cand)
        if f_cand > best_f:
            best_x, best_f = cand, f_cand
    return best_x, best_f


def golden_min(
    f: Callable[[float], float], lo: float, hi: float, tol: float
) -> tuple[float, float]:
    x, neg = golden_max(lambda t: -f(t), lo, hi, tol)
    return x, -neg


def scan_max(
    f_values, grid, refine: Callable[[float], float], tol: float
) -> tuple[float, float]:
    """Refine the argmax of sampled values with golden section.

    ``f_values`` are ``refine`` evaluated on ``grid``; the refinement
    bracket is the grid cell pair around the best sample.
    """
    import numpy as np

    i = int(np.argmax(f_values))
    lo = grid[max(i - 1, 0)]
    hi = grid[min(i + 1, len(grid) - 1)]
    if lo == hi:
        return float(grid[i]), float(f_values[i])
    return golden_max(refine, float(lo), float(hi), tol)
