"""Exact-sign bisection for functions with rational values."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .intervals import Interval, ScalarLike, as_scalar


def refine_sign_change(
    func: Callable[[Fraction], Fraction],
    lo: ScalarLike,
    hi: ScalarLike,
    precision: ScalarLike,
) -> Interval:
    """Shrink a sign-changing bracket of ``func`` to width <= ``precision``.

    ``func(lo)`` and ``func(hi)`` must have opposite signs. Bisection runs
    in exact rational arithmetic; hitting an exact zero collapses the
    bracket to a point. The result always brackets a sign change of
    ``func``.
    """
    lo, hi = as_scalar(lo), as_scalar(hi)
    precision = as_scalar(precision)
    if precision <= 0:
        raise ValueError("precision must be positive")
    if lo >= hi:
        raise ValueError("need lo < hi")
    f_lo = func(lo)
    f_hi = func(hi)
    if f_lo == 0:
        return Interval(lo, lo)
    if f_hi == 0:
        return Interval(hi, hi)
    if (f_lo < 0) == (f_hi < 0):
        raise ValueError("func must change sign over the bracket")
    low_negative = f_lo < 0
    while hi - lo > precision:
        mid = (lo + hi) / 2
        f_mid = func(mid)
        if f_mid == 0:
            return Interval(mid, mid)
        if (f_mid < 0) == low_negative:
            lo = mid
        else:
            hi = mid
    return Interval(lo, hi)
