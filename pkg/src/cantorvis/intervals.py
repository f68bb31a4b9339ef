"""Exact algebra of closed rational intervals and their finite unions.

Endpoints are ``fractions.Fraction`` values and every operation is exact;
no floating point enters this module. Parts of an :class:`IntervalSet` are
closed intervals, and a canonical set keeps them strictly sorted with a gap
of positive length between consecutive parts (intervals that touch at an
endpoint merge during :func:`normalize`).

Gap intervals returned by :func:`gaps` denote *open* sets. They are
represented by their closure endpoints, so membership queries against a gap
must use strict inequalities.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

ScalarLike = Union[Fraction, int, str]


def as_scalar(value: ScalarLike) -> Fraction:
    """Coerce ``value`` to an exact rational.

    Accepts ``Fraction``, ``int``, and strings such as ``"2/5"`` or
    ``"0.35"`` (finite decimals are exact). Floats are rejected: binary
    rounding has no place in exact comparisons.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


@dataclass(frozen=True, slots=True)
class Interval:
    """Closed interval ``[lo, hi]`` with rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        lo = as_scalar(self.lo)
        hi = as_scalar(self.hi)
        if lo > hi:
            raise ValueError(f"malformed interval: lo {lo} > hi {hi}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x: ScalarLike) -> bool:
        x = as_scalar(x)
        return self.lo <= x <= self.hi

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


@dataclass(frozen=True, slots=True)
class IntervalSet:
    """Canonical finite union of closed intervals.

    Parts are strictly ascending and pairwise non-touching:
    ``parts[m].hi < parts[m + 1].lo``. The empty tuple is the empty set.
    Build canonical values from arbitrary input with :func:`normalize`.
    """

    parts: tuple[Interval, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        for left, right in zip(parts, parts[1:]):
            if left.hi >= right.lo:
                raise ValueError(
                    "parts must be sorted, disjoint and non-touching; build with normalize()"
                )
        object.__setattr__(self, "parts", parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def hull(self) -> Interval | None:
        """Smallest closed interval containing the set (None when empty)."""
        if not self.parts:
            return None
        return Interval(self.parts[0].lo, self.parts[-1].hi)

    def total_length(self) -> Fraction:
        return sum((p.length for p in self.parts), Fraction(0))

    def __str__(self) -> str:
        return " ".join(str(p) for p in self.parts) if self.parts else "(empty)"


def normalize(raw: Iterable[Interval]) -> IntervalSet:
    """Canonical form covering exactly the same points as ``raw``.

    Sorts by left endpoint, then sweeps once merging overlapping or
    endpoint-touching intervals. O(m log m) in the number of inputs.
    """
    items = sorted(raw, key=lambda itv: (itv.lo, itv.hi))
    merged: list[Interval] = []
    for itv in items:
        if merged and itv.lo <= merged[-1].hi:
            if itv.hi > merged[-1].hi:
                merged[-1] = Interval(merged[-1].lo, itv.hi)
        else:
            merged.append(itv)
    return IntervalSet(tuple(merged))


def union(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    """Canonical cover of the set union; independent of argument order."""
    return normalize(a.parts + b.parts)


def gaps(s: IntervalSet, hull: Interval) -> list[Interval]:
    """Maximal open gaps of ``s`` inside ``hull``, left to right.

    The returned intervals carry closure endpoints but denote open sets;
    parts and gaps alternate and together tile ``hull`` exactly. Raises
    ``ValueError`` if ``s`` is not contained in ``hull``.
    """
    if s.parts and (s.parts[0].lo < hull.lo or s.parts[-1].hi > hull.hi):
        raise ValueError("interval set extends beyond the hull")
    out: list[Interval] = []
    cursor = hull.lo
    for part in s.parts:
        if part.lo > cursor:
            out.append(Interval(cursor, part.lo))
        cursor = part.hi
    if cursor < hull.hi:
        out.append(Interval(cursor, hull.hi))
    return out


def contains_point(s: IntervalSet, x: ScalarLike) -> bool:
    """Closed membership test; binary search on the sorted parts."""
    x = as_scalar(x)
    idx = bisect_right(s.parts, x, key=lambda part: part.lo) - 1
    return idx >= 0 and s.parts[idx].hi >= x


def scale(s: IntervalSet, c: ScalarLike) -> IntervalSet:
    """Image of ``s`` under ``x -> c*x`` for ``c > 0``.

    Positive scaling preserves canonical form, so the parts map one to one.
    """
    c = as_scalar(c)
    if c <= 0:
        raise ValueError("scale factor must be positive")
    return IntervalSet(tuple(Interval(c * p.lo, c * p.hi) for p in s.parts))


def square_image(itv: Interval) -> Interval:
    """Exact image of ``itv`` under squaring; requires ``itv.lo >= 0``."""
    if itv.lo < 0:
        raise ValueError("square_image requires a non-negative interval")
    return Interval(itv.lo * itv.lo, itv.hi * itv.hi)


def ratio_image(ix: Interval, iy: Interval) -> Interval:
    """Exact image of ``(x, y) -> x**2 / y`` over ``ix`` x ``iy``.

    With ``ix.lo >= 0`` and ``iy.lo > 0`` the map increases in x and
    decreases in y, so the image is ``[ix.lo**2 / iy.hi, ix.hi**2 / iy.lo]``
    and both endpoints are attained at corners.
    """
    if ix.lo < 0:
        raise ValueError("numerator interval must be non-negative")
    if iy.lo <= 0:
        raise ValueError("denominator interval touches zero")
    return Interval(ix.lo * ix.lo / iy.hi, ix.hi * ix.hi / iy.lo)


def clip(s: IntervalSet, window: Interval) -> IntervalSet:
    """Intersection of ``s`` with a single closed interval."""
    kept = []
    for p in s.parts:
        lo = max(p.lo, window.lo)
        hi = min(p.hi, window.hi)
        if lo <= hi:
            kept.append(Interval(lo, hi))
    return IntervalSet(tuple(kept))


def is_subset(inner: IntervalSet, outer: IntervalSet) -> bool:
    """Exact inclusion test between canonical interval sets."""
    pos = 0
    parts = outer.parts
    for p in inner.parts:
        while pos < len(parts) and parts[pos].hi < p.lo:
            pos += 1
        if pos == len(parts) or not (parts[pos].lo <= p.lo and p.hi <= parts[pos].hi):
            return False
    return True
