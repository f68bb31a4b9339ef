"""Covers and certificates for the slope quotient set.

The quotient set collects the values ``x1**2 / x2`` over pairs drawn from
the Cantor set with ``x2 != 0``; a slope ``k >= 0`` is *visible* when no
such pair attains it. This module works with finite outer covers, which
contain the true quotient set at every rank and only lose points as the
rank grows. That one-sided error is what makes the certificates sound:

* exclusion from a cover at any rank proves visibility;
* membership is proven either by an exact endpoint pair or, when the
  contraction ratio is at least 1/3, by landing in one scaled copy of the
  merged base interval (each copy is a proven subset of the quotient set).

Between the two sits ``unknown``: the bounded search saw neither proof.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import isqrt
from typing import Optional, Union

from .cantor import CantorParams, LevelSet, Variant, level_set, prime_level_set
from .intervals import (
    Interval,
    IntervalSet,
    ScalarLike,
    as_scalar,
    clip,
    contains_point,
    gaps,
    normalize,
    ratio_image,
    scale,
)
from .rootfind import refine_sign_change

ONE_THIRD = Fraction(1, 3)


class MergeHypothesisError(ValueError):
    """An operation relied on the merged base, which needs ratio >= 1/3."""


class CoverageGapError(Exception):
    """Consecutive scaled copies of the base interval leave a gap."""

    def __init__(self, params: CantorParams, gap: Interval, upper_index: int):
        self.params = params
        self.gap = gap
        self.upper_index = upper_index
        super().__init__(
            f"scaled copies {upper_index} and {upper_index + 1} leave the "
            f"uncovered gap ({gap.lo}, {gap.hi})"
        )


class CoverDomain(Enum):
    PRIME_BY_PRIME = "prime_by_prime"
    WINDOW = "window"


@dataclass(frozen=True)
class QuotientCover:
    """Finite outer cover of quotient values, tagged with its domain."""

    params: CantorParams
    rank: int
    domain: CoverDomain
    intervals: IntervalSet


@dataclass(frozen=True)
class ScaleDecomposition:
    """The union of scaled copies ratio**i * base for index_lo <= i <= index_hi."""

    params: CantorParams
    base: Interval
    index_lo: int
    index_hi: int

    def __post_init__(self) -> None:
        if self.base != _base_interval(self.params):
            raise ValueError("base must be [(1-r)**2, 1/(1-r)] for the given ratio")
        if self.index_lo > self.index_hi:
            raise ValueError("empty index range")

    def copy_at(self, index: int) -> Interval:
        factor = self.params.ratio ** index
        return Interval(factor * self.base.lo, factor * self.base.hi)


class CertificateKind(Enum):
    MEMBER = "member"
    VISIBLE = "visible"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class ScaleWitness:
    """The slope lies in ratio**index * base, a proven subset of the quotient set."""

    index: int
    scaled_base: Interval


@dataclass(frozen=True)
class PairWitness:
    """Exact persistent endpoints with x1**2 / x2 equal to the slope.

    ``rank`` records which level set's endpoint list produced the pair.
    """

    x1: Fraction
    x2: Fraction
    rank: int


@dataclass(frozen=True)
class GapWitness:
    """Open gap of the rank-``rank`` outer cover strictly containing the slope.

    ``scale_lo``..``scale_hi`` is the index range of base copies that met
    the examined window; everything else scales clear of it.
    """

    rank: int
    gap: Interval
    scale_lo: int
    scale_hi: int


@dataclass(frozen=True)
class SearchExhausted:
    """No proof either way up to ``max_rank``."""

    max_rank: int


Witness = Union[ScaleWitness, PairWitness, GapWitness, SearchExhausted]


@dataclass(frozen=True)
class Certificate:
    kind: CertificateKind
    witness: Witness


def pairwise_ratio_cover(a: LevelSet, b: LevelSet) -> QuotientCover:
    """Outer cover of ``{x**2 / y}`` over two level sets.

    Takes the exact ratio image of every part pair and normalizes the
    union. The image of each part pair is exact, so the result covers the
    quotient of the underlying limit sets. Materializes all 4**rank pair
    images before the sort-merge; a streaming merge keyed on left endpoints
    is the optimization path should peak memory ever matter.
    """
    if a.params != b.params:
        raise ValueError("level sets must share parameters")
    if not b.intervals.parts or b.intervals.parts[0].lo <= 0:
        raise ValueError(
            "denominator level set touches zero; use the prime variant"
        )
    raw = [
        ratio_image(pa, pb)
        for pa in a.intervals.parts
        for pb in b.intervals.parts
    ]
    if a.variant is Variant.PRIME and b.variant is Variant.PRIME:
        domain = CoverDomain.PRIME_BY_PRIME
    else:
        domain = CoverDomain.WINDOW
    return QuotientCover(a.params, max(a.rank, b.rank), domain, normalize(raw))


def _base_interval(params: CantorParams) -> Interval:
    one_minus = 1 - params.ratio
    return Interval(one_minus * one_minus, 1 / one_minus)


def merged_base_interval(params: CantorParams) -> Interval:
    """[(1-r)**2, 1/(1-r)]: the prime-by-prime quotient hull.

    For ratio >= 1/3 the pairwise covers merge into exactly this interval
    at every rank, so each scaled copy of it lies inside the quotient set.
    Below 1/3 that merge is not established and the call is refused.
    """
    if params.ratio < ONE_THIRD:
        raise MergeHypothesisError(
            f"merge lemma hypothesis unmet: ratio {params.ratio} < 1/3"
        )
    return _base_interval(params)


def overlap_margin(x: Fraction) -> Fraction:
    """x**3 - 3*x**2 + 4*x - 1, which equals x - (1 - x)**3.

    Positive exactly when consecutive scaled copies of the base interval
    overlap, i.e. when ratio * base.hi >= base.lo. Strictly increasing on
    (0, 1/2) with a single sign change.
    """
    return x ** 3 - 3 * x ** 2 + 4 * x - 1


def overlap_threshold(precision: ScalarLike) -> Interval:
    """Bracket of width <= ``precision`` around the overlap threshold.

    The threshold is the unique ratio in (0, 1/2) where
    :func:`overlap_margin` changes sign; exact bisection, so the returned
    endpoints are rationals with opposite margin signs (or a single exact
    root).
    """
    return refine_sign_change(
        overlap_margin, Fraction(0), Fraction(1, 2), precision
    )


def _meeting_scale_range(
    params: CantorParams, base: Interval, window: Interval
) -> Optional[tuple[int, int]]:
    """Indices i whose copy ratio**i * base intersects ``window``.

    The copies slide down as i grows, so the meeting indices form a
    contiguous range; returns None when no copy meets the window. Index
    search runs by repeated exact multiplication, never via logarithms.
    """
    r = params.ratio
    # smallest index whose copy bottom sits at or below the window top
    i, v = 0, base.lo
    if v <= window.hi:
        while v / r <= window.hi:
            v /= r
            i -= 1
    else:
        while v > window.hi:
            v *= r
            i += 1
    lo_index = i
    # largest index whose copy top sits at or above the window bottom
    i, v = 0, base.hi
    if v >= window.lo:
        while v * r >= window.lo:
            v *= r
            i += 1
    else:
        while v < window.lo:
            v /= r
            i -= 1
    hi_index = i
    if lo_index > hi_index:
        return None
    return lo_index, hi_index


def scales_cover_window(
    params: CantorParams, window: Interval, *, empirical: bool = False
) -> ScaleDecomposition:
    """Scale range whose copies of the base interval cover ``window``.

    Success requires consecutive copies to overlap; the exact test is
    ratio * base.hi >= base.lo, equivalent to overlap_margin(ratio) >= 0.
    When the copies leave gaps, raises :class:`CoverageGapError` carrying
    the first uncovered gap below the window top.

    Requires ratio >= 1/3 unless ``empirical=True``: the empirical mode
    reports cover status for the unproven regime (the base interval is
    then only a candidate, not a proven quotient subset) without claiming
    anything beyond the arithmetic.
    """
    if window.lo <= 0:
        raise ValueError("window touches zero")
    if not empirical:
        merged_base_interval(params)  # raises below 1/3
    base = _base_interval(params)
    r = params.ratio
    rng = _meeting_scale_range(params, base, window)
    assert rng is not None  # window.lo > 0, copies sweep all of (0, inf)
    index_lo, index_hi = rng
    if r * base.hi < base.lo:
        gap = Interval(r ** (index_lo + 1) * base.hi, r ** index_lo * base.lo)
        raise CoverageGapError(params, gap, index_lo)
    # overlap holds, so the meeting copies chain into one interval that
    # reaches past both window ends
    assert r ** index_hi * base.lo <= window.lo
    assert r ** index_lo * base.hi >= window.hi
    return ScaleDecomposition(params, base, index_lo, index_hi)


def quotient_outer_cover(
    params: CantorParams, rank: int, window: Interval
) -> IntervalSet:
    """Rank-``rank`` outer cover of the quotient set clipped to ``window``.

    Scales the prime-by-prime cover through every index whose base copy
    meets the window, clips, and normalizes. Contains every quotient value
    in the window at every rank; growing the rank only removes points.
    """
    if window.lo <= 0:
        raise ValueError("window touches zero")
    prime = prime_level_set(params, rank)
    cover = pairwise_ratio_cover(prime, prime).intervals
    rng = _meeting_scale_range(params, _base_interval(params), window)
    if rng is None:
        return IntervalSet()
    pieces: list[Interval] = []
    for index in range(rng[0], rng[1] + 1):
        pieces.extend(clip(scale(cover, params.ratio ** index), window).parts)
    return normalize(pieces)


def _square_root_exact(value: Fraction) -> Optional[Fraction]:
    num, den = value.numerator, value.denominator
    root_num = isqrt(num)
    if root_num * root_num != num:
        return None
    root_den = isqrt(den)
    if root_den * root_den != den:
        return None
    return Fraction(root_num, root_den)


def _endpoint_pair(
    params: CantorParams, slope: Fraction, rank: int
) -> Optional[PairWitness]:
    """Search rank-``rank`` endpoints for an exact pair x1**2 / x2 == slope.

    Endpoints persist through all later ranks, so any hit certifies
    membership. Scans denominators in increasing order; first hit wins.
    """
    values = level_set(params, rank).endpoints()
    members = set(values)
    for x2 in values:
        if x2 == 0:
            continue
        x1 = _square_root_exact(slope * x2)
        if x1 is not None and x1 in members:
            return PairWitness(x1, x2, rank)
    return None


def _gap_containing(cover: IntervalSet, window: Interval, x: Fraction) -> Interval:
    for g in gaps(cover, window):
        if g.lo < x < g.hi:  # gaps are open: strict comparisons
            return g
    raise AssertionError("point outside the cover must sit in one of its gaps")


def classify_slope(
    params: CantorParams, slope: ScalarLike, max_rank: int
) -> Certificate:
    """Certificate for one slope query.

    The decision order is fixed: the zero check, then a scale witness
    (only when ratio >= 1/3), then an exact endpoint pair at ``max_rank``,
    then exclusion scans of the outer covers for ranks 0..max_rank, and
    finally ``unknown``. Scale witnesses prefer the largest index whose
    copy contains the slope; the exclusion window is
    [slope * ratio, slope / ratio], wide enough that every scaled gap
    around the slope lies inside it.

    Soundness: member certificates carry exact arithmetic witnesses, and a
    visible certificate persists at all higher ranks because covers only
    shrink.
    """
    slope = as_scalar(slope)
    if slope < 0:
        raise ValueError("slope must be non-negative")
    if max_rank < 0:
        raise ValueError("max_rank must be non-negative")
    if slope == 0:
        # 0 = 0**2 / 1 with both endpoints persistent from rank 0
        return Certificate(
            CertificateKind.MEMBER, PairWitness(Fraction(0), Fraction(1), 0)
        )
    if params.ratio >= ONE_THIRD:
        base = merged_base_interval(params)
        point = Interval(slope, slope)
        rng = _meeting_scale_range(params, base, point)
        if rng is not None:
            for index in range(rng[1], rng[0] - 1, -1):
                factor = params.ratio ** index
                copy = Interval(factor * base.lo, factor * base.hi)
                if copy.contains(slope):
                    return Certificate(
                        CertificateKind.MEMBER, ScaleWitness(index, copy)
                    )
    pair = _endpoint_pair(params, slope, max_rank)
    if pair is not None:
        return Certificate(CertificateKind.MEMBER, pair)
    window = Interval(slope * params.ratio, slope / params.ratio)
    for rank in range(max_rank + 1):
        cover = quotient_outer_cover(params, rank, window)
        if not contains_point(cover, slope):
            gap = _gap_containing(cover, window, slope)
            rng = _meeting_scale_range(params, _base_interval(params), window)
            assert rng is not None
            return Certificate(
                CertificateKind.VISIBLE, GapWitness(rank, gap, rng[0], rng[1])
            )
    return Certificate(CertificateKind.UNKNOWN, SearchExhausted(max_rank))
