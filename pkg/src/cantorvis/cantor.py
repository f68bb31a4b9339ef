"""Rank-n constructions for the middle Cantor set family.

For a contraction ratio r in (0, 1/2), the full set lives in ``[0, 1]`` and
is generated by ``x -> r*x`` and ``x -> r*x + 1 - r``. The prime variant is
the right half of the full set (its image under the second map); it lives
in ``[1 - r, 1]``, bounded away from zero, which is what quotient
denominators need.

A level set is the finite outer approximation at a given rank: the 2**n
basic intervals obtained by refining the hull n times. Each refinement
keeps the left-aligned and right-aligned child of every part, so rank n is
produced iteratively from rank n - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .intervals import Interval, IntervalSet, ScalarLike, as_scalar, normalize, square_image

# 2**n growth; the CLI refuses ranks above this without --force. The library
# itself never imposes the limit.
SOFT_RANK_CEILING = 16


class Variant(Enum):
    FULL = "full"
    PRIME = "prime"


@dataclass(frozen=True)
class CantorParams:
    """Contraction ratio of the pair of affine maps, 0 < ratio < 1/2."""

    ratio: Fraction

    def __post_init__(self) -> None:
        ratio = as_scalar(self.ratio)
        if not (0 < ratio < Fraction(1, 2)):
            raise ValueError("contraction ratio must satisfy 0 < ratio < 1/2")
        object.__setattr__(self, "ratio", ratio)


@dataclass(frozen=True)
class LevelSet:
    """The 2**rank basic intervals of one construction variant.

    Full variant: hull [0, 1], parts of length ratio**rank.
    Prime variant: hull [1 - ratio, 1], parts of length ratio**(rank + 1).
    Both facts are validated on construction.
    """

    params: CantorParams
    rank: int
    variant: Variant
    intervals: IntervalSet

    def __post_init__(self) -> None:
        if self.rank < 0:
            raise ValueError("rank must be non-negative")
        parts = self.intervals.parts
        if len(parts) != 2 ** self.rank:
            raise ValueError("level set must have exactly 2**rank parts")
        r = self.params.ratio
        if self.variant is Variant.FULL:
            hull = Interval(Fraction(0), Fraction(1))
            part_length = r ** self.rank
        else:
            hull = Interval(1 - r, Fraction(1))
            part_length = r ** (self.rank + 1)
        if parts[0].lo != hull.lo or parts[-1].hi != hull.hi:
            raise ValueError("level set endpoints must span the variant hull")
        if any(p.length != part_length for p in parts):
            raise ValueError("every part must have the rank's exact length")

    def endpoints(self) -> list[Fraction]:
        """All part endpoints in increasing order (they never coincide)."""
        out: list[Fraction] = []
        for p in self.intervals.parts:
            out.append(p.lo)
            out.append(p.hi)
        return out


def _refine(parts: list[Interval], child_length: Fraction) -> list[Interval]:
    out: list[Interval] = []
    for p in parts:
        out.append(Interval(p.lo, p.lo + child_length))
        out.append(Interval(p.hi - child_length, p.hi))
    return out


def _build(params: CantorParams, rank: int, hull: Interval, start_length: Fraction) -> IntervalSet:
    parts = [hull]
    length = start_length
    for _ in range(rank):
        length *= params.ratio
        parts = _refine(parts, length)
    return IntervalSet(tuple(parts))


def level_set(params: CantorParams, rank: int) -> LevelSet:
    """Full-variant approximation at ``rank``: 2**rank intervals in [0, 1]."""
    if rank < 0:
        raise ValueError("rank must be non-negative")
    hull = Interval(Fraction(0), Fraction(1))
    return LevelSet(params, rank, Variant.FULL, _build(params, rank, hull, Fraction(1)))


def prime_level_set(params: CantorParams, rank: int) -> LevelSet:
    """Prime-variant approximation at ``rank``: 2**rank intervals in [1 - r, 1].

    Equals the image of the full rank-``rank`` level set under
    ``x -> r*x + 1 - r``; the refinement rule is the same, only the hull and
    the starting length differ.
    """
    if rank < 0:
        raise ValueError("rank must be non-negative")
    r = params.ratio
    hull = Interval(1 - r, Fraction(1))
    return LevelSet(params, rank, Variant.PRIME, _build(params, rank, hull, r))


@dataclass(frozen=True)
class GapRecord:
    """One open interval removed at a construction step.

    ``index`` is 1-based within the step, counting left to right. ``lo`` and
    ``hi`` are the closure endpoints of the open gap; both stay in the set.
    """

    step: int
    index: int
    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.step < 1 or self.index < 1:
            raise ValueError("step and index are 1-based")
        if not self.lo < self.hi:
            raise ValueError("gap must have positive length")

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo


def gap_list(params: CantorParams, step: int) -> list[GapRecord]:
    """The 2**(step - 1) open gaps removed at ``step``, left to right.

    Each rank-(step - 1) part [c, c + r**(step - 1)] loses its open middle
    (c + r**step, c + r**(step - 1) - r**step); every gap at the step has
    length (1 - 2r) * r**(step - 1).
    """
    if step < 1:
        raise ValueError("step is 1-based")
    parents = level_set(params, step - 1)
    inset = params.ratio ** step
    return [
        GapRecord(step, i + 1, part.lo + inset, part.hi - inset)
        for i, part in enumerate(parents.intervals.parts)
    ]


def squared_level_set(params: CantorParams, rank: int) -> IntervalSet:
    """Outer cover of the squared set at ``rank``.

    The squares of the rank-``rank`` basic intervals, normalized. This is a
    finite approximation that shrinks as the rank grows, never the limit
    set itself.
    """
    base = level_set(params, rank)
    return normalize(square_image(p) for p in base.intervals.parts)


def max_squared_gap_length(params: CantorParams, step: int) -> Fraction:
    """Length of the longest squared gap created at ``step``.

    Within a step the squared gaps grow left to right, so the longest is
    the rightmost: (1 - 2r) * r**(step - 1) * (2 - r**(step - 1)).
    """
    if step < 1:
        raise ValueError("step is 1-based")
    r = params.ratio
    return (1 - 2 * r) * r ** (step - 1) * (2 - r ** (step - 1))


def largest_squared_gap(params: CantorParams, up_to_rank: int) -> Interval:
    """Longest gap of the squared cover among steps 1..up_to_rank.

    Exhaustive comparison over every squared gap (ties keep the earliest,
    which cannot occur here since step-1's rightmost gap is strictly
    longest). Returns the closure endpoints of the winning open gap.
    """
    if up_to_rank < 1:
        raise ValueError("need at least step 1")
    best: Interval | None = None
    for step in range(1, up_to_rank + 1):
        for rec in gap_list(params, step):
            squared = Interval(rec.lo * rec.lo, rec.hi * rec.hi)
            if best is None or squared.length > best.length:
                best = squared
    assert best is not None
    return best
