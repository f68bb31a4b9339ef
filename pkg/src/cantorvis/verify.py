"""Mechanical checks of the exact inequalities behind the main arguments.

Three families: the merge conditions that chain the four child-pair
quotient images into one interval, the squared-gap facts that rule out an
affine self-map of the squared set, and the pointwise identities and slope
bands behind the closed-interval conditions. Every comparison is an exact
rational test, and a failing report carries both sides of the first
violated inequality in full.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .cantor import (
    CantorParams,
    largest_squared_gap,
    max_squared_gap_length,
    prime_level_set,
)
from .intervals import Interval, as_scalar, normalize, ratio_image
from .quotient import overlap_margin

InputValue = Union[Fraction, int, str]

# cap for the exhaustive largest-gap sweep inside
# verify_non_self_similarity; the other families stay linear in n_max
GAP_SWEEP_RANK_CAP = 12


@dataclass(frozen=True)
class ConditionRow:
    """One exact comparison: label, both sides, and whether it holds."""

    label: str
    lhs: Fraction
    rhs: Fraction
    holds: bool

    def __post_init__(self) -> None:
        object.__setattr__(self, "lhs", as_scalar(self.lhs))
        object.__setattr__(self, "rhs", as_scalar(self.rhs))


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one check family; ``passed`` is the conjunction of rows."""

    check_name: str
    inputs: Mapping[str, InputValue]
    passed: bool
    details: tuple[ConditionRow, ...]

    def __post_init__(self) -> None:
        if self.passed != all(row.holds for row in self.details):
            raise ValueError("passed flag must equal the conjunction of the rows")

    @classmethod
    def from_rows(
        cls,
        check_name: str,
        inputs: Mapping[str, InputValue],
        rows: Iterable[ConditionRow],
    ) -> "VerificationReport":
        rows = tuple(rows)
        return cls(check_name, dict(inputs), all(r.holds for r in rows), rows)

    def failing(self) -> list[ConditionRow]:
        return [row for row in self.details if not row.holds]


def _is_full_left_endpoint(params: CantorParams, rank: int, value: Fraction) -> bool:
    # peel one construction digit per step; only genuine rank-j left
    # endpoints come back to exactly zero
    r = params.ratio
    v = value
    if v < 0:
        return False
    for _ in range(rank):
        if v >= 1 - r:
            v = (v - (1 - r)) / r
        else:
            v = v / r
    return v == 0


def _is_prime_left_endpoint(params: CantorParams, rank: int, value: Fraction) -> bool:
    r = params.ratio
    return _is_full_left_endpoint(params, rank, (value - (1 - r)) / r)


@dataclass(frozen=True)
class MergeCheckInput:
    """Two rank-``rank`` basic intervals of the prime set, by left endpoint.

    Requires left1 <= left2 and validates, in O(rank) digit peeling, that
    both values really are prime left endpoints at that rank.
    """

    params: CantorParams
    left1: Fraction
    left2: Fraction
    rank: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "left1", as_scalar(self.left1))
        object.__setattr__(self, "left2", as_scalar(self.left2))
        if self.rank < 1:
            raise ValueError("rank must be at least 1")
        if self.left1 > self.left2:
            raise ValueError("left1 must not exceed left2")
        for value in (self.left1, self.left2):
            if not _is_prime_left_endpoint(self.params, self.rank, value):
                raise ValueError(
                    f"{value} is not a rank-{self.rank} prime left endpoint"
                )


def merge_subintervals(
    inp: MergeCheckInput,
) -> tuple[Interval, Interval, Interval, Interval]:
    """Quotient images of the four child pairs of the two blocks.

    Each block [left, left + r**rank] has a low child and a high child of
    length r**(rank + 1). Fixed order: (low1/high2, low1/low2, high1/high2,
    high1/low2), which sorts the images by left endpoint.
    """
    r = inp.params.ratio
    parent = r ** inp.rank
    child = parent * r
    low1 = Interval(inp.left1, inp.left1 + child)
    high1 = Interval(inp.left1 + parent - child, inp.left1 + parent)
    low2 = Interval(inp.left2, inp.left2 + child)
    high2 = Interval(inp.left2 + parent - child, inp.left2 + parent)
    return (
        ratio_image(low1, high2),
        ratio_image(low1, low2),
        ratio_image(high1, high2),
        ratio_image(high1, low2),
    )


def verify_merge(inp: MergeCheckInput) -> VerificationReport:
    """Exact check that the four child-pair images chain into one interval.

    Rows: the four overlap orderings, the two sign conditions sufficient
    for the strict ordering hi2 > lo3, and a consistency row asserting the
    normalized union is the single interval [lo1, hi4] exactly when the
    orderings hold.
    """
    img1, img2, img3, img4 = merge_subintervals(inp)
    r = inp.params.ratio
    sign1 = inp.left1 + 2 * inp.left2 * (2 * r - 1)
    sign2 = 2 * inp.left1 * r + inp.left2 * (2 * r - 1)
    rows = [
        ConditionRow("hi1 >= lo2", img1.hi, img2.lo, img1.hi >= img2.lo),
        ConditionRow("lo3 >= lo2", img3.lo, img2.lo, img3.lo >= img2.lo),
        ConditionRow("hi3 >= lo4", img3.hi, img4.lo, img3.hi >= img4.lo),
        ConditionRow("hi2 > lo3", img2.hi, img3.lo, img2.hi > img3.lo),
        ConditionRow(
            "sign: left1 + 2*left2*(2r - 1) >= 0", sign1, Fraction(0), sign1 >= 0
        ),
        ConditionRow(
            "sign: 2*left1*r + left2*(2r - 1) >= 0", sign2, Fraction(0), sign2 >= 0
        ),
    ]
    orderings_hold = all(row.holds for row in rows[:4])
    merged = normalize((img1, img2, img3, img4))
    is_single = len(merged.parts) == 1 and merged.parts[0] == Interval(
        img1.lo, img4.hi
    )
    rows.append(
        ConditionRow(
            "normalized union is [lo1, hi4] iff the orderings hold",
            Fraction(len(merged.parts)),
            Fraction(1),
            is_single == orderings_hold,
        )
    )
    inputs = {
        "ratio": r,
        "left1": inp.left1,
        "left2": inp.left2,
        "rank": inp.rank,
    }
    return VerificationReport.from_rows("merge_conditions", inputs, rows)


def sweep_merge(params: CantorParams, j_max: int) -> VerificationReport:
    """Run verify_merge over every ordered endpoint pair up to rank ``j_max``.

    For each rank 1..j_max, takes the 2**rank prime left endpoints and
    checks every pair with left1 <= left2 (including equal pairs). Stops at
    the first failing pair and records it as a witness; on a clean run the
    per-rank rows carry the pair counts.
    """
    if j_max < 1:
        raise ValueError("j_max must be at least 1")
    rows: list[ConditionRow] = []
    checked = passed = 0
    witness: tuple[Fraction, Fraction, int] | None = None
    witness_report: VerificationReport | None = None
    for rank in range(1, j_max + 1):
        lefts = [p.lo for p in prime_level_set(params, rank).intervals.parts]
        rank_checked = rank_passed = 0
        for pos, left1 in enumerate(lefts):
            for left2 in lefts[pos:]:
                report = verify_merge(MergeCheckInput(params, left1, left2, rank))
                rank_checked += 1
                checked += 1
                if report.passed:
                    rank_passed += 1
                    passed += 1
                else:
                    witness = (left1, left2, rank)
                    witness_report = report
                    break
            if witness is not None:
                break
        rows.append(
            ConditionRow(
                f"rank {rank}: pairs passed",
                Fraction(rank_passed),
                Fraction(rank_checked),
                rank_passed == rank_checked,
            )
        )
        if witness is not None:
            break
    rows.append(
        ConditionRow(
            "pairs passed over all ranks",
            Fraction(passed),
            Fraction(checked),
            passed == checked,
        )
    )
    inputs: dict[str, InputValue] = {"ratio": params.ratio, "j_max": j_max}
    if witness is not None:
        assert witness_report is not None
        inputs["witness_left1"] = witness[0]
        inputs["witness_left2"] = witness[1]
        inputs["witness_rank"] = witness[2]
        rows.extend(
            ConditionRow(f"witness: {row.label}", row.lhs, row.rhs, row.holds)
            for row in witness_report.details
        )
    return VerificationReport.from_rows("merge_sweep", inputs, rows)


def verify_non_self_similarity(params: CantorParams, n_max: int) -> VerificationReport:
    """Exact facts about the squared gaps that rule out an affine self-map.

    For n = 1..n_max, with L(n) the longest squared gap length at step n:
    (a) L(n) / L(n + 1) > 1, (b) the rearranged form
    r*(r**n - r**(n-2) - 2) + 2 > 0, and (c) agreement of (a) with (b),
    which are algebraically the same inequality. For n = 2..n_max the
    affine fixed-point residual
    (r + 1)*r**(n-1)*(2 - r**(n-1)) - r**(n-1)*(2 + r**n - r**(n-1)) must
    be positive (n = 1 is excluded: there is no shorter gap to map). The
    last rows pin the overall largest squared gap to (r**2, (1-r)**2); its
    exhaustive sweep is capped at rank min(n_max, 12) to bound the 2**n
    enumeration.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    r = params.ratio
    ratio_ok = rearranged_ok = agree_ok = residual_ok = 0
    bad_rows: list[ConditionRow] = []
    for n in range(1, n_max + 1):
        length_n = max_squared_gap_length(params, n)
        length_next = max_squared_gap_length(params, n + 1)
        ratio_holds = length_n / length_next > 1
        rearranged = r * (r ** n - r ** (n - 2) - 2) + 2
        rearranged_holds = rearranged > 0
        ratio_ok += ratio_holds
        rearranged_ok += rearranged_holds
        agree_ok += ratio_holds == rearranged_holds
        if not ratio_holds and len(bad_rows) < 4:
            bad_rows.append(
                ConditionRow(
                    f"violation at n={n}: gap length ratio > 1",
                    length_n / length_next,
                    Fraction(1),
                    False,
                )
            )
        if n >= 2:
            residual = (r + 1) * r ** (n - 1) * (2 - r ** (n - 1)) - r ** (n - 1) * (
                2 + r ** n - r ** (n - 1)
            )
            residual_ok += residual > 0
            if residual <= 0 and len(bad_rows) < 4:
                bad_rows.append(
                    ConditionRow(
                        f"violation at n={n}: fixed-point residual > 0",
                        residual,
                        Fraction(0),
                        False,
                    )
                )
    gap_rank = min(n_max, GAP_SWEEP_RANK_CAP)
    gap = largest_squared_gap(params, gap_rank)
    rows = [
        ConditionRow(
            f"longest squared gap lengths strictly decrease, n=1..{n_max}",
            Fraction(ratio_ok),
            Fraction(n_max),
            ratio_ok == n_max,
        ),
        ConditionRow(
            f"rearranged decrease r*(r^n - r^(n-2) - 2) + 2 > 0, n=1..{n_max}",
            Fraction(rearranged_ok),
            Fraction(n_max),
            rearranged_ok == n_max,
        ),
        ConditionRow(
            f"ratio and rearranged tests agree, n=1..{n_max}",
            Fraction(agree_ok),
            Fraction(n_max),
            agree_ok == n_max,
        ),
        ConditionRow(
            f"affine fixed-point residual positive, n=2..{n_max}",
            Fraction(residual_ok),
            Fraction(n_max - 1),
            residual_ok == n_max - 1,
        ),
        ConditionRow(
            f"largest squared gap lo equals r^2 (ranks <= {gap_rank})",
            gap.lo,
            r * r,
            gap.lo == r * r,
        ),
        ConditionRow(
            f"largest squared gap hi equals (1-r)^2 (ranks <= {gap_rank})",
            gap.hi,
            (1 - r) * (1 - r),
            gap.hi == (1 - r) * (1 - r),
        ),
    ]
    rows.extend(bad_rows)
    inputs = {"ratio": r, "n_max": n_max, "gap_rank": gap_rank}
    return VerificationReport.from_rows("non_self_similarity", inputs, rows)


def verify_closed_interval_conditions(
    params: CantorParams, grid: int
) -> VerificationReport:
    """Pointwise identities and slope bands for the ratio map on [1-r, 1]^2.

    On a (grid x grid) exact rational lattice over the square, checks that
    the two directional second-derivative forms of g(x, y) = x**2 / y equal
    their perfect-square factorizations (hence are non-negative), and that
    the slope ratio x/(2y) stays inside [(1-r)/2, 1/(2(1-r))] as well as
    inside the wider band [r - 2r**2, 1/(1 - 2r)].

    The two band inequalities relating those ranges hold for every ratio in
    (0, 1/2) and are reported as their own rows; the quadratic gate
    2r**2 - 4r + 1 <= 0 is a separate row, so the report states both facts
    without guessing which hypothesis any caller needs.
    """
    if grid < 2:
        raise ValueError("grid must have at least 2 points per axis")
    r = params.ratio
    low = 1 - r
    step = r / (grid - 1)
    points = [low + i * step for i in range(grid)]
    coef = r - 2 * r * r  # r(1 - 2r) > 0
    identity1 = identity2 = slope_in_range = band_low = band_high = 0
    total = grid * grid
    for x in points:
        for y in points:
            g_xx = 2 / y
            g_xy = -2 * x / (y * y)
            g_yy = 2 * x * x / (y * y * y)
            expanded1 = (
                r * r * g_xx
                + 2 * (-r) * (2 * r * r - r) * g_xy
                + (2 * r * r - r) ** 2 * g_yy
            )
            square1 = (2 / y) * (r - coef * x / y) ** 2
            expanded2 = coef * coef * g_xx + 2 * coef * g_xy + g_yy
            square2 = (2 / y) * (coef - x / y) ** 2
            identity1 += expanded1 == square1 and expanded1 >= 0
            identity2 += expanded2 == square2 and expanded2 >= 0
            slope = x / (2 * y)
            slope_in_range += low / 2 <= slope <= 1 / (2 * low)
            band_low += coef <= slope
            band_high += slope <= 1 / (1 - 2 * r)
    rows = [
        ConditionRow(
            "first directional form equals (2/y)*(r - (r-2r^2)x/y)^2 on lattice",
            Fraction(identity1),
            Fraction(total),
            identity1 == total,
        ),
        ConditionRow(
            "second directional form equals (2/y)*((r-2r^2) - x/y)^2 on lattice",
            Fraction(identity2),
            Fraction(total),
            identity2 == total,
        ),
        ConditionRow(
            "slope ratio x/(2y) within [(1-r)/2, 1/(2(1-r))] on lattice",
            Fraction(slope_in_range),
            Fraction(total),
            slope_in_range == total,
        ),
        ConditionRow(
            "band lower bound r - 2r^2 <= x/(2y) on lattice",
            Fraction(band_low),
            Fraction(total),
            band_low == total,
        ),
        ConditionRow(
            "band upper bound x/(2y) <= 1/(1 - 2r) on lattice",
            Fraction(band_high),
            Fraction(total),
            band_high == total,
        ),
        ConditionRow(
            "band inequality 1/(2(1-r)) <= 1/(1-2r)",
            1 / (2 * low),
            1 / (1 - 2 * r),
            1 / (2 * low) <= 1 / (1 - 2 * r),
        ),
        ConditionRow(
            "band inequality (1-r)/2 >= r - 2r^2",
            low / 2,
            coef,
            low / 2 >= coef,
        ),
        ConditionRow(
            "closed-interval gate 2r^2 - 4r + 1 <= 0",
            2 * r * r - 4 * r + 1,
            Fraction(0),
            2 * r * r - 4 * r + 1 <= 0,
        ),
    ]
    inputs = {"ratio": r, "grid": grid}
    return VerificationReport.from_rows("closed_interval_conditions", inputs, rows)


def threshold_tests(params: CantorParams) -> VerificationReport:
    """Exact placement of the ratio against the three hypothesis gates.

    Rows: ratio >= 1/3 (merge regime), overlap_margin(ratio) >= 0 (scaled
    copies overlap), and 2r**2 - 4r + 1 <= 0 (closed-interval gate).
    ``passed`` is their conjunction: true only when the ratio clears all
    three.
    """
    r = params.ratio
    margin = overlap_margin(r)
    gate = 2 * r * r - 4 * r + 1
    rows = [
        ConditionRow("ratio >= 1/3", r, Fraction(1, 3), r >= Fraction(1, 3)),
        ConditionRow(
            "scale overlap margin r^3 - 3r^2 + 4r - 1 >= 0",
            margin,
            Fraction(0),
            margin >= 0,
        ),
        ConditionRow(
            "closed-interval gate 2r^2 - 4r + 1 <= 0", gate, Fraction(0), gate <= 0
        ),
    ]
    return VerificationReport.from_rows(
        "threshold_tests", {"ratio": r}, rows
    )
