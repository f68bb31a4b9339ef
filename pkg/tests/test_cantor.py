from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cantorvis.cantor import (
    SOFT_RANK_CEILING,
    CantorParams,
    GapRecord,
    Variant,
    gap_list,
    largest_squared_gap,
    level_set,
    max_squared_gap_length,
    prime_level_set,
    squared_level_set,
)
from cantorvis.intervals import Interval, is_subset, normalize, union

THIRD = CantorParams(F(1, 3))
TWO_FIFTHS = CantorParams(F(2, 5))

ratios = st.fractions(min_value=F(1, 20), max_value=F(9, 20), max_denominator=40)


def params_from(ratio):
    return CantorParams(ratio)


# ------------------------------------------------------------- parameters


@pytest.mark.parametrize("bad", [F(0), F(1, 2), F(-1, 3), F(3, 4)])
def test_params_reject_out_of_range(bad):
    with pytest.raises(ValueError):
        CantorParams(bad)


def test_params_accept_interior_values():
    assert CantorParams("0.45").ratio == F(9, 20)
    assert SOFT_RANK_CEILING == 16


# -------------------------------------------------------------- level sets


def test_level_set_rank_zero_and_one():
    assert level_set(THIRD, 0).intervals.parts == (Interval(0, 1),)
    assert level_set(THIRD, 1).intervals.parts == (
        Interval(0, F(1, 3)),
        Interval(F(2, 3), 1),
    )


def test_level_set_rank_two_matches_map_composition():
    # independent construction: compose the two affine maps explicitly
    r = THIRD.ratio
    f0 = lambda x: r * x
    f1 = lambda x: r * x + 1 - r
    words = [(f0, f0), (f0, f1), (f1, f0), (f1, f1)]
    expected = normalize(
        Interval(outer(inner(F(0))), outer(inner(F(1)))) for outer, inner in words
    )
    assert level_set(THIRD, 2).intervals == expected
    assert expected.parts == (
        Interval(0, F(1, 9)),
        Interval(F(2, 9), F(1, 3)),
        Interval(F(2, 3), F(7, 9)),
        Interval(F(8, 9), 1),
    )


def test_prime_level_set_first_ranks():
    assert prime_level_set(THIRD, 0).intervals.parts == (Interval(F(2, 3), 1),)
    assert prime_level_set(THIRD, 1).intervals.parts == (
        Interval(F(2, 3), F(7, 9)),
        Interval(F(8, 9), 1),
    )


@given(ratios, st.integers(min_value=0, max_value=5))
def test_prime_level_set_is_right_image_of_full(ratio, rank):
    params = params_from(ratio)
    r = params.ratio
    full = level_set(params, rank)
    mapped = normalize(
        Interval(r * p.lo + 1 - r, r * p.hi + 1 - r) for p in full.intervals.parts
    )
    assert prime_level_set(params, rank).intervals == mapped


@given(ratios, st.integers(min_value=0, max_value=8))
def test_level_set_measure_and_count(ratio, rank):
    params = params_from(ratio)
    ls = level_set(params, rank)
    assert len(ls.intervals) == 2 ** rank
    assert ls.intervals.total_length() == (2 * params.ratio) ** rank


@given(ratios, st.integers(min_value=0, max_value=7))
def test_level_sets_nest(ratio, rank):
    params = params_from(ratio)
    finer = level_set(params, rank + 1)
    coarser = level_set(params, rank)
    assert is_subset(finer.intervals, coarser.intervals)


@given(ratios, st.integers(min_value=0, max_value=7))
def test_endpoints_persist(ratio, rank):
    params = params_from(ratio)
    now = set(level_set(params, rank).endpoints())
    later = set(level_set(params, rank + 1).endpoints())
    assert now <= later


def test_endpoints_sorted_and_complete():
    eps = level_set(THIRD, 2).endpoints()
    assert eps == sorted(eps)
    assert len(eps) == 8
    assert eps[0] == 0 and eps[-1] == 1


def test_variant_tags():
    assert level_set(THIRD, 1).variant is Variant.FULL
    assert prime_level_set(THIRD, 1).variant is Variant.PRIME


# ------------------------------------------------------------------- gaps


def test_gap_list_first_steps():
    step1 = gap_list(THIRD, 1)
    assert [(g.lo, g.hi) for g in step1] == [(F(1, 3), F(2, 3))]
    step2 = gap_list(THIRD, 2)
    assert [(g.lo, g.hi) for g in step2] == [
        (F(1, 9), F(2, 9)),
        (F(7, 9), F(8, 9)),
    ]
    assert [g.index for g in step2] == [1, 2]
    assert gap_list(TWO_FIFTHS, 1)[0].lo == F(2, 5)
    assert gap_list(TWO_FIFTHS, 1)[0].hi == F(3, 5)


def test_gap_record_validation():
    with pytest.raises(ValueError):
        GapRecord(0, 1, F(1, 3), F(2, 3))
    with pytest.raises(ValueError):
        GapRecord(1, 1, F(2, 3), F(1, 3))


@given(ratios, st.integers(min_value=1, max_value=8))
def test_gap_lengths_follow_the_step(ratio, step):
    params = params_from(ratio)
    records = gap_list(params, step)
    assert len(records) == 2 ** (step - 1)
    expected = (1 - 2 * params.ratio) * params.ratio ** (step - 1)
    assert all(rec.length == expected for rec in records)


@given(ratios, st.integers(min_value=1, max_value=6))
def test_step_gaps_plus_level_set_tile_the_parent(ratio, step):
    params = params_from(ratio)
    child = level_set(params, step).intervals
    holes = normalize(Interval(g.lo, g.hi) for g in gap_list(params, step))
    assert union(child, holes) == level_set(params, step - 1).intervals


# ---------------------------------------------------------- squared cover


def test_squared_level_set_small_ranks():
    assert squared_level_set(THIRD, 0).parts == (Interval(0, 1),)
    assert squared_level_set(THIRD, 1).parts == (
        Interval(0, F(1, 9)),
        Interval(F(4, 9), 1),
    )
    assert squared_level_set(THIRD, 2).parts == (
        Interval(0, F(1, 81)),
        Interval(F(4, 81), F(1, 9)),
        Interval(F(4, 9), F(49, 81)),
        Interval(F(64, 81), 1),
    )


@given(ratios, st.integers(min_value=0, max_value=6))
def test_squared_cover_is_complement_of_squared_gaps(ratio, rank):
    # the squared cover must equal [0, 1] minus every squared gap so far,
    # built here by walking the sorted gap closures
    params = params_from(ratio)
    squared_gaps = sorted(
        (g.lo * g.lo, g.hi * g.hi)
        for step in range(1, rank + 1)
        for g in gap_list(params, step)
    )
    parts = []
    cursor = F(0)
    for lo, hi in squared_gaps:
        parts.append(Interval(cursor, lo))
        cursor = hi
    parts.append(Interval(cursor, F(1)))
    assert squared_level_set(params, rank) == normalize(parts)


# ------------------------------------------------------- squared gap sizes


def test_max_squared_gap_length_values():
    assert max_squared_gap_length(THIRD, 1) == F(1, 3)
    assert max_squared_gap_length(THIRD, 2) == F(5, 27)
    assert max_squared_gap_length(TWO_FIFTHS, 1) == F(1, 5)


@given(ratios, st.integers(min_value=1, max_value=12))
def test_max_squared_gap_length_is_difference_of_squares(ratio, step):
    # oracle: the rightmost step gap squares to
    # ((1 - r^n)^2 - (1 - (1 - r) r^(n-1))^2)
    params = params_from(ratio)
    r = params.ratio
    right = (1 - r ** step) ** 2 - (1 - (1 - r) * r ** (step - 1)) ** 2
    assert max_squared_gap_length(params, step) == right


@given(ratios, st.integers(min_value=1, max_value=5))
def test_within_step_squared_gaps_grow_rightward(ratio, step):
    params = params_from(ratio)
    lengths = [g.hi ** 2 - g.lo ** 2 for g in gap_list(params, step)]
    assert all(a < b for a, b in zip(lengths, lengths[1:]))
    assert lengths[-1] == max_squared_gap_length(params, step)


@given(ratios)
def test_max_squared_gap_lengths_strictly_decrease(ratio):
    params = params_from(ratio)
    lengths = [max_squared_gap_length(params, n) for n in range(1, 31)]
    assert all(a > b for a, b in zip(lengths, lengths[1:]))


def test_largest_squared_gap_examples():
    assert largest_squared_gap(THIRD, 1) == Interval(F(1, 9), F(4, 9))
    assert largest_squared_gap(THIRD, 8) == Interval(F(1, 9), F(4, 9))
    assert largest_squared_gap(TWO_FIFTHS, 8) == Interval(F(4, 25), F(9, 25))


@given(ratios)
def test_largest_squared_gap_is_the_first_step_gap(ratio):
    params = params_from(ratio)
    r = params.ratio
    assert largest_squared_gap(params, 6) == Interval(r * r, (1 - r) * (1 - r))


# ------------------------------------------------------------- validation


def test_rank_and_step_validation():
    with pytest.raises(ValueError):
        level_set(THIRD, -1)
    with pytest.raises(ValueError):
        gap_list(THIRD, 0)
    with pytest.raises(ValueError):
        max_squared_gap_length(THIRD, 0)
    with pytest.raises(ValueError):
        largest_squared_gap(THIRD, 0)
