from fractions import Fraction as F

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from cantorvis.intervals import (
    Interval,
    IntervalSet,
    as_scalar,
    clip,
    contains_point,
    gaps,
    is_subset,
    normalize,
    ratio_image,
    scale,
    square_image,
    union,
)

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=64)


@st.composite
def intervals(draw):
    a = draw(rationals)
    b = draw(rationals)
    return Interval(min(a, b), max(a, b))


@st.composite
def interval_sets(draw, max_size=8):
    return normalize(draw(st.lists(intervals(), max_size=max_size)))


def brute_force_merge(items):
    """Quadratic fixpoint merging; deliberately independent of normalize."""
    spans = [(iv.lo, iv.hi) for iv in items]
    changed = True
    while changed:
        changed = False
        for i in range(len(spans)):
            for j in range(i + 1, len(spans)):
                a, b = spans[i], spans[j]
                if a[0] <= b[1] and b[0] <= a[1]:
                    spans[i] = (min(a[0], b[0]), max(a[1], b[1]))
                    spans.pop(j)
                    changed = True
                    break
            if changed:
                break
    return tuple(Interval(lo, hi) for lo, hi in sorted(spans))


# ---------------------------------------------------------------- scalars


def test_as_scalar_accepts_fraction_int_string():
    assert as_scalar(F(2, 5)) == F(2, 5)
    assert as_scalar(3) == F(3)
    assert as_scalar("2/5") == F(2, 5)
    assert as_scalar("0.35") == F(7, 20)


def test_as_scalar_rejects_floats():
    with pytest.raises(TypeError):
        as_scalar(0.35)


# -------------------------------------------------------------- intervals


def test_interval_rejects_inverted_endpoints():
    with pytest.raises(ValueError):
        Interval(F(1), F(0))


def test_interval_coerces_and_measures():
    itv = Interval("1/3", "2/3")
    assert itv.lo == F(1, 3)
    assert itv.length == F(1, 3)
    assert itv.contains("1/2")
    assert not itv.contains(F(3, 4))


def test_interval_set_rejects_non_canonical_parts():
    with pytest.raises(ValueError):
        IntervalSet((Interval(0, 1), Interval(F(1, 2), 2)))
    with pytest.raises(ValueError):
        IntervalSet((Interval(0, 1), Interval(1, 2)))  # touching


# -------------------------------------------------------------- normalize


def test_normalize_merges_overlap_chain():
    # four intervals that chain through pairwise overlaps into one
    raw = [
        Interval(F(4, 9), F(49, 72)),
        Interval(F(4, 7), F(49, 54)),
        Interval(F(64, 81), F(9, 8)),
        Interval(F(64, 63), F(3, 2)),
    ]
    expected = brute_force_merge(raw)
    assert expected == (Interval(F(4, 9), F(3, 2)),)
    assert normalize(raw).parts == expected


def test_normalize_merges_touching_endpoints():
    assert normalize([Interval(0, 1), Interval(1, 2)]).parts == (Interval(0, 2),)


def test_normalize_keeps_disjoint_parts_sorted():
    out = normalize([Interval(2, 3), Interval(0, 1)])
    assert out.parts == (Interval(0, 1), Interval(2, 3))


@given(st.lists(intervals(), max_size=10))
def test_normalize_matches_brute_force(items):
    assert normalize(items).parts == brute_force_merge(items)


@given(st.lists(intervals(), max_size=10))
def test_normalize_idempotent(items):
    once = normalize(items)
    assert normalize(once.parts) == once


@given(st.lists(intervals(), max_size=10))
def test_normalize_order_independent(items):
    assert normalize(items) == normalize(list(reversed(items)))


# ------------------------------------------------------------------ union


def test_union_of_disjoint_and_overlapping():
    a = normalize([Interval(0, 1)])
    b = normalize([Interval(2, 3), Interval(F(1, 2), F(3, 2))])
    assert union(a, b).parts == (Interval(0, F(3, 2)), Interval(2, 3))


@given(interval_sets(), interval_sets())
def test_union_commutative(a, b):
    assert union(a, b) == union(b, a)


@given(interval_sets(), interval_sets(), interval_sets())
def test_union_associative(a, b, c):
    assert union(union(a, b), c) == union(a, union(b, c))


@given(interval_sets())
def test_union_identity_and_idempotence(s):
    empty = IntervalSet()
    assert union(s, empty) == s
    assert union(s, s) == s


# ------------------------------------------------------------------- gaps


def test_gaps_of_two_thirds_split():
    s = normalize([Interval(0, F(1, 3)), Interval(F(2, 3), 1)])
    assert gaps(s, Interval(0, 1)) == [Interval(F(1, 3), F(2, 3))]


def test_gaps_after_two_removal_rounds():
    # remove open middle thirds twice, by hand, then read the gaps back
    parts = [Interval(0, 1)]
    for _ in range(2):
        next_parts = []
        for p in parts:
            third = p.length / 3
            next_parts.append(Interval(p.lo, p.lo + third))
            next_parts.append(Interval(p.hi - third, p.hi))
        parts = next_parts
    s = normalize(parts)
    assert gaps(s, Interval(0, 1)) == [
        Interval(F(1, 9), F(2, 9)),
        Interval(F(1, 3), F(2, 3)),
        Interval(F(7, 9), F(8, 9)),
    ]


def test_gaps_touching_hull_edges():
    s = normalize([Interval(F(1, 4), F(1, 2))])
    assert gaps(s, Interval(0, 1)) == [
        Interval(0, F(1, 4)),
        Interval(F(1, 2), 1),
    ]
    assert gaps(IntervalSet(), Interval(0, 1)) == [Interval(0, 1)]


def test_gaps_rejects_set_outside_hull():
    s = normalize([Interval(0, 2)])
    with pytest.raises(ValueError):
        gaps(s, Interval(0, 1))


@given(interval_sets())
def test_gaps_tile_the_hull(s):
    hull = Interval(-5, 5)
    holes = gaps(s, hull)
    total = s.total_length() + sum((g.length for g in holes), F(0))
    assert total == hull.length
    # parts and gaps alternate: no two gaps are adjacent. A degenerate
    # part shares its lo with the gap after it, so parts win ties.
    edges = sorted(
        [(p.lo, 0, "part") for p in s.parts] + [(g.lo, 1, "gap") for g in holes]
    )
    for (_, _, kind_a), (_, _, kind_b) in zip(edges, edges[1:]):
        assert kind_a != kind_b


# --------------------------------------------------------- contains_point


def test_contains_point_examples():
    s = normalize([Interval(0, F(1, 3)), Interval(F(2, 3), 1)])
    assert contains_point(s, F(1, 3))
    assert contains_point(s, F(2, 3))
    assert not contains_point(s, F(1, 2))
    assert not contains_point(IntervalSet(), 0)


@given(interval_sets(), rationals)
def test_contains_point_matches_linear_scan(s, x):
    expected = any(p.lo <= x <= p.hi for p in s.parts)
    assert contains_point(s, x) == expected


# ------------------------------------------------------------------ scale


def test_scale_example():
    s = normalize([Interval(1, 2), Interval(3, 4)])
    assert scale(s, F(1, 2)).parts == (
        Interval(F(1, 2), 1),
        Interval(F(3, 2), 2),
    )


def test_scale_rejects_non_positive_factor():
    s = normalize([Interval(1, 2)])
    with pytest.raises(ValueError):
        scale(s, 0)
    with pytest.raises(ValueError):
        scale(s, F(-1, 2))


@given(interval_sets(), st.fractions(min_value=F(1, 32), max_value=8, max_denominator=32))
def test_scale_round_trips(s, c):
    assert scale(scale(s, c), 1 / c) == s


# ----------------------------------------------------- square and ratio


def test_square_image_examples():
    assert square_image(Interval(F(2, 3), F(7, 9))) == Interval(F(4, 9), F(49, 81))
    assert square_image(Interval(0, 1)) == Interval(0, 1)


def test_square_image_rejects_negative():
    with pytest.raises(ValueError):
        square_image(Interval(-1, 1))


def test_ratio_image_examples():
    assert ratio_image(Interval(F(2, 3), F(7, 9)), Interval(F(8, 9), 1)) == Interval(
        F(4, 9), F(49, 72)
    )
    assert ratio_image(Interval(F(2, 3), 1), Interval(F(2, 3), 1)) == Interval(
        F(4, 9), F(3, 2)
    )


def test_ratio_image_rejects_denominator_touching_zero():
    with pytest.raises(ValueError):
        ratio_image(Interval(0, 1), Interval(0, 1))
    with pytest.raises(ValueError):
        ratio_image(Interval(0, 1), Interval(-1, 1))


@given(
    st.fractions(min_value=0, max_value=4, max_denominator=32),
    st.fractions(min_value=0, max_value=4, max_denominator=32),
    st.fractions(min_value=F(1, 32), max_value=4, max_denominator=32),
    st.fractions(min_value=F(1, 32), max_value=4, max_denominator=32),
)
def test_ratio_image_corners_attained(x1, x2, y1, y2):
    ix = Interval(min(x1, x2), max(x1, x2))
    iy = Interval(min(y1, y2), max(y1, y2))
    image = ratio_image(ix, iy)
    corners = [p * p / q for p in (ix.lo, ix.hi) for q in (iy.lo, iy.hi)]
    assert image.lo == min(corners)
    assert image.hi == max(corners)
    # interior samples stay inside
    mid = (ix.lo + ix.hi) / 2
    assert image.contains(mid * mid / iy.hi)


# ----------------------------------------------------- clip and subset


def test_clip_drops_and_trims():
    s = normalize([Interval(0, 1), Interval(2, 3), Interval(4, 5)])
    out = clip(s, Interval(F(1, 2), F(9, 2)))
    assert out.parts == (
        Interval(F(1, 2), 1),
        Interval(2, 3),
        Interval(4, F(9, 2)),
    )


def test_is_subset_examples():
    outer = normalize([Interval(0, 1), Interval(2, 3)])
    assert is_subset(normalize([Interval(F(1, 4), F(1, 2)), Interval(2, 3)]), outer)
    assert not is_subset(normalize([Interval(F(1, 2), F(3, 2))]), outer)
    assert is_subset(IntervalSet(), outer)


@given(interval_sets(), interval_sets())
def test_union_contains_both_arguments(a, b):
    merged = union(a, b)
    assert is_subset(a, merged)
    assert is_subset(b, merged)
