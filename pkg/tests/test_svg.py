from fractions import Fraction as F

import pytest

from cantorvis.cantor import CantorParams, level_set, squared_level_set
from cantorvis.intervals import Interval, IntervalSet
from cantorvis.svg import BAND_HEIGHT, CANVAS_WIDTH, emit_svg

THIRD = CantorParams(F(1, 3))
UNIT = Interval(0, 1)


def test_single_full_width_layer(tmp_path):
    out = tmp_path / "band.svg"
    got = emit_svg([(IntervalSet((UNIT,)), "hull")], UNIT, out)
    assert got == out
    text = out.read_text()
    assert text.startswith("<svg ")
    assert text.endswith("</svg>\n")
    assert f'width="{CANVAS_WIDTH}"' in text
    assert f'height="{BAND_HEIGHT}"' in text
    assert '<rect x="0.000" y="18" width="1000.000" height="36"' in text
    assert ">hull</text>" in text


def test_one_rect_per_part_per_layer(tmp_path):
    layers = [
        (level_set(THIRD, rank).intervals, f"rank {rank}") for rank in range(4)
    ]
    out = emit_svg(layers, UNIT, tmp_path / "ranks.svg")
    text = out.read_text()
    filled = text.count('fill="#2f6f9f"')
    assert filled == sum(2 ** rank for rank in range(4))
    assert text.count("<text") == 4
    assert f'height="{BAND_HEIGHT * 4}"' in text


def test_coordinates_scale_to_the_hull(tmp_path):
    squared = squared_level_set(THIRD, 1)
    out = emit_svg([(squared, "squares")], UNIT, tmp_path / "sq.svg")
    text = out.read_text()
    # parts [0, 1/9] and [4/9, 1] at 1000px: widths 111.111 and 555.556
    assert '<rect x="0.000" y="18" width="111.111"' in text
    assert '<rect x="444.444" y="18" width="555.556"' in text


def test_output_is_byte_deterministic(tmp_path):
    layers = [(level_set(THIRD, 3).intervals, "rank 3")]
    first = emit_svg(layers, UNIT, tmp_path / "a.svg").read_bytes()
    second = emit_svg(layers, UNIT, tmp_path / "b.svg").read_bytes()
    assert first == second


def test_label_text_is_escaped(tmp_path):
    out = emit_svg([(IntervalSet((UNIT,)), "a < b & c")], UNIT, tmp_path / "esc.svg")
    assert "a &lt; b &amp; c" in out.read_text()


def test_empty_layer_renders_frame_only(tmp_path):
    out = emit_svg([(IntervalSet(), "empty")], UNIT, tmp_path / "empty.svg")
    assert out.read_text().count('fill="#2f6f9f"') == 0


def test_validation_errors(tmp_path):
    with pytest.raises(ValueError, match="at least one layer"):
        emit_svg([], UNIT, tmp_path / "x.svg")
    with pytest.raises(ValueError, match="beyond the hull"):
        emit_svg(
            [(IntervalSet((Interval(0, 2),)), "wide")], UNIT, tmp_path / "x.svg"
        )
    with pytest.raises(ValueError, match="positive length"):
        emit_svg(
            [(IntervalSet(), "flat")], Interval(F(1, 2), F(1, 2)), tmp_path / "x.svg"
        )
