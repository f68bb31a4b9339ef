"""Deterministic SVG band diagrams for interval sets.

One horizontal band per layer: parts render as filled rectangles, gaps stay
blank. The canvas is 1000 wide and 60 per layer tall. Coordinates are the
only place floats appear in the package, rounded to three decimals at
render time; the underlying data stays exact. No timestamps, no randomness:
the same layers always produce the same bytes.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence
from xml.sax.saxutils import escape

from .intervals import Interval, IntervalSet

CANVAS_WIDTH = 1000
BAND_HEIGHT = 60
_PART_FILL = "#2f6f9f"
_LABEL_FILL = "#333333"
_FRAME_STROKE = "#c8c8c8"


def _px(value, hull: Interval) -> str:
    rel = (value - hull.lo) / (hull.hi - hull.lo)
    return f"{float(rel) * CANVAS_WIDTH:.3f}"


def _width_px(length, hull: Interval) -> str:
    rel = length / (hull.hi - hull.lo)
    return f"{float(rel) * CANVAS_WIDTH:.3f}"


def emit_svg(
    layers: Sequence[tuple[IntervalSet, str]],
    hull: Interval,
    out_path: str | Path,
) -> Path:
    """Write a band diagram of ``layers`` (top to bottom) scaled to ``hull``.

    Every layer must fit inside the hull; the hull must have positive
    length. Returns the written path.
    """
    if not layers:
        raise ValueError("at least one layer is required")
    if hull.length <= 0:
        raise ValueError("hull must have positive length")
    for interval_set, _ in layers:
        span = interval_set.hull()
        if span is not None and (span.lo < hull.lo or span.hi > hull.hi):
            raise ValueError("layer extends beyond the hull")
    height = BAND_HEIGHT * len(layers)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS_WIDTH}" '
        f'height="{height}" viewBox="0 0 {CANVAS_WIDTH} {height}">',
        f'<rect x="0" y="0" width="{CANVAS_WIDTH}" height="{height}" fill="#ffffff"/>',
    ]
    for position, (interval_set, label) in enumerate(layers):
        top = BAND_HEIGHT * position
        lines.append(
            f'<text x="4" y="{top + 13}" font-family="monospace" '
            f'font-size="11" fill="{_LABEL_FILL}">{escape(label)}</text>'
        )
        lines.append(
            f'<rect x="0" y="{top + 18}" width="{CANVAS_WIDTH}" height="36" '
            f'fill="none" stroke="{_FRAME_STROKE}" stroke-width="1"/>'
        )
        for part in interval_set.parts:
            lines.append(
                f'<rect x="{_px(part.lo, hull)}" y="{top + 18}" '
                f'width="{_width_px(part.length, hull)}" height="36" '
                f'fill="{_PART_FILL}"/>'
            )
    lines.append("</svg>")
    path = Path(out_path)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path
