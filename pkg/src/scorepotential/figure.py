"""SVG figure: score-potential curve versus the constant benefit-index line.

The hatched band between the two curves shows the improvement room the
potential measure reveals while the benefit index stays flat.  Output is
deterministic SVG (fixed coordinate formatting, no timestamps) so tests can
compare normalized paths.
"""

from __future__ import annotations

from typing import Sequence

from .errors import TooFewPoints

WIDTH = 640
HEIGHT = 400
MARGIN_LEFT = 64
MARGIN_RIGHT = 24
MARGIN_TOP = 40
MARGIN_BOTTOM = 56
PLOT_WIDTH = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
PLOT_HEIGHT = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM


def x_position(index: int, count: int) -> float:
    """Pixel x of scenario ``index`` out of ``count`` evenly spaced ones."""
    return MARGIN_LEFT + PLOT_WIDTH * index / (count - 1)


def y_position(value: float) -> float:
    """Pixel y of a percentage value (0..100, origin at the plot bottom)."""
    return MARGIN_TOP + PLOT_HEIGHT * (100 - value) / 100


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def _points_attr(points: Sequence[tuple[float, float]]) -> str:
    return " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in points)


def render_pop_vs_beni_figure(series: Sequence[tuple[str, float, float]]) -> str:
    """Render (label, pop, beni_attainment) scenarios as an SVG document."""
    if len(series) < 2:
        raise TooFewPoints(len(series))
    for label, pop, beni in series:
        if not (0 <= pop <= 100 and 0 <= beni <= 100):
            raise ValueError(f"series point {label!r} outside [0, 100]")

    n = len(series)
    pop_pts = [(x_position(i, n), y_position(pop)) for i, (_, pop, _) in enumerate(series)]
    beni_pts = [(x_position(i, n), y_position(beni)) for i, (_, _, beni) in enumerate(series)]
    band = pop_pts + beni_pts[::-1]

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        "<defs>",
        '<pattern id="hatch" width="8" height="8" patternUnits="userSpaceOnUse" '
        'patternTransform="rotate(45)">',
        '<line x1="0" y1="0" x2="0" y2="8" stroke="#888888" stroke-width="2"/>',
        "</pattern>",
        "</defs>",
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>',
    ]

    for tick in range(0, 101, 25):
        y = y_position(tick)
        parts.append(
            f'<line x1="{_fmt(MARGIN_LEFT)}" y1="{_fmt(y)}" '
            f'x2="{_fmt(MARGIN_LEFT + PLOT_WIDTH)}" y2="{_fmt(y)}" '
            'stroke="#dddddd" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{_fmt(MARGIN_LEFT - 8)}" y="{_fmt(y + 4)}" '
            'text-anchor="end" font-family="sans-serif" font-size="12">'
            f"{tick}%</text>"
        )

    parts.append(
        f'<polygon id="improvement-band" points="{_points_attr(band)}" '
        'fill="url(#hatch)" stroke="none"/>'
    )
    parts.append(
        f'<polyline id="beni-line" points="{_points_attr(beni_pts)}" '
        'fill="none" stroke="#444444" stroke-width="2" stroke-dasharray="6 3"/>'
    )
    parts.append(
        f'<polyline id="pop-curve" points="{_points_attr(pop_pts)}" '
        'fill="none" stroke="#000000" stroke-width="2"/>'
    )
    for (x, y) in pop_pts:
        parts.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="#000000"/>')

    for i, (label, _, _) in enumerate(series):
        x = x_position(i, n)
        parts.append(
            f'<text x="{_fmt(x)}" y="{_fmt(MARGIN_TOP + PLOT_HEIGHT + 20)}" '
            'text-anchor="middle" font-family="sans-serif" font-size="12">'
            f"{_escape(label)}</text>"
        )

    axis_y = MARGIN_TOP + PLOT_HEIGHT
    parts.append(
        f'<line x1="{_fmt(MARGIN_LEFT)}" y1="{_fmt(MARGIN_TOP)}" '
        f'x2="{_fmt(MARGIN_LEFT)}" y2="{_fmt(axis_y)}" stroke="#000000" stroke-width="1"/>'
    )
    parts.append(
        f'<line x1="{_fmt(MARGIN_LEFT)}" y1="{_fmt(axis_y)}" '
        f'x2="{_fmt(MARGIN_LEFT + PLOT_WIDTH)}" y2="{_fmt(axis_y)}" '
        'stroke="#000000" stroke-width="1"/>'
    )
    parts.append(
        f'<text x="{_fmt(MARGIN_LEFT)}" y="{_fmt(MARGIN_TOP - 16)}" '
        'font-family="sans-serif" font-size="13">'
        "Score potential (solid) vs. benefit-index attainment (dashed); "
        "hatched band = improvement room</text>"
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _escape(text: str) -> str:
    return (
        text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
    )
