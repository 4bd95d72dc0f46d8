"""Deterministic SVG rendering of planar packings.

Output is a pure function of the input: coordinates are printed from exact
rationals at fixed 6-decimal precision (presentation only, nothing feeds
back into computation), so repeated renders are byte-identical.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .planar import PlanarPacking, Point, padd

_FILL = "#dbe9f6"
_STROKE = "#27518a"
_LINE = "#b03030"


def _fmt(x) -> str:
    return f"{float(x):.6f}"


def _bbox(packing: PlanarPacking) -> tuple[float, float, float, float]:
    xs: list[float] = []
    ys: list[float] = []
    for c in packing.centers:
        for v in packing.body.vertices:
            p = padd(c, v)
            xs.append(float(p[0]))
            ys.append(float(p[1]))
    pad = 0.05 * max(max(xs) - min(xs), max(ys) - min(ys), 1.0)
    return min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad


def _clip_line(
    phi: Point, c: Fraction, box: tuple[float, float, float, float]
) -> tuple[tuple[float, float], tuple[float, float]] | None:
    """Intersect the line phi . x = c with the bounding box."""
    x0, y0, x1, y1 = box
    a, b = float(phi[0]), float(phi[1])
    cf = float(c)
    pts: list[tuple[float, float]] = []
    if abs(b) > 1e-12:
        for x in (x0, x1):
            y = (cf - a * x) / b
            if y0 - 1e-9 <= y <= y1 + 1e-9:
                pts.append((x, y))
    if abs(a) > 1e-12:
        for y in (y0, y1):
            x = (cf - b * y) / a
            if x0 - 1e-9 <= x <= x1 + 1e-9:
                pts.append((x, y))
    uniq: list[tuple[float, float]] = []
    for p in pts:
        if all(abs(p[0] - q[0]) + abs(p[1] - q[1]) > 1e-9 for q in uniq):
            uniq.append(p)
    if len(uniq) < 2:
        return None
    uniq.sort()
    return uniq[0], uniq[-1]


def render_svg(
    packing: PlanarPacking,
    separators: Iterable[tuple[Point, Fraction]] = (),
    width: int = 640,
) -> str:
    """One closed path per translate, plus optional separating-line overlays.

    `separators` are (normal, offset) pairs as produced by the total
    separability verifier's witnesses.
    """
    x0, y0, x1, y1 = _bbox(packing)
    span_x, span_y = x1 - x0, y1 - y0
    height = max(1, round(width * span_y / span_x))
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="{_fmt(x0)} {_fmt(-y1)} '
        f'{_fmt(span_x)} {_fmt(span_y)}">',
    ]
    for c in packing.centers:
        coords = [padd(c, v) for v in packing.body.vertices]
        path = "M " + " L ".join(
            f"{_fmt(p[0])},{_fmt(-p[1])}" for p in coords
        ) + " Z"
        lines.append(
            f'<path d="{path}" fill="{_FILL}" stroke="{_STROKE}" '
            f'stroke-width="{_fmt(0.02 * max(span_x, span_y))}"/>'
        )
    for phi, c in separators:
        seg = _clip_line(phi, c, (x0, y0, x1, y1))
        if seg is None:
            continue
        (ax, ay), (bx, by) = seg
        lines.append(
            f'<line x1="{_fmt(ax)}" y1="{_fmt(-ay)}" x2="{_fmt(bx)}" '
            f'y2="{_fmt(-by)}" stroke="{_LINE}" '
            f'stroke-width="{_fmt(0.012 * max(span_x, span_y))}" '
            'stroke-dasharray="0.2,0.1"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
