"""Bare-bones SVG 1.1 output: polylines and heat grids, no styling beyond colour."""

from __future__ import annotations

import math
from pathlib import Path
from typing import Sequence, Union
from xml.sax.saxutils import escape

WIDTH, HEIGHT, MARGIN = 640, 400, 40


def _frame(body: list[str], title: str) -> str:
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">\n'
        f"<title>{escape(title)}</title>\n"
    )
    return head + "\n".join(body) + "\n</svg>\n"


def _scale(lo: float, hi: float, a: float, b: float):
    span = (hi - lo) or 1.0
    return lambda v: a + (v - lo) * (b - a) / span


def polylines(series: dict[str, Sequence[tuple[float, float]]], title: str = "",
              log: bool = False) -> str:
    """One polyline per named series; ``log`` plots log10 of both axes."""
    colours = ("#1f4e9c", "#d9731a", "#2d8a3e", "#8a2d6e")
    tx = (lambda v: math.log10(v)) if log else float
    pts = {
        name: [(tx(x), tx(y)) for x, y in s if not log or (x > 0 and y > 0)]
        for name, s in series.items()
    }
    xs = [p[0] for s in pts.values() for p in s] or [0.0]
    ys = [p[1] for s in pts.values() for p in s] or [0.0]
    sx = _scale(min(xs), max(xs), MARGIN, WIDTH - MARGIN)
    sy = _scale(min(ys), max(ys), HEIGHT - MARGIN, MARGIN)
    body = [
        f'<rect x="{MARGIN}" y="{MARGIN}" width="{WIDTH - 2 * MARGIN}" '
        f'height="{HEIGHT - 2 * MARGIN}" fill="none" stroke="#999"/>'
    ]
    for i, (name, s) in enumerate(pts.items()):
        coords = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in s)
        body.append(
            f'<polyline fill="none" stroke="{colours[i % len(colours)]}" '
            f'points="{coords}"><title>{escape(name)}</title></polyline>'
        )
    return _frame(body, title)


def heat_grid(cells: dict[tuple[int, int], float], title: str = "") -> str:
    """Rectangles at integer ``(x, y)``; colour follows the cell value linearly."""
    if not cells:
        return _frame([], title)
    xs = [k[0] for k in cells]
    ys = [k[1] for k in cells]
    lo, hi = min(cells.values()), max(cells.values())
    w = (WIDTH - 2 * MARGIN) / (max(xs) - min(xs) + 1)
    h = (HEIGHT - 2 * MARGIN) / (max(ys) - min(ys) + 1)
    body = []
    for (x, y), v in sorted(cells.items()):
        t = (v - lo) / ((hi - lo) or 1.0)
        r, g, b = int(255 * t), int(80 + 120 * (1 - abs(2 * t - 1))), int(255 * (1 - t))
        px = MARGIN + (x - min(xs)) * w
        py = HEIGHT - MARGIN - (y - min(ys) + 1) * h
        body.append(
            f'<rect x="{px:.2f}" y="{py:.2f}" width="{w:.2f}" height="{h:.2f}" '
            f'fill="#{r:02x}{g:02x}{b:02x}"/>'
        )
    return _frame(body, title)


def write(path: Union[str, Path], text: str) -> None:
    Path(path).write_text(text, encoding="utf-8", newline="\n")
