"""Deterministic SVG rendering of lattice figures.

One lattice unit maps to 32 SVG units, the lattice y-axis points
upward, and the view box is the content bounding box plus a one-cell
margin.  Output is built by plain string concatenation so identical
input produces byte-identical files.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .plane import Point

CELL = 32
DOT_RADIUS = 2.5


class Figure:
    """Accumulates SVG elements over a lattice grid."""

    def __init__(self):
        self._shapes: list[str] = []
        self._points: list[Point] = []

    def _see(self, pts: Iterable[Point]) -> None:
        self._points.extend(pts)

    def polyline(self, pts: Sequence[Point], color: str = "#1f4e9c", width: float = 2.5) -> None:
        self._see(pts)
        coords = " ".join(f"{p[0]},{-p[1]}" for p in pts)
        self._shapes.append(
            f'<polyline points="{coords}" fill="none" stroke="{color}" '
            f'stroke-width="{width / CELL}" stroke-linejoin="round" stroke-linecap="round"/>'
        )

    def polygon(self, pts: Sequence[Point], color: str = "#1f4e9c", fill: str = "#dbe7fb") -> None:
        self._see(pts)
        coords = " ".join(f"{p[0]},{-p[1]}" for p in pts)
        self._shapes.append(
            f'<polygon points="{coords}" fill="{fill}" stroke="{color}" '
            f'stroke-width="{2.5 / CELL}" stroke-linejoin="round"/>'
        )

    def segment(self, a: Point, b: Point, color: str = "#b03030", width: float = 1.5) -> None:
        self._see([a, b])
        self._shapes.append(
            f'<line x1="{a[0]}" y1="{-a[1]}" x2="{b[0]}" y2="{-b[1]}" '
            f'stroke="{color}" stroke-width="{width / CELL}"/>'
        )

    def mark(self, p: Point, color: str = "#b03030") -> None:
        self._see([p])
        self._shapes.append(
            f'<circle cx="{p[0]}" cy="{-p[1]}" r="{5.0 / CELL}" fill="{color}"/>'
        )

    def label(self, p: Point, text: str, color: str = "#202020") -> None:
        self._see([p])
        self._shapes.append(
            f'<text x="{p[0] + 0.15}" y="{-p[1] - 0.15}" font-size="{14 / CELL}" '
            f'font-family="monospace" fill="{color}">{_escape(text)}</text>'
        )

    def to_svg(self) -> str:
        if not self._points:
            self._points.append((0, 0))
        xs = [p[0] for p in self._points]
        ys = [p[1] for p in self._points]
        x0, x1 = min(xs) - 1, max(xs) + 1
        y0, y1 = min(ys) - 1, max(ys) + 1
        dots = []
        for x in range(x0, x1 + 1):
            for y in range(y0, y1 + 1):
                dots.append(
                    f'<circle cx="{x}" cy="{-y}" r="{DOT_RADIUS / CELL}" fill="#b8b8b8"/>'
                )
        width = (x1 - x0) * CELL
        height = (y1 - y0) * CELL
        body = "\n".join(dots + self._shapes)
        return (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
            f'viewBox="{x0} {-y1} {x1 - x0} {y1 - y0}">\n{body}\n</svg>\n'
        )

    def write(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_svg())


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def sail_figure(vertices: Sequence[Point], lls: Sequence[int], vertex: Point = (0, 0)) -> Figure:
    fig = Figure()
    fig.segment(vertex, vertices[0])
    fig.segment(vertex, vertices[-1])
    fig.polyline(list(vertices))
    fig.mark(vertex)
    for p in vertices:
        fig.mark(p, color="#1f4e9c")
    fig.label(vertices[0], "lls=(" + ",".join(str(a) for a in lls) + ")")
    return fig


def broken_line_figure(points: Sequence[Point], vertex: Point = (0, 0)) -> Figure:
    fig = Figure()
    fig.polyline(list(points))
    fig.mark(vertex)
    for p in points:
        fig.mark(p, color="#1f4e9c")
    return fig


def polygon_figure(vertices: Sequence[Point], labels: Sequence[str] = ()) -> Figure:
    fig = Figure()
    fig.polygon(list(vertices))
    for p, text in zip(vertices, labels):
        fig.label(p, text)
    return fig


def triangle_sheet(records) -> Figure:
    """Grid of labeled triangles, one cell per congruence class record."""
    fig = Figure()
    offset_x = 0
    offset_y = 0
    col = 0
    for rec in records:
        tri = rec.example
        pts = [(p[0] + offset_x, p[1] + offset_y) for p in tri.vertices]
        fig.polygon(pts)
        tans = "(" + ",".join(_frac(t) for t in rec.cls.tans) + ")"
        flags = ",".join(rec.flags)
        fig.label((offset_x, offset_y - 1), f"S={rec.cls.area} {tans} {rec.shape} {flags}")
        col += 1
        offset_x += 14
        if col % 5 == 0:
            offset_x = 0
            offset_y -= 14
    return fig


def _frac(q) -> str:
    from .numbers import format_rat

    return format_rat(q)
