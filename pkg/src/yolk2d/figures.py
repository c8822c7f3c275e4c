"""Matplotlib rendering of an instance: points, median lines, and the ball.

Used by the CLI's report path; the output format follows the file extension
(.svg by default).
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import Circle
from matplotlib.patches import Polygon as MplPolygon

from .geometry import Line, Point
from .medians import PointSet


def render_instance(
    path: str,
    voters: PointSet,
    ball_vertices: list[Point] | None = None,
    circle: tuple[float, float, float] | None = None,
    lines: list[Line] = (),
    title: str | None = None,
) -> None:
    xmin, xmax, ymin, ymax = voters.bounds()
    if ball_vertices:
        xmin = min(xmin, min(v[0] for v in ball_vertices))
        xmax = max(xmax, max(v[0] for v in ball_vertices))
        ymin = min(ymin, min(v[1] for v in ball_vertices))
        ymax = max(ymax, max(v[1] for v in ball_vertices))
    span = max(xmax - xmin, ymax - ymin, 1e-9)
    pad = 0.15 * span
    x0, x1 = xmin - pad, xmax + pad
    y0, y1 = ymin - pad, ymax + pad
    reach = 2.0 * math.hypot(x1 - x0, y1 - y0)
    cx0, cy0 = 0.5 * (x0 + x1), 0.5 * (y0 + y1)

    fig, ax = plt.subplots(figsize=(6.0, 6.0))
    for ln in lines:
        # Anchor at the projection of the view centre onto the line.
        off = ln.a * cx0 + ln.b * cy0 - ln.c
        px, py = cx0 - off * ln.a, cy0 - off * ln.b
        dx, dy = -ln.b, ln.a
        ax.plot(
            [px - reach * dx, px + reach * dx],
            [py - reach * dy, py + reach * dy],
            color="0.65",
            linewidth=0.8,
            zorder=1,
        )
    pts = voters.coords
    ax.scatter(pts[:, 0], pts[:, 1], s=18, color="black", zorder=3)
    if ball_vertices:
        ax.add_patch(
            MplPolygon(
                [(v[0], v[1]) for v in ball_vertices],
                closed=True,
                facecolor="tab:red",
                alpha=0.25,
                edgecolor="tab:red",
                zorder=2,
            )
        )
    if circle is not None:
        ax.add_patch(
            Circle(circle[:2], circle[2], fill=False, color="tab:blue",
                   linewidth=1.2, zorder=2)
        )
    ax.set_xlim(x0, x1)
    ax.set_ylim(y0, y1)
    ax.set_aspect("equal")
    if title:
        ax.set_title(title)
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)
