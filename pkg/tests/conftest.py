"""Shared brute-force helpers used by several test modules."""

import math

import numpy as np
import pytest

from yolk2d import Point, PointLocation, PolygonParams, polygon_vertex

TWO_PI = 2.0 * math.pi


def naive_classify(p, poly, tol=1e-12):
    """Edge-by-edge point location, independent of the wedge search."""
    dx, dy = p[0] - poly.x, p[1] - poly.y
    if poly.r == 0.0:
        if math.hypot(dx, dy) <= tol:
            return PointLocation.BOUNDARY
        return PointLocation.OUTSIDE
    worst = -math.inf
    for j in range(poly.k):
        a = polygon_vertex(poly, j)
        b = polygon_vertex(poly, (j + 1) % poly.k)
        ux, uy = b.x - a.x, b.y - a.y
        nrm = math.hypot(ux, uy)
        worst = max(worst, ((p[0] - a.x) * -uy + (p[1] - a.y) * ux) / nrm)
    if worst > tol:
        return PointLocation.OUTSIDE
    if worst >= -tol:
        return PointLocation.BOUNDARY
    return PointLocation.INSIDE


def brute_tangent_offsets(p, poly):
    """Clockwise sweep offsets (from the top tangent) of the entry and exit
    tangents of an outside point, found by exhaustive support checks."""
    verts = [polygon_vertex(poly, i) for i in range(poly.k)]
    scale = max(1.0, abs(p[0]) + abs(p[1]) + poly.r)
    out = {}
    for v in verts:
        dx, dy = p[0] - v.x, p[1] - v.y
        for tag, nx, ny in (("e", -dy, dx), ("x", dy, -dx)):
            nrm = math.hypot(nx, ny)
            if nrm == 0.0:
                continue
            vals = max((w.x - v.x) * nx + (w.y - v.y) * ny for w in verts)
            if vals <= 1e-9 * nrm * scale:
                u = (math.pi / 2 - math.atan2(ny, nx)) % TWO_PI
                out.setdefault(tag, []).append(u)
    assert set(out) == {"e", "x"}, "point does not have two supporting lines"
    res = {}
    for tag, us in out.items():
        us.sort()
        lo, hi = us[0], us[-1]
        assert hi - lo <= 1e-6 or TWO_PI - (hi - lo) <= 1e-6
        res[tag] = lo
    return res["e"], res["x"]


def cyclic_equal(a, b):
    if len(a) != len(b):
        return False
    a, b = list(a), list(b)
    return any(a[i:] + a[:i] == b for i in range(len(a)))


def random_polygon(rng, k_choices=(3, 4, 7, 12)):
    return PolygonParams(
        int(rng.choice(k_choices)),
        float(rng.random() * 1.5),
        float(rng.random() * 4 - 2),
        float(rng.random() * 4 - 2),
    )


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)
