"""Regular-polygon primitives.

Everything downstream works with the family of regular k-gons P_k(r, x, y):
circumradius r, centre (x, y), one vertex at the topmost circle point, vertex
indices advancing clockwise.  This module provides vertex construction, point
location, tangent-vertex computation, the clockwise ordering of tangents drawn
from two outside points, and the (r, x, y)-space hyperplanes that certify
side-of-line comparisons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

TWO_PI = 2.0 * math.pi
HALF_PI = 0.5 * math.pi

# Absolute signed distance within which a point counts as lying on an edge.
BOUNDARY_TOL = 1e-12
# Absolute hyperplane residual within which a parameter counts as "on".
SIDE_TOL = 1e-12
_NORMAL_SIGN_TOL = 1e-12


class Point(NamedTuple):
    x: float
    y: float


class PointLocation(Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


class HalfplaneSide(Enum):
    ABOVE = 1
    ON = 0
    BELOW = -1


class TangentPair(NamedTuple):
    """Tangency vertex indices from an outside point p, labelled so that
    entry vertex, p, exit vertex appear in clockwise order."""

    entry_vertex: int
    exit_vertex: int


class CriticalHyperplane(NamedTuple):
    """Hyperplane a*x + b*y + c*r + d = 0 in (r, x, y) parameter space."""

    a: float
    b: float
    c: float
    d: float


@dataclass(frozen=True)
class PolygonParams:
    """Parameters (k, r, x, y) of the regular polygon P_k(r, x, y)."""

    k: int
    r: float
    x: float
    y: float

    def __post_init__(self) -> None:
        if int(self.k) != self.k or self.k < 3:
            raise ValueError(f"side count must be an integer >= 3, got {self.k}")
        if not (math.isfinite(self.r) and math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError("polygon parameters must be finite")
        if self.r < 0:
            raise ValueError(f"circumradius must be >= 0, got {self.r}")

    @property
    def center(self) -> Point:
        return Point(self.x, self.y)

    @property
    def step(self) -> float:
        """Angular spacing between consecutive vertices."""
        return TWO_PI / self.k

    @property
    def apothem(self) -> float:
        return self.r * math.cos(math.pi / self.k)


class Line(NamedTuple):
    """Line a*u + b*v = c with (a, b) unit and a canonical sign, so equal
    lines produce equal triples."""

    a: float
    b: float
    c: float

    @staticmethod
    def from_coefficients(a: float, b: float, c: float) -> "Line":
        nrm = math.hypot(a, b)
        if nrm == 0.0 or not math.isfinite(nrm):
            raise ValueError("line normal must be nonzero and finite")
        a, b, c = a / nrm, b / nrm, c / nrm
        if a < -_NORMAL_SIGN_TOL or (abs(a) <= _NORMAL_SIGN_TOL and b < 0.0):
            a, b, c = -a, -b, -c
        return Line(a + 0.0, b + 0.0, c + 0.0)

    @staticmethod
    def through(p: Point, q: Point) -> "Line":
        a, b = p[1] - q[1], q[0] - p[0]
        return Line.from_coefficients(a, b, a * p[0] + b * p[1])

    def signed_distance(self, p: Point) -> float:
        return self.a * p[0] + self.b * p[1] - self.c


def polygon_vertex(poly: PolygonParams, i: int) -> Point:
    """Vertex i of P_k(r, x, y); i = 0 is the top vertex, clockwise order."""
    if not 0 <= i < poly.k:
        raise IndexError(f"vertex index {i} out of range for k={poly.k}")
    ang = HALF_PI - poly.step * i
    return Point(poly.x + poly.r * math.cos(ang), poly.y + poly.r * math.sin(ang))


def _wedge_index(dx: float, dy: float, k: int) -> int:
    """Index i of the centre-to-vertex wedge (cone from ray i clockwise to
    ray i+1) containing direction (dx, dy), by binary search on side-of-ray
    tests.  A direction exactly on a ray belongs to the wedge it starts."""
    step = TWO_PI / k
    # First split: side of the full line through the centre and vertex 0.
    s0 = -dx
    if s0 == 0.0:
        if dy > 0.0:
            return 0
        # Clockwise offset exactly pi: wedge floor(k/2) (its start ray for even k).
        return k // 2
    if s0 < 0.0:
        lo, hi = 0, (k + 1) // 2  # clockwise offset in (0, pi)
    else:
        lo, hi = k - (k + 1) // 2, k  # clockwise offset in (pi, 2*pi)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        ang = HALF_PI - step * mid
        s = math.cos(ang) * dy - math.sin(ang) * dx
        if s == 0.0:
            return mid  # on ray mid (antipode is outside the current cone)
        if s < 0.0:
            lo = mid
        else:
            hi = mid
    return lo


def classify_point(p: Point, poly: PolygonParams, tol: float = BOUNDARY_TOL) -> PointLocation:
    """Locate p relative to the polygon: wedge binary search, then one signed
    distance against the edge spanning that wedge."""
    dx, dy = p[0] - poly.x, p[1] - poly.y
    if poly.r == 0.0:
        # Degenerate polygon: a single point at the centre.
        if math.hypot(dx, dy) <= tol:
            return PointLocation.BOUNDARY
        return PointLocation.OUTSIDE
    if dx == 0.0 and dy == 0.0:
        return PointLocation.INSIDE
    i = _wedge_index(dx, dy, poly.k)
    psi = HALF_PI - (i + 0.5) * poly.step
    sd = dx * math.cos(psi) + dy * math.sin(psi) - poly.apothem
    if sd > tol:
        return PointLocation.OUTSIDE
    if sd >= -tol:
        return PointLocation.BOUNDARY
    return PointLocation.INSIDE


def _edge_face_sign(dx: float, dy: float, poly: PolygonParams, j: int, tie: float) -> int:
    """+1 if (dx, dy) from the centre lies strictly beyond edge j's line,
    0 if on it, -1 otherwise."""
    psi = HALF_PI - (j + 0.5) * poly.step
    s = dx * math.cos(psi) + dy * math.sin(psi) - poly.apothem
    if s > tie:
        return 1
    if s < -tie:
        return -1
    return 0


def tangent_vertices(p: Point, poly: PolygonParams) -> TangentPair:
    """Vertex indices touched by the two supporting lines from an outside
    point, labelled entry/exit by the clockwise convention.

    The edges whose lines have p strictly beyond them form one contiguous
    arc; the supporting lines touch the arc's two end vertices.  When a
    supporting line contains a whole edge, the reported vertex is the edge
    endpoint reached first walking clockwise from the top vertex.
    """
    if classify_point(p, poly) is not PointLocation.OUTSIDE:
        raise ValueError("point is not strictly outside the polygon")
    k, r = poly.k, poly.r
    if r == 0.0:
        return TangentPair(0, 0)
    dx, dy = p[0] - poly.x, p[1] - poly.y
    tie = BOUNDARY_TOL * max(1.0, abs(dx) + abs(dy) + r)

    def face(j: int) -> int:
        return _edge_face_sign(dx, dy, poly, j % k, tie)

    if k <= 32:
        vals = [face(j) for j in range(k)]
        facing = [j for j in range(k) if vals[j] >= 0]
        if not facing or len(facing) == k:
            raise ValueError("point is not strictly outside the polygon")
        j0 = next(j for j in facing if vals[(j - 1) % k] < 0)
        j1 = next(j for j in facing if vals[(j + 1) % k] < 0)
    else:
        tau = (HALF_PI - math.atan2(dy, dx)) % TWO_PI
        jf = int(round(tau / poly.step - 0.5)) % k
        if face(jf) < 0:
            jf = next((jj % k for jj in (jf - 1, jf + 1) if face(jj) >= 0), None)
            if jf is None:
                raise ValueError("point is not strictly outside the polygon")
        jd = (jf + k // 2) % k
        if face(jd) >= 0:
            # fp-degenerate fallback
            vals = [face(j) for j in range(k)]
            facing = [j for j in range(k) if vals[j] >= 0]
            if not facing or len(facing) == k:
                raise ValueError("point is not strictly outside the polygon")
            j0 = next(j for j in facing if vals[(j - 1) % k] < 0)
            j1 = next(j for j in facing if vals[(j + 1) % k] < 0)
        else:
            span = (jd - jf) % k
            a, b = jf, jf + span  # face(a) >= 0, face(b) < 0
            while b - a > 1:
                m = (a + b) // 2
                if face(m) >= 0:
                    a = m
                else:
                    b = m
            j1 = a % k
            a, b = jf + span, jf + k  # face(a) < 0, face(b) >= 0
            while b - a > 1:
                m = (a + b) // 2
                if face(m) >= 0:
                    b = m
                else:
                    a = m
            j0 = b % k

    entry = j0
    exit_ = (j1 + 1) % k
    # Edge-contained supporting lines: deterministic endpoint tie-break.
    if face(j0) == 0 and j0 == k - 1:
        entry = 0
    if face(j1) == 0 and j1 != k - 1:
        exit_ = j1
    return TangentPair(entry, exit_)


_ORDER_L = ("q_e", "p_e", "q_x", "p_x")
_ORDER_R = ("p_e", "q_e", "p_x", "q_x")
_ORDER_U = ("p_e", "q_e", "q_x", "p_x")
_ORDER_D = ("q_e", "p_e", "p_x", "q_x")
_ORDER_SPLIT = ("p_e", "p_x", "q_e", "q_x")


def tangent_order(p: Point, q: Point, poly: PolygonParams) -> tuple[str, str, str, str]:
    """Relative clockwise order of the four tangent lines drawn from two
    outside points, reported as identifiers p_e, p_x, q_e, q_x.

    The two polygon tangents parallel to pq split the plane into left/right
    strips and a middle slab, which the chord of tangency halves; the order
    is a fixed table over those five placements of p and q.
    """
    for z in (p, q):
        if classify_point(z, poly) is not PointLocation.OUTSIDE:
            raise ValueError("both points must be strictly outside the polygon")
    if poly.r == 0.0:
        raise ValueError("tangent order is undefined for a degenerate polygon")
    ddx, ddy = q[0] - p[0], q[1] - p[1]
    if ddx == 0.0 and ddy == 0.0:
        raise ValueError("points must be distinct")

    # Tangency vertices of the two tangents parallel to pq.
    psi1 = math.atan2(ddx, -ddy)
    ia = int(round((HALF_PI - psi1) / poly.step)) % poly.k
    ib = int(round((HALF_PI - psi1 - math.pi) / poly.step)) % poly.k
    va, vb = polygon_vertex(poly, ia), polygon_vertex(poly, ib)

    # Frame: yhat is the chord normal pointing from q's side to p's side,
    # xhat completes a right-handed pair, so "i" is the right-hand vertex.
    chx, chy = vb[0] - va[0], vb[1] - va[1]
    nx, ny = -chy, chx
    if (p[0] - q[0]) * nx + (p[1] - q[1]) * ny < 0.0:
        nx, ny = -nx, -ny
    xhx, xhy = ny, -nx
    if (va[0] - vb[0]) * xhx + (va[1] - vb[1]) * xhy > 0.0:
        vi, vj = va, vb
    else:
        vi, vj = vb, va
    # Tangent direction oriented toward increasing yhat.
    ex, ey = (ddx, ddy) if ddx * nx + ddy * ny > 0.0 else (-ddx, -ddy)

    def cross(ux: float, uy: float, wx: float, wy: float) -> float:
        return ux * wy - uy * wx

    side_j = cross(ex, ey, p[0] - vj[0], p[1] - vj[1])
    side_i = cross(ex, ey, p[0] - vi[0], p[1] - vi[1])
    if side_j > 0.0:
        return _ORDER_L
    if side_i < 0.0:
        return _ORDER_R
    up_p = cross(xhx, xhy, p[0] - vi[0], p[1] - vi[1]) > 0.0
    up_q = cross(xhx, xhy, q[0] - vi[0], q[1] - vi[1]) > 0.0
    if up_p and up_q:
        return _ORDER_U
    if not up_p and not up_q:
        return _ORDER_D
    return _ORDER_SPLIT


def critical_hyperplane(g: float, v: Point, p: Point) -> CriticalHyperplane:
    """Hyperplane whose side at (r, x, y) matches the side of p relative to
    the line of gradient g through (x, y) + r*v."""
    vals = (g, v[0], v[1], p[0], p[1])
    if not all(math.isfinite(t) for t in vals):
        raise ValueError("hyperplane inputs must be finite")
    return CriticalHyperplane(g, -1.0, g * v[0] - v[1], p[1] - g * p[0])


def hyperplane_side(h: CriticalHyperplane, params: PolygonParams,
                    tol: float = SIDE_TOL) -> HalfplaneSide:
    """Side of the parameter point (r, x, y) relative to the hyperplane."""
    val = h.a * params.x + h.b * params.y + h.c * params.r + h.d
    if val > tol:
        return HalfplaneSide.ABOVE
    if val < -tol:
        return HalfplaneSide.BELOW
    return HalfplaneSide.ON
