"""Decision algorithm: does P_k(r, x, y) meet every median line of V?

A tangent line rolled clockwise around the polygon bounds an open outer
halfplane; the polygon meets every median line exactly when that halfplane
never captures n/2 or more points.  Each strictly-outside point contributes
one enter and one exit event where the rolling tangent passes through it, so
the check reduces to sorting tangency events and running a counter.

Two implementations share those semantics:

* a vectorised fast path used for plain verdicts (closed-form tangency
  indices, numpy event sort), which keeps million-point decisions cheap;
* a traced path in which every parameter-dependent comparison is evaluated
  through its critical hyperplane in (r, x, y) space and recorded.  The
  traced run works in a frame rotated by a data-dependent angle chosen so no
  comparison direction is vertical, which keeps every gradient finite; the
  rotation is part of the trace.  Re-running with any parameters on the same
  side of every recorded hyperplane reproduces the verdict.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import cmp_to_key
from typing import NamedTuple

import numpy as np

from .geometry import (
    BOUNDARY_TOL,
    HALF_PI,
    TWO_PI,
    CriticalHyperplane,
    HalfplaneSide,
    Point,
    PointLocation,
    PolygonParams,
    classify_point,
    critical_hyperplane,
    hyperplane_side,
    polygon_vertex,
    tangent_vertices,
)
from .medians import PointSet

# Events whose clockwise offsets differ by at most this share an angle key.
ANGLE_TOL = 1e-12


class EventKind(Enum):
    ENTER = "enter"
    EXIT = "exit"


class SweepEvent(NamedTuple):
    point_index: int
    kind: EventKind
    angle_key: float  # outward tangent-normal angle in [0, 2*pi)


class TracedComparison(NamedTuple):
    hyperplane: CriticalHyperplane
    side: HalfplaneSide


@dataclass
class DecisionTrace:
    """Record of every parameter-dependent comparison of a traced decision."""

    comparisons: list[TracedComparison]
    verdict: bool
    rotation: float
    lambda_rotated: tuple[float, float, float]  # (r, x, y) in the rotated frame

    @property
    def hyperplanes(self) -> list[CriticalHyperplane]:
        return [c.hyperplane for c in self.comparisons]

    def rotated_params(self, poly: PolygonParams) -> PolygonParams:
        """Parameters expressed in the trace's rotated frame."""
        cw, sw = math.cos(self.rotation), math.sin(self.rotation)
        return PolygonParams(
            poly.k, poly.r, cw * poly.x - sw * poly.y, sw * poly.x + cw * poly.y
        )

    def sides_match(self, poly: PolygonParams) -> bool:
        """True when every recorded comparison lands on the same side at the
        given parameters."""
        rot = self.rotated_params(poly)
        return all(hyperplane_side(c.hyperplane, rot) is c.side for c in self.comparisons)


def decide(poly: PolygonParams, voters: PointSet, trace: bool = False):
    """True iff the polygon intersects every median line of the voters
    (touching counts).  With ``trace`` the traced verdict and its
    DecisionTrace are returned as a pair."""
    if trace:
        session = _TraceSession(poly, voters)
        return session.run()
    if voters.n <= _SMALL_N:
        return _decide_small(poly, voters)
    return _decide_fast(poly, voters)


# ---------------------------------------------------------------------------
# fast paths

# Below this size the scalar sweep beats numpy's fixed per-call overhead.
_SMALL_N = 40


def _decide_small(poly: PolygonParams, voters: PointSet) -> bool:
    """Scalar sweep for small point sets; same schedule as the array path."""
    k, r, cx, cy = poly.k, poly.r, poly.x, poly.y
    n = voters.n
    step = TWO_PI / k
    apothem = r * math.cos(math.pi / k)
    top = cy + r
    count0 = 0
    events: list[tuple[float, int, int, int]] = []
    for i, (px, py) in enumerate(voters.coords.tolist()):
        dx = px - cx
        dy = py - cy
        above = py > top
        if above:
            count0 += 1
        tau = (HALF_PI - math.atan2(dy, dx)) % TWO_PI
        rho = math.hypot(dx, dy)
        j = min(int(tau / step), k - 1)
        if rho * math.cos(tau - (j + 0.5) * step) - apothem <= BOUNDARY_TOL:
            continue
        beta = math.acos(min(1.0, max(-1.0, apothem / rho)))
        e = math.ceil((tau - beta) / step - 0.5) % k
        xv = (math.floor((tau + beta) / step - 0.5) + 1) % k
        phi = HALF_PI - e * step
        ax = px - (cx + r * math.cos(phi))
        ay = py - (cy + r * math.sin(phi))
        u_e = (HALF_PI - math.atan2(ax, -ay)) % TWO_PI
        phi = HALF_PI - xv * step
        bx = px - (cx + r * math.cos(phi))
        by = py - (cy + r * math.sin(phi))
        u_x = (HALF_PI - math.atan2(-bx, by)) % TWO_PI
        if above:
            if u_x >= u_e:
                u_x = 0.0
        elif u_x <= u_e:
            u_x += TWO_PI
        events.append((u_e, 1, i, 1))
        events.append((u_x, 0, i, -1))
    if 2 * count0 >= n:
        return False
    if not events:
        return True
    events.sort()
    cnt = count0
    last = len(events) - 1
    for pos, ev in enumerate(events):
        cnt += ev[3]
        if (pos == last or events[pos + 1][0] - ev[0] > ANGLE_TOL) and 2 * cnt >= n:
            return False
    return True


# Chunk size for the array sweep; keeps each block's temporaries in cache.
_CHUNK = 32_768


class _PolyTables(NamedTuple):
    """Unit vertex vectors and edge normals of P_k(1, 0, 0), indexed by the
    clockwise vertex/edge number."""

    vx: np.ndarray
    vy: np.ndarray
    nx: np.ndarray
    ny: np.ndarray


def _poly_tables(k: int) -> _PolyTables:
    step = TWO_PI / k
    idx = np.arange(k)
    phi = HALF_PI - idx * step
    psi = phi - 0.5 * step
    return _PolyTables(np.cos(phi), np.sin(phi), np.cos(psi), np.sin(psi))


def _chunk_offsets(poly: PolygonParams, tables: _PolyTables, x, y):
    """Offsets of one coordinate block: (count_above, u_e, u_x, local outside
    indices)."""
    k, r, cx, cy = poly.k, poly.r, poly.x, poly.y
    inv_step = k / TWO_PI
    apothem = poly.apothem
    dx = x - cx
    dy = y - cy

    # arctan2 lands in (-pi, pi], so HALF_PI - it lies in [-pi/2, 3*pi/2).
    tau = HALF_PI - np.arctan2(dy, dx)
    np.add(tau, TWO_PI, out=tau, where=tau < 0.0)
    nearest_edge = np.minimum(np.floor(tau * inv_step), k - 1).astype(np.intp)
    sdist = dx * tables.nx[nearest_edge] + dy * tables.ny[nearest_edge] - apothem
    outside = sdist > BOUNDARY_TOL
    above0 = y > cy + r
    count = int(np.count_nonzero(above0))
    if not np.any(outside):
        empty = np.empty(0)
        return count, empty, empty, np.empty(0, dtype=np.intp)

    idx_o = np.flatnonzero(outside)
    if len(idx_o) < len(x):
        tau_o = tau[idx_o]
        dxo = dx[idx_o]
        dyo = dy[idx_o]
        ab = above0[idx_o]
    else:
        tau_o, dxo, dyo, ab = tau, dx, dy, above0
    rho = np.sqrt(dxo * dxo + dyo * dyo)

    # Facing arc of edges seen from each outside point; its end vertices are
    # the tangency vertices.  The arc half-width is below pi/2, which bounds
    # how far the raw edge indices can leave [0, k).
    beta = np.arccos(np.clip(apothem / np.maximum(rho, 1e-300), -1.0, 1.0))
    e_idx = np.ceil((tau_o - beta) * inv_step - 0.5)
    np.add(e_idx, k, out=e_idx, where=e_idx < 0.0)
    e_int = e_idx.astype(np.intp)
    x_idx = np.floor((tau_o + beta) * inv_step - 0.5) + 1.0
    np.subtract(x_idx, k, out=x_idx, where=x_idx >= k)
    x_int = x_idx.astype(np.intp)

    ax = dxo - r * tables.vx[e_int]
    ay = dyo - r * tables.vy[e_int]
    u_e = HALF_PI - np.arctan2(ax, -ay)
    np.add(u_e, TWO_PI, out=u_e, where=u_e < 0.0)
    bx = dxo - r * tables.vx[x_int]
    by = dyo - r * tables.vy[x_int]
    u_x = HALF_PI - np.arctan2(-bx, by)
    np.add(u_x, TWO_PI, out=u_x, where=u_x < 0.0)

    # A point on/near the start tangent must keep its exit on the correct
    # side of the full revolution.
    u_x = np.where(ab & (u_x >= u_e), 0.0, u_x)
    u_x = np.where(~ab & (u_x <= u_e), u_x + TWO_PI, u_x)
    return count, u_e, u_x, idx_o


def _pseudo_cw_key(nx, ny):
    """Strictly increasing surrogate of the clockwise offset (from the top
    tangent) of an outward normal (nx, ny); range [0, 4), no trig.  Orders
    identically to the radian offset except for sub-ulp ties."""
    t = nx / (np.abs(nx) + np.abs(ny))
    key = np.where(ny >= 0.0, t, 2.0 - t)
    np.add(key, 4.0, out=key, where=key < 0.0)
    return key


def _square_keys(poly: PolygonParams, x, y):
    """k = 4 specialisation of _chunk_offsets on pseudo-angle keys: facing
    tests are four dot products and no inverse trig is needed."""
    r, cx, cy = poly.r, poly.x, poly.y
    apothem = poly.apothem
    lim = apothem + BOUNDARY_TOL
    c = math.sqrt(0.5)
    dx = x - cx
    dy = y - cy

    s02 = c * (dx + dy)
    s13 = c * (dx - dy)
    f0 = s02 > lim
    f1 = s13 > lim
    f2 = s02 < -lim
    f3 = s13 < -lim
    outside = f0 | f1 | f2 | f3
    above0 = dy > r
    count = int(np.count_nonzero(above0))
    if not np.any(outside):
        empty = np.empty(0)
        return count, empty, empty
    idx_o = np.flatnonzero(outside)
    if len(idx_o) < len(x):
        dxo = dx[idx_o]
        dyo = dy[idx_o]
        ab = above0[idx_o]
        f0, f1, f2, f3 = (f[idx_o] for f in (f0, f1, f2, f3))
    else:
        dxo, dyo, ab = dx, dy, above0
    # Entry vertex: start of the facing chain; exit: one past its end.
    e_int = (
        (f1 & ~f0) + 2 * (f2 & ~f1) + 3 * (f3 & ~f2)
    ).astype(np.intp)
    j1 = ((f1 & ~f2) + 2 * (f2 & ~f3) + 3 * (f3 & ~f0)).astype(np.intp)
    x_int = (j1 + 1) & 3

    vxt = np.array([0.0, 1.0, 0.0, -1.0])
    vyt = np.array([1.0, 0.0, -1.0, 0.0])
    ax = dxo - r * vxt[e_int]
    ay = dyo - r * vyt[e_int]
    u_e = _pseudo_cw_key(-ay, ax)  # entry normal is a rotated a quarter left
    bx = dxo - r * vxt[x_int]
    by = dyo - r * vyt[x_int]
    u_x = _pseudo_cw_key(by, -bx)  # exit normal is b rotated a quarter right

    u_x = np.where(ab & (u_x >= u_e), 0.0, u_x)
    u_x = np.where(~ab & (u_x <= u_e), u_x + 4.0, u_x)
    return count, u_e, u_x


def _square_offsets(poly: PolygonParams, voters: PointSet):
    pts = voters.coords
    n = voters.n
    if n <= _CHUNK:
        return _square_keys(poly, pts[:, 0], pts[:, 1])
    count0 = 0
    ue_parts, ux_parts = [], []
    for lo in range(0, n, _CHUNK):
        hi = min(lo + _CHUNK, n)
        x = np.ascontiguousarray(pts[lo:hi, 0])
        y = np.ascontiguousarray(pts[lo:hi, 1])
        cnt, u_e, u_x = _square_keys(poly, x, y)
        count0 += cnt
        if len(u_e):
            ue_parts.append(u_e)
            ux_parts.append(u_x)
    if not ue_parts:
        empty = np.empty(0)
        return count0, empty, empty
    return count0, np.concatenate(ue_parts), np.concatenate(ux_parts)


def _tangency_offsets(poly: PolygonParams, voters: PointSet):
    """Initial count plus per-outside-point clockwise offsets (from the top
    tangent) of the enter and exit events."""
    pts = voters.coords
    n = voters.n
    tables = _poly_tables(poly.k)
    if n <= _CHUNK:
        return _chunk_offsets(poly, tables, pts[:, 0], pts[:, 1])
    count0 = 0
    ue_parts, ux_parts, idx_parts = [], [], []
    for lo in range(0, n, _CHUNK):
        hi = min(lo + _CHUNK, n)
        x = np.ascontiguousarray(pts[lo:hi, 0])
        y = np.ascontiguousarray(pts[lo:hi, 1])
        cnt, u_e, u_x, idx = _chunk_offsets(poly, tables, x, y)
        count0 += cnt
        if len(u_e):
            ue_parts.append(u_e)
            ux_parts.append(u_x)
            idx_parts.append(idx + lo)
    if not ue_parts:
        empty = np.empty(0)
        return count0, empty, empty, np.empty(0, dtype=np.intp)
    return (count0, np.concatenate(ue_parts), np.concatenate(ux_parts),
            np.concatenate(idx_parts))


def _event_schedule(poly: PolygonParams, voters: PointSet):
    """Initial count plus the sorted event schedule (clockwise offsets,
    counter deltas, group-closing mask) of the rolling-tangent sweep."""
    count0, u_e, u_x, idx_o = _tangency_offsets(poly, voters)
    if len(u_e) == 0:
        return count0, np.empty(0), np.empty(0, dtype=np.int64), np.empty(0, dtype=bool)
    u_all = np.concatenate([u_e, u_x])
    deltas = np.concatenate([np.ones(len(u_e), dtype=np.int64),
                             -np.ones(len(u_x), dtype=np.int64)])
    prio = np.concatenate([np.ones(len(u_e), dtype=np.int8),
                           np.zeros(len(u_x), dtype=np.int8)])  # exits first
    pidx = np.concatenate([idx_o, idx_o])
    order = np.lexsort((pidx, prio, u_all))
    u_sorted = u_all[order]
    d_sorted = deltas[order]
    group_end = np.empty(len(u_sorted), dtype=bool)
    group_end[:-1] = np.diff(u_sorted) > ANGLE_TOL
    group_end[-1] = True
    return count0, u_sorted, d_sorted, group_end


def _decide_fast(poly: PolygonParams, voters: PointSet) -> bool:
    """Array sweep; the counter maximum is taken over enter events via one
    merge of the separately sorted enter and exit angles (the count only
    rises at enters, so those positions dominate every angle-group end)."""
    if poly.k == 4:
        count0, u_e, u_x = _square_offsets(poly, voters)
    else:
        count0, u_e, u_x, _ = _tangency_offsets(poly, voters)
    n = voters.n
    if 2 * count0 >= n:
        return False
    if len(u_e) == 0:
        return True
    # Tag events in the mantissa's last bit (enters odd, exits even): one
    # float sort then yields the running count directly, with exits applied
    # first on exact ties.  The 1-ulp nudge only reorders sub-ulp near-ties.
    one = np.int64(1)
    ke = (u_e.view(np.int64) | one).view(np.float64)
    kx = (u_x.view(np.int64) & ~one).view(np.float64)
    merged = np.concatenate([ke, kx])
    merged.sort()
    tags = merged.view(np.int64) & one
    running = np.cumsum(2 * tags - 1)
    peak = int((running - (1 - tags) * (2 * len(tags))).max())
    return bool(2 * (count0 + peak) < n)


# ---------------------------------------------------------------------------
# structured path (per-point geometry ops); backs sweep_events


def _structured_events(voters: PointSet, poly: PolygonParams):
    """Per-point events via classify/tangent_vertices, with clockwise offsets
    and the initial count, sorted in processing order."""
    count0 = 0
    recs = []
    top = poly.y + poly.r
    for i, p in enumerate(voters):
        above = p.y > top
        if above:
            count0 += 1
        if classify_point(p, poly) is not PointLocation.OUTSIDE:
            continue
        pair = tangent_vertices(p, poly)
        ve = polygon_vertex(poly, pair.entry_vertex)
        ax, ay = p.x - ve.x, p.y - ve.y
        theta_e = math.atan2(ax, -ay) % TWO_PI
        vx = polygon_vertex(poly, pair.exit_vertex)
        bx, by = p.x - vx.x, p.y - vx.y
        theta_x = math.atan2(-bx, by) % TWO_PI
        u_e = (HALF_PI - theta_e) % TWO_PI
        u_x = (HALF_PI - theta_x) % TWO_PI
        if above and u_x >= u_e:
            u_x = 0.0
        elif not above and u_x <= u_e:
            u_x += TWO_PI
        recs.append((u_e, 1, i, SweepEvent(i, EventKind.ENTER, theta_e)))
        recs.append((u_x, 0, i, SweepEvent(i, EventKind.EXIT, theta_x)))
    recs.sort(key=lambda t: (t[0], t[1], t[2]))
    return count0, recs


def sweep_events(voters: PointSet, poly: PolygonParams) -> list[SweepEvent]:
    """Enter/exit events of every strictly-outside point, sorted clockwise
    from the tangent at the top vertex (exits first on equal angles)."""
    _, recs = _structured_events(voters, poly)
    return [rec[3] for rec in recs]


def _decide_structured(poly: PolygonParams, voters: PointSet) -> bool:
    """Reference verdict from the per-point structured schedule."""
    count0, recs = _structured_events(voters, poly)
    n = voters.n
    if 2 * count0 >= n:
        return False
    cnt = count0
    for pos, (u, _prio, _idx, ev) in enumerate(recs):
        cnt += 1 if ev.kind is EventKind.ENTER else -1
        closes = pos == len(recs) - 1 or recs[pos + 1][0] - u > ANGLE_TOL
        if closes and 2 * cnt >= n:
            return False
    return True


# ---------------------------------------------------------------------------
# traced path


class _TraceEvent(NamedTuple):
    window: int  # 0..k, clockwise from the start tangent
    vertex: int
    kind: EventKind
    point_index: int
    px: float
    py: float


def _pick_rotation(k: int, coords: np.ndarray) -> float:
    """Rotation angle leaving every comparison direction non-vertical:
    polygon edge directions, all voter-pair directions and the horizontal."""
    step = TWO_PI / k
    dirs = [0.0]
    dirs.extend(-(j + 0.5) * step for j in range(k))
    n = len(coords)
    for i in range(n):
        diff = coords[i + 1:] - coords[i]
        dirs.extend(math.atan2(dyy, dxx) for dxx, dyy in diff)
    bad = np.sort(np.unique(np.mod(HALF_PI - np.asarray(dirs), math.pi)))
    if len(bad) == 0:
        return 0.0
    gaps = np.diff(np.concatenate([bad, [bad[0] + math.pi]]))
    j = int(np.argmax(gaps))
    return float((bad[j] + 0.5 * gaps[j]) % math.pi)


class _TraceSession:
    """One traced decision run in a rotated frame."""

    def __init__(self, poly: PolygonParams, voters: PointSet):
        self.poly = poly
        self.k = poly.k
        self.r = poly.r
        self.n = voters.n
        self.step = TWO_PI / poly.k
        self.omega = _pick_rotation(poly.k, voters.coords)
        cw, sw = math.cos(self.omega), math.sin(self.omega)
        pts = voters.coords
        self.px = cw * pts[:, 0] - sw * pts[:, 1]
        self.py = sw * pts[:, 0] + cw * pts[:, 1]
        cx = cw * poly.x - sw * poly.y
        cy = sw * poly.x + cw * poly.y
        self.params_rot = PolygonParams(poly.k, poly.r, cx, cy)
        self.comparisons: list[TracedComparison] = []

    # frame geometry -------------------------------------------------------

    def vertex_unit(self, m: int) -> tuple[float, float]:
        a = HALF_PI + self.omega - m * self.step
        return math.cos(a), math.sin(a)

    def edge_dir(self, j: int) -> float:
        return self.omega - (j + 0.5) * self.step

    # certified comparison: sign of cross(direction, point - anchor) where
    # the anchor is centre + r * w and the direction angle is data-fixed.
    def side_of(self, zx: float, zy: float, dir_angle: float,
                w: tuple[float, float]) -> int:
        g = math.tan(dir_angle)
        h = critical_hyperplane(g, Point(w[0], w[1]), Point(zx, zy))
        side = hyperplane_side(h, self.params_rot)
        self.comparisons.append(TracedComparison(h, side))
        s = side.value
        return s if math.cos(dir_angle) > 0.0 else -s

    # per-point classification + tangency chain ----------------------------

    def top_side(self, i: int) -> int:
        return self.side_of(self.px[i], self.py[i], self.omega, self.vertex_unit(0))

    def facing_signs(self, i: int) -> list[int]:
        zx, zy = self.px[i], self.py[i]
        return [
            self.side_of(zx, zy, self.edge_dir(j), self.vertex_unit(j))
            for j in range(self.k)
        ]

    def tangency(self, signs: list[int]) -> tuple[int, int] | None:
        """Entry/exit vertex indices from the facing-sign chain, or None when
        the point is not strictly outside."""
        k = self.k
        if not any(s > 0 for s in signs):
            return None
        chain = [j for j in range(k) if signs[j] >= 0]
        starts = [j for j in chain if signs[(j - 1) % k] < 0]
        ends = [j for j in chain if signs[(j + 1) % k] < 0]
        if not starts or not ends:
            return None
        j0, j1 = starts[0], ends[0]
        entry = j0
        exit_ = (j1 + 1) % k
        if signs[j0] == 0 and j0 == k - 1:
            entry = 0
        if signs[j1] == 0 and j1 != k - 1:
            exit_ = j1
        return entry, exit_

    # event ordering --------------------------------------------------------

    def window_of(self, vertex: int, kind: EventKind, top: int) -> int:
        """Clockwise window index; vertex 0 splits at the start tangent by
        the point's side of the top tangent."""
        if vertex != 0:
            return vertex
        if kind is EventKind.ENTER:
            return self.k if top > 0 else 0
        return 0 if top > 0 else self.k

    def _cross_pair(self, a: _TraceEvent, b: _TraceEvent) -> int:
        """Sign of cross(a.point - v, b.point - v) for the shared tangency
        vertex v, certified through the pair-direction hyperplane."""
        if a.point_index < b.point_index:
            first, second, flip = a, b, -1
        else:
            first, second, flip = b, a, 1
        dir_angle = math.atan2(second.py - first.py, second.px - first.px)
        w = self.vertex_unit(a.vertex)
        cs = self.side_of(first.px, first.py, dir_angle, w)
        return flip * cs

    def event_cmp(self, a: _TraceEvent, b: _TraceEvent) -> int:
        if a.window != b.window:
            return -1 if a.window < b.window else 1
        if a.point_index == b.point_index:
            if a.kind is b.kind:
                return 0
            return -1 if a.kind is EventKind.EXIT else 1
        sigma = 1 if a.kind is b.kind else -1
        val = sigma * self._cross_pair(a, b)
        if val < 0:
            return -1
        if val > 0:
            return 1
        if a.kind is not b.kind:
            return -1 if a.kind is EventKind.EXIT else 1
        return -1 if a.point_index < b.point_index else 1

    def same_angle(self, a: _TraceEvent, b: _TraceEvent) -> bool:
        if a.window != b.window:
            return False
        if a.point_index == b.point_index:
            return False
        return self._cross_pair(a, b) == 0

    # main ------------------------------------------------------------------

    def run(self) -> tuple[bool, DecisionTrace]:
        n = self.n
        count0 = 0
        events: list[_TraceEvent] = []
        for i in range(n):
            top = self.top_side(i)
            if top > 0:
                count0 += 1
            signs = self.facing_signs(i)
            pair = self.tangency(signs)
            if pair is None:
                continue
            e_idx, x_idx = pair
            events.append(
                _TraceEvent(self.window_of(e_idx, EventKind.ENTER, top), e_idx,
                            EventKind.ENTER, i, self.px[i], self.py[i])
            )
            events.append(
                _TraceEvent(self.window_of(x_idx, EventKind.EXIT, top), x_idx,
                            EventKind.EXIT, i, self.px[i], self.py[i])
            )

        events.sort(key=cmp_to_key(self.event_cmp))

        verdict = 2 * count0 < n
        cnt = count0
        for pos, ev in enumerate(events):
            cnt += 1 if ev.kind is EventKind.ENTER else -1
            closes = pos == len(events) - 1 or not self.same_angle(ev, events[pos + 1])
            if closes and 2 * cnt >= n:
                verdict = False

        trace = DecisionTrace(
            comparisons=self.comparisons,
            verdict=verdict,
            rotation=self.omega,
            lambda_rotated=(self.r, self.params_rot.x, self.params_rot.y),
        )
        return verdict, trace
