"""Brute-force ground truth for testing the fast paths.

Three independent pieces: a three-variable LP (min radius subject to
reaching a set of lines, solved by exhaustive enumeration of constraint
bases), the exact small-n yolk, and a decision check that recomputes
tangency angles per point with direct trigonometry and counts halfplane
membership at every candidate tangent position.  Nothing here shares code
with the sweep or the optimiser; trustworthiness at small scale is the only
goal.

Median lines through two voters do not by themselves pin down the yolk: in
every direction the admissible offsets form a band whose edge passes through
at least one voter, and the worst direction for a given centre can fall
where the band edge pivots about a single voter.  Per direction the needed
radius is (band edge - centre projection) / (ball support); between
direction breakpoints it is monotone for polygonal balls, so for the diamond
and square the worst direction is either a two-voter direction or a support
kink, and appending the extreme median lines at the finitely many kink
normals makes the LP exact.  The Euclidean ball has no kinks but admits
interior maxima at directions pointing from the centre to a voter, so the
Euclidean yolk is found by minimising the exact per-centre radius (pair
directions plus validated voter pivots) with a nested convex search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from itertools import combinations, islice

import numpy as np

from .geometry import BOUNDARY_TOL, HALF_PI, TWO_PI, Line, Point, PolygonParams
from .medians import PointSet, limiting_median_lines

# Constraint residual allowed when declaring an LP candidate feasible.
FEAS_TOL = 1e-9
_DET_TOL = 1e-12
_TRIPLE_CHUNK = 25_000


class NormTag(Enum):
    EUCLIDEAN = "euclidean"
    DIAMOND = "diamond"
    SQUARE = "square"


@dataclass
class LPSolution:
    center: Point
    radius: float
    active_constraints: list[int]


def support_coefficient(a: float, b: float, norm: NormTag) -> float:
    """Support of the unit ball in the direction of the unit normal (a, b):
    a ball of radius r centred at c reaches the line a*u + b*v = c0 iff
    |a*c_x + b*c_y - c0| <= r * s."""
    if norm is NormTag.EUCLIDEAN:
        return 1.0
    if norm is NormTag.DIAMOND:
        return max(abs(a), abs(b))
    return abs(a) + abs(b)


def _triple_chunks(count: int):
    it = combinations(range(count), 3)
    while True:
        block = list(islice(it, _TRIPLE_CHUNK))
        if not block:
            return
        yield np.array(block, dtype=np.intp)


def lp_min_radius(lines: list[Line], norm: NormTag) -> LPSolution:
    """Minimise r over centres reaching every line, by enumerating candidate
    bases of one, two and three tight constraints and keeping the feasible
    candidate of least radius (ties broken to the lexicographically smallest
    centre)."""
    m = len(lines)
    if m == 0:
        raise ValueError("need at least one line")
    norm = NormTag(norm)
    A = np.array([[ln.a, ln.b] for ln in lines], dtype=float)
    C = np.array([ln.c for ln in lines], dtype=float)
    S = np.array([support_coefficient(ln.a, ln.b, norm) for ln in lines], dtype=float)

    # Rows of G z <= h with z = (x, y, r): the two signed reach constraints
    # per line, rows 2i and 2i+1.
    G = np.empty((2 * m, 3), dtype=float)
    h = np.empty(2 * m, dtype=float)
    G[0::2, 0], G[0::2, 1], G[0::2, 2] = A[:, 0], A[:, 1], -S
    G[1::2, 0], G[1::2, 1], G[1::2, 2] = -A[:, 0], -A[:, 1], -S
    h[0::2] = C
    h[1::2] = -C
    scale = max(1.0, float(np.abs(h).max()))
    feas_slack = FEAS_TOL * scale

    best: tuple[float, float, float, tuple[int, ...]] | None = None

    def consider(z: np.ndarray, rows: np.ndarray) -> None:
        nonlocal best
        if z.size == 0:
            return
        ok = np.all(G @ z.T <= (h[:, None] + feas_slack), axis=0)
        ok &= z[:, 2] >= -feas_slack
        if not np.any(ok):
            return
        zf, rf = z[ok], rows[ok]
        rmin = float(zf[:, 2].min())
        tie = 1e-12 * (1.0 + abs(rmin))
        for t in np.flatnonzero(zf[:, 2] <= rmin + tie):
            r, cx, cy = float(zf[t, 2]), float(zf[t, 0]), float(zf[t, 1])
            key = (max(r, 0.0), cx, cy)
            if best is None:
                best = (*key, tuple(int(v) for v in rf[t]))
                continue
            if key[0] < best[0] - 1e-12 * (1.0 + best[0]):
                best = (*key, tuple(int(v) for v in rf[t]))
            elif abs(key[0] - best[0]) <= 1e-12 * (1.0 + best[0]) and key[1:] < best[1:3]:
                best = (best[0], key[1], key[2], tuple(int(v) for v in rf[t]))

    # Pairs whose tight set leaves the radius constant: candidate is the
    # minimum-norm point of the tight line (catches optima without a vertex,
    # e.g. the midline of two parallel lines).
    if m >= 1:
        pr = np.array(list(combinations(range(2 * m), 2)), dtype=np.intp)
        G2 = G[pr]  # (P, 2, 3)
        null = np.cross(G2[:, 0, :], G2[:, 1, :])
        flat = np.abs(null[:, 2]) <= _DET_TOL * (1.0 + np.abs(null).max(axis=1))
        if np.any(flat):
            G2f = G2[flat]
            h2f = h[pr[flat]]
            M = G2f @ np.transpose(G2f, (0, 2, 1))
            det = M[:, 0, 0] * M[:, 1, 1] - M[:, 0, 1] * M[:, 1, 0]
            good = np.abs(det) > _DET_TOL
            if np.any(good):
                Minv = np.empty_like(M[good])
                Minv[:, 0, 0] = M[good][:, 1, 1]
                Minv[:, 1, 1] = M[good][:, 0, 0]
                Minv[:, 0, 1] = -M[good][:, 0, 1]
                Minv[:, 1, 0] = -M[good][:, 1, 0]
                Minv /= det[good][:, None, None]
                z2 = np.einsum("pij,pjk,pk->pi", np.transpose(G2f[good], (0, 2, 1)),
                               Minv, h2f[good])
                consider(z2, pr[flat][good])

    # Triples: ordinary vertices of the constraint system.
    for rows in _triple_chunks(2 * m):
        M = G[rows]  # (T, 3, 3)
        det = np.linalg.det(M)
        good = np.abs(det) > _DET_TOL
        if not np.any(good):
            continue
        z3 = np.linalg.solve(M[good], h[rows[good]][:, :, None])[:, :, 0]
        consider(z3, rows[good])

    if best is None:
        raise RuntimeError("no feasible LP candidate found")
    r, cx, cy, rows = best
    active = sorted({int(row) // 2 for row in rows})
    return LPSolution(center=Point(cx, cy), radius=r, active_constraints=active)


# Support-function kink normals of the unit balls (none for the disk).
_KINK_NORMALS = {
    NormTag.EUCLIDEAN: (),
    NormTag.DIAMOND: tuple(math.pi / 4 + j * HALF_PI for j in range(4)),
    NormTag.SQUARE: tuple(j * HALF_PI for j in range(4)),
}


def _band_edge(voters: PointSet, nx: float, ny: float) -> float:
    """Largest median-line offset in the direction (nx, ny): the
    ceil(n/2)-th largest projection."""
    proj = voters.coords[:, 0] * nx + voters.coords[:, 1] * ny
    mth = (voters.n + 1) // 2
    return float(np.partition(proj, voters.n - mth)[voters.n - mth])


def _extreme_median_lines(voters: PointSet, normals) -> list[Line]:
    out = []
    for th in normals:
        nx, ny = math.cos(th), math.sin(th)
        out.append(Line.from_coefficients(nx, ny, _band_edge(voters, nx, ny)))
    return out


def _euclidean_yolk(voters: PointSet, lines: list[Line]) -> LPSolution:
    """Exact Euclidean yolk by minimising the exact per-centre radius."""
    pts = voters.coords
    n = voters.n
    mth = (n + 1) // 2
    ii, jj = np.triu_indices(n, k=1)
    diff = pts[ii] - pts[jj]
    base_dirs = np.arctan2(diff[:, 1], diff[:, 0]) + HALF_PI
    base_dirs = np.concatenate([base_dirs, base_dirs + math.pi])
    base_n = np.column_stack([np.cos(base_dirs), np.sin(base_dirs)])
    base_proj = pts @ base_n.T
    base_w = np.partition(base_proj, n - mth, axis=0)[n - mth]
    scale = 1.0 + float(np.abs(pts).max())

    def reach(cx: float, cy: float) -> float:
        best = float((base_w - (base_n[:, 0] * cx + base_n[:, 1] * cy)).max())
        dx = pts[:, 0] - cx
        dy = pts[:, 1] - cy
        dist = np.hypot(dx, dy)
        live = dist > 1e-15
        if np.any(live):
            pn = np.column_stack([dx[live], dy[live]]) / dist[live][:, None]
            proj = pts @ pn.T
            w = np.partition(proj, n - mth, axis=0)[n - mth]
            own = np.einsum("ij,ij->i", pts[live], pn)
            valid = np.abs(own - w) <= 1e-9 * scale
            if np.any(valid):
                best = max(best, float(dist[live][valid].max()))
        return max(best, 0.0)

    invphi = (math.sqrt(5.0) - 1.0) / 2.0

    def golden(fun, a, b, tol):
        if b - a <= tol:
            x = 0.5 * (a + b)
            return x, fun(x)
        x1, x2 = b - invphi * (b - a), a + invphi * (b - a)
        f1, f2 = fun(x1), fun(x2)
        while b - a > tol:
            if f1 < f2:
                b, x2, f2 = x2, x1, f1
                x1 = b - invphi * (b - a)
                f1 = fun(x1)
            elif f2 < f1:
                a, x1, f1 = x1, x2, f2
                x2 = a + invphi * (b - a)
                f2 = fun(x2)
            else:
                a, b = x1, x2
                if b - a <= tol:
                    break
                x1, x2 = b - invphi * (b - a), a + invphi * (b - a)
                f1, f2 = fun(x1), fun(x2)
        return (x1, f1) if f1 <= f2 else (x2, f2)

    xmin, xmax, ymin, ymax = voters.bounds()
    tol = 1e-9 * scale
    xbest, _ = golden(lambda x: golden(lambda y: reach(x, y), ymin, ymax, tol)[1],
                      xmin, xmax, tol)
    ybest, _ = golden(lambda y: reach(xbest, y), ymin, ymax, tol)
    radius = reach(xbest, ybest)
    center = Point(xbest, ybest)
    active = [
        i for i, ln in enumerate(lines)
        if abs(abs(ln.signed_distance(center)) - radius) <= 1e-7 * scale
    ][:3]
    return LPSolution(center=center, radius=radius, active_constraints=active)


def yolk_bruteforce(voters: PointSet, norm: NormTag) -> LPSolution:
    """Exact small-n yolk.

    Diamond and square balls: LP over the limiting median lines plus the
    extreme median lines at the support-kink normals.  Euclidean: direct
    minimisation of the exact per-centre radius (see module docstring).
    """
    if voters.n < 2:
        raise ValueError("need at least two points")
    norm = NormTag(norm)
    lines = limiting_median_lines(voters)
    if not lines:
        raise RuntimeError("no limiting median lines found")
    if norm is NormTag.EUCLIDEAN:
        return _euclidean_yolk(voters, lines)
    return lp_min_radius(lines + _extreme_median_lines(voters, _KINK_NORMALS[norm]), norm)


def _wrap_pi(x: float) -> float:
    return (x + math.pi) % TWO_PI - math.pi


def decide_bruteforce(poly: PolygonParams, voters: PointSet) -> bool:
    """Independent decision check: per-point tangency angles by direct
    trigonometry, then open-halfplane counts at every tangency angle and at
    the midpoints between consecutive ones."""
    k, r, cx, cy = poly.k, poly.r, poly.x, poly.y
    n = voters.n
    step = TWO_PI / k
    phis = [HALF_PI - step * mi for mi in range(k)]
    apothem = r * math.cos(math.pi / k)
    pts = [(float(p[0]), float(p[1])) for p in voters.coords]

    angles: list[float] = []
    for px, py in pts:
        dx, dy = px - cx, py - cy
        if r == 0.0:
            if math.hypot(dx, dy) <= BOUNDARY_TOL:
                continue
            base = math.atan2(dy, dx)
            angles.append((base + HALF_PI) % TWO_PI)
            angles.append((base - HALF_PI) % TWO_PI)
            continue
        reach = max(
            dx * math.cos(phi - 0.5 * step) + dy * math.sin(phi - 0.5 * step)
            for phi in phis
        )
        if reach - apothem <= BOUNDARY_TOL:
            continue
        found: list[float] = []
        for mi in range(k):
            avx = px - (cx + r * math.cos(phis[mi]))
            avy = py - (cy + r * math.sin(phis[mi]))
            base = math.atan2(avy, avx)
            for th in (base + HALF_PI, base - HALF_PI):
                if abs(_wrap_pi(th - phis[mi])) > math.pi / k + 1e-9:
                    continue
                if dx * math.cos(th) + dy * math.sin(th) > 0.0:
                    found.append(th % TWO_PI)
        found.sort()
        kept: list[float] = []
        for th in found:
            if kept and min(th - kept[-1], TWO_PI - (th - kept[0])) <= 1e-9:
                continue
            kept.append(th)
        angles.extend(kept)

    def open_count(theta: float) -> int:
        nx, ny = math.cos(theta), math.sin(theta)
        hsup = r * max(math.cos(theta - phi) for phi in phis)
        return sum(
            1 for px, py in pts if (px - cx) * nx + (py - cy) * ny > hsup + 1e-12
        )

    if not angles:
        return 2 * open_count(0.0) < n

    angles.sort()
    candidates = list(angles)
    for i in range(len(angles)):
        nxt = angles[(i + 1) % len(angles)]
        cur = angles[i]
        gap = (nxt - cur) % TWO_PI
        candidates.append((cur + 0.5 * gap) % TWO_PI)
    worst = max(open_count(th) for th in candidates)
    return 2 * worst < n
