"""Point sets, the median-line predicate, and limiting median lines.

A line is median when each open halfplane it bounds holds at most n/2 of the
points; a limiting median line additionally passes through two of them.  The
enumeration here is the plain cubic one and is meant for reference-scale
inputs (the brute-force yolk and visualisation), not for large n.
"""

from __future__ import annotations

import math
from typing import Iterator, Sequence

import numpy as np

from .geometry import Line, Point

# Points within this signed distance of a line count as on it.
ONLINE_TOL = 1e-12
# Coordinate tolerance when deduplicating canonical line triples.
DEDUP_TOL = 1e-9

_CHUNK = 4096


class PointSet:
    """Ordered set of distinct, finite voter positions."""

    def __init__(self, points: Sequence | np.ndarray):
        arr = np.array(points, dtype=float, copy=True)
        if arr.ndim == 1 and arr.size == 2:
            arr = arr.reshape(1, 2)
        if arr.ndim != 2 or arr.shape[1] != 2 or arr.shape[0] < 1:
            raise ValueError("expected a nonempty sequence of (x, y) pairs")
        if not np.all(np.isfinite(arr)):
            raise ValueError("coordinates must be finite")
        order = np.lexsort((arr[:, 1], arr[:, 0]))
        srt = arr[order]
        if len(srt) > 1 and np.any(np.all(srt[1:] == srt[:-1], axis=1)):
            raise ValueError("points must be pairwise distinct")
        arr.setflags(write=False)
        self._arr = arr

    @property
    def coords(self) -> np.ndarray:
        """Read-only (n, 2) coordinate array."""
        return self._arr

    @property
    def n(self) -> int:
        return self._arr.shape[0]

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> Point:
        return Point(float(self._arr[i, 0]), float(self._arr[i, 1]))

    def __iter__(self) -> Iterator[Point]:
        for row in self._arr:
            yield Point(float(row[0]), float(row[1]))

    def bounds(self) -> tuple[float, float, float, float]:
        """(xmin, xmax, ymin, ymax) of the point set."""
        return (
            float(self._arr[:, 0].min()),
            float(self._arr[:, 0].max()),
            float(self._arr[:, 1].min()),
            float(self._arr[:, 1].max()),
        )

    def __repr__(self) -> str:
        return f"PointSet(n={self.n})"


def is_median_line(line: Line, voters: PointSet, tol: float = ONLINE_TOL) -> bool:
    """True when each open side of the line holds at most n/2 points."""
    arr = voters.coords
    s = line.a * arr[:, 0] + line.b * arr[:, 1] - line.c
    above = int(np.count_nonzero(s > tol))
    below = int(np.count_nonzero(s < -tol))
    n = voters.n
    return 2 * above <= n and 2 * below <= n


def limiting_median_lines(voters: PointSet) -> list[Line]:
    """All distinct median lines through at least two voters.

    Reference implementation: every pair is tested against the whole set,
    then near-identical canonical triples are merged.
    """
    n = voters.n
    if n < 2:
        raise ValueError("need at least two points")
    arr = voters.coords
    ii, jj = np.triu_indices(n, k=1)
    a0 = arr[ii, 1] - arr[jj, 1]
    b0 = arr[jj, 0] - arr[ii, 0]
    nrm = np.hypot(a0, b0)
    a, b = a0 / nrm, b0 / nrm
    c = a * arr[ii, 0] + b * arr[ii, 1]
    flip = (a < -1e-12) | ((np.abs(a) <= 1e-12) & (b < 0.0))
    a = np.where(flip, -a, a) + 0.0
    b = np.where(flip, -b, b) + 0.0
    c = np.where(flip, -c, c) + 0.0

    keep = np.zeros(len(ii), dtype=bool)
    for lo in range(0, len(ii), _CHUNK):
        hi = min(lo + _CHUNK, len(ii))
        s = arr[:, 0][:, None] * a[lo:hi] + arr[:, 1][:, None] * b[lo:hi] - c[lo:hi]
        above = (s > ONLINE_TOL).sum(axis=0)
        below = (s < -ONLINE_TOL).sum(axis=0)
        keep[lo:hi] = (2 * above <= n) & (2 * below <= n)

    out: list[Line] = []
    seen: dict[tuple[int, int, int], int] = {}
    q = 1.0 / DEDUP_TOL
    for idx in np.flatnonzero(keep):
        trip = (float(a[idx]), float(b[idx]), float(c[idx]))
        key = (round(trip[0] * q), round(trip[1] * q), round(trip[2] * q))
        if key in seen:
            continue
        cand = Line(*trip)
        if any(
            max(abs(cand.a - ln.a), abs(cand.b - ln.b), abs(cand.c - ln.c)) <= DEDUP_TOL
            for ln in out[-8:]
        ):
            continue
        seen[key] = len(out)
        out.append(cand)
    # Final exact-tolerance merge; the list is small after bucketing.
    merged: list[Line] = []
    for ln in out:
        if any(
            max(abs(ln.a - m.a), abs(ln.b - m.b), abs(ln.c - m.c)) <= DEDUP_TOL
            for m in merged
        ):
            continue
        merged.append(ln)
    return merged


def line_through_points(p: Point, q: Point) -> Line:
    """Canonical line through two distinct points."""
    if p == q:
        raise ValueError("points must be distinct")
    return Line.through(p, q)


def bounding_box_diameter(voters: PointSet) -> float:
    xmin, xmax, ymin, ymax = voters.bounds()
    return math.hypot(xmax - xmin, ymax - ymin)
