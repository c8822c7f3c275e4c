"""Yolk optimisation driver.

Feasibility of the decision predicate is monotone in the radius and the
feasible set in (r, x, y) is convex, so the minimal radius at a fixed centre
is a binary search and the minimal radius over centres is convex.  The
driver nests golden-section searches over the bounding box of the points
(outer in x, inner in y) around that binary search.

Metric front ends: the L1 ball is the k = 4 polygon itself; the Linf ball is
solved with k = 4 after rotating the points 45 degrees clockwise and rotating
the answer back (the metric radius is the circumradius over sqrt(2)); the
Euclidean ball is approximated within a factor 1 + eps by the circumscribed
disk of a k-gon with k = max(3, ceil(pi * (1 + 1/eps))).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .decision import decide
from .geometry import Point, PolygonParams
from .medians import PointSet

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0
_MAX_1D_ITER = 200
_SQRT2 = math.sqrt(2.0)


class Metric(Enum):
    L1 = "l1"
    L2APPROX = "l2"
    LINF = "linf"


@dataclass
class YolkResult:
    """Solved yolk: ball radius in the metric's own family plus diagnostics."""

    metric: Metric
    center: Point
    radius: float
    k_used: int
    epsilon: float | None
    tolerance: float
    decisions_evaluated: int
    diagnostics: dict = field(default_factory=dict)


def choose_k(epsilon: float) -> int:
    """Side count guaranteeing sec(pi/k) <= 1 + epsilon."""
    if not (epsilon > 0.0):
        raise ValueError("epsilon must be positive")
    return max(3, math.ceil(math.pi * (1.0 + 1.0 / epsilon)))


def _radius_upper_bound(x: float, y: float, voters: PointSet) -> float:
    pts = voters.coords
    far = float(np.hypot(pts[:, 0] - x, pts[:, 1] - y).max())
    xmin, xmax, ymin, ymax = voters.bounds()
    return far + math.hypot(xmax - xmin, ymax - ymin)


def _min_radius(x: float, y: float, k: int, voters: PointSet, tol: float,
                counter: list[int], bracket: tuple[float, float] | None) -> float:
    """Binary search for the smallest feasible circumradius at a fixed centre.

    ``bracket`` is an optional certified enclosure of the answer (from a
    Lipschitz bound at a nearby centre); it is validated by decision calls
    and discarded when it fails.
    """

    def feasible(r: float) -> bool:
        counter[0] += 1
        return decide(PolygonParams(k, r, x, y), voters)

    lo = 0.0
    hi = None
    if bracket is not None:
        blo, bhi = max(bracket[0], 0.0), max(bracket[1], 0.0)
        if bhi > blo and feasible(bhi):
            hi = bhi
            if blo > 0.0 and not feasible(blo):
                lo = blo
    if hi is None:
        hi = max(_radius_upper_bound(x, y, voters), tol)
        guard = 0
        while not feasible(hi):
            hi = 2.0 * hi + 1.0
            guard += 1
            if guard > 64:
                raise RuntimeError("no feasible radius found")
        lo = 0.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if feasible(mid):
            hi = mid
        else:
            lo = mid
    return hi


def min_radius_at(x: float, y: float, k: int, voters: PointSet, tol: float) -> float:
    """Smallest circumradius r, within absolute tolerance tol, for which
    P_k(r, x, y) meets every median line of the voters."""
    if not (tol > 0.0):
        raise ValueError("tolerance must be positive")
    PolygonParams(k, 0.0, float(x), float(y))  # validates k and coordinates
    counter = [0]
    return _min_radius(float(x), float(y), int(k), voters, float(tol), counter, None)


def _golden_min(fun, a: float, b: float, tol: float):
    """Golden-section minimum of a convex function on [a, b]; flat ties
    shrink both ends.  Returns (argmin, value)."""
    if b - a <= tol:
        x = 0.5 * (a + b)
        return x, fun(x)
    x1 = b - _INVPHI * (b - a)
    x2 = a + _INVPHI * (b - a)
    f1, f2 = fun(x1), fun(x2)
    it = 0
    while b - a > tol and it < _MAX_1D_ITER:
        if f1 < f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _INVPHI * (b - a)
            f1 = fun(x1)
        elif f2 < f1:
            a, x1, f1 = x1, x2, f2
            x2 = a + _INVPHI * (b - a)
            f2 = fun(x2)
        else:
            a, b = x1, x2
            if b - a <= tol:
                break
            x1 = b - _INVPHI * (b - a)
            x2 = a + _INVPHI * (b - a)
            f1, f2 = fun(x1), fun(x2)
        it += 1
    return (x1, f1) if f1 <= f2 else (x2, f2)


def _rotate_cw45(arr: np.ndarray) -> np.ndarray:
    c = 1.0 / _SQRT2
    return np.column_stack([(arr[:, 0] + arr[:, 1]) * c, (arr[:, 1] - arr[:, 0]) * c])


def yolk(voters: PointSet, metric: Metric | str, epsilon: float | None = None,
         tol: float = 1e-6) -> YolkResult:
    """Minimum-radius ball in the requested metric meeting every median line."""
    metric = Metric(metric)
    if not (tol > 0.0):
        raise ValueError("tolerance must be positive")
    if metric is Metric.L2APPROX:
        if epsilon is None:
            raise ValueError("epsilon is required for the l2 metric")
        k = choose_k(epsilon)
    else:
        if epsilon is not None:
            raise ValueError("epsilon only applies to the l2 metric")
        k = 4

    if metric is Metric.LINF:
        work = PointSet(_rotate_cw45(voters.coords))
    else:
        work = voters

    counter = [0]
    xmin, xmax, ymin, ymax = work.bounds()
    lipschitz = 1.0 / math.cos(math.pi / k)
    last: list[tuple[float, float, float] | None] = [None]

    def fval(cx: float, cy: float) -> float:
        bracket = None
        if last[0] is not None:
            lx, ly, lr = last[0]
            d = math.hypot(cx - lx, cy - ly)
            pad = tol + 1e-12 * (1.0 + lr)
            bracket = (lr - lipschitz * d - pad, lr + lipschitz * d + pad)
        r = _min_radius(cx, cy, k, work, tol, counter, bracket)
        last[0] = (cx, cy, r)
        return r

    def inner(cx: float):
        return _golden_min(lambda cy: fval(cx, cy), ymin, ymax, tol)

    xbest, _ = _golden_min(lambda cx: inner(cx)[1], xmin, xmax, tol)
    ybest, _ = inner(xbest)
    # Authoritative radius at the chosen centre, searched from scratch.
    circumradius = _min_radius(xbest, ybest, k, work, tol, counter, None)

    diagnostics: dict = {"circumradius": circumradius}
    if metric is Metric.LINF:
        center = Point((xbest - ybest) / _SQRT2, (xbest + ybest) / _SQRT2)
        radius = circumradius / _SQRT2
        diagnostics["rotated_center"] = [xbest, ybest]
    else:
        center = Point(xbest, ybest)
        radius = circumradius

    return YolkResult(
        metric=metric,
        center=center,
        radius=radius,
        k_used=k,
        epsilon=epsilon,
        tolerance=tol,
        decisions_evaluated=counter[0],
        diagnostics=diagnostics,
    )
