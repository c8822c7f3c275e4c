import math

import numpy as np
import pytest

from conftest import cyclic_equal, random_polygon
from yolk2d import (
    EventKind,
    Point,
    PointLocation,
    PointSet,
    PolygonParams,
    classify_point,
    decide,
    sweep_events,
    tangent_order,
)
from yolk2d.decision import (
    _decide_fast,
    _decide_small,
    _decide_structured,
    _event_schedule,
)
from yolk2d.geometry import SIDE_TOL

P4 = PolygonParams(4, 1.0, 0.0, 0.0)
SQUARE = PointSet([(1, 1), (1, -1), (-1, 1), (-1, -1)])


def _random_instance(rng, n_max=16):
    n = int(rng.integers(1, n_max + 1))
    return PointSet(rng.random((n, 2)) * 4 - 2)


def test_decide_examples():
    assert decide(P4, SQUARE) is True
    assert decide(PolygonParams(4, 0.5, 0, 0), SQUARE) is False
    for k, r in ((3, 0.0), (4, 1.0), (7, 0.3)):
        assert decide(PolygonParams(k, r, 7.0, -2.0), PointSet([(7, -2)])) is True


def test_sweep_events_examples():
    evs = sweep_events(PointSet([(0, 3), (3, 0)]), P4)
    assert len(evs) == 4
    assert sum(1 for e in evs if e.kind is EventKind.ENTER) == 2
    assert sum(1 for e in evs if e.kind is EventKind.EXIT) == 2
    assert sweep_events(PointSet([(0, 0)]), P4) == []
    assert sweep_events(PointSet([(0.5, 0.5)]), P4) == []


def test_sweep_events_are_paired_and_sorted():
    rng = np.random.default_rng(2)
    for _ in range(200):
        pts = _random_instance(rng)
        poly = random_polygon(rng)
        evs = sweep_events(pts, poly)
        per_point = {}
        for ev in evs:
            per_point.setdefault(ev.point_index, []).append(ev.kind)
            assert 0.0 <= ev.angle_key < 2 * math.pi
        for kinds in per_point.values():
            assert sorted(k.value for k in kinds) == ["enter", "exit"]
        outside = sum(
            1 for p in pts if classify_point(p, poly) is PointLocation.OUTSIDE
        )
        assert len(evs) == 2 * outside


def test_fast_paths_agree_with_structured():
    rng = np.random.default_rng(3)
    for _ in range(800):
        pts = _random_instance(rng)
        poly = random_polygon(rng)
        a = _decide_small(poly, pts)
        b = _decide_fast(poly, pts)
        c = _decide_structured(poly, pts)
        assert a == b == c


def test_degenerate_polygon_decide():
    collinear = PointSet([(0, 0), (1, 0), (2, 0)])
    assert decide(PolygonParams(4, 0.0, 1.0, 0.0), collinear) is True
    assert decide(PolygonParams(4, 0.0, 0.5, 0.0), collinear) is False


def test_monotone_in_radius():
    rng = np.random.default_rng(4)
    for _ in range(200):
        pts = _random_instance(rng)
        poly = random_polygon(rng)
        if decide(poly, pts):
            grown = PolygonParams(poly.k, poly.r + float(rng.random() * 2), poly.x, poly.y)
            assert decide(grown, pts)


def test_feasible_set_convex_in_parameters():
    rng = np.random.default_rng(5)
    trials = 0
    while trials < 200:
        pts = _random_instance(rng)
        k = int(rng.choice([3, 4, 7, 12]))
        lams = []
        for _ in range(2):
            lam = PolygonParams(k, float(rng.random() * 3), float(rng.random() * 4 - 2),
                                float(rng.random() * 4 - 2))
            lams.append(lam)
        if not (decide(lams[0], pts) and decide(lams[1], pts)):
            continue
        mid = PolygonParams(
            k,
            0.5 * (lams[0].r + lams[1].r),
            0.5 * (lams[0].x + lams[1].x),
            0.5 * (lams[0].y + lams[1].y),
        )
        assert decide(mid, pts)
        trials += 1


def test_counter_conservation_and_nonnegative():
    rng = np.random.default_rng(6)
    for _ in range(400):
        pts = _random_instance(rng)
        poly = random_polygon(rng)
        count0, _, deltas, group_end = _event_schedule(poly, pts)
        if len(deltas) == 0:
            continue
        counts = count0 + np.cumsum(deltas)
        checked = counts[group_end]
        assert checked[-1] == count0  # full revolution returns to the start
        assert checked.min() >= 0


def test_sweep_order_consistent_with_tangent_order():
    rng = np.random.default_rng(7)
    done = 0
    while done < 300:
        pts = _random_instance(rng, n_max=6)
        poly = random_polygon(rng)
        if poly.r == 0.0:
            continue
        evs = sweep_events(pts, poly)
        outside_idx = sorted({e.point_index for e in evs})
        if len(outside_idx) < 2:
            continue
        i, j = outside_idx[0], outside_idx[1]
        sub = [e for e in evs if e.point_index in (i, j)]
        angles = sorted(e.angle_key for e in sub)
        gaps = [angles[(t + 1) % 4] - angles[t] for t in range(3)]
        gaps.append(2 * math.pi - (angles[3] - angles[0]))
        if min(abs(g) for g in gaps) < 1e-6:
            continue
        labels = []
        for e in sub:
            who = "p" if e.point_index == i else "q"
            labels.append(f"{who}_{'e' if e.kind is EventKind.ENTER else 'x'}")
        expected = tangent_order(pts[i], pts[j], poly)
        assert cyclic_equal(labels, list(expected))
        done += 1


def test_trace_records_match_reevaluation():
    rng = np.random.default_rng(8)
    for _ in range(100):
        pts = _random_instance(rng, n_max=10)
        poly = random_polygon(rng)
        verdict, trace = decide(poly, pts, trace=True)
        assert verdict == decide(poly, pts)
        assert trace.verdict == verdict
        assert trace.sides_match(poly)
        assert len(trace.hyperplanes) == len(trace.comparisons)


def _side_preserving_delta(trace, poly):
    rp = trace.rotated_params(poly)
    vals = [
        abs(c.hyperplane.a * rp.x + c.hyperplane.b * rp.y + c.hyperplane.c * rp.r
            + c.hyperplane.d)
        for c in trace.comparisons
    ]
    if not vals or min(vals) < 10 * SIDE_TOL:
        return None
    coef = max(
        abs(c.hyperplane.a) + abs(c.hyperplane.b) + abs(c.hyperplane.c)
        for c in trace.comparisons
    )
    delta = 0.2 * min(vals) / max(coef, 1e-9)
    if poly.r > 0:
        delta = min(delta, 0.5 * poly.r)
    return delta


def test_side_preserving_perturbations_keep_verdict():
    rng = np.random.default_rng(9)
    done = 0
    while done < 40:
        pts = _random_instance(rng, n_max=10)
        poly = random_polygon(rng)
        verdict, trace = decide(poly, pts, trace=True)
        delta = _side_preserving_delta(trace, poly)
        if delta is None:
            continue
        for _ in range(5):
            dr, dx, dy = (rng.random(3) * 2 - 1) * delta
            moved = PolygonParams(poly.k, poly.r + dr, poly.x + dx, poly.y + dy)
            assert trace.sides_match(moved)
            v2, _ = decide(moved, pts, trace=True)
            assert v2 == verdict
        done += 1
