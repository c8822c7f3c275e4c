"""Yolk of a planar point set: the smallest L1/L2/Linf ball that intersects
every median line, computed by a rotating-tangent decision algorithm inside
a certified convex search, and verified against a brute-force oracle."""

from .decision import (
    DecisionTrace,
    EventKind,
    SweepEvent,
    TracedComparison,
    decide,
    sweep_events,
)
from .geometry import (
    CriticalHyperplane,
    HalfplaneSide,
    Line,
    Point,
    PointLocation,
    PolygonParams,
    TangentPair,
    classify_point,
    critical_hyperplane,
    hyperplane_side,
    polygon_vertex,
    tangent_order,
    tangent_vertices,
)
from .medians import PointSet, is_median_line, limiting_median_lines
from .oracle import (
    LPSolution,
    NormTag,
    decide_bruteforce,
    lp_min_radius,
    support_coefficient,
    yolk_bruteforce,
)
from .solver import Metric, YolkResult, choose_k, min_radius_at, yolk

__all__ = [
    "CriticalHyperplane",
    "DecisionTrace",
    "EventKind",
    "HalfplaneSide",
    "LPSolution",
    "Line",
    "Metric",
    "NormTag",
    "Point",
    "PointLocation",
    "PointSet",
    "PolygonParams",
    "SweepEvent",
    "TangentPair",
    "TracedComparison",
    "YolkResult",
    "choose_k",
    "classify_point",
    "critical_hyperplane",
    "decide",
    "decide_bruteforce",
    "hyperplane_side",
    "is_median_line",
    "limiting_median_lines",
    "lp_min_radius",
    "min_radius_at",
    "polygon_vertex",
    "support_coefficient",
    "sweep_events",
    "tangent_order",
    "tangent_vertices",
    "yolk",
    "yolk_bruteforce",
]
