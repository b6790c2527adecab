"""Planar segment intersection tests and direction math for drawing metrics.

All angles are reported in degrees. Classification is tolerance-based:
orientation determinants within ``eps`` of zero are treated as collinear,
and points within ``eps`` of each other as coincident.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

Point = tuple[float, float]

DEFAULT_EPS = 1e-9

# Intersection kinds.
NONE = "none"
PROPER_CROSSING = "proper_crossing"
ENDPOINT_TOUCH = "endpoint_touch"
COLLINEAR_OVERLAP = "collinear_overlap"


@dataclass(frozen=True)
class Segment:
    """Closed line segment between two points."""

    a: Point
    b: Point

    def length(self) -> float:
        return math.hypot(self.b[0] - self.a[0], self.b[1] - self.a[1])


@dataclass(frozen=True)
class IntersectionResult:
    """Outcome of classifying a segment pair.

    ``point`` is set only for proper crossings. ``interior_touch`` is True
    for an endpoint_touch where some endpoint lies strictly inside the
    other segment rather than on one of its endpoints.
    """

    kind: str
    point: Point | None = None
    interior_touch: bool = False


def _orient(p: Point, q: Point, r: Point) -> float:
    """Twice the signed area of triangle pqr."""
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def _sign(value: float, eps: float) -> int:
    if value > eps:
        return 1
    if value < -eps:
        return -1
    return 0


def _close(p: Point, q: Point, eps: float) -> bool:
    return math.hypot(p[0] - q[0], p[1] - q[1]) <= eps


def _in_bbox(a: Point, b: Point, p: Point, eps: float) -> bool:
    return (
        min(a[0], b[0]) - eps <= p[0] <= max(a[0], b[0]) + eps
        and min(a[1], b[1]) - eps <= p[1] <= max(a[1], b[1]) + eps
    )


def _canonical_pair(s1: Segment, s2: Segment) -> tuple[Point, Point, Point, Point]:
    """Order the four endpoints so the crossing point is computed identically
    regardless of segment order or endpoint order within a segment."""
    a1, b1 = sorted((s1.a, s1.b))
    a2, b2 = sorted((s2.a, s2.b))
    if (a1, b1) <= (a2, b2):
        return a1, b1, a2, b2
    return a2, b2, a1, b1


def _collinear_classify(
    p1: Point, p2: Point, p3: Point, p4: Point, eps: float
) -> IntersectionResult:
    # Project all four points on the direction of the longer segment and
    # compare 1-D intervals. Projection scalars are monotone along the line,
    # so no division is needed.
    d1 = (p2[0] - p1[0], p2[1] - p1[1])
    d2 = (p4[0] - p3[0], p4[1] - p3[1])
    if math.hypot(*d2) > math.hypot(*d1):
        d = d2
    else:
        d = d1
    norm = math.hypot(*d)

    def t(p: Point) -> float:
        return (p[0] - p1[0]) * d[0] + (p[1] - p1[1]) * d[1]

    lo1, hi1 = sorted((t(p1), t(p2)))
    lo2, hi2 = sorted((t(p3), t(p4)))
    lo, hi = max(lo1, lo2), min(hi1, hi2)
    thr = eps * norm
    if hi - lo > thr:
        return IntersectionResult(COLLINEAR_OVERLAP)
    if hi - lo >= -thr:
        # Single shared point; for collinear segments it is an endpoint of both.
        return IntersectionResult(ENDPOINT_TOUCH, interior_touch=False)
    return IntersectionResult(NONE)


def classify_intersection(
    s1: Segment, s2: Segment, eps: float = DEFAULT_EPS
) -> IntersectionResult:
    """Classify how two segments intersect.

    Returns one of the kinds none, proper_crossing, endpoint_touch or
    collinear_overlap. The kind is symmetric in the two segments and does
    not depend on endpoint order within a segment. Raises ValueError for a
    degenerate (zero-length) segment.
    """
    for s in (s1, s2):
        if _close(s.a, s.b, eps):
            raise ValueError(f"degenerate segment: {s.a} to {s.b}")

    p1, p2, p3, p4 = s1.a, s1.b, s2.a, s2.b
    d1 = _orient(p3, p4, p1)
    d2 = _orient(p3, p4, p2)
    d3 = _orient(p1, p2, p3)
    d4 = _orient(p1, p2, p4)
    s_1, s_2 = _sign(d1, eps), _sign(d2, eps)
    s_3, s_4 = _sign(d3, eps), _sign(d4, eps)

    if (s_1 == 0 and s_2 == 0) or (s_3 == 0 and s_4 == 0):
        return _collinear_classify(p1, p2, p3, p4, eps)

    if s_1 * s_2 < 0 and s_3 * s_4 < 0:
        q1, q2, q3, q4 = _canonical_pair(s1, s2)
        e1 = _orient(q3, q4, q1)
        e2 = _orient(q3, q4, q2)
        t = e1 / (e1 - e2)
        point = (q1[0] + t * (q2[0] - q1[0]), q1[1] + t * (q2[1] - q1[1]))
        return IntersectionResult(PROPER_CROSSING, point=point)

    # Some endpoint sits on the other segment's line; touch only if it is
    # inside that segment's extent.
    touches: list[tuple[Point, Point, Point]] = []
    if s_1 == 0 and _in_bbox(p3, p4, p1, eps):
        touches.append((p1, p3, p4))
    if s_2 == 0 and _in_bbox(p3, p4, p2, eps):
        touches.append((p2, p3, p4))
    if s_3 == 0 and _in_bbox(p1, p2, p3, eps):
        touches.append((p3, p1, p2))
    if s_4 == 0 and _in_bbox(p1, p2, p4, eps):
        touches.append((p4, p1, p2))
    if not touches:
        return IntersectionResult(NONE)
    interior = any(
        not _close(pt, ha, eps) and not _close(pt, hb, eps) for pt, ha, hb in touches
    )
    return IntersectionResult(ENDPOINT_TOUCH, interior_touch=interior)


def crossing_angle_deg(s1: Segment, s2: Segment, eps: float = DEFAULT_EPS) -> float:
    """Acute angle in degrees between the supporting lines of two segments.

    atan2 on |cross| and |dot| of the direction vectors keeps the result
    accurate for nearly parallel and nearly perpendicular pairs alike.
    """
    for s in (s1, s2):
        if _close(s.a, s.b, eps):
            raise ValueError(f"degenerate segment: {s.a} to {s.b}")
    ux, uy = s1.b[0] - s1.a[0], s1.b[1] - s1.a[1]
    vx, vy = s2.b[0] - s2.a[0], s2.b[1] - s2.a[1]
    cross = abs(ux * vy - uy * vx)
    dot = abs(ux * vx + uy * vy)
    return math.degrees(math.atan2(cross, dot))


def angular_gaps_deg(
    center: Point, points: list[Point], eps: float = DEFAULT_EPS
) -> list[float]:
    """Circular gaps in degrees between directions from center to each point.

    Directions are sorted and gaps taken between cyclically successive ones,
    so the result has one entry per point and sums to 360. A single point
    yields [360.0]. Raises ValueError for an empty list or a point
    coincident with the center.
    """
    if not points:
        raise ValueError("no points given")
    dirs = []
    for p in points:
        if _close(p, center, eps):
            raise ValueError(f"point {p} coincides with center {center}")
        d = math.degrees(math.atan2(p[1] - center[1], p[0] - center[0])) % 360.0
        dirs.append(d)
    dirs.sort()
    if len(dirs) == 1:
        return [360.0]
    gaps = [dirs[i + 1] - dirs[i] for i in range(len(dirs) - 1)]
    gaps.append(360.0 - (dirs[-1] - dirs[0]))
    return gaps
