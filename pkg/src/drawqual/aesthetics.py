"""Raw readability metrics of a single drawing.

Four quantities describe a drawing: how many edge pairs cross, the sharpest
crossing angle, the tightest angle between edges at a shared node, and how
uneven the edge lengths are. Only pairs of edges with no shared node can
count as crossings; overlapping or interior-touching pairs count as one
crossing at the worst-case angle of zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .geometry import (
    COLLINEAR_OVERLAP,
    DEFAULT_EPS,
    ENDPOINT_TOUCH,
    PROPER_CROSSING,
    IntersectionResult,
    Segment,
    angular_gaps_deg,
    classify_intersection,
    crossing_angle_deg,
)
from .model import Graph, Layout

# Conventions for drawings where a metric has nothing to measure.
NO_CROSSING_RES_DEG = 90.0
NO_BRANCH_ANGULAR_RES_DEG = 360.0


@dataclass(frozen=True)
class AestheticVector:
    """The four raw metrics of one drawing."""

    cross_count: int
    cross_res_deg: float
    angular_res_deg: float
    edge_len_stddev: float

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (
            float(self.cross_count),
            self.cross_res_deg,
            self.angular_res_deg,
            self.edge_len_stddev,
        )


def _drawn_edges(graph: Graph, layout: Layout, eps: float) -> list[tuple[int, int]]:
    """Edges with positive drawn length; zero-length edges carry no geometry."""
    pos = layout.positions
    return [
        (u, v)
        for u, v in graph.edges
        if math.hypot(pos[u][0] - pos[v][0], pos[u][1] - pos[v][1]) > eps
    ]


def _counted_pairs(
    graph: Graph, layout: Layout, eps: float
) -> Iterator[tuple[Segment, Segment, IntersectionResult]]:
    """Yield independent edge pairs that count as crossings.

    Pairs sharing a node never count, whatever their geometry. A pair counts
    when it properly crosses, overlaps along a line, or touches with an
    endpoint inside the other edge.
    """
    pos = layout.positions
    edges = _drawn_edges(graph, layout, eps)
    for i in range(len(edges)):
        u1, v1 = edges[i]
        s1 = Segment(pos[u1], pos[v1])
        for j in range(i + 1, len(edges)):
            u2, v2 = edges[j]
            if u1 in (u2, v2) or v1 in (u2, v2):
                continue
            s2 = Segment(pos[u2], pos[v2])
            res = classify_intersection(s1, s2, eps)
            if res.kind == PROPER_CROSSING or res.kind == COLLINEAR_OVERLAP:
                yield s1, s2, res
            elif res.kind == ENDPOINT_TOUCH and res.interior_touch:
                yield s1, s2, res


def crossing_count(graph: Graph, layout: Layout, eps: float = DEFAULT_EPS) -> int:
    """Number of unordered edge pairs that cross in this drawing."""
    return sum(1 for _ in _counted_pairs(graph, layout, eps))


def crossing_resolution(graph: Graph, layout: Layout, eps: float = DEFAULT_EPS) -> float:
    """Smallest crossing angle in degrees; 90 when nothing crosses.

    Overlapping and interior-touching pairs enter at angle zero, the worst
    a crossing can be.
    """
    best = NO_CROSSING_RES_DEG
    for s1, s2, res in _counted_pairs(graph, layout, eps):
        if res.kind == PROPER_CROSSING:
            angle = crossing_angle_deg(s1, s2, eps)
        else:
            angle = 0.0
        if angle < best:
            best = angle
    return best


def angular_resolution(graph: Graph, layout: Layout, eps: float = DEFAULT_EPS) -> float:
    """Smallest angle in degrees between edges meeting at a node.

    Nodes with fewer than two drawn edges impose no constraint; if no node
    has two, the result is 360.
    """
    pos = layout.positions
    incident: list[list[int]] = [[] for _ in range(graph.node_count)]
    for u, v in _drawn_edges(graph, layout, eps):
        incident[u].append(v)
        incident[v].append(u)
    best = NO_BRANCH_ANGULAR_RES_DEG
    for v, neighbors in enumerate(incident):
        if len(neighbors) < 2:
            continue
        gaps = angular_gaps_deg(pos[v], [pos[w] for w in neighbors], eps)
        smallest = min(gaps)
        if smallest < best:
            best = smallest
    return best


def edge_length_uniformity(graph: Graph, layout: Layout) -> float:
    """Sample standard deviation of the drawn edge lengths.

    Uses the n-1 denominator. All edges participate, zero-length ones
    included. Raises ValueError for fewer than two edges.
    """
    if len(graph.edges) < 2:
        raise ValueError("edge length spread undefined for fewer than 2 edges")
    pos = layout.positions
    lengths = [
        math.hypot(pos[u][0] - pos[v][0], pos[u][1] - pos[v][1]) for u, v in graph.edges
    ]
    mean = math.fsum(lengths) / len(lengths)
    var = math.fsum((x - mean) ** 2 for x in lengths) / (len(lengths) - 1)
    return math.sqrt(var)


def aesthetic_vector(graph: Graph, layout: Layout, eps: float = DEFAULT_EPS) -> AestheticVector:
    """All four raw metrics of one drawing."""
    return AestheticVector(
        cross_count=crossing_count(graph, layout, eps),
        cross_res_deg=crossing_resolution(graph, layout, eps),
        angular_res_deg=angular_resolution(graph, layout, eps),
        edge_len_stddev=edge_length_uniformity(graph, layout),
    )
