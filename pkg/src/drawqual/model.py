"""Graphs, layouts and drawing sets, plus the drawing-set/1 JSON format.

A drawing set bundles one graph with any number of named layouts of it.
Containers hold whatever they are given; ``validate_drawing_set`` reports
every invariant violation as data, and ``parse_drawing_set`` refuses input
whose validation finds errors.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .geometry import (
    COLLINEAR_OVERLAP,
    DEFAULT_EPS,
    Segment,
    classify_intersection,
)

FORMAT_TAG = "drawing-set/1"


class DrawingSetError(ValueError):
    """Input that cannot be turned into a usable drawing set."""


class SchemaError(DrawingSetError):
    """Structurally wrong input: missing or unknown fields, wrong types."""


class SemanticError(DrawingSetError):
    """Well-formed input whose content violates drawing-set invariants."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on nodes 0..node_count-1.

    Edges are stored with endpoints in ascending order; list order is
    preserved as given.
    """

    node_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        canonical = tuple(
            (v, u) if u > v else (u, v) for u, v in (tuple(e) for e in self.edges)
        )
        object.__setattr__(self, "edges", canonical)

    def neighbor_lists(self) -> list[list[int]]:
        """Adjacency lists; neighbor order follows the edge list."""
        adj: list[list[int]] = [[] for _ in range(self.node_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj


@dataclass(frozen=True)
class Layout:
    """Node positions for one drawing, indexed like the graph's nodes."""

    positions: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        coerced = tuple((float(x), float(y)) for x, y in self.positions)
        object.__setattr__(self, "positions", coerced)


@dataclass(frozen=True)
class DrawingSet:
    """One graph drawn several ways; layouts are (name, layout) pairs."""

    graph: Graph
    layouts: tuple[tuple[str, Layout], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "layouts", tuple((str(n), l) for n, l in self.layouts)
        )

    def names(self) -> list[str]:
        return [name for name, _ in self.layouts]

    def get(self, name: str) -> Layout:
        for n, layout in self.layouts:
            if n == name:
                return layout
        raise KeyError(name)


@dataclass(frozen=True)
class ValidationReport:
    """Findings as data: (code, message) pairs. Empty errors means usable."""

    errors: tuple[tuple[str, str], ...] = ()
    warnings: tuple[tuple[str, str], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.errors

    def codes(self) -> set[str]:
        return {code for code, _ in self.errors} | {code for code, _ in self.warnings}


def validate_drawing_set(ds: DrawingSet, eps: float = DEFAULT_EPS) -> ValidationReport:
    """Check structural invariants (errors) and degenerate geometry (warnings).

    Errors: negative node count, edge endpoint out of range, self-loop,
    duplicate edge, layout size mismatch, non-finite coordinate, empty or
    duplicate layout name. Warnings: zero-length edge (endpoints within eps),
    exactly coincident non-adjacent nodes, collinear overlap of two edges
    sharing an endpoint.
    """
    errors: list[tuple[str, str]] = []
    warnings: list[tuple[str, str]] = []
    g = ds.graph

    if g.node_count < 0:
        errors.append(("node-count", f"negative node count {g.node_count}"))

    seen: set[tuple[int, int]] = set()
    for idx, (u, v) in enumerate(g.edges):
        if not (0 <= u < g.node_count) or not (0 <= v < g.node_count):
            errors.append(
                ("edge-endpoint-range", f"edge {idx} ({u},{v}) outside 0..{g.node_count - 1}")
            )
            continue
        if u == v:
            errors.append(("self-loop", f"edge {idx} is a self-loop at node {u}"))
            continue
        if (u, v) in seen:
            errors.append(("duplicate-edge", f"edge ({u},{v}) appears more than once"))
        seen.add((u, v))

    usable_edges = [
        idx
        for idx, (u, v) in enumerate(g.edges)
        if 0 <= u < g.node_count and 0 <= v < g.node_count and u != v
    ]
    edge_set = set(g.edges)

    names_seen: set[str] = set()
    for name, layout in ds.layouts:
        if name == "":
            errors.append(("empty-layout-name", "layout name must be nonempty"))
        if name in names_seen:
            errors.append(("duplicate-layout-name", f"layout name {name!r} reused"))
        names_seen.add(name)

        pos = layout.positions
        if len(pos) != g.node_count:
            errors.append(
                ("layout-size", f"layout {name!r} has {len(pos)} positions for {g.node_count} nodes")
            )
            continue
        if any(not (math.isfinite(x) and math.isfinite(y)) for x, y in pos):
            errors.append(("non-finite-coordinate", f"layout {name!r} has a non-finite coordinate"))
            continue

        drawn: list[int] = []
        for idx in usable_edges:
            u, v = g.edges[idx]
            if math.hypot(pos[u][0] - pos[v][0], pos[u][1] - pos[v][1]) <= eps:
                warnings.append(
                    ("zero-length-edge", f"layout {name!r}: edge ({u},{v}) has zero length")
                )
            else:
                drawn.append(idx)
        for a in range(g.node_count):
            for b in range(a + 1, g.node_count):
                if (a, b) in edge_set:
                    continue
                if pos[a] == pos[b]:
                    warnings.append(
                        ("coincident-nodes", f"layout {name!r}: nodes {a} and {b} share a position")
                    )
        # Collinear overlap of adjacent edges hides one edge under another.
        for i_pos, i in enumerate(drawn):
            for j in drawn[i_pos + 1 :]:
                e, f = g.edges[i], g.edges[j]
                if len(set(e) | set(f)) != 3:
                    continue
                res = classify_intersection(
                    Segment(pos[e[0]], pos[e[1]]), Segment(pos[f[0]], pos[f[1]]), eps
                )
                if res.kind == COLLINEAR_OVERLAP:
                    warnings.append(
                        (
                            "collinear-adjacent-overlap",
                            f"layout {name!r}: edges {e} and {f} overlap along a line",
                        )
                    )
    return ValidationReport(errors=tuple(errors), warnings=tuple(warnings))


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise SchemaError(msg)


def _as_int(value: object, what: str) -> int:
    _require(isinstance(value, int) and not isinstance(value, bool), f"{what} must be an integer")
    return value  # type: ignore[return-value]


def _as_number(value: object, what: str) -> float:
    _require(
        isinstance(value, (int, float)) and not isinstance(value, bool),
        f"{what} must be a number",
    )
    return float(value)  # type: ignore[arg-type]


def parse_drawing_set(text: str) -> DrawingSet:
    """Parse drawing-set/1 JSON into a validated DrawingSet.

    Raises DrawingSetError for malformed JSON, SchemaError for structural
    problems (unknown or missing keys, wrong types, wrong arity) and
    SemanticError when validation of the content finds errors.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DrawingSetError(f"invalid JSON: {exc}") from None

    _require(isinstance(raw, dict), "top level must be an object")
    expected = {"format", "node_count", "edges", "layouts"}
    unknown = set(raw) - expected
    _require(not unknown, f"unknown top-level keys: {sorted(unknown)}")
    missing = expected - set(raw)
    _require(not missing, f"missing top-level keys: {sorted(missing)}")
    _require(raw["format"] == FORMAT_TAG, f'format must be "{FORMAT_TAG}"')

    node_count = _as_int(raw["node_count"], "node_count")
    _require(isinstance(raw["edges"], list), "edges must be a list")
    edges = []
    for i, pair in enumerate(raw["edges"]):
        _require(
            isinstance(pair, list) and len(pair) == 2, f"edge {i} must be a pair [u, v]"
        )
        edges.append((_as_int(pair[0], f"edge {i} endpoint"), _as_int(pair[1], f"edge {i} endpoint")))

    _require(isinstance(raw["layouts"], list), "layouts must be a list")
    layouts = []
    for i, entry in enumerate(raw["layouts"]):
        _require(isinstance(entry, dict), f"layout {i} must be an object")
        extra = set(entry) - {"name", "positions"}
        _require(not extra, f"layout {i} has unknown keys: {sorted(extra)}")
        _require(
            "name" in entry and "positions" in entry,
            f"layout {i} needs name and positions",
        )
        _require(isinstance(entry["name"], str), f"layout {i} name must be a string")
        _require(isinstance(entry["positions"], list), f"layout {i} positions must be a list")
        pts = []
        for j, pt in enumerate(entry["positions"]):
            _require(
                isinstance(pt, list) and len(pt) == 2,
                f"layout {i} position {j} must be a pair [x, y]",
            )
            pts.append(
                (_as_number(pt[0], f"layout {i} coordinate"), _as_number(pt[1], f"layout {i} coordinate"))
            )
        layouts.append((entry["name"], Layout(tuple(pts))))

    ds = DrawingSet(Graph(node_count, tuple(edges)), tuple(layouts))
    report = validate_drawing_set(ds)
    if report.errors:
        details = "; ".join(msg for _, msg in report.errors)
        raise SemanticError(details)
    return ds


def serialize_drawing_set(ds: DrawingSet) -> str:
    """Render a DrawingSet as drawing-set/1 JSON.

    Coordinates use the shortest decimal form that reparses to the same
    float, so serialize followed by parse is lossless.
    """
    doc = {
        "format": FORMAT_TAG,
        "node_count": ds.graph.node_count,
        "edges": [[u, v] for u, v in ds.graph.edges],
        "layouts": [
            {"name": name, "positions": [[x, y] for x, y in layout.positions]}
            for name, layout in ds.layouts
        ],
    }
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"
