"""Seeded generation of graphs and drawings.

Randomness comes from named PCG64 streams keyed by (master_seed, stream_id)
plus a per-use context word, so every output is reproducible from its Seed
and no two uses share a stream. The spring embedder treats edges as springs
toward an ideal length and all node pairs as mutually repelling, with a
temperature schedule capping how far a node may move per iteration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import DrawingSet, Graph, Layout

MAX_CONNECT_ATTEMPTS = 10_000
JITTER_MAGNITUDE = 1e-6

# Context words keeping RNG streams of different uses apart.
_CTX_GNM = 1
_CTX_PLACE = 2
_CTX_JITTER = 3
_CTX_SUITE_PARAMS = 4
_CTX_SUITE_PLACE = 5
_CTX_SUITE_JITTER = 6


@dataclass(frozen=True)
class Seed:
    """Key of a reproducible random stream.

    The same (master_seed, stream_id) always yields the same outputs, on
    any platform. Streams with different ids are independent.
    """

    master_seed: int
    stream_id: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.master_seed < 2**64:
            raise ValueError("master_seed must fit in an unsigned 64-bit integer")
        if self.stream_id < 0:
            raise ValueError("stream_id must be nonnegative")

    def generator(self, *context: int) -> np.random.Generator:
        """Fresh PCG64 generator for this seed and context."""
        seq = np.random.SeedSequence([self.master_seed, self.stream_id, *context])
        return np.random.Generator(np.random.PCG64(seq))


@dataclass(frozen=True)
class LayoutParams:
    """Spring embedder parameters.

    The ideal edge length is ideal_edge_factor * sqrt(area_side^2 / n).
    Iteration i moves each node at most
    max(min_temperature, initial_temperature / (1 + cooling_decay * i)).

    The defaults keep that cap small and constant, so a drawing refines
    gradually across the whole iteration budget instead of freezing in the
    first few hundred iterations. Longer runs then reliably score better,
    which the validity experiment depends on; raise the temperatures for a
    quick one-off drawing.
    """

    area_side: float = 1000.0
    ideal_edge_factor: float = 0.6
    initial_temperature: float = 0.03
    cooling_decay: float = 0.002
    min_temperature: float = 0.03
    iterations: int = 12000

    def __post_init__(self) -> None:
        if self.area_side <= 0:
            raise ValueError("area_side must be positive")
        if self.ideal_edge_factor <= 0:
            raise ValueError("ideal_edge_factor must be positive")
        if self.initial_temperature <= 0:
            raise ValueError("initial_temperature must be positive")
        if self.cooling_decay < 0:
            raise ValueError("cooling_decay must be nonnegative")
        if not 0 < self.min_temperature <= self.initial_temperature:
            raise ValueError("need 0 < min_temperature <= initial_temperature")
        if self.iterations < 0:
            raise ValueError("iterations must be nonnegative")


@dataclass(frozen=True)
class ParamRanges:
    """Per-parameter intervals for randomized layout suites.

    A zero-width interval pins a parameter. Iteration counts are drawn as
    integers, everything else uniformly as floats.
    """

    area_side: tuple[float, float] = (1000.0, 1000.0)
    ideal_edge_factor: tuple[float, float] = (0.4, 1.2)
    initial_temperature: tuple[float, float] = (25.0, 200.0)
    cooling_decay: tuple[float, float] = (0.001, 0.02)
    min_temperature: tuple[float, float] = (0.02, 2.0)
    iterations: tuple[int, int] = (0, 12000)

    def __post_init__(self) -> None:
        for name in (
            "area_side",
            "ideal_edge_factor",
            "initial_temperature",
            "cooling_decay",
            "min_temperature",
            "iterations",
        ):
            lo, hi = getattr(self, name)
            if lo > hi:
                raise ValueError(f"{name} range has lo > hi")
        if self.iterations[0] < 0:
            raise ValueError("iterations range must be nonnegative")


DEFAULT_PARAM_RANGES = ParamRanges()


def _is_connected(node_count: int, edges: list[tuple[int, int]]) -> bool:
    if node_count <= 1:
        return True
    if len(edges) < node_count - 1:
        return False
    adj: list[list[int]] = [[] for _ in range(node_count)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * node_count
    seen[0] = True
    stack = [0]
    reached = 1
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                reached += 1
                stack.append(y)
    return reached == node_count


def erdos_renyi_gnm(
    n: int, m: int, seed: Seed, require_connected: bool = False
) -> Graph:
    """Uniform random graph with n nodes and exactly m edges.

    With require_connected, disconnected samples are rejected and redrawn
    from a fresh stream, giving the uniform distribution over connected
    graphs with m edges. Raises ValueError for infeasible arguments and
    RuntimeError if no connected sample shows up within the attempt budget.
    """
    if n < 1:
        raise ValueError("need at least 1 node")
    total = n * (n - 1) // 2
    if not 0 <= m <= total:
        raise ValueError(f"infeasible edge count {m} for {n} nodes (0..{total})")
    if require_connected and m < n - 1:
        raise ValueError(f"{m} edges can never connect {n} nodes")

    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for attempt in range(MAX_CONNECT_ATTEMPTS):
        rng = seed.generator(_CTX_GNM, attempt)
        if m:
            chosen = rng.choice(total, size=m, replace=False)
            edges = sorted(pairs[i] for i in chosen)
        else:
            edges = []
        if not require_connected or _is_connected(n, edges):
            return Graph(n, tuple(edges))
    raise RuntimeError(
        f"no connected G({n},{m}) sample in {MAX_CONNECT_ATTEMPTS} attempts"
    )


def random_layout(n: int, area_side: float, seed: Seed) -> Layout:
    """Independent uniform positions in the [0, area_side] square."""
    if n < 1:
        raise ValueError("need at least 1 node")
    if area_side <= 0:
        raise ValueError("area_side must be positive")
    rng = seed.generator(_CTX_PLACE)
    return _to_layout(rng.uniform(0.0, area_side, size=(n, 2)))


def _to_layout(pos: np.ndarray) -> Layout:
    return Layout(tuple((float(x), float(y)) for x, y in pos))


def _separate_coincident(pos: np.ndarray, jitter_rng: np.random.Generator) -> np.ndarray:
    """Nudge later nodes off exactly shared positions, deterministically."""
    pos = pos.copy()
    seen: set[tuple[float, float]] = set()
    for i in range(pos.shape[0]):
        key = (pos[i, 0], pos[i, 1])
        if key in seen:
            angle = jitter_rng.uniform(0.0, 2.0 * math.pi)
            pos[i, 0] += JITTER_MAGNITUDE * math.cos(angle)
            pos[i, 1] += JITTER_MAGNITUDE * math.sin(angle)
        else:
            seen.add(key)
    return pos


def _step(
    pos: np.ndarray,
    eu: np.ndarray,
    ev: np.ndarray,
    k: float,
    temp: float,
    box: float,
    jitter_rng: np.random.Generator,
) -> np.ndarray:
    n = pos.shape[0]
    delta = pos[:, None, :] - pos[None, :, :]
    dist = np.hypot(delta[..., 0], delta[..., 1])
    off_diag = ~np.eye(n, dtype=bool)
    if np.any((dist == 0.0) & off_diag):
        pos = _separate_coincident(pos, jitter_rng)
        delta = pos[:, None, :] - pos[None, :, :]
        dist = np.hypot(delta[..., 0], delta[..., 1])
    np.fill_diagonal(dist, np.inf)
    np.maximum(dist, 1e-12, out=dist)

    # Repulsion k^2/d between every pair, along the separating direction.
    coef = (k * k) / (dist * dist)
    disp = np.einsum("ijc,ij->ic", delta, coef)

    # Attraction d^2/k along each edge.
    if eu.size:
        evec = pos[eu] - pos[ev]
        elen = np.hypot(evec[:, 0], evec[:, 1])
        np.maximum(elen, 1e-12, out=elen)
        pull = evec * (elen / k)[:, None]
        np.subtract.at(disp, eu, pull)
        np.add.at(disp, ev, pull)

    # Cap the move at the current temperature, then keep nodes in the box.
    norm = np.hypot(disp[:, 0], disp[:, 1])
    np.maximum(norm, 1e-12, out=norm)
    scale = np.minimum(norm, temp) / norm
    pos = pos + disp * scale[:, None]
    np.clip(pos, 0.0, box, out=pos)
    return pos


def _simulate(
    graph: Graph,
    params: LayoutParams,
    emit_at: list[int],
    place_rng: np.random.Generator,
    jitter_rng: np.random.Generator,
) -> list[tuple[int, Layout]]:
    n = graph.node_count
    pos = place_rng.uniform(0.0, params.area_side, size=(n, 2))
    k = params.ideal_edge_factor * math.sqrt(params.area_side**2 / n)
    eu = np.array([u for u, _ in graph.edges], dtype=np.intp)
    ev = np.array([v for _, v in graph.edges], dtype=np.intp)

    out: list[tuple[int, Layout]] = []
    emit = set(emit_at)
    if 0 in emit:
        out.append((0, _to_layout(pos)))
    for i in range(max(emit_at)):
        temp = max(
            params.min_temperature,
            params.initial_temperature / (1.0 + params.cooling_decay * i),
        )
        pos = _step(pos, eu, ev, k, temp, params.area_side, jitter_rng)
        if (i + 1) in emit:
            out.append((i + 1, _to_layout(pos)))
    return out


def force_directed_snapshots(
    graph: Graph,
    params: LayoutParams,
    snapshots: list[int],
    seed: Seed,
) -> list[tuple[int, Layout]]:
    """Run the spring embedder, emitting the drawing at chosen iterations.

    Snapshot 0 is the initial random placement, identical to
    random_layout(n, params.area_side, seed). The trajectory depends only
    on seed and params, never on the snapshot list, so a snapshot taken
    mid-run equals a run stopped there.
    """
    if graph.node_count < 1:
        raise ValueError("cannot lay out an empty graph")
    if not snapshots:
        raise ValueError("need at least one snapshot iteration")
    if any(s < 0 for s in snapshots):
        raise ValueError("snapshot iterations must be nonnegative")
    if any(b <= a for a, b in zip(snapshots, snapshots[1:])):
        raise ValueError("snapshot iterations must be strictly increasing")
    if snapshots[-1] > params.iterations:
        raise ValueError(
            f"snapshot {snapshots[-1]} beyond iteration budget {params.iterations}"
        )
    return _simulate(
        graph,
        params,
        list(snapshots),
        seed.generator(_CTX_PLACE),
        seed.generator(_CTX_JITTER),
    )


def randomized_layout_suite(
    graph: Graph,
    count: int,
    seed: Seed,
    param_ranges: ParamRanges = DEFAULT_PARAM_RANGES,
) -> DrawingSet:
    """Drawing set of count layouts, each from its own random recipe.

    Every layout draws its own embedder parameters, iteration count and
    initial placement from independent streams, so the suite spans rough
    through converged drawings. Layouts are named r000, r001, ...
    """
    if graph.node_count < 1:
        raise ValueError("cannot lay out an empty graph")
    if count < 1:
        raise ValueError("need at least 1 layout")
    layouts = []
    for i in range(count):
        prng = seed.generator(_CTX_SUITE_PARAMS, i)
        draws = {
            name: float(prng.uniform(lo, hi))
            for name, (lo, hi) in (
                ("area_side", param_ranges.area_side),
                ("ideal_edge_factor", param_ranges.ideal_edge_factor),
                ("initial_temperature", param_ranges.initial_temperature),
                ("cooling_decay", param_ranges.cooling_decay),
                ("min_temperature", param_ranges.min_temperature),
            )
        }
        lo, hi = param_ranges.iterations
        iterations = int(prng.integers(lo, hi, endpoint=True))
        params = LayoutParams(iterations=iterations, **draws)
        snaps = _simulate(
            graph,
            params,
            [iterations],
            seed.generator(_CTX_SUITE_PLACE, i),
            seed.generator(_CTX_SUITE_JITTER, i),
        )
        layouts.append((f"r{i:03d}", snaps[-1][1]))
    return DrawingSet(graph, tuple(layouts))
