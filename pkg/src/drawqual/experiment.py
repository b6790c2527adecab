"""Convergence-tracks-quality experiment over seeded random graphs.

For a batch of connected random graphs, the spring embedder is snapshotted
at increasing iteration counts and each graph's snapshots are scored as one
comparison set. If the combined score measures what it should, more
iterations must score better: mean score strictly increasing with the
snapshot index and rank correlation 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .aesthetics import aesthetic_vector
from .quality import overall_quality
from .synthesis import LayoutParams, Seed, erdos_renyi_gnm, force_directed_snapshots

DEFAULT_MASTER_SEED = 0


@dataclass(frozen=True)
class ExperimentConfig:
    """Inputs of one validity run; defaults mirror the reference setup."""

    graph_count: int = 20
    node_count: int = 30
    edge_count: int = 40
    snapshots: tuple[int, ...] = (3000, 6000, 9000, 12000)
    master_seed: int = DEFAULT_MASTER_SEED
    params: LayoutParams = field(default_factory=LayoutParams)

    def __post_init__(self) -> None:
        if self.graph_count < 1:
            raise ValueError("need at least 1 graph")
        if len(self.snapshots) < 2:
            raise ValueError("need at least 2 snapshot conditions")
        if any(b <= a for a, b in zip(self.snapshots, self.snapshots[1:])):
            raise ValueError("snapshots must be strictly increasing")
        if self.snapshots[-1] > self.params.iterations:
            raise ValueError("largest snapshot exceeds the iteration budget")


FAST_SNAPSHOTS = (300, 600, 900, 1200)


def fast_config(master_seed: int = DEFAULT_MASTER_SEED) -> ExperimentConfig:
    """Reduced preset for smoke runs; weaker claims, same shape.

    Tenth-length runs with ten times the per-iteration step budget, so the
    drawings pass through roughly the same refinement stages as the full
    setup does.
    """
    defaults = LayoutParams()
    return ExperimentConfig(
        snapshots=FAST_SNAPSHOTS,
        master_seed=master_seed,
        params=LayoutParams(
            initial_temperature=10.0 * defaults.initial_temperature,
            min_temperature=10.0 * defaults.min_temperature,
            iterations=FAST_SNAPSHOTS[-1],
        ),
    )


@dataclass(frozen=True)
class ExperimentReport:
    """Scores per graph and condition, plus the aggregate verdict inputs."""

    conditions: tuple[int, ...]
    per_graph_overall: tuple[tuple[float, ...], ...]
    mean_overall: tuple[float, ...]
    monotone_fraction: float
    rank_correlation: float

    def mean_strictly_increasing(self) -> bool:
        return all(b > a for a, b in zip(self.mean_overall, self.mean_overall[1:]))

    def first_vs_last_increasing(self) -> bool:
        return self.mean_overall[-1] > self.mean_overall[0]

    def improved_first_to_last_fraction(self) -> float:
        rows = self.per_graph_overall
        return sum(1 for row in rows if row[-1] >= row[0]) / len(rows)

    def to_dict(self) -> dict:
        return {
            "conditions": list(self.conditions),
            "per_graph_overall": [list(row) for row in self.per_graph_overall],
            "mean_overall": list(self.mean_overall),
            "monotone_fraction": self.monotone_fraction,
            "rank_correlation": self.rank_correlation,
        }


def spearman_rank_correlation(xs: list[float], ys: list[float]) -> float:
    """Spearman correlation with average ranks for ties.

    Raises ValueError for mismatched lengths, fewer than two points, or a
    constant sequence, where rank correlation is undefined.
    """
    if len(xs) != len(ys):
        raise ValueError("sequences differ in length")
    if len(xs) < 2:
        raise ValueError("need at least 2 points")
    rx = _average_ranks(xs)
    ry = _average_ranks(ys)
    mean = (len(xs) + 1) / 2
    dx = [r - mean for r in rx]
    dy = [r - mean for r in ry]
    sxx = math.fsum(d * d for d in dx)
    syy = math.fsum(d * d for d in dy)
    if sxx == 0.0 or syy == 0.0:
        raise ValueError("rank correlation undefined for a constant sequence")
    sxy = math.fsum(a * b for a, b in zip(dx, dy))
    return sxy / math.sqrt(sxx * syy)


def _average_ranks(values: list[float]) -> list[float]:
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0.0] * len(values)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and values[order[j + 1]] == values[order[i]]:
            j += 1
        shared = (i + j) / 2 + 1
        for k in range(i, j + 1):
            ranks[order[k]] = shared
        i = j + 1
    return ranks


def run_validity_experiment(config: ExperimentConfig) -> ExperimentReport:
    """Score snapshot series for every graph and aggregate the trend.

    Graph g draws from stream g of the master seed, for both its edges and
    its embedding, so any single graph can be regenerated alone.
    """
    rows: list[tuple[float, ...]] = []
    for g_idx in range(config.graph_count):
        seed = Seed(config.master_seed, g_idx)
        graph = erdos_renyi_gnm(
            config.node_count, config.edge_count, seed, require_connected=True
        )
        snaps = force_directed_snapshots(
            graph, config.params, list(config.snapshots), seed
        )
        vectors = [aesthetic_vector(graph, layout) for _, layout in snaps]
        rows.append(tuple(overall_quality(vectors)))

    k = len(config.snapshots)
    means = tuple(
        math.fsum(row[c] for row in rows) / len(rows) for c in range(k)
    )
    monotone = sum(
        1 for row in rows if all(b >= a for a, b in zip(row, row[1:]))
    ) / len(rows)
    rho = spearman_rank_correlation([float(c) for c in range(k)], list(means))
    return ExperimentReport(
        conditions=tuple(config.snapshots),
        per_graph_overall=tuple(rows),
        mean_overall=means,
        monotone_fraction=monotone,
        rank_correlation=rho,
    )
