"""Relative quality of drawings within one comparison set.

Each raw metric is z-standardized across the set (sample standard
deviation, n-1 denominator), then combined into a single score with fixed
signs: crossings and edge-length spread hurt, both angle resolutions help.
Scores are relative to the set; they are not comparable across sets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .aesthetics import AestheticVector, aesthetic_vector
from .geometry import DEFAULT_EPS
from .model import DrawingSet, SemanticError, validate_drawing_set

METRIC_NAMES = ("cross_count", "cross_res_deg", "angular_res_deg", "edge_len_stddev")

# Direction of each metric in the combined score, in METRIC_NAMES order.
AGGREGATION_SIGNS = (-1.0, 1.0, 1.0, -1.0)


@dataclass(frozen=True)
class ZScoreVector:
    """Standardized metrics of one drawing relative to its comparison set."""

    z_cross: float
    z_cross_res: float
    z_angular_res: float
    z_edge_len: float

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.z_cross, self.z_cross_res, self.z_angular_res, self.z_edge_len)


@dataclass(frozen=True)
class QualityScore:
    """One drawing's raw metrics, z-scores, combined score and rank."""

    layout_name: str
    raw: AestheticVector
    z: ZScoreVector
    overall: float
    rank: int


@dataclass(frozen=True)
class ComparisonReport:
    """Scores for every drawing in a set, ordered by rank.

    metric_means and metric_stddevs are the per-metric statistics the
    standardization used, in METRIC_NAMES order.
    """

    scores: tuple[QualityScore, ...]
    metric_means: tuple[float, float, float, float]
    metric_stddevs: tuple[float, float, float, float]

    def to_dict(self) -> dict:
        return {
            "metrics": [
                {"name": n, "mean": m, "stddev": s}
                for n, m, s in zip(METRIC_NAMES, self.metric_means, self.metric_stddevs)
            ],
            "scores": [
                {
                    "name": sc.layout_name,
                    "rank": sc.rank,
                    "overall": sc.overall,
                    "raw": dict(zip(METRIC_NAMES, sc.raw.as_tuple())),
                    "z": dict(zip(METRIC_NAMES, sc.z.as_tuple())),
                }
                for sc in self.scores
            ],
        }


def _mean_stddev(values: list[float]) -> tuple[float, float]:
    n = len(values)
    mean = math.fsum(values) / n
    var = math.fsum((x - mean) ** 2 for x in values) / (n - 1)
    return mean, math.sqrt(var)


def standardize(values: list[float]) -> list[float]:
    """z-scores of values against their own mean and sample stddev.

    A column with no variation standardizes to all zeros: no drawing is
    better or worse on a metric nobody differs on. Raises ValueError for
    fewer than two values.
    """
    if len(values) < 2:
        raise ValueError("standardize needs at least 2 values")
    if min(values) == max(values):
        return [0.0] * len(values)
    mean, stddev = _mean_stddev(values)
    return [(x - mean) / stddev for x in values]


def overall_quality(
    vectors: list[AestheticVector],
    signs: tuple[float, float, float, float] = AGGREGATION_SIGNS,
) -> list[float]:
    """Combined quality score per drawing, in input order.

    Standardizes each metric across the set and sums the z-scores with the
    given signs. Scores in one set always sum to zero.
    """
    if len(vectors) < 2:
        raise ValueError("overall quality needs at least 2 drawings")
    columns = [standardize([vec.as_tuple()[k] for vec in vectors]) for k in range(4)]
    return [
        math.fsum(signs[k] * columns[k][i] for k in range(4))
        for i in range(len(vectors))
    ]


def rank_scores(entries: list[tuple[str, float, int]]) -> list[int]:
    """1-based ranks for (name, overall, cross_count) entries, input order.

    Higher overall ranks first. Ties break toward the drawing with fewer
    raw crossings, then by layout name.
    """
    order = sorted(
        range(len(entries)),
        key=lambda i: (-entries[i][1], entries[i][2], entries[i][0]),
    )
    ranks = [0] * len(entries)
    for position, idx in enumerate(order):
        ranks[idx] = position + 1
    return ranks


def compare_drawing_set(ds: DrawingSet, eps: float = DEFAULT_EPS) -> ComparisonReport:
    """Score and rank every layout of a drawing set.

    Raises ValueError for fewer than two layouts and SemanticError when the
    set fails validation.
    """
    if len(ds.layouts) < 2:
        raise ValueError("comparison set too small: need at least 2 layouts")
    report = validate_drawing_set(ds, eps)
    if report.errors:
        raise SemanticError("; ".join(msg for _, msg in report.errors))

    names = [name for name, _ in ds.layouts]
    vectors = [aesthetic_vector(ds.graph, layout, eps) for _, layout in ds.layouts]
    raw_columns = [[vec.as_tuple()[k] for vec in vectors] for k in range(4)]
    z_columns = [standardize(col) for col in raw_columns]
    overalls = [
        math.fsum(AGGREGATION_SIGNS[k] * z_columns[k][i] for k in range(4))
        for i in range(len(vectors))
    ]
    ranks = rank_scores(
        [(names[i], overalls[i], vectors[i].cross_count) for i in range(len(vectors))]
    )
    stats = [_mean_stddev(col) for col in raw_columns]

    scores = [
        QualityScore(
            layout_name=names[i],
            raw=vectors[i],
            z=ZScoreVector(*(z_columns[k][i] for k in range(4))),
            overall=overalls[i],
            rank=ranks[i],
        )
        for i in range(len(vectors))
    ]
    scores.sort(key=lambda sc: sc.rank)
    return ComparisonReport(
        scores=tuple(scores),
        metric_means=tuple(m for m, _ in stats),
        metric_stddevs=tuple(s for _, s in stats),
    )
