"""Standardization, score combination and ranking."""

from __future__ import annotations

import math
import statistics

import numpy as np
import pytest

from drawqual.aesthetics import AestheticVector
from drawqual.model import DrawingSet, Graph, Layout, SemanticError
from drawqual.quality import (
    AGGREGATION_SIGNS,
    METRIC_NAMES,
    compare_drawing_set,
    overall_quality,
    rank_scores,
    standardize,
)


def vec(cross, cross_res, angular_res, spread) -> AestheticVector:
    return AestheticVector(cross, cross_res, angular_res, spread)


def overall_by_hand(vectors):
    """Column-by-column recomputation with the statistics module."""
    cols = [[v.as_tuple()[k] for v in vectors] for k in range(4)]
    zs = []
    for col in cols:
        s = statistics.stdev(col)
        m = statistics.mean(col)
        zs.append([0.0 if s == 0 else (x - m) / s for x in col])
    return [
        sum(sign * zs[k][i] for k, sign in enumerate(AGGREGATION_SIGNS))
        for i in range(len(vectors))
    ]


# ------------------------------------------------------------- standardize


def test_worked_example():
    got = standardize([2.0, 7.0, 6.0])
    for value, expected in zip(got, (-1.134, 0.756, 0.378)):
        assert abs(value - expected) < 0.001
    # Same numbers as printed with two decimals elsewhere.
    for value, printed in zip(got, (-1.14, 0.76, 0.38)):
        assert abs(value - printed) < 0.01


def test_standardize_matches_library_statistics():
    rng = np.random.default_rng(8)
    for _ in range(50):
        values = [float(x) for x in rng.normal(50, 20, size=int(rng.integers(2, 30)))]
        if min(values) == max(values):
            continue
        m, s = statistics.mean(values), statistics.stdev(values)
        want = [(x - m) / s for x in values]
        got = standardize(values)
        assert all(math.isclose(a, b, rel_tol=1e-9, abs_tol=1e-9) for a, b in zip(got, want))


def test_standardize_constant_column_is_all_zeros():
    assert standardize([5.0, 5.0, 5.0, 5.0]) == [0.0, 0.0, 0.0, 0.0]


def test_standardize_needs_two_values():
    with pytest.raises(ValueError):
        standardize([1.0])


def test_standardize_moments():
    rng = np.random.default_rng(9)
    for _ in range(50):
        values = [float(x) for x in rng.uniform(-100, 100, size=int(rng.integers(2, 40)))]
        z = standardize(values)
        assert abs(math.fsum(z)) < 1e-9
        var = math.fsum(x * x for x in z) / (len(z) - 1)
        assert abs(var - 1.0) < 1e-9


def test_standardize_shift_and_scale_invariant():
    rng = np.random.default_rng(10)
    values = [float(x) for x in rng.uniform(0, 10, size=12)]
    base = standardize(values)
    moved = standardize([3.5 * x - 40.0 for x in values])
    assert all(math.isclose(a, b, rel_tol=1e-9, abs_tol=1e-9) for a, b in zip(base, moved))


# ---------------------------------------------------------- overall quality


def test_two_drawing_example():
    scores = overall_quality([vec(0, 90.0, 90.0, 0.0), vec(4, 30.0, 20.0, 5.0)])
    assert abs(scores[0] - 2 * math.sqrt(2)) < 1e-9
    assert abs(scores[1] + 2 * math.sqrt(2)) < 1e-9
    assert abs(scores[0] - 2.8284) < 1e-4


def test_sign_convention_is_locked():
    assert METRIC_NAMES == (
        "cross_count",
        "cross_res_deg",
        "angular_res_deg",
        "edge_len_stddev",
    )
    assert AGGREGATION_SIGNS == (-1.0, 1.0, 1.0, -1.0)


def _random_vectors(rng, count=None):
    k = count or int(rng.integers(2, 9))
    return [
        vec(
            int(rng.integers(0, 40)),
            float(rng.uniform(1, 90)),
            float(rng.uniform(1, 360)),
            float(rng.uniform(0, 50)),
        )
        for _ in range(k)
    ]


def test_scores_sum_to_zero_and_match_hand_arithmetic():
    rng = np.random.default_rng(12)
    for _ in range(60):
        vectors = _random_vectors(rng)
        scores = overall_quality(vectors)
        assert abs(math.fsum(scores)) < 1e-9
        for got, want in zip(scores, overall_by_hand(vectors)):
            assert math.isclose(got, want, rel_tol=1e-9, abs_tol=1e-9)


def test_flipping_one_sign_shifts_scores_by_twice_that_column():
    rng = np.random.default_rng(13)
    vectors = _random_vectors(rng, count=6)
    base = overall_quality(vectors)
    for k in range(4):
        flipped_signs = tuple(
            -s if i == k else s for i, s in enumerate(AGGREGATION_SIGNS)
        )
        flipped = overall_quality(vectors, signs=flipped_signs)
        column = standardize([v.as_tuple()[k] for v in vectors])
        for i in range(len(vectors)):
            want = base[i] - 2 * AGGREGATION_SIGNS[k] * column[i]
            assert math.isclose(flipped[i], want, rel_tol=1e-9, abs_tol=1e-9)


def test_degenerate_column_contributes_nothing():
    vectors = [vec(3, 45.0, 100.0, 2.0), vec(3, 60.0, 50.0, 1.0), vec(3, 50.0, 80.0, 3.0)]
    with_col = overall_quality(vectors)
    # Replacing the constant crossing column by any other constant changes nothing.
    vectors2 = [vec(9, v.cross_res_deg, v.angular_res_deg, v.edge_len_stddev) for v in vectors]
    assert overall_quality(vectors2) == with_col


def test_overall_needs_two_vectors():
    with pytest.raises(ValueError):
        overall_quality([vec(0, 90.0, 90.0, 0.0)])


def test_permuting_drawings_permutes_scores():
    rng = np.random.default_rng(14)
    vectors = _random_vectors(rng, count=7)
    base = overall_quality(vectors)
    perm = list(rng.permutation(7))
    permuted = overall_quality([vectors[i] for i in perm])
    for slot, src in enumerate(perm):
        assert math.isclose(permuted[slot], base[src], rel_tol=1e-12, abs_tol=1e-12)


def test_angle_unit_change_leaves_scores_alone():
    rng = np.random.default_rng(15)
    vectors = _random_vectors(rng, count=5)
    base = overall_quality(vectors)
    to_rad = math.pi / 180.0
    converted = [
        vec(v.cross_count, v.cross_res_deg * to_rad, v.angular_res_deg * to_rad, v.edge_len_stddev)
        for v in vectors
    ]
    for got, want in zip(overall_quality(converted), base):
        assert math.isclose(got, want, rel_tol=1e-9, abs_tol=1e-9)


def test_monotone_response_through_order_change():
    # In a 2-drawing set a z column only reacts to the order of its two raw
    # values, so improvements are tracked across worse -> tie -> better.
    others = vec(4, 40.0, 90.0, 2.0)
    stages = {
        0: [vec(9, 40.0, 90.0, 2.0), vec(4, 40.0, 90.0, 2.0), vec(1, 40.0, 90.0, 2.0)],
        1: [vec(4, 10.0, 90.0, 2.0), vec(4, 40.0, 90.0, 2.0), vec(4, 80.0, 90.0, 2.0)],
        2: [vec(4, 40.0, 30.0, 2.0), vec(4, 40.0, 90.0, 2.0), vec(4, 40.0, 300.0, 2.0)],
        3: [vec(4, 40.0, 90.0, 9.0), vec(4, 40.0, 90.0, 2.0), vec(4, 40.0, 90.0, 0.5)],
    }
    for metric, variants in stages.items():
        previous = None
        for changed in variants:
            o_changed, o_other = overall_quality([changed, others])
            if previous is not None:
                assert o_changed > previous[0]
                assert o_other < previous[1]
            previous = (o_changed, o_other)


# ------------------------------------------------------------------ ranking


def test_rank_by_overall_then_crossings_then_name():
    entries = [("a", 1.0, 5), ("b", 2.0, 9), ("c", 1.0, 2), ("d", 1.0, 2)]
    # b leads outright; c and d tie with a but cross less; c wins by name.
    assert rank_scores(entries) == [4, 1, 2, 3]


def test_tied_scores_prefer_fewer_crossings():
    ranks = rank_scores([("three", 0.0, 3), ("one", 0.0, 1)])
    assert ranks == [2, 1]


def test_ranks_are_a_permutation():
    rng = np.random.default_rng(16)
    for _ in range(30):
        k = int(rng.integers(2, 10))
        entries = [
            (f"l{i}", float(rng.integers(-2, 3)), int(rng.integers(0, 4)))
            for i in range(k)
        ]
        ranks = rank_scores(entries)
        assert sorted(ranks) == list(range(1, k + 1))


# ------------------------------------------------------- full set comparison


def square_cycle_set() -> DrawingSet:
    graph = Graph(4, ((0, 1), (1, 2), (2, 3), (0, 3)))
    convex = Layout(((0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)))
    bowtie = Layout(((0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (1.0, 1.0)))
    return DrawingSet(graph, (("convex", convex), ("bowtie", bowtie)))


def test_convex_beats_bowtie():
    report = compare_drawing_set(square_cycle_set())
    assert [sc.layout_name for sc in report.scores] == ["convex", "bowtie"]
    assert report.scores[0].rank == 1
    assert report.scores[0].raw.cross_count == 0
    assert report.scores[1].raw.cross_count == 1
    # Crossing resolution ties at 90 (degenerate column); the other three
    # columns each contribute 1/sqrt(2) in convex's favor.
    want = 3.0 / math.sqrt(2.0)
    assert abs(report.scores[0].overall - want) < 1e-9
    assert abs(report.scores[1].overall + want) < 1e-9


def test_report_statistics_match_hand_arithmetic():
    report = compare_drawing_set(square_cycle_set())
    raws = {sc.layout_name: sc.raw for sc in report.scores}
    for k, name in enumerate(METRIC_NAMES):
        col = [getattr(raws["convex"], name), getattr(raws["bowtie"], name)]
        assert math.isclose(report.metric_means[k], statistics.mean(col), rel_tol=1e-12)
        assert math.isclose(
            report.metric_stddevs[k], statistics.stdev(col), rel_tol=1e-12, abs_tol=1e-12
        )


def test_compare_needs_two_layouts():
    graph = Graph(4, ((0, 1), (1, 2), (2, 3), (0, 3)))
    only = DrawingSet(
        graph, (("a", Layout(((0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)))),)
    )
    with pytest.raises(ValueError):
        compare_drawing_set(only)


def test_compare_rejects_invalid_set():
    graph = Graph(2, ((0, 1), (0, 1)))
    ds = DrawingSet(
        graph,
        (
            ("a", Layout(((0.0, 0.0), (1.0, 0.0)))),
            ("b", Layout(((0.0, 0.0), (0.0, 1.0)))),
        ),
    )
    with pytest.raises(SemanticError):
        compare_drawing_set(ds)
