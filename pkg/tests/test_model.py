"""Drawing-set parsing, serialization and validation."""

from __future__ import annotations

import json
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from drawqual.model import (
    FORMAT_TAG,
    DrawingSet,
    DrawingSetError,
    Graph,
    Layout,
    SchemaError,
    SemanticError,
    parse_drawing_set,
    serialize_drawing_set,
    validate_drawing_set,
)


def doc(**overrides) -> dict:
    base = {
        "format": FORMAT_TAG,
        "node_count": 3,
        "edges": [[0, 1], [1, 2]],
        "layouts": [
            {"name": "a", "positions": [[0.0, 0.0], [1.0, 0.0], [2.0, 1.0]]}
        ],
    }
    base.update(overrides)
    return base


def test_parse_minimal_document():
    ds = parse_drawing_set(json.dumps(doc()))
    assert ds.graph.node_count == 3
    assert ds.graph.edges == ((0, 1), (1, 2))
    assert ds.names() == ["a"]
    assert ds.get("a").positions[2] == (2.0, 1.0)


def test_parse_canonicalizes_edge_orientation():
    ds = parse_drawing_set(json.dumps(doc(edges=[[1, 0], [2, 1]])))
    assert ds.graph.edges == ((0, 1), (1, 2))


def test_empty_layout_list_is_valid():
    ds = parse_drawing_set(json.dumps(doc(layouts=[])))
    assert ds.layouts == ()


def test_malformed_json_rejected():
    with pytest.raises(DrawingSetError) as err:
        parse_drawing_set("{not json")
    assert not isinstance(err.value, (SchemaError, SemanticError))


def test_unknown_top_level_key_rejected():
    with pytest.raises(SchemaError):
        parse_drawing_set(json.dumps(doc(extra=1)))


def test_missing_key_rejected():
    d = doc()
    del d["edges"]
    with pytest.raises(SchemaError):
        parse_drawing_set(json.dumps(d))


def test_wrong_format_tag_rejected():
    with pytest.raises(SchemaError):
        parse_drawing_set(json.dumps(doc(format="drawing-set/2")))


def test_non_integer_endpoint_rejected():
    with pytest.raises(SchemaError):
        parse_drawing_set(json.dumps(doc(edges=[[0, 1.5]])))
    with pytest.raises(SchemaError):
        parse_drawing_set(json.dumps(doc(edges=[[0, True]])))


def test_edge_arity_rejected():
    with pytest.raises(SchemaError):
        parse_drawing_set(json.dumps(doc(edges=[[0, 1, 2]])))


def test_layout_unknown_key_rejected():
    bad = doc()
    bad["layouts"][0]["color"] = "red"
    with pytest.raises(SchemaError):
        parse_drawing_set(json.dumps(bad))


def test_edge_out_of_range_is_semantic_error():
    with pytest.raises(SemanticError):
        parse_drawing_set(json.dumps(doc(edges=[[0, 3]])))


def test_self_loop_is_semantic_error():
    with pytest.raises(SemanticError):
        parse_drawing_set(json.dumps(doc(edges=[[1, 1]])))


def test_duplicate_edge_is_semantic_error():
    # Duplication across orientations counts too.
    with pytest.raises(SemanticError):
        parse_drawing_set(json.dumps(doc(edges=[[0, 1], [1, 0]])))


def test_layout_size_mismatch_is_semantic_error():
    bad = doc()
    bad["layouts"][0]["positions"] = [[0.0, 0.0], [1.0, 0.0]]
    with pytest.raises(SemanticError):
        parse_drawing_set(json.dumps(bad))


def test_duplicate_layout_name_is_semantic_error():
    bad = doc()
    bad["layouts"] = [bad["layouts"][0], dict(bad["layouts"][0])]
    with pytest.raises(SemanticError):
        parse_drawing_set(json.dumps(bad))


def test_non_finite_coordinate_is_semantic_error():
    # json.loads accepts bare NaN tokens, so this arrives at validation.
    text = json.dumps(doc()).replace("0.0, 0.0", "NaN, 0.0")
    with pytest.raises(SemanticError):
        parse_drawing_set(text)


def test_round_trip_preserves_structure():
    ds = parse_drawing_set(json.dumps(doc()))
    again = parse_drawing_set(serialize_drawing_set(ds))
    assert again == ds


def test_round_trip_is_bit_exact_for_awkward_floats():
    x = 0.1 + 0.2
    ds = DrawingSet(
        Graph(2, ((0, 1),)),
        (("a", Layout(((x, x / 3), (math.pi, 1e-17)))),),
    )
    again = parse_drawing_set(serialize_drawing_set(ds))
    assert again == ds
    assert again.get("a").positions[0][0].hex() == x.hex()


def test_serialize_is_deterministic():
    ds = parse_drawing_set(json.dumps(doc()))
    assert serialize_drawing_set(ds) == serialize_drawing_set(ds)


edge_lists = st.lists(
    st.tuples(st.integers(0, 9), st.integers(0, 9)).filter(lambda e: e[0] != e[1]),
    max_size=15,
    unique_by=lambda e: frozenset(e),
)


@given(edge_lists)
def test_canonicalization_idempotent_and_order_insensitive(edges):
    g1 = Graph(10, tuple(edges))
    g2 = Graph(10, tuple(reversed([(v, u) for u, v in edges])))
    assert all(u < v for u, v in g1.edges)
    assert Graph(10, g1.edges).edges == g1.edges
    assert sorted(g1.edges) == sorted(g2.edges)


# ---------------------------------------------------------------- validate


def test_validate_clean_set():
    ds = parse_drawing_set(json.dumps(doc()))
    report = validate_drawing_set(ds)
    assert report.ok
    assert report.errors == ()
    assert report.warnings == ()


def test_validate_reports_structural_errors_as_data():
    ds = DrawingSet(
        Graph(3, ((0, 5), (1, 1), (0, 1), (0, 1))),
        (
            ("", Layout(((0, 0), (1, 0), (2, 0)))),
            ("b", Layout(((0, 0), (1, 0)))),
            ("b", Layout(((0, 0), (1, 0), (float("nan"), 0)))),
        ),
    )
    report = validate_drawing_set(ds)
    assert not report.ok
    codes = {code for code, _ in report.errors}
    assert codes == {
        "edge-endpoint-range",
        "self-loop",
        "duplicate-edge",
        "empty-layout-name",
        "layout-size",
        "duplicate-layout-name",
        "non-finite-coordinate",
    }


def test_validate_warns_on_zero_length_edge():
    ds = DrawingSet(
        Graph(3, ((0, 1), (1, 2))),
        (("a", Layout(((1.0, 1.0), (1.0, 1.0), (2.0, 0.0)))),),
    )
    report = validate_drawing_set(ds)
    assert report.ok
    assert "zero-length-edge" in report.codes()


def test_validate_warns_on_coincident_non_adjacent_nodes():
    ds = DrawingSet(
        Graph(3, ((0, 1), (1, 2))),
        (("a", Layout(((1.0, 1.0), (5.0, 5.0), (1.0, 1.0)))),),
    )
    report = validate_drawing_set(ds)
    assert report.ok
    assert "coincident-nodes" in report.codes()


def test_validate_warns_on_adjacent_collinear_overlap():
    # Path 0-1-2 drawn with node 2 between 0 and 1: edge (1,2) lies on (0,1).
    ds = DrawingSet(
        Graph(3, ((0, 1), (1, 2))),
        (("a", Layout(((0.0, 0.0), (4.0, 0.0), (1.0, 0.0)))),),
    )
    report = validate_drawing_set(ds)
    assert report.ok
    assert "collinear-adjacent-overlap" in report.codes()


def test_graph_neighbor_lists():
    g = Graph(4, ((0, 1), (1, 2), (0, 3)))
    assert g.neighbor_lists() == [[1, 3], [0, 2], [1], [0]]
