import pytest

from core.entities.graph import Graph
from core.values.errors import GraphValidationError, InvalidSourceError


def test_from_edges_normalises_and_collapses_duplicates():
    g = Graph.from_edges(3, [(1, 0), (0, 1), (2, 1)])

    assert g.edges == frozenset({(0, 1), (1, 2)})
    assert g.m == 2
    assert g.neighbors(1) == (0, 2)
    assert g.degree(0) == 1


def test_self_loop_is_rejected():
    with pytest.raises(GraphValidationError):
        Graph.from_edges(2, [(1, 1)])


def test_edge_out_of_range_is_rejected():
    with pytest.raises(GraphValidationError):
        Graph.from_edges(2, [(0, 2)])


def test_empty_graph_is_rejected():
    with pytest.raises(GraphValidationError):
        Graph.from_edges(0, [])


def test_labels_must_be_unique_and_complete():
    with pytest.raises(GraphValidationError):
        Graph.from_edges(2, [(0, 1)], labels=["a", "a"])
    with pytest.raises(GraphValidationError):
        Graph.from_edges(2, [(0, 1)], labels=["a"])


def test_resolve_prefers_labels_over_ids():
    g = Graph.from_edges(3, [(0, 1), (1, 2)], labels=["2", "x", "y"])

    assert g.resolve("2") == 0
    assert g.resolve("x") == 1
    assert g.resolve("1") == 1


def test_resolve_unknown_token(triangle):
    with pytest.raises(InvalidSourceError):
        triangle.resolve("z")
    with pytest.raises(InvalidSourceError):
        triangle.resolve("3")


def test_graph_is_hashable_and_equal_by_value(triangle):
    same = Graph.from_edges(3, [(2, 1), (0, 2), (1, 0)])

    assert same == triangle
    assert len({same, triangle}) == 1
