import pytest

from core.services.oracles import diameter, is_bipartite, is_connected
from core.values.enums import NamedGraphKind
from core.values.errors import GraphValidationError
from infra.graphs.generators import gen_named, gen_random, parse_named, to_networkx


def test_petersen_keeps_the_canonical_labelling():
    g = gen_named(NamedGraphKind.PETERSEN)

    assert (g.node_count, g.m) == (10, 15)
    assert g.neighbors(0) == (1, 4, 5)
    assert g.has_edge(5, 7)
    assert diameter(g) == 2


def test_hypercube_neighbours_differ_in_one_bit():
    g = gen_named(NamedGraphKind.HYPERCUBE, 3)

    assert (g.node_count, g.m) == (8, 12)
    for u, v in g.edges:
        assert bin(u ^ v).count("1") == 1
    assert is_bipartite(g).bipartite


@pytest.mark.parametrize(
    ("kind", "param", "nodes", "edges"),
    [
        (NamedGraphKind.CYCLE, 5, 5, 5),
        (NamedGraphKind.PATH, 4, 4, 3),
        (NamedGraphKind.COMPLETE, 4, 4, 6),
    ],
)
def test_family_sizes(kind, param, nodes, edges):
    g = gen_named(kind, param)

    assert (g.node_count, g.m) == (nodes, edges)


@pytest.mark.parametrize(
    ("kind", "param"),
    [(NamedGraphKind.CYCLE, 2), (NamedGraphKind.PATH, None), (NamedGraphKind.HYPERCUBE, 0)],
)
def test_family_parameters_are_validated(kind, param):
    with pytest.raises(GraphValidationError):
        gen_named(kind, param)


def test_parse_named():
    assert parse_named("cycle:6") == (NamedGraphKind.CYCLE, 6)
    assert parse_named("Petersen") == (NamedGraphKind.PETERSEN, None)


@pytest.mark.parametrize("text", ["wheel:5", "cycle:six"])
def test_parse_named_rejects_bad_input(text):
    with pytest.raises(GraphValidationError):
        parse_named(text)


def test_random_graphs_are_reproducible():
    assert gen_random(12, 0.3, 7) == gen_random(12, 0.3, 7)
    assert gen_random(12, 0.3, 7) != gen_random(12, 0.3, 8)


def test_random_graph_extremes():
    assert gen_random(6, 0.0, 1).m == 0
    assert gen_random(6, 1.0, 1).m == 15
    assert is_connected(gen_random(6, 1.0, 1))


@pytest.mark.parametrize(("n", "p"), [(0, 0.5), (3, 1.5), (3, -0.1)])
def test_random_graph_parameters_are_validated(n, p):
    with pytest.raises(GraphValidationError):
        gen_random(n, p, 0)


def test_to_networkx_keeps_nodes_and_edges(paw):
    nxg = to_networkx(paw)

    assert sorted(nxg.nodes) == [0, 1, 2, 3]
    assert nxg.number_of_edges() == 4
