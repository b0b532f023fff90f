import networkx as nx
import pytest
from networkx.algorithms.isomorphism import GraphMatcher

from core.entities.graph import Graph
from core.services import flooding
from core.services.flooding import (
    flooding_bipartite,
    initial_configuration,
    run_sync,
    step,
    trace_dump,
)
from core.services.oracles import is_bipartite
from core.values.custom_types import NodeId
from core.values.enums import NamedGraphKind
from core.values.errors import (
    DisconnectedGraphError,
    InvalidSourceError,
    InvariantViolationError,
    NonTerminationError,
    RoundBudgetExhaustedError,
)
from core.values.objects import Configuration
from infra.graphs.generators import gen_named, gen_random, to_networkx


def test_step_forwards_to_everyone_but_the_senders(triangle):
    assert step(triangle, Configuration.of([(1, 0), (1, 2)])) == Configuration.of(
        [(0, 2), (2, 0)]
    )
    assert step(triangle, Configuration.of([(0, 1), (2, 1)])).is_empty()


def test_step_rejects_arcs_off_the_graph(path4):
    with pytest.raises(InvariantViolationError):
        step(path4, Configuration.of([(0, 3)]))


def test_initial_configuration(paw):
    assert initial_configuration(paw, NodeId(0)) == Configuration.of(
        [(0, 1), (0, 2), (0, 3)]
    )


@pytest.mark.parametrize(
    ("kind", "param", "source", "expected"),
    [
        (NamedGraphKind.HYPERCUBE, 3, 0, 3),
        (NamedGraphKind.HYPERCUBE, 3, 5, 3),
        (NamedGraphKind.PETERSEN, None, 0, 5),
        (NamedGraphKind.PETERSEN, None, 7, 5),
        (NamedGraphKind.PATH, 4, 1, 2),
        (NamedGraphKind.CYCLE, 3, 0, 3),
        (NamedGraphKind.CYCLE, 5, 0, 5),
        (NamedGraphKind.CYCLE, 6, 0, 3),
    ],
)
def test_golden_termination_rounds(kind, param, source, expected):
    assert run_sync(gen_named(kind, param), NodeId(source)).termination_round == expected


def test_triangle_trace_in_full(triangle):
    t = run_sync(triangle, NodeId(1))

    assert trace_dump(t) == {
        "source": 1,
        "rounds": [[[1, 0], [1, 2]], [[0, 2], [2, 0]], [[0, 1], [2, 1]]],
        "round_sets": [[1], [0, 2], [0, 2], [1]],
        "termination_round": 3,
    }
    assert t.second_receipt(NodeId(1)) == 3


def test_every_node_in_at_most_two_round_sets(petersen):
    for s in petersen.nodes:
        assert max(run_sync(petersen, NodeId(s)).multiplicity().values()) <= 2


def test_requested_budget_below_the_bound_is_exhaustion_not_a_violation(petersen):
    with pytest.raises(RoundBudgetExhaustedError) as info:
        run_sync(petersen, NodeId(0), max_rounds=3)

    assert not isinstance(info.value, InvariantViolationError)
    assert info.value.dump["source"] == 0
    assert len(info.value.dump["rounds"]) == 3


def test_budget_equal_to_the_run_length_is_enough(petersen):
    assert run_sync(petersen, NodeId(0), max_rounds=5).termination_round == 5


def test_running_past_the_bound_is_non_termination(monkeypatch, triangle):
    monkeypatch.setattr(flooding, "step", lambda g, c: c)

    with pytest.raises(NonTerminationError) as info:
        flooding.run_sync(triangle, NodeId(0))

    assert len(info.value.dump["rounds"]) == flooding.default_max_rounds(triangle)


def test_a_user_budget_at_the_bound_still_flags_non_termination(monkeypatch, triangle):
    monkeypatch.setattr(flooding, "step", lambda g, c: c)

    with pytest.raises(NonTerminationError):
        flooding.run_sync(triangle, NodeId(0), max_rounds=flooding.termination_bound(triangle))


def test_disconnected_graph_is_rejected():
    with pytest.raises(DisconnectedGraphError):
        run_sync(Graph.from_edges(4, [(0, 1), (2, 3)]), NodeId(0))


def test_unknown_source_is_rejected(triangle):
    with pytest.raises(InvalidSourceError):
        run_sync(triangle, NodeId(3))


def test_single_node_graph():
    t = run_sync(Graph.from_edges(1, []), NodeId(0))

    assert t.termination_round == 0
    assert t.rounds == ()


def test_flooding_detects_bipartiteness_on_random_graphs():
    checked = 0
    seed = 0
    while checked < 1000:
        n = 2 + seed % 29
        g = gen_random(n, 0.15 + (seed % 7) / 10, seed)
        seed += 1
        if not nx.is_connected(to_networkx(g)):
            continue
        source = NodeId(seed % n)
        assert flooding_bipartite(g, source) == is_bipartite(g).bipartite
        checked += 1


def test_traces_commute_with_automorphisms(petersen):
    nxg = to_networkx(petersen)
    automorphisms = GraphMatcher(nxg, nxg).isomorphisms_iter()
    source = NodeId(0)
    base = run_sync(petersen, source)

    for sigma in [next(automorphisms) for _ in range(5)]:
        moved = run_sync(petersen, NodeId(sigma[source]))
        assert [
            frozenset((sigma[u], sigma[v]) for u, v in c.arcs) for c in base.rounds
        ] == [c.arcs for c in moved.rounds]
