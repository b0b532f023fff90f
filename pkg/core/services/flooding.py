"""
Ring: Domain (Enterprise Business Rules)

Responsibility:
Executes synchronous Amnesiac Flooding from a single source and records the complete
trace. Each node that receives the message in a round forwards it, in the next round, to
every neighbour it did not receive it from in that round, and remembers nothing else.

Design intent:
step() is a pure transform Configuration -> Configuration; run_sync() only iterates it
and enforces the engine invariants (termination before round 2n + 1, every node in at
most two round-sets). A broken invariant is an InvariantViolationError carrying the
trace dump, never a silently accepted result.

Dependency constraints:
- May only depend on core entities, core services and core value objects.
- Must never import from features/, infra/, or root/.
"""

from __future__ import annotations

from core.entities.graph import Graph
from core.entities.trace import Trace
from core.services.oracles import eccentricity, require_connected
from core.values.constants import SYNC_ROUND_SLACK
from core.values.custom_types import Arc, NodeId
from core.values.errors import (
    InvariantViolationError,
    MultiplicityError,
    NonTerminationError,
    RoundBudgetExhaustedError,
)
from core.values.objects import Configuration


def step(g: Graph, c: Configuration) -> Configuration:
    inbox: dict[NodeId, set[NodeId]] = {}
    for u, v in c.arcs:
        if not g.has_edge(u, v):
            raise InvariantViolationError(
                f"Transmission ({u}, {v}) does not follow an edge",
                dump={"arcs": [list(a) for a in c.sorted_arcs()]},
            )
        inbox.setdefault(v, set()).add(u)

    sent: set[Arc] = set()
    for node, senders in inbox.items():
        for neighbour in g.neighbors(node):
            if neighbour not in senders:
                sent.add((node, neighbour))
    return Configuration(frozenset(sent))


def initial_configuration(g: Graph, source: NodeId) -> Configuration:
    return Configuration(frozenset((source, w) for w in g.neighbors(source)))


def default_max_rounds(g: Graph) -> int:
    return 2 * g.node_count + SYNC_ROUND_SLACK


def termination_bound(g: Graph) -> int:
    """
    Flooding on a connected graph always ends before this round.
    """
    return 2 * g.node_count + 1


def run_sync(g: Graph, source: NodeId, max_rounds: int | None = None) -> Trace:
    require_connected(g)
    source = g.require_node(source)
    budget = default_max_rounds(g) if max_rounds is None else max_rounds

    rounds: list[Configuration] = []
    current = initial_configuration(g, source)
    while not current.is_empty():
        if len(rounds) >= budget:
            message = f"Flooding from {source} still active after {budget} rounds"
            dump = trace_dump(Trace(source, g.node_count, tuple(rounds)))
            if budget < termination_bound(g):
                raise RoundBudgetExhaustedError(message, dump=dump)
            raise NonTerminationError(message, dump=dump)
        rounds.append(current)
        current = step(g, current)

    trace = Trace(source=source, node_count=g.node_count, rounds=tuple(rounds))
    _check_invariants(g, trace)
    return trace


def round_multiplicity(t: Trace) -> dict[NodeId, int]:
    return t.multiplicity()


def flooding_bipartite(g: Graph, source: NodeId) -> bool:
    """
    Topology detection by flooding alone: the run ends exactly at the source's
    eccentricity iff the graph is bipartite.
    """
    return run_sync(g, source).termination_round == eccentricity(g, source)


def trace_dump(t: Trace) -> dict:
    return {
        "source": int(t.source),
        "rounds": [[list(arc) for arc in c.sorted_arcs()] for c in t.rounds],
        "round_sets": [sorted(int(v) for v in rs) for rs in t.round_sets],
        "termination_round": t.termination_round,
    }


def _check_invariants(g: Graph, t: Trace) -> None:
    bound = termination_bound(g)
    if t.termination_round >= bound:
        raise NonTerminationError(
            f"Termination round {t.termination_round} is not below 2n+1 = {bound}",
            dump=trace_dump(t),
        )

    for node, count in t.multiplicity().items():
        if count > 2:
            raise MultiplicityError(
                f"Node {node} appears in {count} round-sets",
                dump=trace_dump(t),
            )
