"""
Ring: Domain (Enterprise Business Rules)

Responsibility:
Verifies the termination theorems and the supporting lemmas of Amnesiac Flooding
against recorded traces and the static oracles.

It models the rules that:
- A graph is bipartite iff flooding ends exactly at the source's eccentricity e.
- On a non-bipartite graph the termination round j lies in e < j <= e + d + 1.
- Every node first receives in the round equal to its distance from the source,
  every distance layer forwards to the next in the following round, ec nodes receive a
  second time one round later, and second receipts of neighbours are at most one round
  apart.

Verifiers report failures as data (LemmaAudit); they never raise for a failed check.

Dependency constraints:
- May only depend on core entities, core services and core value objects.
- Must never import from features/, infra/, or root/.
"""

from __future__ import annotations

from core.entities.graph import Graph
from core.entities.trace import Trace
from core.services.flooding import run_sync
from core.services.oracles import diameter, distance_profile, ec_nodes, is_bipartite
from core.values.custom_types import NodeId
from core.values.enums import LemmaCheckName, TheoremApplied
from core.values.objects import (
    ClassificationReport,
    Counterexample,
    DistanceProfile,
    EcReport,
    LemmaAudit,
    LemmaCheck,
)


def classify(g: Graph, source: NodeId) -> ClassificationReport:
    trace = run_sync(g, source)
    return build_classification(
        trace=trace,
        profile=distance_profile(g, source),
        graph_diameter=diameter(g),
        bipartite=is_bipartite(g).bipartite,
    )


def build_classification(
    *,
    trace: Trace,
    profile: DistanceProfile,
    graph_diameter: int,
    bipartite: bool,
) -> ClassificationReport:
    e = profile.eccentricity
    j = trace.termination_round

    if bipartite:
        window_ok = j == e
        theorem = TheoremApplied.BIPARTITE_EXACT
    else:
        window_ok = e < j <= e + graph_diameter + 1
        theorem = TheoremApplied.NONBIPARTITE_WINDOW

    return ClassificationReport(
        source=trace.source,
        bipartite=bipartite,
        eccentricity=e,
        diameter=graph_diameter,
        termination_round=j,
        window_ok=window_ok,
        theorem_applied=theorem,
    )


def audit_lemmas(
    g: Graph,
    source: NodeId,
    t: Trace,
    *,
    profile: DistanceProfile | None = None,
    report: EcReport | None = None,
) -> LemmaAudit:
    profile = profile or distance_profile(g, source)
    report = report or ec_nodes(g, source)

    return LemmaAudit(
        source=profile.source,
        checks=(
            _check_distance_layers(t, profile),
            _check_frontier_sends(g, t, profile),
            _check_ec_second_receipt(t, profile, report),
            _check_single_occurrence(g, t, profile, report),
            _check_neighbor_second_occurrence(g, t),
        ),
    )


def _passed(name: LemmaCheckName) -> LemmaCheck:
    return LemmaCheck(name=name, passed=True)


def _failed(name: LemmaCheckName, node: NodeId, round_: int, message: str) -> LemmaCheck:
    return LemmaCheck(
        name=name,
        passed=False,
        counterexample=Counterexample(node=node, round=round_, message=message),
    )


def _check_distance_layers(t: Trace, profile: DistanceProfile) -> LemmaCheck:
    name = LemmaCheckName.DISTANCE_LAYERS
    for j, layer in enumerate(profile.layers):
        for node in sorted(layer - t.round_set(j)):
            return _failed(name, node, j, "node at distance j missing from R_j")

    for j, round_set in enumerate(t.round_sets):
        for node in sorted(round_set):
            if profile.dist[node] > j:
                return _failed(
                    name, node, j, f"node at distance {profile.dist[node]} received early"
                )
    return _passed(name)


def _check_frontier_sends(g: Graph, t: Trace, profile: DistanceProfile) -> LemmaCheck:
    name = LemmaCheckName.FRONTIER_SENDS
    dist = profile.dist
    for u, v in g.sorted_edges():
        if abs(dist[u] - dist[v]) != 1:
            continue
        near, far = (u, v) if dist[u] < dist[v] else (v, u)
        round_number = dist[near] + 1
        if (near, far) not in t.transmissions(round_number).arcs:
            return _failed(
                name, far, round_number, f"no send from {near} across the frontier"
            )
    return _passed(name)


def _check_ec_second_receipt(
    t: Trace, profile: DistanceProfile, report: EcReport
) -> LemmaCheck:
    name = LemmaCheckName.EC_SECOND_RECEIPT
    for node in sorted(report.ec_nodes):
        expected = profile.dist[node] + 1
        if t.second_receipt(node) != expected:
            return _failed(
                name, node, expected, f"second receipt at {t.second_receipt(node)}"
            )
    return _passed(name)


def _check_single_occurrence(
    g: Graph, t: Trace, profile: DistanceProfile, report: EcReport
) -> LemmaCheck:
    name = LemmaCheckName.SINGLE_OCCURRENCE
    repeated = sorted(v for v in g.nodes if t.second_receipt(NodeId(v)) is not None)

    if report.is_empty() and repeated:
        node = NodeId(repeated[0])
        return _failed(
            name, node, t.second_receipt(node) or 0, "repeat receipt without ec nodes"
        )
    if not report.is_empty() and not repeated:
        node = min(report.ec_nodes)
        return _failed(
            name, node, profile.dist[node] + 1, "ec nodes present but no repeat receipt"
        )
    return _passed(name)


def _check_neighbor_second_occurrence(g: Graph, t: Trace) -> LemmaCheck:
    name = LemmaCheckName.NEIGHBOR_SECOND_OCCURRENCE
    for h in g.nodes:
        j = t.second_receipt(NodeId(h))
        if j is None:
            continue
        for neighbour in g.neighbors(NodeId(h)):
            second = t.second_receipt(neighbour)
            if second is None or abs(second - j) > 1:
                return _failed(
                    name,
                    neighbour,
                    j,
                    f"neighbour of {h} has second receipt at {second}",
                )
    return _passed(name)
