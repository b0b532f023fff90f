"""
Ring: Domain (Enterprise Business Rules)

Responsibility:
Enumerates every connected simple graph on a small number of labelled nodes by
adjacency bitmask, and performs the per-graph work of the exhaustive sweep and of the
sharpness search.

Bit k of a mask selects the k-th pair of combinations(range(n), 2), so masks enumerate
labelled graphs without isomorphism reduction. Work is split into mask ranges so that
callers can fan it out to worker processes; every function here is pure and its result
depends only on its arguments.

Dependency constraints:
- May only depend on core entities, core services and core value objects.
- Must never import from features/, infra/, or root/.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterator
from itertools import combinations

from core.entities.graph import Graph
from core.services.flooding import run_sync, trace_dump
from core.services.oracles import diameter, distance_profile, is_bipartite
from core.services.verification import audit_lemmas, build_classification
from core.utils.validators import require
from core.values.constants import (
    SHARP_SEARCH_MAX_NODES,
    SWEEP_CHUNK_SIZE,
    SWEEP_MAX_NODES,
    SWEEP_MIN_NODES,
)
from core.values.custom_types import Edge, NodeId
from core.values.enums import SweepCheckName
from core.values.errors import (
    DomainError,
    InvariantViolationError,
    MultiplicityError,
    NonTerminationError,
)
from core.values.objects import (
    ChunkResult,
    SharpSearchResult,
    SharpWitness,
    SweepViolation,
)


def node_pairs(n: int) -> list[Edge]:
    return [(NodeId(u), NodeId(v)) for u, v in combinations(range(n), 2)]


def mask_is_connected(n: int, mask: int, pairs: list[Edge]) -> bool:
    adjacency = [0] * n
    for bit, (u, v) in enumerate(pairs):
        if mask >> bit & 1:
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u

    everyone = (1 << n) - 1
    reached = frontier = 1
    while frontier:
        grown = 0
        node = 0
        while frontier >> node:
            if frontier >> node & 1:
                grown |= adjacency[node]
            node += 1
        frontier = grown & ~reached
        reached |= frontier
    return reached == everyone


def graph_from_mask(n: int, mask: int, pairs: list[Edge]) -> Graph:
    return Graph(
        node_count=n,
        edges=frozenset(pair for bit, pair in enumerate(pairs) if mask >> bit & 1),
    )


def connected_graphs(n: int, lo: int = 0, hi: int | None = None) -> Iterator[Graph]:
    pairs = node_pairs(n)
    upper = 1 << len(pairs) if hi is None else hi
    for mask in range(lo, upper):
        if mask_is_connected(n, mask, pairs):
            yield graph_from_mask(n, mask, pairs)


def chunk_bounds(
    n_max: int, chunk_size: int = SWEEP_CHUNK_SIZE
) -> list[tuple[int, int, int]]:
    """
    (n, lo, hi) work units covering every mask for n = 2..n_max, in sweep order.
    """
    require(
        SWEEP_MIN_NODES <= n_max <= SWEEP_MAX_NODES,
        f"n_max must be in {SWEEP_MIN_NODES}..{SWEEP_MAX_NODES}, got {n_max}",
    )
    units = []
    for n in range(SWEEP_MIN_NODES, n_max + 1):
        total = 1 << (n * (n - 1) // 2)
        units.extend(
            (n, lo, min(lo + chunk_size, total)) for lo in range(0, total, chunk_size)
        )
    return units


def sweep_chunk(n: int, lo: int, hi: int) -> ChunkResult:
    result = ChunkResult()
    for g in connected_graphs(n, lo, hi):
        result = result.merge(check_graph(g))
    return result


def check_graph(g: Graph) -> ChunkResult:
    """
    Run, classify and audit flooding from every source of a connected graph.
    """
    bipartite = is_bipartite(g).bipartite
    graph_diameter = diameter(g)
    edges = tuple(g.sorted_edges())

    violations: list[SweepViolation] = []
    histogram: Counter = Counter()
    bipartite_runs = 0
    max_j = 0

    def violation(source: NodeId, check: SweepCheckName, detail: str, trace: dict) -> None:
        violations.append(
            SweepViolation(
                node_count=g.node_count,
                edges=edges,
                source=source,
                check=check,
                detail=detail,
                trace=trace,
            )
        )

    for s in g.nodes:
        source = NodeId(s)
        try:
            trace = run_sync(g, source)
        except InvariantViolationError as exc:
            violation(source, _engine_check(exc), str(exc), exc.dump)
            continue

        profile = distance_profile(g, source)
        report = build_classification(
            trace=trace,
            profile=profile,
            graph_diameter=graph_diameter,
            bipartite=bipartite,
        )
        histogram[report.excess] += 1
        bipartite_runs += int(bipartite)
        max_j = max(max_j, report.termination_round)

        if not report.window_ok:
            violation(
                source,
                SweepCheckName(report.theorem_applied.value),
                f"e={report.eccentricity} d={report.diameter} j={report.termination_round}",
                trace_dump(trace),
            )

        audit = audit_lemmas(g, source, trace, profile=profile)
        if not audit.passed:
            violation(
                source,
                SweepCheckName.LEMMA_AUDIT,
                "; ".join(
                    f"{check.name.value}: node {check.counterexample.node} "
                    f"round {check.counterexample.round} {check.counterexample.message}"
                    for check in audit.failures()
                    if check.counterexample is not None
                ),
                trace_dump(trace),
            )

    return ChunkResult(
        graphs=1,
        runs=g.node_count,
        bipartite_runs=bipartite_runs,
        max_j=max_j,
        histogram=histogram,
        violations=tuple(violations),
    )


def _engine_check(exc: InvariantViolationError) -> SweepCheckName:
    if isinstance(exc, NonTerminationError):
        return SweepCheckName.TERMINATION_BOUND
    if isinstance(exc, MultiplicityError):
        return SweepCheckName.MULTIPLICITY
    return SweepCheckName.ENGINE_ERROR


def find_sharp_example(
    n_max: int,
    *,
    target_eccentricity: int | None = None,
    target_diameter: int | None = None,
    strict: bool = True,
) -> SharpSearchResult:
    """
    Smallest (n, then m, then edge list, then source) connected graph and source whose
    flooding lasts exactly e + d + 1 rounds.

    `strict` demands e < d, which rules out the triangle and the odd cycles. A target
    eccentricity and/or diameter narrows the search further. The frontier lists every
    (e, d) pair seen attaining the bound among the graphs examined.
    """
    require(
        SWEEP_MIN_NODES <= n_max <= SHARP_SEARCH_MAX_NODES,
        f"n_max must be in {SWEEP_MIN_NODES}..{SHARP_SEARCH_MAX_NODES}, got {n_max}",
        error=DomainError,
    )

    frontier: set[tuple[int, int]] = set()
    examined = 0
    for n in range(SWEEP_MIN_NODES, n_max + 1):
        pairs = node_pairs(n)
        for m in range(n - 1, len(pairs) + 1):
            for chosen in combinations(range(len(pairs)), m):
                mask = sum(1 << bit for bit in chosen)
                if not mask_is_connected(n, mask, pairs):
                    continue
                examined += 1
                g = graph_from_mask(n, mask, pairs)
                witness = _sharp_witness(
                    g,
                    frontier,
                    target_eccentricity=target_eccentricity,
                    target_diameter=target_diameter,
                    strict=strict,
                )
                if witness is not None:
                    return SharpSearchResult(
                        witness=witness,
                        frontier=tuple(sorted(frontier)),
                        graphs_examined=examined,
                    )

    return SharpSearchResult(
        witness=None, frontier=tuple(sorted(frontier)), graphs_examined=examined
    )


def _sharp_witness(
    g: Graph,
    frontier: set[tuple[int, int]],
    *,
    target_eccentricity: int | None,
    target_diameter: int | None,
    strict: bool,
) -> SharpWitness | None:
    if is_bipartite(g).bipartite:
        return None

    d = diameter(g)
    found = None
    for s in g.nodes:
        source = NodeId(s)
        e = distance_profile(g, source).eccentricity
        j = run_sync(g, source).termination_round
        if j != e + d + 1:
            continue
        frontier.add((e, d))
        if found is not None:
            continue
        if strict and e >= d:
            continue
        if target_eccentricity is not None and e != target_eccentricity:
            continue
        if target_diameter is not None and d != target_diameter:
            continue
        found = SharpWitness(
            node_count=g.node_count,
            edges=tuple(g.sorted_edges()),
            source=source,
            eccentricity=e,
            diameter=d,
            termination_round=j,
        )
    return found
