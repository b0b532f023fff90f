"""
Ring: Domain (Enterprise Business Rules)

Responsibility:
Defines the static graph oracles the flooding analysis is judged against: BFS distance
layers, eccentricity, diameter, bipartiteness with a witness, and equidistantly-connected
(ec) nodes.

These oracles never look at a flooding run. They are the independent side of every
cross-check performed by the verifiers.

Dependency constraints:
- May only depend on core entities and core value objects.
- Must never import from features/, infra/, or root/.

Usage:
- Called by the engines for precondition checks (connectivity, source validity).
- Called by the verifiers and sweeps to classify graphs.
"""

from __future__ import annotations

from collections import deque

from core.entities.graph import Graph
from core.utils.validators import require
from core.values.custom_types import Edge, NodeId
from core.values.errors import DisconnectedGraphError
from core.values.objects import BipartiteWitness, DistanceProfile, EcReport


def bfs_distances(g: Graph, source: NodeId) -> dict[NodeId, int]:
    """
    Hop counts from `source` to every node of its component.
    """
    dist = {source: 0}
    queue = deque([source])
    while queue:
        node = queue.popleft()
        for neighbour in g.neighbors(node):
            if neighbour not in dist:
                dist[neighbour] = dist[node] + 1
                queue.append(neighbour)
    return dist


def is_connected(g: Graph) -> bool:
    return len(bfs_distances(g, NodeId(0))) == g.node_count


def require_connected(g: Graph) -> None:
    require(
        is_connected(g),
        f"Graph with {g.node_count} nodes and {g.m} edges is not connected",
        error=DisconnectedGraphError,
    )


def distance_profile(g: Graph, source: NodeId) -> DistanceProfile:
    source = g.require_node(source)
    dist = bfs_distances(g, source)
    require(
        len(dist) == g.node_count,
        f"Graph is not connected: {g.node_count - len(dist)} nodes unreachable from {source}",
        error=DisconnectedGraphError,
    )

    layers: list[set[NodeId]] = [set() for _ in range(max(dist.values()) + 1)]
    for node, hops in dist.items():
        layers[hops].add(node)

    return DistanceProfile(
        source=source,
        dist=dist,
        layers=tuple(frozenset(layer) for layer in layers),
    )


def eccentricity(g: Graph, source: NodeId) -> int:
    return distance_profile(g, source).eccentricity


def diameter(g: Graph) -> int:
    require_connected(g)
    return max(max(bfs_distances(g, NodeId(s)).values()) for s in g.nodes)


def is_bipartite(g: Graph) -> BipartiteWitness:
    """
    BFS 2-colouring over every component.

    On failure the witness is an odd cycle closed by the first edge whose endpoints got
    the same colour: both endpoints sit on the same BFS layer, so the two tree paths up
    to their lowest common ancestor plus that edge have odd total length.
    """
    color: list[int] = [-1] * g.node_count
    parent: list[NodeId | None] = [None] * g.node_count

    for root in g.nodes:
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([NodeId(root)])
        while queue:
            node = queue.popleft()
            for neighbour in g.neighbors(node):
                if color[neighbour] == -1:
                    color[neighbour] = 1 - color[node]
                    parent[neighbour] = node
                    queue.append(neighbour)
                elif color[neighbour] == color[node]:
                    return BipartiteWitness(
                        bipartite=False,
                        odd_cycle=_odd_cycle(parent, node, neighbour),
                    )

    return BipartiteWitness(bipartite=True, coloring=tuple(color))


def _odd_cycle(
    parent: list[NodeId | None], u: NodeId, v: NodeId
) -> tuple[NodeId, ...]:
    path_u = _path_to_root(parent, u)
    path_v = _path_to_root(parent, v)
    on_v = set(path_v)
    lca = next(node for node in path_u if node in on_v)

    up = path_u[: path_u.index(lca) + 1]
    down = path_v[: path_v.index(lca)]
    return tuple(up) + tuple(reversed(down))


def _path_to_root(parent: list[NodeId | None], node: NodeId) -> list[NodeId]:
    path = [node]
    while (step := parent[path[-1]]) is not None:
        path.append(step)
    return path


def ec_nodes(g: Graph, source: NodeId) -> EcReport:
    profile = distance_profile(g, source)
    dist = profile.dist

    witnesses: set[Edge] = set()
    nodes: set[NodeId] = set()
    for u, v in g.edges:
        if dist[u] == dist[v] and profile.source not in (u, v):
            witnesses.add((u, v))
            nodes.update((u, v))

    return EcReport(
        source=profile.source,
        ec_nodes=frozenset(nodes),
        witness_edges=frozenset(witnesses),
    )
