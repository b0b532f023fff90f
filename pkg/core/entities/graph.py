"""
Ring: Domain (Enterprise Business Rules)

Responsibility:
This module defines the Graph entity: the immutable, undirected, simple network over
which a message is flooded.

It contains:
- Pure domain state (node count, normalised edge set, optional labels)
- Invariants that make a Graph valid (simple, undirected, ids in range)
- Read-only queries used by every engine and oracle (neighbours, degree, label lookup)

It does not contain:
- Parsing or rendering of edge-list text
- Generators of named or random families
- Connectivity policy: a Graph may be disconnected; operations that need a connected
  graph check it themselves.

Dependency constraints:
- Must only depend on other core modules (core.values, core.utils).
- Must never import from features/, infra/, or root/.

Usage:
- Built by infrastructure adapters (parsers, generators) and by the sweep enumerator.
- Shared freely across concurrent executions; it never changes after construction.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

from core.values.custom_types import Edge, NodeId
from core.values.errors import GraphValidationError, InvalidSourceError


@dataclass(frozen=True, slots=True)
class Graph:
    node_count: int
    edges: frozenset[Edge]
    labels: tuple[str, ...] | None = None
    _adjacency: tuple[tuple[NodeId, ...], ...] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        if self.node_count < 1:
            raise GraphValidationError("Graph must have at least one node")

        for u, v in self.edges:
            if u == v:
                raise GraphValidationError(f"Self-loop at node {u}")
            if not 0 <= u < v < self.node_count:
                raise GraphValidationError(
                    f"Edge ({u}, {v}) is not a normalised pair of ids in 0..{self.node_count - 1}"
                )

        if self.labels is not None:
            if len(self.labels) != self.node_count:
                raise GraphValidationError("One label per node is required")
            if len(set(self.labels)) != self.node_count:
                raise GraphValidationError("Node labels must be unique")

        neighbours: list[list[NodeId]] = [[] for _ in range(self.node_count)]
        for u, v in self.edges:
            neighbours[u].append(v)
            neighbours[v].append(u)
        object.__setattr__(
            self, "_adjacency", tuple(tuple(sorted(ns)) for ns in neighbours)
        )

    @classmethod
    def from_edges(
        cls,
        node_count: int,
        edges: Iterable[tuple[int, int]],
        labels: Iterable[str] | None = None,
    ) -> Graph:
        """
        Build a graph from unordered pairs; duplicates and orientation are collapsed.
        """
        normalised: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise GraphValidationError(f"Self-loop at node {u}")
            low, high = (u, v) if u < v else (v, u)
            normalised.add((NodeId(low), NodeId(high)))
        return cls(
            node_count=node_count,
            edges=frozenset(normalised),
            labels=tuple(labels) if labels is not None else None,
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def nodes(self) -> range:
        return range(self.node_count)

    def neighbors(self, node: NodeId) -> tuple[NodeId, ...]:
        return self._adjacency[node]

    def degree(self, node: NodeId) -> int:
        return len(self._adjacency[node])

    def has_edge(self, u: int, v: int) -> bool:
        low, high = (u, v) if u < v else (v, u)
        return (low, high) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def label(self, node: NodeId) -> str:
        return self.labels[node] if self.labels is not None else str(node)

    def require_node(self, node: int) -> NodeId:
        if not 0 <= node < self.node_count:
            raise InvalidSourceError(
                f"Node {node} is out of range 0..{self.node_count - 1}"
            )
        return NodeId(node)

    def resolve(self, token: str) -> NodeId:
        """
        Resolve a label or a decimal id. Labels take precedence.
        """
        if self.labels is not None and token in self.labels:
            return NodeId(self.labels.index(token))
        try:
            node = int(token)
        except ValueError as exc:
            raise InvalidSourceError(f"Unknown node: {token}") from exc
        return self.require_node(node)
