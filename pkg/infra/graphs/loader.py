"""
Ring: Infrastructure (Graph Sources)

Responsibility:
Implements GraphLoaderPort: resolves a GraphSource into a domain Graph by reading an
edge-list file, generating a named family, drawing a seeded random graph or parsing an
inline edge list.

Dependency constraints:
- Must depend on application ports (features/_shared/ports) to implement them.
- May depend on the Domain layer (core/) and on the other graph adapters.
"""

from __future__ import annotations

from pathlib import Path

from core.entities.graph import Graph
from features._shared.ports import GraphLoaderPort
from features._shared.schemas import GraphSource
from infra.graphs.edge_list import parse_edge_list
from infra.graphs.generators import gen_named, gen_random, parse_named


class GraphLoader(GraphLoaderPort):
    def load(self, source: GraphSource) -> Graph:
        if source.file is not None:
            return parse_edge_list(Path(source.file).read_text(encoding="utf-8"))
        if source.named is not None:
            return gen_named(*parse_named(source.named))
        if source.random is not None:
            return gen_random(source.random.n, source.random.p, source.random.seed)
        return parse_edge_list(source.edge_list or "")
