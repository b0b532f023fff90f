"""
Ring: Infrastructure (Graph Generators)

Responsibility:
Builds the named graph families (hypercube, Petersen, cycle, path, complete) and the
seeded Erdős–Rényi random graphs used by the harness.

Design intent:
- Named families come from networkx and are relabelled onto dense integer ids.
  Petersen keeps networkx's canonical labelling: outer cycle 0..4, inner pentagram
  5..9 joined by step-2 chords, spokes i <-> i+5.
- Hypercube ids are the bit strings read as binary numbers, so neighbours differ in
  exactly one bit.
- Random graphs draw one uniform double per unordered pair, in lexicographic pair
  order, from numpy's PCG64 seeded with the given seed. Same (n, p, seed) gives the
  same graph on every platform.

Dependency constraints:
- Must not import from the application layer (features/*).
- May depend on the Domain layer (core/) and on networkx / numpy.
"""

from __future__ import annotations

from itertools import combinations

import networkx as nx
import numpy as np

from core.entities.graph import Graph
from core.utils.validators import require
from core.values.enums import NamedGraphKind
from core.values.errors import GraphValidationError

_MINIMUM = {
    NamedGraphKind.HYPERCUBE: 1,
    NamedGraphKind.CYCLE: 3,
    NamedGraphKind.PATH: 2,
    NamedGraphKind.COMPLETE: 2,
}


def gen_named(kind: NamedGraphKind, param: int | None = None) -> Graph:
    if kind is NamedGraphKind.PETERSEN:
        return _from_networkx(nx.petersen_graph())

    require(
        param is not None and param >= _MINIMUM[kind],
        f"{kind.value} needs a parameter >= {_MINIMUM[kind]}, got {param}",
        error=GraphValidationError,
    )
    if kind is NamedGraphKind.HYPERCUBE:
        cube = nx.hypercube_graph(param)
        as_int = {node: int("".join(map(str, node)), 2) for node in cube.nodes}
        return _from_networkx(nx.relabel_nodes(cube, as_int))
    if kind is NamedGraphKind.CYCLE:
        return _from_networkx(nx.cycle_graph(param))
    if kind is NamedGraphKind.PATH:
        return _from_networkx(nx.path_graph(param))
    return _from_networkx(nx.complete_graph(param))


def parse_named(text: str) -> tuple[NamedGraphKind, int | None]:
    """
    Parse the `kind[:param]` shell syntax, e.g. `cycle:6`, `hypercube:3`, `petersen`.
    """
    name, _, raw = text.partition(":")
    try:
        kind = NamedGraphKind(name.strip().lower())
    except ValueError as exc:
        known = ", ".join(k.value for k in NamedGraphKind)
        raise GraphValidationError(f"Unknown graph kind {name!r}; known: {known}") from exc

    if not raw:
        return kind, None
    try:
        return kind, int(raw)
    except ValueError as exc:
        raise GraphValidationError(f"Graph parameter must be an integer: {raw!r}") from exc


def gen_random(n: int, p: float, seed: int) -> Graph:
    require(n >= 1, f"n must be at least 1, got {n}", error=GraphValidationError)
    require(0.0 <= p <= 1.0, f"p must be in [0, 1], got {p}", error=GraphValidationError)

    rng = np.random.Generator(np.random.PCG64(seed))
    pairs = list(combinations(range(n), 2))
    draws = rng.random(len(pairs))
    return Graph.from_edges(
        node_count=n,
        edges=(pair for pair, draw in zip(pairs, draws) if draw < p),
    )


def to_networkx(g: Graph) -> nx.Graph:
    nxg = nx.Graph()
    nxg.add_nodes_from(g.nodes)
    nxg.add_edges_from(g.edges)
    return nxg


def _from_networkx(nxg: nx.Graph) -> Graph:
    return Graph.from_edges(
        node_count=nxg.number_of_nodes(),
        edges=((int(u), int(v)) for u, v in nxg.edges()),
    )
