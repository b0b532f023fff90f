"""
Ring: Application (Shared Use Case Steps)

Responsibility:
Loads the graph of a request through GraphLoaderPort and translates loading failures
into application errors, the same way for every feature.

- An unreadable or missing file becomes GraphSourceError.
- Graph content that is invalid (parse error, generator parameter out of range, bad
  random parameters) becomes the calling feature's own input error.

Dependency constraints:
- Must not import from any feature.
- May depend on the Domain layer (core/) and features/_shared.
"""

from __future__ import annotations

import logging

from core.entities.graph import Graph
from core.values.errors import DomainError
from features._shared.errors import ApplicationError, GraphSourceError
from features._shared.ports import GraphLoaderPort
from features._shared.schemas import GraphSource


def load_graph_or_raise(
    loader: GraphLoaderPort,
    source: GraphSource,
    *,
    logger: logging.Logger,
    event: str,
    invalid: type[ApplicationError],
) -> Graph:
    try:
        graph = loader.load(source)
    except OSError as exc:
        logger.info(
            "%s_failed_graph_source graph=%s error=%s", event, source.describe(), exc
        )
        raise GraphSourceError(f"Cannot read graph {source.describe()}: {exc}") from exc
    except DomainError as exc:
        logger.info(
            "%s_failed_graph_invalid graph=%s error=%s", event, source.describe(), exc
        )
        raise invalid(str(exc)) from exc

    logger.debug(
        "%s_graph_loaded graph=%s n=%s m=%s", event, source.describe(), graph.node_count, graph.m
    )
    return graph
