"""
Ring: Composition Root

Responsibility:
Defines dependency wiring for the Analysis feature.

Dependency constraints:
- May depend on all inner layers (infra, features, core).
- Must not be imported by any inner layer.
"""

from __future__ import annotations

import logging

from features.analysis.presenters import GraphAnalysisPresenter
from features.analysis.use_cases import GraphAnalyzer
from infra.graphs.loader import GraphLoader
from root.logging_setup import LoggerDep


def build_graph_analyzer(*, logger: logging.Logger) -> GraphAnalyzer:
    return GraphAnalyzer(
        loader=GraphLoader(),
        presenter=GraphAnalysisPresenter(),
        logger=logger,
    )


def get_graph_analyzer(logger: LoggerDep) -> GraphAnalyzer:
    return build_graph_analyzer(logger=logger)
