"""
Ring: Application (Use Case / Interactors)

Responsibility:
Implements GraphAnalyzer: floods a graph from one source, classifies the termination
round against the bipartite and non-bipartite theorems, and audits the trace against
the structural lemmas.

A report whose window check or audit fails is still returned, not raised: it is a
finding about the engine or a genuine counterexample, and the caller decides what to
do with it. It is logged at WARNING.

Dependency constraints:
- Must not import from any other feature!
- Must not depend on infrastructure implementations or frameworks directly.
- May depend on the Domain layer (core/) and this feature's ports, errors, and schemas.
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

from core.entities.graph import Graph
from core.entities.trace import Trace
from core.services.flooding import run_sync
from core.services.oracles import diameter, distance_profile, ec_nodes, is_bipartite
from core.services.verification import audit_lemmas, build_classification
from core.values.custom_types import NodeId
from core.values.errors import (
    DisconnectedGraphError,
    InvalidSourceError,
    InvariantViolationError,
)
from features._shared.loading import load_graph_or_raise
from features._shared.ports import GraphLoaderPort
from features.analysis.errors import AnalysisInputError
from features.analysis.ports import GraphAnalyzerPort

if TYPE_CHECKING:
    from features.analysis.schemas import AnalysisResponse, AnalyzeRequest


class GraphAnalyzer(GraphAnalyzerPort.In):
    def __init__(
        self,
        *,
        loader: GraphLoaderPort,
        presenter: GraphAnalyzerPort.Out,
        logger: logging.Logger,
    ) -> None:
        self._loader = loader
        self._presenter = presenter
        self._logger = logger

    def execute(self, *, request: AnalyzeRequest) -> AnalysisResponse:
        self._logger.info(
            "graph_analysis_started graph=%s source=%s",
            request.graph.describe(),
            request.source,
        )

        graph = load_graph_or_raise(
            self._loader,
            request.graph,
            logger=self._logger,
            event="graph_analysis",
            invalid=AnalysisInputError,
        )
        source = self._resolve_source_or_raise(graph, request.source)
        trace = self._run_or_raise(graph, source)

        profile = distance_profile(graph, source)
        witness = is_bipartite(graph)
        ec = ec_nodes(graph, source)
        report = build_classification(
            trace=trace,
            profile=profile,
            graph_diameter=diameter(graph),
            bipartite=witness.bipartite,
        )
        audit = audit_lemmas(graph, source, trace, profile=profile, report=ec)

        if report.window_ok and audit.passed:
            self._logger.info(
                "graph_analysis_succeeded source=%s theorem=%s e=%s d=%s j=%s",
                source,
                report.theorem_applied.value,
                report.eccentricity,
                report.diameter,
                report.termination_round,
            )
        else:
            self._logger.warning(
                "graph_analysis_violation_found source=%s window_ok=%s failed_checks=%s",
                source,
                report.window_ok,
                ",".join(check.name.value for check in audit.failures()),
            )

        return self._presenter.present(
            graph, report=report, audit=audit, ec=ec, witness=witness
        )

    def _resolve_source_or_raise(self, graph: Graph, token: str) -> NodeId:
        try:
            return graph.resolve(token)
        except InvalidSourceError as exc:
            self._logger.info(
                "graph_analysis_failed_source source=%s error=%s", token, exc
            )
            raise AnalysisInputError(str(exc)) from exc

    def _run_or_raise(self, graph: Graph, source: NodeId) -> Trace:
        try:
            return run_sync(graph, source)
        except DisconnectedGraphError as exc:
            self._logger.info("graph_analysis_failed_disconnected error=%s", exc)
            raise AnalysisInputError(str(exc)) from exc
        except InvariantViolationError as exc:
            self._logger.error(
                "graph_analysis_failed_invariant source=%s error=%s", source, exc
            )
            raise
