"""
Ring: Interface Adapters (Presenters)

Responsibility:
Shapes classification reports and lemma audits into the Analysis response document.

Dependency constraints:
- Must not import from any other feature!
- May depend on the Domain layer (core/) and this feature's ports and schemas.
"""

from __future__ import annotations

from core.entities.graph import Graph
from core.values.objects import (
    BipartiteWitness,
    ClassificationReport,
    EcReport,
    LemmaAudit,
)
from features.analysis.ports import GraphAnalyzerPort
from features.analysis.schemas import (
    AnalysisResponse,
    ClassificationResponse,
    CounterexampleResponse,
    LemmaAuditResponse,
    LemmaCheckResponse,
)


class GraphAnalysisPresenter(GraphAnalyzerPort.Out):
    def present(
        self,
        graph: Graph,
        *,
        report: ClassificationReport,
        audit: LemmaAudit,
        ec: EcReport,
        witness: BipartiteWitness,
    ) -> AnalysisResponse:
        return AnalysisResponse(
            classification=ClassificationResponse(
                source=report.source,
                bipartite=report.bipartite,
                eccentricity=report.eccentricity,
                diameter=report.diameter,
                termination_round=report.termination_round,
                j_minus_e=report.excess,
                window_ok=report.window_ok,
                theorem_applied=report.theorem_applied,
            ),
            audit=LemmaAuditResponse(
                source=audit.source,
                passed=audit.passed,
                checks=[
                    LemmaCheckResponse(
                        name=check.name,
                        passed=check.passed,
                        counterexample=(
                            None
                            if check.counterexample is None
                            else CounterexampleResponse(
                                node=check.counterexample.node,
                                round=check.counterexample.round,
                                message=check.counterexample.message,
                            )
                        ),
                    )
                    for check in audit.checks
                ],
            ),
            ec_nodes=sorted(ec.ec_nodes),
            odd_cycle=list(witness.odd_cycle) if witness.odd_cycle is not None else None,
            labels=list(graph.labels) if graph.labels is not None else None,
        )
