"""
Ring: Application (Use Case Boundaries / Ports)

Responsibility:
Defines the port interfaces for the Analysis feature: classify one flooding run
against the termination theorems and audit it against the structural lemmas.

Dependency constraints:
- Must not import from any other feature!
- Must not depend on infrastructure implementations or frameworks directly!
- May depend on the Domain layer (core/) and features/_shared.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Protocol

from core.entities.graph import Graph
from core.values.objects import (
    BipartiteWitness,
    ClassificationReport,
    EcReport,
    LemmaAudit,
)
from features._shared.ports import IOPorts


class GraphAnalyzerPort(IOPorts):
    """
    Use case: analyse flooding from one source.
    """

    class In(Protocol):
        def execute(self, *, request: "AnalyzeRequest") -> "AnalysisResponse":
            raise NotImplementedError

    class Out(Protocol):
        def present(
            self,
            graph: Graph,
            *,
            report: ClassificationReport,
            audit: LemmaAudit,
            ec: EcReport,
            witness: BipartiteWitness,
        ) -> "AnalysisResponse":
            raise NotImplementedError


if TYPE_CHECKING:
    from features.analysis.schemas import AnalysisResponse, AnalyzeRequest
