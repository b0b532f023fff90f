"""
Ring: Delivery (Interface Adapters / HTTP Boundary)

Responsibility:
Defines the request and response schemas of the Analysis feature.

The response carries the classification of the run (which theorem applies and whether
the termination round falls where it predicts), the lemma audit, the EC nodes of the
source and the bipartiteness witness: a 2-colouring or an odd cycle.

Dependency constraints:
- Must not import from any other feature!
- May depend on shared application contracts in features/_shared.
"""

from __future__ import annotations

from pydantic import BaseModel

from core.values.enums import LemmaCheckName, TheoremApplied
from features._shared.schemas import GraphDocument, GraphSource


class AnalyzeRequest(BaseModel):
    graph: GraphSource
    source: str


class ClassificationResponse(BaseModel):
    source: int
    bipartite: bool
    eccentricity: int
    diameter: int
    termination_round: int
    j_minus_e: int
    window_ok: bool
    theorem_applied: TheoremApplied


class CounterexampleResponse(BaseModel):
    node: int
    round: int
    message: str


class LemmaCheckResponse(BaseModel):
    name: LemmaCheckName
    passed: bool
    counterexample: CounterexampleResponse | None = None


class LemmaAuditResponse(BaseModel):
    source: int
    passed: bool
    checks: list[LemmaCheckResponse]


class AnalysisResponse(GraphDocument):
    classification: ClassificationResponse
    audit: LemmaAuditResponse
    ec_nodes: list[int]
    odd_cycle: list[int] | None = None

    @property
    def holds(self) -> bool:
        return self.classification.window_ok and self.audit.passed
