"""
Ring: Delivery (Controllers, Frameworks & Drivers / HTTP)

Responsibility:
Binds the Analysis use case to HTTP: POST /analyses.

Dependency constraints:
- Must not import from any other feature!
- Must not contain domain or application business rules.
- May depend on the Application layer (use cases, ports, schemas) and FastAPI.
"""

from typing import Annotated

from fastapi import APIRouter, Depends

from features._shared.custom_types import Provider
from features.analysis.schemas import AnalysisResponse, AnalyzeRequest
from features.analysis.use_cases import GraphAnalyzer


def build_analysis_routers(*, graph_analyzer: Provider[GraphAnalyzer]) -> APIRouter:
    router = APIRouter(prefix="/analyses", tags=["analyses"])

    @router.post("", response_model=AnalysisResponse)
    def create_analysis_endpoint(
        req: AnalyzeRequest,
        analyzer: Annotated[GraphAnalyzer, Depends(graph_analyzer)],
    ) -> AnalysisResponse:
        return analyzer.execute(request=req)

    return router
