"""
Ring: Delivery (Controllers, Frameworks & Drivers / HTTP)

Responsibility:
Binds the Sweeps use cases to HTTP: POST /sweeps runs a sweep, GET /sweeps lists the
stored ones, POST /sweeps/sharp runs the sharpness search.

Dependency constraints:
- Must not import from any other feature!
- Must not contain domain or application business rules.
- May depend on the Application layer (use cases, ports, schemas) and FastAPI.
"""

from typing import Annotated

from fastapi import APIRouter, Depends

from features._shared.custom_types import Provider
from features.sweeps.schemas import (
    SharpRequest,
    SharpSearchResponse,
    SweepRecordResponse,
    SweepRequest,
    SweepSummaryResponse,
)
from features.sweeps.use_cases import SharpExampleFinder, SweepLister, SweepRunner


def build_sweep_routers(
    *,
    sweep_runner: Provider[SweepRunner],
    sweep_lister: Provider[SweepLister],
    sharp_example_finder: Provider[SharpExampleFinder],
) -> APIRouter:
    router = APIRouter(prefix="/sweeps", tags=["sweeps"])

    @router.post("", response_model=SweepSummaryResponse)
    def create_sweep_endpoint(
        req: SweepRequest,
        runner: Annotated[SweepRunner, Depends(sweep_runner)],
    ) -> SweepSummaryResponse:
        return runner.execute(request=req)

    @router.get("", response_model=list[SweepRecordResponse])
    def list_sweeps_endpoint(
        lister: Annotated[SweepLister, Depends(sweep_lister)],
    ) -> list[SweepRecordResponse]:
        return lister.execute()

    @router.post("/sharp", response_model=SharpSearchResponse)
    def create_sharp_search_endpoint(
        req: SharpRequest,
        finder: Annotated[SharpExampleFinder, Depends(sharp_example_finder)],
    ) -> SharpSearchResponse:
        return finder.execute(request=req)

    return router
