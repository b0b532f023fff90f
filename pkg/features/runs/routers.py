"""
Ring: Delivery (Controllers, Frameworks & Drivers / HTTP)

Responsibility:
Binds the Runs use cases to HTTP: POST /runs executes one flooding run and
POST /runs/explorations explores every fair asynchronous schedule.

Dependency constraints:
- Must not import from any other feature!
- Must not contain domain or application business rules.
- May depend on the Application layer (use cases, ports, schemas) and FastAPI.
"""

from typing import Annotated

from fastapi import APIRouter, Depends

from features._shared.custom_types import Provider
from features.runs.schemas import (
    AsyncRunResponse,
    ExplorationResponse,
    ExploreRequest,
    RunRequest,
    SyncTraceResponse,
)
from features.runs.use_cases import FloodRunner, ScheduleExplorer


def build_run_routers(
    *,
    flood_runner: Provider[FloodRunner],
    schedule_explorer: Provider[ScheduleExplorer],
) -> APIRouter:
    router = APIRouter(prefix="/runs", tags=["runs"])

    @router.post("", response_model=SyncTraceResponse | AsyncRunResponse)
    def create_run_endpoint(
        req: RunRequest,
        runner: Annotated[FloodRunner, Depends(flood_runner)],
    ) -> SyncTraceResponse | AsyncRunResponse:
        return runner.execute(request=req)

    @router.post("/explorations", response_model=ExplorationResponse)
    def create_exploration_endpoint(
        req: ExploreRequest,
        explorer: Annotated[ScheduleExplorer, Depends(schedule_explorer)],
    ) -> ExplorationResponse:
        return explorer.execute(request=req)

    return router
