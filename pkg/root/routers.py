"""
Ring: Composition Root (not on the Clean Architecture diagram)

Responsibility:
Registers all HTTP routers with the FastAPI application, wired to the providers of the
root DI layer.

Dependency constraints:
- May depend on all inner layers (features, core, infra, root.di).
- Must not be imported by any inner layer.
"""

from __future__ import annotations

from fastapi import FastAPI

from features.analysis.routers import build_analysis_routers
from features.runs.routers import build_run_routers
from features.sweeps.routers import build_sweep_routers
from root.di.analysis import get_graph_analyzer
from root.di.runs import get_flood_runner, get_schedule_explorer
from root.di.sweeps import (
    get_sharp_example_finder,
    get_sweep_lister,
    get_sweep_runner,
)


def register_routers(app: FastAPI) -> None:
    app.include_router(
        build_run_routers(
            flood_runner=get_flood_runner,
            schedule_explorer=get_schedule_explorer,
        )
    )

    app.include_router(build_analysis_routers(graph_analyzer=get_graph_analyzer))

    app.include_router(
        build_sweep_routers(
            sweep_runner=get_sweep_runner,
            sweep_lister=get_sweep_lister,
            sharp_example_finder=get_sharp_example_finder,
        )
    )
