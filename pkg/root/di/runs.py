"""
Ring: Composition Root

Responsibility:
Defines dependency wiring for the Runs feature. The build_* functions assemble the
interactors for any delivery mechanism; the get_* functions are their FastAPI
providers.

Dependency constraints:
- May depend on all inner layers (infra, features, core).
- Must not be imported by any inner layer.
"""

from __future__ import annotations

import logging

from features.runs.presenters import ExplorationPresenter, FloodRunPresenter
from features.runs.use_cases import FloodRunner, ScheduleExplorer
from infra.graphs.loader import GraphLoader
from infra.scheduling.registry import AdversaryRegistry
from root.logging_setup import LoggerDep


def build_flood_runner(*, logger: logging.Logger) -> FloodRunner:
    return FloodRunner(
        loader=GraphLoader(),
        adversaries=AdversaryRegistry(),
        presenter=FloodRunPresenter(),
        logger=logger,
    )


def build_schedule_explorer(*, logger: logging.Logger) -> ScheduleExplorer:
    return ScheduleExplorer(
        loader=GraphLoader(),
        presenter=ExplorationPresenter(),
        logger=logger,
    )


def get_flood_runner(logger: LoggerDep) -> FloodRunner:
    return build_flood_runner(logger=logger)


def get_schedule_explorer(logger: LoggerDep) -> ScheduleExplorer:
    return build_schedule_explorer(logger=logger)
