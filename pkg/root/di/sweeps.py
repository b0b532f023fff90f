"""
Ring: Composition Root

Responsibility:
Defines dependency wiring for the Sweeps feature: the process-pool executor, the
SQLAlchemy sweep repository and the three interactors.

Dependency constraints:
- May depend on all inner layers (infra, features, core).
- Must not be imported by any inner layer.
"""

from __future__ import annotations

import logging

from sqlalchemy.orm import Session

from features.sweeps.presenters import (
    SharpSearchPresenter,
    SweepRecordPresenter,
    SweepSummaryPresenter,
)
from features.sweeps.use_cases import SharpExampleFinder, SweepLister, SweepRunner
from infra.db.sweeps.repo import SweepRepo
from infra.workers.pool import ChunkExecutor
from root.di._shared import ContextDep
from root.logging_setup import LoggerDep


def build_sweep_runner(*, session: Session, logger: logging.Logger) -> SweepRunner:
    return SweepRunner(
        executor=ChunkExecutor(),
        repo=SweepRepo(session=session),
        presenter=SweepSummaryPresenter(),
        logger=logger,
    )


def build_sweep_lister(*, session: Session, logger: logging.Logger) -> SweepLister:
    return SweepLister(
        repo=SweepRepo(session=session),
        presenter=SweepRecordPresenter(),
        logger=logger,
    )


def build_sharp_example_finder(*, logger: logging.Logger) -> SharpExampleFinder:
    return SharpExampleFinder(presenter=SharpSearchPresenter(), logger=logger)


def get_sweep_runner(ctx: ContextDep) -> SweepRunner:
    return build_sweep_runner(session=ctx.session, logger=ctx.logger)


def get_sweep_lister(ctx: ContextDep) -> SweepLister:
    return build_sweep_lister(session=ctx.session, logger=ctx.logger)


def get_sharp_example_finder(logger: LoggerDep) -> SharpExampleFinder:
    return build_sharp_example_finder(logger=logger)
