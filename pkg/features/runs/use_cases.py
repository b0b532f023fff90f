"""
Ring: Application (Use Case / Interactors)

Responsibility:
Implements the run-related use cases:
- FloodRunner: load a graph, resolve the source, run synchronous flooding or the
  round-asynchronous engine against a named adversary, and present the outcome.
- ScheduleExplorer: explore every fair schedule of the round-asynchronous model.

They define:
- The translation of domain errors into application-level errors.
- What gets logged for each run.

InvariantViolationError is never translated: a broken engine invariant is not a bad
request, and the delivery layer reports it as such.

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
from core.services.async_flooding import Adversary, explore_schedules, run_async
from core.services.flooding import run_sync
from core.values.constants import ASYNC_DEFAULT_MAX_ROUNDS
from core.values.custom_types import NodeId
from core.values.errors import (
    DisconnectedGraphError,
    ExplorationLimitError,
    InvalidSourceError,
    InvariantViolationError,
    RoundBudgetExhaustedError,
    UnfairScheduleError,
)
from core.values.objects import AsyncVerdict, ScheduleExploration
from features._shared.loading import load_graph_or_raise
from features._shared.ports import GraphLoaderPort
from features.runs.errors import RunBudgetError, RunGraphError, RunInputError
from features.runs.ports import (
    AdversaryRegistryPort,
    FloodRunnerPort,
    ScheduleExplorerPort,
)
from features.runs.schemas import RunMode

if TYPE_CHECKING:
    from features.runs.schemas import (
        AsyncRunResponse,
        ExplorationResponse,
        ExploreRequest,
        RunRequest,
        SyncTraceResponse,
    )


def _resolve_source_or_raise(
    graph: Graph, token: str, *, logger: logging.Logger, event: str
) -> NodeId:
    try:
        return graph.resolve(token)
    except InvalidSourceError as exc:
        logger.info("%s_failed_source source=%s error=%s", event, token, exc)
        raise RunInputError(str(exc)) from exc


class FloodRunner(FloodRunnerPort.In):
    def __init__(
        self,
        *,
        loader: GraphLoaderPort,
        adversaries: AdversaryRegistryPort,
        presenter: FloodRunnerPort.Out,
        logger: logging.Logger,
    ) -> None:
        self._loader = loader
        self._adversaries = adversaries
        self._presenter = presenter
        self._logger = logger

    def execute(self, *, request: RunRequest) -> SyncTraceResponse | AsyncRunResponse:
        self._logger.info(
            "flood_run_started graph=%s source=%s mode=%s",
            request.graph.describe(),
            request.source,
            request.mode,
        )

        graph = load_graph_or_raise(
            self._loader,
            request.graph,
            logger=self._logger,
            event="flood_run",
            invalid=RunInputError,
        )
        source = _resolve_source_or_raise(
            graph, request.source, logger=self._logger, event="flood_run"
        )
        mode = request.run_mode

        if mode.synchronous:
            trace = self._run_sync_or_raise(graph, source, request.max_rounds)
            self._logger.info(
                "flood_run_succeeded mode=sync source=%s termination_round=%s messages=%s",
                source,
                trace.termination_round,
                trace.message_count,
            )
            return self._presenter.present_sync(graph, trace)

        adversary = self._build_adversary_or_raise(mode, seed=request.seed)
        verdict = self._run_async_or_raise(
            graph,
            source,
            adversary,
            max_rounds=request.max_rounds or ASYNC_DEFAULT_MAX_ROUNDS,
            hold_cap=mode.hold_cap,
        )
        self._logger.info(
            "flood_run_succeeded mode=async adversary=%s source=%s outcome=%s round=%s",
            adversary.name,
            source,
            verdict.outcome.value,
            verdict.round,
        )
        return self._presenter.present_async(
            graph, verdict, adversary=adversary.name, hold_cap=mode.hold_cap
        )

    def _run_sync_or_raise(
        self, graph: Graph, source: NodeId, max_rounds: int | None
    ) -> Trace:
        try:
            return run_sync(graph, source, max_rounds)
        except DisconnectedGraphError as exc:
            self._logger.info("flood_run_failed_disconnected error=%s", exc)
            raise RunGraphError(str(exc)) from exc
        except RoundBudgetExhaustedError as exc:
            self._logger.info(
                "flood_run_exhausted source=%s max_rounds=%s", source, max_rounds
            )
            raise RunBudgetError(str(exc)) from exc
        except InvariantViolationError as exc:
            self._logger.error(
                "flood_run_failed_invariant source=%s error=%s", source, exc
            )
            raise

    def _build_adversary_or_raise(self, mode: RunMode, *, seed: int) -> Adversary:
        adversary = self._adversaries.build(
            mode.adversary or "", seed=seed, hold_cap=mode.hold_cap
        )
        if adversary is None:
            self._logger.info("flood_run_failed_adversary name=%s", mode.adversary)
            raise RunInputError(
                f"Unknown adversary {mode.adversary!r}; "
                f"expected one of {', '.join(self._adversaries.names())}"
            )
        return adversary

    def _run_async_or_raise(
        self,
        graph: Graph,
        source: NodeId,
        adversary: Adversary,
        *,
        max_rounds: int,
        hold_cap: int,
    ) -> AsyncVerdict:
        try:
            return run_async(
                graph, source, adversary, max_rounds=max_rounds, hold_cap=hold_cap
            )
        except DisconnectedGraphError as exc:
            self._logger.info("flood_run_failed_disconnected error=%s", exc)
            raise RunGraphError(str(exc)) from exc
        except UnfairScheduleError as exc:
            self._logger.info(
                "flood_run_failed_unfair adversary=%s error=%s", adversary.name, exc
            )
            raise RunInputError(str(exc)) from exc


class ScheduleExplorer(ScheduleExplorerPort.In):
    def __init__(
        self,
        *,
        loader: GraphLoaderPort,
        presenter: ScheduleExplorerPort.Out,
        logger: logging.Logger,
    ) -> None:
        self._loader = loader
        self._presenter = presenter
        self._logger = logger

    def execute(self, *, request: ExploreRequest) -> ExplorationResponse:
        self._logger.info(
            "schedule_explore_started graph=%s source=%s hold_cap=%s",
            request.graph.describe(),
            request.source,
            request.hold_cap,
        )

        graph = load_graph_or_raise(
            self._loader,
            request.graph,
            logger=self._logger,
            event="schedule_explore",
            invalid=RunInputError,
        )
        source = _resolve_source_or_raise(
            graph, request.source, logger=self._logger, event="schedule_explore"
        )
        exploration = self._explore_or_raise(graph, source, request)

        self._logger.info(
            "schedule_explore_succeeded states=%s can_cycle=%s worst_case_round=%s",
            exploration.states,
            exploration.can_cycle,
            exploration.worst_case_round,
        )
        return self._presenter.present(
            graph, exploration, source=int(source), hold_cap=request.hold_cap
        )

    def _explore_or_raise(
        self, graph: Graph, source: NodeId, request: ExploreRequest
    ) -> ScheduleExploration:
        try:
            return explore_schedules(
                graph,
                source,
                hold_cap=request.hold_cap,
                max_states=request.max_states,
            )
        except DisconnectedGraphError as exc:
            self._logger.info("schedule_explore_failed_disconnected error=%s", exc)
            raise RunGraphError(str(exc)) from exc
        except ExplorationLimitError as exc:
            self._logger.info("schedule_explore_failed_limit error=%s", exc)
            raise RunInputError(str(exc)) from exc
