"""
Ring: Application (Use Case Boundaries / Ports)

Responsibility:
Defines the port interfaces for the Runs feature.

This module contains:
- FloodRunnerPort: execute one synchronous or round-asynchronous flooding run (In/Out).
- ScheduleExplorerPort: explore every fair adversary schedule from a source (In/Out).
- AdversaryRegistryPort: secondary port resolving adversary names, implemented by
  infrastructure.

Dependency constraints:
- Must not import from any other feature!
- Must not depend on infrastructure implementations or frameworks directly!
- May depend on the Domain layer (core/) and features/_shared.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Protocol

from core.entities.graph import Graph
from core.entities.trace import Trace
from core.services.async_flooding import Adversary
from core.values.objects import AsyncVerdict, ScheduleExploration
from features._shared.ports import IOPorts


class FloodRunnerPort(IOPorts):
    """
    Use case: flood a graph from one source and report the trace or the verdict.
    """

    class In(Protocol):
        def execute(
            self, *, request: "RunRequest"
        ) -> "SyncTraceResponse | AsyncRunResponse":
            raise NotImplementedError

    class Out(Protocol):
        def present_sync(self, graph: Graph, trace: Trace) -> "SyncTraceResponse":
            raise NotImplementedError

        def present_async(
            self, graph: Graph, verdict: AsyncVerdict, *, adversary: str, hold_cap: int
        ) -> "AsyncRunResponse":
            raise NotImplementedError


class ScheduleExplorerPort(IOPorts):
    """
    Use case: decide whether any fair adversary can keep the message alive forever.
    """

    class In(Protocol):
        def execute(self, *, request: "ExploreRequest") -> "ExplorationResponse":
            raise NotImplementedError

    class Out(Protocol):
        def present(
            self, graph: Graph, exploration: ScheduleExploration, *, source: int, hold_cap: int
        ) -> "ExplorationResponse":
            raise NotImplementedError


class AdversaryRegistryPort(Protocol):
    """
    Resolves an adversary by name. Returns None for unknown names.
    """

    def names(self) -> tuple[str, ...]:
        raise NotImplementedError

    def build(self, name: str, *, seed: int, hold_cap: int) -> Adversary | None:
        raise NotImplementedError


if TYPE_CHECKING:
    from features.runs.schemas import (
        AsyncRunResponse,
        ExplorationResponse,
        ExploreRequest,
        RunRequest,
        SyncTraceResponse,
    )
