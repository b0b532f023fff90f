"""
Ring: Application (Use Case Boundaries / Ports)

Responsibility:
Defines the port interfaces for the Sweeps feature.

This module contains:
- SweepRunnerPort: exhaustive verification over every connected labelled graph (In/Out).
- SharpExampleFinderPort: search for a graph attaining the upper termination bound.
- SweepListerPort: list stored sweep records.
- SweepExecutorPort: secondary port running sweep work units, possibly in parallel.
- SweepRepoPort: secondary port storing sweep records and their counterexamples.

Dependency constraints:
- Must not import from any other feature!
- Must not depend on infrastructure implementations or frameworks directly!
- May depend on the Domain layer (core/) and features/_shared.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from typing import TYPE_CHECKING, Protocol

from core.entities.sweep import SweepRecord
from core.values.objects import ChunkResult, SharpSearchResult
from features._shared.ports import IOPorts


class SweepRunnerPort(IOPorts):
    """
    Use case: run the exhaustive sweep up to n_max nodes.
    """

    class In(Protocol):
        def execute(self, *, request: "SweepRequest") -> "SweepSummaryResponse":
            raise NotImplementedError

    class Out(Protocol):
        def present(self, *, n_max: int, total: ChunkResult) -> "SweepSummaryResponse":
            raise NotImplementedError


class SharpExampleFinderPort(IOPorts):
    """
    Use case: find the smallest graph whose flooding lasts exactly e + d + 1 rounds.
    """

    class In(Protocol):
        def execute(self, *, request: "SharpRequest") -> "SharpSearchResponse":
            raise NotImplementedError

    class Out(Protocol):
        def present(self, result: SharpSearchResult) -> "SharpSearchResponse":
            raise NotImplementedError


class SweepListerPort(IOPorts):
    """
    Use case: list the stored sweep records, oldest first.
    """

    class In(Protocol):
        def execute(self) -> "list[SweepRecordResponse]":
            raise NotImplementedError

    class Out(Protocol):
        def present(self, records: Sequence[SweepRecord]) -> "list[SweepRecordResponse]":
            raise NotImplementedError


class SweepExecutorPort(Protocol):
    """
    Runs sweep work units (n, lo, hi) and yields their results in unit order.
    """

    def map(
        self, units: Sequence[tuple[int, int, int]], *, jobs: int
    ) -> Iterator[ChunkResult]:
        raise NotImplementedError


class SweepRepoPort(Protocol):
    """
    Persistence port for sweep records.
    Implemented by infrastructure adapters.
    """

    def save(self, record: SweepRecord) -> None:
        raise NotImplementedError

    def list_all(self) -> list[SweepRecord]:
        raise NotImplementedError


if TYPE_CHECKING:
    from features.sweeps.schemas import (
        SharpRequest,
        SharpSearchResponse,
        SweepRecordResponse,
        SweepRequest,
        SweepSummaryResponse,
    )
