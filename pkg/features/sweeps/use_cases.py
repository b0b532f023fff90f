"""
Ring: Application (Use Case / Interactors)

Responsibility:
Implements the sweep-related use cases:
- SweepRunner: splits the enumeration of connected labelled graphs into work units,
  hands them to the executor, merges the partial results in unit order and stores a
  record of the sweep with every counterexample it found.
- SharpExampleFinder: runs the sharpness search.
- SweepLister: lists stored sweep records.

Violations are findings, not failures: they are logged at WARNING and reported in the
summary, and the sweep still completes and is stored.

Dependency constraints:
- Must not import from any other feature!
- Must not depend on infrastructure implementations or frameworks directly.
- May depend on the Domain layer (core/) and this feature's ports, errors, and schemas.
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

from core.entities.sweep import SweepRecord
from core.services.enumeration import chunk_bounds, find_sharp_example
from core.utils.id import new_id
from core.utils.time import utc_now
from core.values.custom_types import SweepId
from core.values.errors import DomainError
from core.values.objects import ChunkResult, SharpSearchResult, SweepViolation
from features.sweeps.errors import SweepInputError
from features.sweeps.ports import (
    SharpExampleFinderPort,
    SweepExecutorPort,
    SweepListerPort,
    SweepRepoPort,
    SweepRunnerPort,
)

if TYPE_CHECKING:
    from features.sweeps.schemas import (
        SharpRequest,
        SharpSearchResponse,
        SweepRecordResponse,
        SweepRequest,
        SweepSummaryResponse,
    )


class SweepRunner(SweepRunnerPort.In):
    def __init__(
        self,
        *,
        executor: SweepExecutorPort,
        repo: SweepRepoPort,
        presenter: SweepRunnerPort.Out,
        logger: logging.Logger,
    ) -> None:
        self._executor = executor
        self._repo = repo
        self._presenter = presenter
        self._logger = logger

    def execute(self, *, request: SweepRequest) -> SweepSummaryResponse:
        units = self._units_or_raise(request.n_max)
        self._logger.info(
            "sweep_started n_max=%s jobs=%s units=%s",
            request.n_max,
            request.jobs,
            len(units),
        )

        total = ChunkResult()
        for (n, lo, hi), part in zip(units, self._executor.map(units, jobs=request.jobs)):
            self._logger.debug(
                "sweep_chunk_completed n=%s masks=%s-%s graphs=%s runs=%s",
                n,
                lo,
                hi,
                part.graphs,
                part.runs,
            )
            for violation in part.violations:
                self._logger.warning(
                    "sweep_violation_found n=%s edges=%s source=%s check=%s",
                    violation.node_count,
                    violation.edges,
                    violation.source,
                    violation.check.value,
                )
            total = total.merge(part)

        self._save_record(request.n_max, total)

        self._logger.info(
            "sweep_succeeded n_max=%s graphs=%s runs=%s violations=%s max_j=%s",
            request.n_max,
            total.graphs,
            total.runs,
            len(total.violations),
            total.max_j,
        )
        return self._presenter.present(n_max=request.n_max, total=total)

    def _units_or_raise(self, n_max: int) -> list[tuple[int, int, int]]:
        try:
            return chunk_bounds(n_max)
        except DomainError as exc:
            self._logger.info("sweep_failed_validation n_max=%s error=%s", n_max, exc)
            raise SweepInputError(str(exc)) from exc

    def _save_record(self, n_max: int, total: ChunkResult) -> None:
        record = SweepRecord(
            id=SweepId(new_id()),
            created_at=utc_now(),
            n_max=n_max,
            graphs=total.graphs,
            runs=total.runs,
            bipartite_runs=total.bipartite_runs,
            max_j=total.max_j,
            violations=tuple(sorted(total.violations, key=SweepViolation.sort_key)),
        )
        self._repo.save(record)
        self._logger.info("sweep_record_saved sweep_id=%s", record.id)


class SharpExampleFinder(SharpExampleFinderPort.In):
    def __init__(
        self,
        *,
        presenter: SharpExampleFinderPort.Out,
        logger: logging.Logger,
    ) -> None:
        self._presenter = presenter
        self._logger = logger

    def execute(self, *, request: SharpRequest) -> SharpSearchResponse:
        self._logger.info(
            "sharp_search_started n_max=%s target_e=%s target_d=%s strict=%s",
            request.n_max,
            request.target_eccentricity,
            request.target_diameter,
            request.strict,
        )

        result = self._search_or_raise(request)

        if result.witness is None:
            self._logger.info(
                "sharp_search_exhausted graphs=%s frontier=%s",
                result.graphs_examined,
                list(result.frontier),
            )
        else:
            self._logger.info(
                "sharp_search_succeeded n=%s m=%s source=%s e=%s d=%s j=%s",
                result.witness.node_count,
                len(result.witness.edges),
                result.witness.source,
                result.witness.eccentricity,
                result.witness.diameter,
                result.witness.termination_round,
            )
        return self._presenter.present(result)

    def _search_or_raise(self, request: SharpRequest) -> SharpSearchResult:
        try:
            return find_sharp_example(
                request.n_max,
                target_eccentricity=request.target_eccentricity,
                target_diameter=request.target_diameter,
                strict=request.strict,
            )
        except DomainError as exc:
            self._logger.info(
                "sharp_search_failed_validation n_max=%s error=%s", request.n_max, exc
            )
            raise SweepInputError(str(exc)) from exc


class SweepLister(SweepListerPort.In):
    def __init__(
        self,
        *,
        repo: SweepRepoPort,
        presenter: SweepListerPort.Out,
        logger: logging.Logger,
    ) -> None:
        self._repo = repo
        self._presenter = presenter
        self._logger = logger

    def execute(self) -> list[SweepRecordResponse]:
        records = self._repo.list_all()
        self._logger.info("sweep_list_succeeded count=%s", len(records))
        return self._presenter.present(records)
