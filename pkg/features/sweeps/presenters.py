"""
Ring: Interface Adapters (Presenters)

Responsibility:
Shapes sweep aggregates, sharpness-search results and stored sweep records into the
Sweeps feature's response documents.

Dependency constraints:
- Must not import from any other feature!
- May depend on the Domain layer (core/) and this feature's ports and schemas.
"""

from __future__ import annotations

from collections.abc import Sequence

from core.entities.sweep import SweepRecord
from core.values.objects import ChunkResult, SharpSearchResult, SweepViolation
from features.sweeps.ports import (
    SharpExampleFinderPort,
    SweepListerPort,
    SweepRunnerPort,
)
from features.sweeps.schemas import (
    SharpSearchResponse,
    SharpWitnessResponse,
    SweepRecordResponse,
    SweepSummaryResponse,
    ViolationResponse,
)


def _violation(v: SweepViolation) -> ViolationResponse:
    return ViolationResponse(
        n=v.node_count,
        edges=list(v.edges),
        source=v.source,
        check=v.check,
        detail=v.detail,
        trace=dict(v.trace),
    )


class SweepSummaryPresenter(SweepRunnerPort.Out):
    def present(self, *, n_max: int, total: ChunkResult) -> SweepSummaryResponse:
        return SweepSummaryResponse(
            n_max=n_max,
            graphs=total.graphs,
            runs=total.runs,
            bipartite_runs=total.bipartite_runs,
            violations=[
                _violation(v) for v in sorted(total.violations, key=SweepViolation.sort_key)
            ],
            j_minus_e_histogram={
                str(excess): total.histogram[excess] for excess in sorted(total.histogram)
            },
            max_j=total.max_j,
        )


class SharpSearchPresenter(SharpExampleFinderPort.Out):
    def present(self, result: SharpSearchResult) -> SharpSearchResponse:
        witness = result.witness
        return SharpSearchResponse(
            witness=(
                None
                if witness is None
                else SharpWitnessResponse(
                    n=witness.node_count,
                    edges=list(witness.edges),
                    source=witness.source,
                    eccentricity=witness.eccentricity,
                    diameter=witness.diameter,
                    termination_round=witness.termination_round,
                )
            ),
            frontier=list(result.frontier),
            graphs_examined=result.graphs_examined,
        )


class SweepRecordPresenter(SweepListerPort.Out):
    def present(self, records: Sequence[SweepRecord]) -> list[SweepRecordResponse]:
        return [
            SweepRecordResponse(
                id=str(record.id),
                created_at=record.created_at,
                n_max=record.n_max,
                graphs=record.graphs,
                runs=record.runs,
                bipartite_runs=record.bipartite_runs,
                max_j=record.max_j,
                violations=len(record.violations),
            )
            for record in records
        ]
