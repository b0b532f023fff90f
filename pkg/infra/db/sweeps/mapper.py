"""
Ring: Infrastructure (Database / ORM Adapters)

Responsibility:
Maps between sweep ORM rows and the SweepRecord domain entity. Edges are stored as
JSON lists and come back as tuples of NodeId pairs.

Dependency constraints:
- Must not import from the application layer (features/*).
- May depend on the Domain layer (core/) and infrastructure models.
"""

from __future__ import annotations

from core.entities.sweep import SweepRecord
from core.values.custom_types import NodeId, SweepId
from core.values.enums import SweepCheckName
from core.values.objects import SweepViolation
from infra.db.sweeps.model import SweepModel, SweepViolationModel


def to_entity(model: SweepModel) -> SweepRecord:
    return SweepRecord(
        id=SweepId(model.id),
        created_at=model.created_at,
        n_max=model.n_max,
        graphs=model.graphs,
        runs=model.runs,
        bipartite_runs=model.bipartite_runs,
        max_j=model.max_j,
        violations=tuple(_violation_entity(row) for row in model.violations),
    )


def to_model(entity: SweepRecord) -> SweepModel:
    return SweepModel(
        id=str(entity.id),
        created_at=entity.created_at,
        n_max=entity.n_max,
        graphs=entity.graphs,
        runs=entity.runs,
        bipartite_runs=entity.bipartite_runs,
        max_j=entity.max_j,
        violations=[
            _violation_model(position, v) for position, v in enumerate(entity.violations)
        ],
    )


def _violation_entity(row: SweepViolationModel) -> SweepViolation:
    return SweepViolation(
        node_count=row.node_count,
        edges=tuple((NodeId(u), NodeId(v)) for u, v in row.edges),
        source=NodeId(row.source),
        check=SweepCheckName(row.check),
        detail=row.detail,
        trace=dict(row.trace),
    )


def _violation_model(position: int, v: SweepViolation) -> SweepViolationModel:
    return SweepViolationModel(
        position=position,
        node_count=v.node_count,
        edges=[[int(u), int(w)] for u, w in v.edges],
        source=int(v.source),
        check=v.check.value,
        detail=v.detail,
        trace=dict(v.trace),
    )
