"""
Ring: Infrastructure (Persistence / Repositories)

Responsibility:
Implements SweepRepoPort using SQLAlchemy. Records are append-only: a sweep is stored
once and never updated.

Dependency constraints:
- Must depend on application ports (features/sweeps/ports) to implement them.
- May depend on the Domain layer (core/) and infrastructure tooling.
"""

from __future__ import annotations

from sqlalchemy import select
from sqlalchemy.orm import Session, selectinload

from core.entities.sweep import SweepRecord
from features.sweeps.ports import SweepRepoPort
from infra.db.sweeps.mapper import to_entity, to_model
from infra.db.sweeps.model import SweepModel


class SweepRepo(SweepRepoPort):
    """
    SQLAlchemy-backed SweepRepo operating within a provided Session.
    Transaction scoping is managed by infra/db/session.session_scope().
    """

    def __init__(self, *, session: Session) -> None:
        self._session = session

    def save(self, record: SweepRecord) -> None:
        self._session.add(to_model(record))
        self._session.flush()

    def list_all(self) -> list[SweepRecord]:
        stmt = (
            select(SweepModel)
            .options(selectinload(SweepModel.violations))
            .order_by(SweepModel.created_at, SweepModel.id)
        )
        return [to_entity(model) for model in self._session.execute(stmt).scalars()]
