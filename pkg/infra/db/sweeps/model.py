"""
Ring: Infrastructure (Database / ORM Models)

Responsibility:
Defines the persistence models for sweep records: one row per sweep and one row per
counterexample, kept in the order the summary reports them.

Dependency constraints:
- Must not import from the application layer (features/*).
- May depend on infrastructure tooling (SQLAlchemy, DB session).
"""

from __future__ import annotations

from datetime import datetime
from typing import Any

from sqlalchemy import JSON, DateTime, ForeignKey, Integer, String, Text
from sqlalchemy.orm import Mapped, mapped_column, relationship

from infra.db.session import ORMBase


class SweepModel(ORMBase):
    """
    ORM model for sweeps.
    """

    __tablename__ = "sweeps"

    id: Mapped[str] = mapped_column(String, primary_key=True)
    created_at: Mapped[datetime] = mapped_column(
        DateTime(timezone=True), nullable=False
    )

    n_max: Mapped[int] = mapped_column(Integer, nullable=False)
    graphs: Mapped[int] = mapped_column(Integer, nullable=False)
    runs: Mapped[int] = mapped_column(Integer, nullable=False)
    bipartite_runs: Mapped[int] = mapped_column(Integer, nullable=False)
    max_j: Mapped[int] = mapped_column(Integer, nullable=False)

    violations: Mapped[list[SweepViolationModel]] = relationship(
        back_populates="sweep",
        cascade="all, delete-orphan",
        order_by="SweepViolationModel.position",
    )


class SweepViolationModel(ORMBase):
    """
    ORM model for sweep counterexamples.
    """

    __tablename__ = "sweep_violations"

    id: Mapped[int] = mapped_column(Integer, primary_key=True, autoincrement=True)
    sweep_id: Mapped[str] = mapped_column(ForeignKey("sweeps.id"), nullable=False)
    position: Mapped[int] = mapped_column(Integer, nullable=False)

    node_count: Mapped[int] = mapped_column(Integer, nullable=False)
    edges: Mapped[list[list[int]]] = mapped_column(JSON, nullable=False)
    source: Mapped[int] = mapped_column(Integer, nullable=False)
    check: Mapped[str] = mapped_column(String, nullable=False)
    detail: Mapped[str] = mapped_column(Text, nullable=False)
    trace: Mapped[dict[str, Any]] = mapped_column(JSON, nullable=False)

    sweep: Mapped[SweepModel] = relationship(back_populates="violations")
