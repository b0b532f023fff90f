"""
Ring: Domain (Enterprise Business Rules)

Responsibility:
Defines the SweepRecord entity: one completed exhaustive sweep as it is kept for later
inspection, with its totals and every counterexample it found.

Unlike the sweep summary, a record has identity and a creation time, so two sweeps with
identical results are still two records.

Dependency constraints:
- Must only depend on core modules and standard library types.
- Must never import from features/, infra/, or root/.

Usage:
- Created by the sweep use case once aggregation is complete.
- Persisted by infrastructure through the sweep repository port.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime

from core.values.custom_types import SweepId
from core.values.errors import DomainError
from core.values.objects import SweepViolation


@dataclass(frozen=True, slots=True)
class SweepRecord:
    id: SweepId
    created_at: datetime
    n_max: int
    graphs: int
    runs: int
    bipartite_runs: int
    max_j: int
    violations: tuple[SweepViolation, ...] = ()

    def __post_init__(self) -> None:
        if self.bipartite_runs > self.runs:
            raise DomainError("More bipartite runs than runs in a sweep record")

    @property
    def clean(self) -> bool:
        return not self.violations
