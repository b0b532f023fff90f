"""
Ring: Delivery (Interface Adapters / HTTP Boundary)

Responsibility:
Defines the request and response schemas of the Sweeps feature.

- SweepSummaryResponse: { n_max, graphs, runs, bipartite_runs, violations,
  j_minus_e_histogram, max_j }. Histogram keys are the decimal excess j - e.
- SharpSearchResponse: the witness (or null), the attained (e, d) frontier and the
  number of graphs examined.
- SweepRecordResponse: one stored sweep, with its identity and creation time.

Parameter ranges are checked by the domain, so out-of-range values surface as
SweepInputError rather than as schema validation failures.

Dependency constraints:
- Must not import from any other feature!
- May depend on shared application contracts in features/_shared.
"""

from __future__ import annotations

from datetime import datetime
from typing import Any

from pydantic import BaseModel, Field

from core.values.constants import SHARP_SEARCH_MAX_NODES
from core.values.enums import SweepCheckName
from features._shared.custom_types import ArcPair


class SweepRequest(BaseModel):
    n_max: int
    jobs: int = Field(default=1, ge=1)


class ViolationResponse(BaseModel):
    n: int
    edges: list[ArcPair]
    source: int
    check: SweepCheckName
    detail: str
    trace: dict[str, Any]


class SweepSummaryResponse(BaseModel):
    n_max: int
    graphs: int
    runs: int
    bipartite_runs: int
    violations: list[ViolationResponse]
    j_minus_e_histogram: dict[str, int]
    max_j: int

    @property
    def clean(self) -> bool:
        return not self.violations


class SharpRequest(BaseModel):
    n_max: int = SHARP_SEARCH_MAX_NODES
    target_eccentricity: int | None = Field(default=None, ge=0)
    target_diameter: int | None = Field(default=None, ge=1)
    strict: bool = True


class SharpWitnessResponse(BaseModel):
    n: int
    edges: list[ArcPair]
    source: int
    eccentricity: int
    diameter: int
    termination_round: int


class SharpSearchResponse(BaseModel):
    witness: SharpWitnessResponse | None
    frontier: list[tuple[int, int]]
    graphs_examined: int


class SweepRecordResponse(BaseModel):
    id: str
    created_at: datetime
    n_max: int
    graphs: int
    runs: int
    bipartite_runs: int
    max_j: int
    violations: int
