"""
Ring: Delivery (Interface Adapters / HTTP Boundary)

Responsibility:
Defines the request and response schemas of the Runs feature. The same documents are
printed by the CLI and returned by the HTTP API.

Document shapes:
- SyncTraceResponse: { source, rounds, round_sets, termination_round, message_count }
  where rounds[i] lists the arcs [from, to] sent in round i + 1, sorted.
- AsyncRunResponse: the same keys computed from delivered messages, plus the in-flight
  messages [from, to, age] at the start of every round, the held arcs of every round,
  and a verdict { outcome, round, first_seen, period, replay_ok }.

Dependency constraints:
- Must not import from any other feature!
- May depend on shared application contracts in features/_shared.
"""

from __future__ import annotations

from pydantic import BaseModel, Field, field_validator

from core.values.constants import DEFAULT_HOLD_CAP, EXPLORATION_MAX_STATES
from core.values.enums import AsyncOutcome
from features._shared.custom_types import ArcPair, MessageTriple
from features._shared.schemas import GraphDocument, GraphSource

SYNC_MODE = "sync"
ASYNC_PREFIX = "async"
DEFAULT_ADVERSARY = "zero"


class RunMode(BaseModel):
    synchronous: bool
    adversary: str | None = None
    hold_cap: int = DEFAULT_HOLD_CAP


def parse_mode(text: str) -> RunMode:
    """
    Parse `sync`, `async`, `async:NAME` or `async:NAME,HOLD_CAP`.
    """
    text = text.strip()
    if text == SYNC_MODE:
        return RunMode(synchronous=True)

    kind, _, rest = text.partition(":")
    if kind != ASYNC_PREFIX:
        raise ValueError(f"mode must be 'sync' or 'async:NAME[,hold_cap]', got {text!r}")
    if not rest:
        return RunMode(synchronous=False, adversary=DEFAULT_ADVERSARY)

    name, _, cap = rest.partition(",")
    if not name:
        raise ValueError(f"adversary name missing in mode {text!r}")
    if not cap:
        return RunMode(synchronous=False, adversary=name)
    try:
        hold_cap = int(cap)
    except ValueError as exc:
        raise ValueError(f"hold_cap must be an integer, got {cap!r}") from exc
    if hold_cap < 1:
        raise ValueError(f"hold_cap must be at least 1, got {hold_cap}")
    return RunMode(synchronous=False, adversary=name, hold_cap=hold_cap)


class RunRequest(BaseModel):
    graph: GraphSource
    source: str
    mode: str = SYNC_MODE
    max_rounds: int | None = Field(default=None, ge=1)
    seed: int = Field(default=0, ge=0)

    @field_validator("mode")
    @classmethod
    def _valid_mode(cls, value: str) -> str:
        parse_mode(value)
        return value.strip()

    @property
    def run_mode(self) -> RunMode:
        return parse_mode(self.mode)


class SyncTraceResponse(GraphDocument):
    source: int
    rounds: list[list[ArcPair]]
    round_sets: list[list[int]]
    termination_round: int
    message_count: int


class VerdictResponse(BaseModel):
    outcome: AsyncOutcome
    round: int
    first_seen: int | None = None
    period: int | None = None
    replay_ok: bool | None = None


class AsyncRunResponse(GraphDocument):
    source: int
    adversary: str
    hold_cap: int
    rounds: list[list[ArcPair]]
    round_sets: list[list[int]]
    termination_round: int
    message_count: int
    in_flight: list[list[MessageTriple]]
    holds: list[list[ArcPair]]
    verdict: VerdictResponse


class ExploreRequest(BaseModel):
    graph: GraphSource
    source: str
    hold_cap: int = Field(default=DEFAULT_HOLD_CAP, ge=1)
    max_states: int = Field(default=EXPLORATION_MAX_STATES, ge=1)


class ExplorationResponse(GraphDocument):
    source: int
    hold_cap: int
    states: int
    can_cycle: bool
    witness_cycle: list[list[MessageTriple]]
    worst_case_round: int | None = None
