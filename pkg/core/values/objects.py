"""
Ring: Domain (Shared Kernel / Value Objects)

Responsibility:
Defines domain value objects: immutable facts produced and consumed by the flooding
engines and the verifiers. None of them has identity; equality is by value.

This module contains:
- Configuration: directed transmissions of one synchronous round.
- DistanceProfile, EcReport, BipartiteWitness: static graph oracles.
- InFlightMessage, AsyncConfiguration, AdversaryDecision, AsyncRound, AsyncVerdict,
  ScheduleExploration: the round-asynchronous model.
- ClassificationReport, LemmaCheck, LemmaAudit: verification results.
- SweepViolation, ChunkResult, SharpWitness, SharpSearchResult: sweep aggregates.

Dependency constraints:
- Must only depend on other domain modules and the Python standard library.
- Must never import from application (features/), infrastructure (infra/), or delivery (root/).
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from core.values.custom_types import Arc, Edge, NodeId
from core.values.enums import (
    AsyncOutcome,
    LemmaCheckName,
    MessageAction,
    SweepCheckName,
    TheoremApplied,
)


@dataclass(frozen=True, slots=True)
class Configuration:
    """
    Directed transmissions sent in one round. Arcs arriving at v are I(v, M).
    """

    arcs: frozenset[Arc] = frozenset()

    @classmethod
    def of(cls, arcs: Iterable[tuple[int, int]]) -> Configuration:
        return cls(frozenset((NodeId(u), NodeId(v)) for u, v in arcs))

    def is_empty(self) -> bool:
        return not self.arcs

    def receivers(self) -> frozenset[NodeId]:
        return frozenset(v for _, v in self.arcs)

    def senders_to(self, node: NodeId) -> frozenset[NodeId]:
        return frozenset(u for u, v in self.arcs if v == node)

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    def __len__(self) -> int:
        return len(self.arcs)


@dataclass(frozen=True, slots=True)
class DistanceProfile:
    source: NodeId
    dist: Mapping[NodeId, int]
    layers: tuple[frozenset[NodeId], ...]

    @property
    def eccentricity(self) -> int:
        return len(self.layers) - 1

    def layer(self, j: int) -> frozenset[NodeId]:
        if 0 <= j < len(self.layers):
            return self.layers[j]
        return frozenset()


@dataclass(frozen=True, slots=True)
class EcReport:
    source: NodeId
    ec_nodes: frozenset[NodeId]
    witness_edges: frozenset[Edge]

    def is_empty(self) -> bool:
        return not self.ec_nodes


@dataclass(frozen=True, slots=True)
class BipartiteWitness:
    """
    Either a proper 2-colouring (colour per node id) or an odd cycle as counter-witness.
    """

    bipartite: bool
    coloring: tuple[int, ...] | None = None
    odd_cycle: tuple[NodeId, ...] | None = None


@dataclass(frozen=True, slots=True, order=True)
class InFlightMessage:
    sender: NodeId
    receiver: NodeId
    age: int = 0

    @property
    def arc(self) -> Arc:
        return (self.sender, self.receiver)


@dataclass(frozen=True, slots=True)
class AsyncConfiguration:
    """
    Messages sent but not yet delivered, at the start of a round.
    """

    messages: frozenset[InFlightMessage] = frozenset()

    @classmethod
    def collapse(cls, messages: Iterable[InFlightMessage]) -> AsyncConfiguration:
        # One copy per arc; the oldest copy wins so the fairness clock keeps running.
        oldest: dict[Arc, InFlightMessage] = {}
        for message in messages:
            kept = oldest.get(message.arc)
            if kept is None or message.age > kept.age:
                oldest[message.arc] = message
        return cls(frozenset(oldest.values()))

    def is_empty(self) -> bool:
        return not self.messages

    def arcs(self) -> frozenset[Arc]:
        return frozenset(m.arc for m in self.messages)

    def toward(self, node: NodeId) -> list[InFlightMessage]:
        return sorted(m for m in self.messages if m.receiver == node)

    def sorted_messages(self) -> list[InFlightMessage]:
        return sorted(self.messages)

    def __len__(self) -> int:
        return len(self.messages)


@dataclass(frozen=True, slots=True)
class AdversaryDecision:
    held: frozenset[Arc] = frozenset()

    def action_for(self, arc: Arc) -> MessageAction:
        return MessageAction.HOLD if arc in self.held else MessageAction.DELIVER


@dataclass(frozen=True, slots=True)
class AsyncRound:
    index: int
    configuration: AsyncConfiguration
    delivered: tuple[InFlightMessage, ...]
    held: tuple[InFlightMessage, ...]

    def delivered_configuration(self) -> Configuration:
        return Configuration(frozenset(m.arc for m in self.delivered))


@dataclass(frozen=True, slots=True)
class AsyncVerdict:
    source: NodeId
    outcome: AsyncOutcome
    round: int
    rounds: tuple[AsyncRound, ...]
    first_seen: int | None = None
    period: int | None = None
    replay_ok: bool | None = None


@dataclass(frozen=True, slots=True)
class ScheduleExploration:
    states: int
    can_cycle: bool
    witness_cycle: tuple[AsyncConfiguration, ...] = ()
    worst_case_round: int | None = None


@dataclass(frozen=True, slots=True)
class ClassificationReport:
    source: NodeId
    bipartite: bool
    eccentricity: int
    diameter: int
    termination_round: int
    window_ok: bool
    theorem_applied: TheoremApplied

    @property
    def excess(self) -> int:
        return self.termination_round - self.eccentricity


@dataclass(frozen=True, slots=True)
class Counterexample:
    node: NodeId
    round: int
    message: str


@dataclass(frozen=True, slots=True)
class LemmaCheck:
    name: LemmaCheckName
    passed: bool
    counterexample: Counterexample | None = None


@dataclass(frozen=True, slots=True)
class LemmaAudit:
    source: NodeId
    checks: tuple[LemmaCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> list[LemmaCheck]:
        return [check for check in self.checks if not check.passed]


@dataclass(frozen=True, slots=True)
class SweepViolation:
    node_count: int
    edges: tuple[Edge, ...]
    source: NodeId
    check: SweepCheckName
    detail: str
    trace: Mapping[str, object] = field(default_factory=dict)

    def sort_key(self) -> tuple:
        return (self.node_count, self.edges, self.source, self.check.value)


@dataclass(frozen=True, slots=True)
class ChunkResult:
    """
    Partial sweep aggregate for one range of adjacency masks.
    """

    graphs: int = 0
    runs: int = 0
    bipartite_runs: int = 0
    max_j: int = 0
    histogram: Counter = field(default_factory=Counter)
    violations: tuple[SweepViolation, ...] = ()

    def merge(self, other: ChunkResult) -> ChunkResult:
        return ChunkResult(
            graphs=self.graphs + other.graphs,
            runs=self.runs + other.runs,
            bipartite_runs=self.bipartite_runs + other.bipartite_runs,
            max_j=max(self.max_j, other.max_j),
            histogram=self.histogram + other.histogram,
            violations=self.violations + other.violations,
        )


@dataclass(frozen=True, slots=True)
class SharpWitness:
    node_count: int
    edges: tuple[Edge, ...]
    source: NodeId
    eccentricity: int
    diameter: int
    termination_round: int


@dataclass(frozen=True, slots=True)
class SharpSearchResult:
    witness: SharpWitness | None
    frontier: tuple[tuple[int, int], ...]
    graphs_examined: int
