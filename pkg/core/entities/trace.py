"""
Ring: Domain (Enterprise Business Rules)

Responsibility:
Defines the Trace entity: the complete record of one flooding execution from a single
source, round by round, with the derived round-sets.

Indexing:
- rounds[i] holds the transmissions of round i + 1; round 1 is the source's first send.
- R_0 is the singleton source; R_i (i >= 1) are the receivers of rounds[i - 1].
- termination_round is the largest i with R_i non-empty.

Dependency constraints:
- Must only depend on other core modules.
- Must never import from features/, infra/, or root/.

Usage:
- Produced by the synchronous engine and projected from asynchronous runs.
- Consumed by the verifiers and presented as JSON by the application layer.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from core.values.custom_types import NodeId
from core.values.objects import Configuration


@dataclass(frozen=True, slots=True)
class Trace:
    source: NodeId
    node_count: int
    rounds: tuple[Configuration, ...]
    round_sets: tuple[frozenset[NodeId], ...] = field(init=False, compare=False)
    _occurrences: tuple[tuple[int, ...], ...] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        round_sets = (frozenset({self.source}),) + tuple(
            configuration.receivers() for configuration in self.rounds
        )
        occurrences: list[list[int]] = [[] for _ in range(self.node_count)]
        for index, round_set in enumerate(round_sets):
            for node in round_set:
                occurrences[node].append(index)

        object.__setattr__(self, "round_sets", round_sets)
        object.__setattr__(
            self, "_occurrences", tuple(tuple(rs) for rs in occurrences)
        )

    @property
    def termination_round(self) -> int:
        for index in range(len(self.round_sets) - 1, -1, -1):
            if self.round_sets[index]:
                return index
        return 0

    @property
    def message_count(self) -> int:
        return sum(len(configuration) for configuration in self.rounds)

    def round_set(self, index: int) -> frozenset[NodeId]:
        if 0 <= index < len(self.round_sets):
            return self.round_sets[index]
        return frozenset()

    def transmissions(self, round_number: int) -> Configuration:
        """
        Transmissions of round `round_number` (1-based); empty outside the record.
        """
        if 1 <= round_number <= len(self.rounds):
            return self.rounds[round_number - 1]
        return Configuration()

    def occurrences(self, node: NodeId) -> tuple[int, ...]:
        return self._occurrences[node]

    def first_receipt(self, node: NodeId) -> int | None:
        found = self._occurrences[node]
        return found[0] if found else None

    def second_receipt(self, node: NodeId) -> int | None:
        found = self._occurrences[node]
        return found[1] if len(found) > 1 else None

    def multiplicity(self) -> dict[NodeId, int]:
        return {
            NodeId(node): len(found) for node, found in enumerate(self._occurrences)
        }
