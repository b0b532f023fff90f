"""
Ring: Infrastructure (Scheduling Adversaries)

Responsibility:
Provides a randomised adversary for the round-asynchronous engine: every message that
may still be held is held with a fixed probability, drawn from numpy's PCG64.

Design intent:
The draws depend on the sequence of past decisions, not only on the configuration, so
the adversary declares itself non-deterministic. Its runs can only end Terminated or
Exhausted; the engine never certifies a cycle for it.

Dependency constraints:
- Must not import from the application layer (features/*).
- May depend on the Domain layer (core/) and numpy.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from core.entities.graph import Graph
from core.values.objects import AdversaryDecision, AsyncConfiguration, AsyncRound


class RandomDelayAdversary:
    name = "random"
    deterministic = False

    def __init__(self, *, seed: int, hold_probability: float = 0.5, hold_cap: int = 1) -> None:
        self._rng = np.random.Generator(np.random.PCG64(seed))
        self._hold_probability = hold_probability
        self._hold_cap = hold_cap

    def decide(
        self,
        *,
        graph: Graph,
        round_index: int,
        configuration: AsyncConfiguration,
        history: Sequence[AsyncRound],
    ) -> AdversaryDecision:
        holdable = [
            m.arc for m in configuration.sorted_messages() if m.age < self._hold_cap
        ]
        draws = self._rng.random(len(holdable))
        return AdversaryDecision(
            frozenset(
                arc for arc, draw in zip(holdable, draws) if draw < self._hold_probability
            )
        )
