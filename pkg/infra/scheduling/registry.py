"""
Ring: Infrastructure (Scheduling Adversaries)

Responsibility:
Implements AdversaryRegistryPort: turns an adversary name from a run request into a
ready adversary. Built-in names are `zero`, `fig6` and `random`.

Dependency constraints:
- Must depend on application ports (features/runs/ports) to implement them.
- May depend on the Domain layer (core/) and the other scheduling adapters.
"""

from __future__ import annotations

from core.services.async_flooding import Adversary, ZeroDelayAdversary, fig6_adversary
from features.runs.ports import AdversaryRegistryPort
from infra.scheduling.random_adversary import RandomDelayAdversary

ADVERSARY_NAMES = ("fig6", "random", "zero")


class AdversaryRegistry(AdversaryRegistryPort):
    def names(self) -> tuple[str, ...]:
        return ADVERSARY_NAMES

    def build(self, name: str, *, seed: int, hold_cap: int) -> Adversary | None:
        if name == "zero":
            return ZeroDelayAdversary()
        if name == "fig6":
            return fig6_adversary()
        if name == "random":
            return RandomDelayAdversary(seed=seed, hold_cap=hold_cap)
        return None
