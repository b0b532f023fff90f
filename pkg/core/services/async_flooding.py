"""
Ring: Domain (Enterprise Business Rules)

Responsibility:
Executes Amnesiac Flooding in the round-asynchronous model. Rounds stay global, but an
adversary decides, for every message in flight, whether it is delivered this round or
held. Messages are never lost: a message whose age has reached the hold cap must be
delivered.

Round semantics:
- The messages pending at the start of round i are split into delivered and held.
- Every receiver merges all messages delivered to it this round into one I(v, M) and,
  in round i + 1, sends to N(v) minus I(v, M).
- Held messages age by one. Copies on the same arc collapse to one, oldest age kept.

Non-termination is certified only for adversaries that declare themselves
deterministic in the configuration: for those, a repeated round-start configuration
proves the execution repeats forever. The cycle is replayed once to confirm it.

Dependency constraints:
- May only depend on core entities, core services and core value objects.
- Must never import from features/, infra/, or root/.
"""

from __future__ import annotations

from collections.abc import Sequence
from itertools import combinations
from typing import Protocol

from core.entities.graph import Graph
from core.entities.trace import Trace
from core.services.oracles import require_connected
from core.utils.validators import require
from core.values.constants import (
    ASYNC_DEFAULT_MAX_ROUNDS,
    DEFAULT_HOLD_CAP,
    EXPLORATION_MAX_STATES,
)
from core.values.custom_types import NodeId
from core.values.enums import AsyncOutcome, MessageAction
from core.values.errors import ExplorationLimitError, UnfairScheduleError
from core.values.objects import (
    AdversaryDecision,
    AsyncConfiguration,
    AsyncRound,
    AsyncVerdict,
    InFlightMessage,
    ScheduleExploration,
)


class Adversary(Protocol):
    """
    Scheduling adversary. `deterministic` declares that decide() depends on the
    configuration alone, which is what makes a configuration repeat a proof.
    """

    name: str
    deterministic: bool

    def decide(
        self,
        *,
        graph: Graph,
        round_index: int,
        configuration: AsyncConfiguration,
        history: Sequence[AsyncRound],
    ) -> AdversaryDecision:
        raise NotImplementedError


class ZeroDelayAdversary:
    name = "zero"
    deterministic = True

    def decide(
        self,
        *,
        graph: Graph,
        round_index: int,
        configuration: AsyncConfiguration,
        history: Sequence[AsyncRound],
    ) -> AdversaryDecision:
        return AdversaryDecision()


class TriangleHoldAdversary:
    """
    On the triangle, whenever two fresh messages converge on one node, the lower-id
    sender is delivered and the other is held for a round. On any other graph it never
    holds anything.
    """

    name = "fig6"
    deterministic = True

    def decide(
        self,
        *,
        graph: Graph,
        round_index: int,
        configuration: AsyncConfiguration,
        history: Sequence[AsyncRound],
    ) -> AdversaryDecision:
        if graph.node_count != 3 or graph.m != 3:
            return AdversaryDecision()

        held = set()
        for node in graph.nodes:
            incoming = configuration.toward(NodeId(node))
            if len(incoming) == 2 and all(m.age == 0 for m in incoming):
                held.add(incoming[1].arc)
        return AdversaryDecision(frozenset(held))


def fig6_adversary() -> TriangleHoldAdversary:
    return TriangleHoldAdversary()


def initial_async_configuration(g: Graph, source: NodeId) -> AsyncConfiguration:
    return AsyncConfiguration(
        frozenset(InFlightMessage(source, w, 0) for w in g.neighbors(source))
    )


def advance(
    g: Graph,
    pending: AsyncConfiguration,
    decision: AdversaryDecision,
    *,
    hold_cap: int,
    round_index: int,
) -> tuple[AsyncRound, AsyncConfiguration]:
    """
    Play one round: apply the decision, deliver, and build the next round-start
    configuration.
    """
    stray = decision.held - pending.arcs()
    if stray:
        raise UnfairScheduleError(
            f"Round {round_index}: holds {sorted(stray)} which are not in flight"
        )

    delivered: list[InFlightMessage] = []
    held: list[InFlightMessage] = []
    for message in pending.sorted_messages():
        if decision.action_for(message.arc) is MessageAction.HOLD:
            if message.age >= hold_cap:
                raise UnfairScheduleError(
                    f"Round {round_index}: message {message.arc} held past cap {hold_cap}"
                )
            held.append(message)
        else:
            delivered.append(message)

    inbox: dict[NodeId, set[NodeId]] = {}
    for message in delivered:
        inbox.setdefault(message.receiver, set()).add(message.sender)

    fresh = [
        InFlightMessage(node, neighbour, 0)
        for node, senders in inbox.items()
        for neighbour in g.neighbors(node)
        if neighbour not in senders
    ]
    aged = [InFlightMessage(m.sender, m.receiver, m.age + 1) for m in held]

    record = AsyncRound(
        index=round_index,
        configuration=pending,
        delivered=tuple(delivered),
        held=tuple(held),
    )
    return record, AsyncConfiguration.collapse(fresh + aged)


def run_async(
    g: Graph,
    source: NodeId,
    adversary: Adversary,
    max_rounds: int = ASYNC_DEFAULT_MAX_ROUNDS,
    hold_cap: int = DEFAULT_HOLD_CAP,
) -> AsyncVerdict:
    require_connected(g)
    source = g.require_node(source)
    require(hold_cap >= 1, "hold_cap must be at least 1", error=UnfairScheduleError)

    pending = initial_async_configuration(g, source)
    seen: dict[AsyncConfiguration, int] = {}
    rounds: list[AsyncRound] = []

    index = 1
    while not pending.is_empty():
        if adversary.deterministic:
            if pending in seen:
                return _cycle_verdict(
                    g, source, adversary, rounds, pending, seen[pending], index, hold_cap
                )
            seen[pending] = index

        if index > max_rounds:
            return AsyncVerdict(
                source=source,
                outcome=AsyncOutcome.EXHAUSTED,
                round=max_rounds,
                rounds=tuple(rounds),
            )

        decision = adversary.decide(
            graph=g,
            round_index=index,
            configuration=pending,
            history=tuple(rounds),
        )
        record, pending = advance(
            g, pending, decision, hold_cap=hold_cap, round_index=index
        )
        rounds.append(record)
        index += 1

    return AsyncVerdict(
        source=source,
        outcome=AsyncOutcome.TERMINATED,
        round=_last_delivery_round(rounds),
        rounds=tuple(rounds),
    )


def _cycle_verdict(
    g: Graph,
    source: NodeId,
    adversary: Adversary,
    rounds: list[AsyncRound],
    pending: AsyncConfiguration,
    first_seen: int,
    index: int,
    hold_cap: int,
) -> AsyncVerdict:
    period = index - first_seen
    return AsyncVerdict(
        source=source,
        outcome=AsyncOutcome.CYCLE_DETECTED,
        round=index,
        rounds=tuple(rounds),
        first_seen=first_seen,
        period=period,
        replay_ok=verify_cycle(
            g,
            adversary,
            pending,
            period=period,
            hold_cap=hold_cap,
            start_round=index,
        ),
    )


def verify_cycle(
    g: Graph,
    adversary: Adversary,
    configuration: AsyncConfiguration,
    *,
    period: int,
    hold_cap: int,
    start_round: int,
) -> bool:
    """
    Replay one full period from `configuration` and check it comes back exactly.
    """
    current = configuration
    replayed: list[AsyncRound] = []
    for offset in range(period):
        decision = adversary.decide(
            graph=g,
            round_index=start_round + offset,
            configuration=current,
            history=tuple(replayed),
        )
        record, current = advance(
            g, current, decision, hold_cap=hold_cap, round_index=start_round + offset
        )
        replayed.append(record)
        if current.is_empty():
            return False
    return current == configuration


def async_trace(verdict: AsyncVerdict, node_count: int) -> Trace:
    """
    Project an asynchronous run onto the synchronous trace shape (delivered arcs per round).
    """
    return Trace(
        source=verdict.source,
        node_count=node_count,
        rounds=tuple(r.delivered_configuration() for r in verdict.rounds),
    )


def _last_delivery_round(rounds: Sequence[AsyncRound]) -> int:
    for record in reversed(rounds):
        if record.delivered:
            return record.index
    return 0


def explore_schedules(
    g: Graph,
    source: NodeId,
    *,
    hold_cap: int = DEFAULT_HOLD_CAP,
    max_states: int = EXPLORATION_MAX_STATES,
) -> ScheduleExploration:
    """
    Explore every fair schedule from the source's first send.

    The reachable round-start configurations form a finite transition graph; some
    adversary can force non-termination iff that graph has a cycle. Without a cycle the
    longest path to the empty configuration is the worst-case termination round.
    """
    require_connected(g)
    source = g.require_node(source)
    require(hold_cap >= 1, "hold_cap must be at least 1", error=UnfairScheduleError)

    start = initial_async_configuration(g, source)
    longest: dict[AsyncConfiguration, int] = {}
    on_path: dict[AsyncConfiguration, int] = {}
    path: list[AsyncConfiguration] = []
    frames: list[tuple[AsyncConfiguration, list[AsyncConfiguration], list[int]]] = []

    def enter(configuration: AsyncConfiguration) -> None:
        if len(longest) + len(on_path) >= max_states:
            raise ExplorationLimitError(
                f"More than {max_states} configurations reachable from {source}"
            )
        on_path[configuration] = len(path)
        path.append(configuration)
        frames.append(
            (configuration, _successors(g, configuration, hold_cap), [0])
        )

    enter(start)
    while frames:
        configuration, successors, cursor = frames[-1]
        if cursor[0] == len(successors):
            frames.pop()
            path.pop()
            del on_path[configuration]
            longest[configuration] = (
                0
                if configuration.is_empty()
                else 1 + max(longest[s] for s in successors)
            )
            continue

        successor = successors[cursor[0]]
        cursor[0] += 1
        if successor in on_path:
            return ScheduleExploration(
                states=len(longest) + len(on_path),
                can_cycle=True,
                witness_cycle=tuple(path[on_path[successor] :]),
            )
        if successor not in longest:
            enter(successor)

    return ScheduleExploration(
        states=len(longest),
        can_cycle=False,
        worst_case_round=longest[start],
    )


def _successors(
    g: Graph, configuration: AsyncConfiguration, hold_cap: int
) -> list[AsyncConfiguration]:
    if configuration.is_empty():
        return []

    holdable = [m.arc for m in configuration.sorted_messages() if m.age < hold_cap]
    found: dict[AsyncConfiguration, None] = {}
    for size in range(len(holdable) + 1):
        for held in combinations(holdable, size):
            _, successor = advance(
                g,
                configuration,
                AdversaryDecision(frozenset(held)),
                hold_cap=hold_cap,
                round_index=0,
            )
            found.setdefault(successor, None)
    return list(found)
