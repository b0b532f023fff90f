"""
Ring: Interface Adapters (Presenters)

Responsibility:
Shapes traces, asynchronous verdicts and schedule explorations into the Runs feature's
response documents. Every list is sorted so that the rendered JSON is byte-stable.

Dependency constraints:
- Must not import from any other feature!
- Must not contain domain or application business rules.
- May depend on the Domain layer (core/) and this feature's ports and schemas.
"""

from __future__ import annotations

from core.entities.graph import Graph
from core.entities.trace import Trace
from core.services.async_flooding import async_trace
from core.services.flooding import trace_dump
from core.values.objects import AsyncConfiguration, AsyncVerdict, ScheduleExploration
from features._shared.custom_types import MessageTriple
from features.runs.ports import FloodRunnerPort, ScheduleExplorerPort
from features.runs.schemas import (
    AsyncRunResponse,
    ExplorationResponse,
    SyncTraceResponse,
    VerdictResponse,
)


def _labels(graph: Graph) -> list[str] | None:
    return list(graph.labels) if graph.labels is not None else None


def _messages(configuration: AsyncConfiguration) -> list[MessageTriple]:
    return [(int(m.sender), int(m.receiver), m.age) for m in configuration.sorted_messages()]


class FloodRunPresenter(FloodRunnerPort.Out):
    def present_sync(self, graph: Graph, trace: Trace) -> SyncTraceResponse:
        return SyncTraceResponse(
            **trace_dump(trace),
            message_count=trace.message_count,
            labels=_labels(graph),
        )

    def present_async(
        self, graph: Graph, verdict: AsyncVerdict, *, adversary: str, hold_cap: int
    ) -> AsyncRunResponse:
        delivered = trace_dump(async_trace(verdict, graph.node_count))
        return AsyncRunResponse(
            source=delivered["source"],
            adversary=adversary,
            hold_cap=hold_cap,
            rounds=delivered["rounds"],
            round_sets=delivered["round_sets"],
            termination_round=delivered["termination_round"],
            message_count=sum(len(r.delivered) for r in verdict.rounds),
            in_flight=[_messages(r.configuration) for r in verdict.rounds],
            holds=[sorted((int(m.sender), int(m.receiver)) for m in r.held) for r in verdict.rounds],
            verdict=VerdictResponse(
                outcome=verdict.outcome,
                round=verdict.round,
                first_seen=verdict.first_seen,
                period=verdict.period,
                replay_ok=verdict.replay_ok,
            ),
            labels=_labels(graph),
        )


class ExplorationPresenter(ScheduleExplorerPort.Out):
    def present(
        self, graph: Graph, exploration: ScheduleExploration, *, source: int, hold_cap: int
    ) -> ExplorationResponse:
        return ExplorationResponse(
            source=source,
            hold_cap=hold_cap,
            states=exploration.states,
            can_cycle=exploration.can_cycle,
            witness_cycle=[_messages(c) for c in exploration.witness_cycle],
            worst_case_round=exploration.worst_case_round,
            labels=_labels(graph),
        )
