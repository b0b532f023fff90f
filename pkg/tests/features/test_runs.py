import logging

import pytest

from core.values.enums import AsyncOutcome
from features._shared.errors import GraphSourceError
from features._shared.schemas import GraphSource
from features.runs.errors import RunBudgetError, RunGraphError, RunInputError
from features.runs.presenters import ExplorationPresenter, FloodRunPresenter
from features.runs.schemas import (
    AsyncRunResponse,
    ExploreRequest,
    RunRequest,
    SyncTraceResponse,
)
from features.runs.use_cases import FloodRunner, ScheduleExplorer
from infra.graphs.loader import GraphLoader
from infra.scheduling.registry import AdversaryRegistry

TRIANGLE = GraphSource(edge_list="0 1\n1 2\n2 0\n")


@pytest.fixture
def runner(logger):
    return FloodRunner(
        loader=GraphLoader(),
        adversaries=AdversaryRegistry(),
        presenter=FloodRunPresenter(),
        logger=logger,
    )


@pytest.fixture
def explorer(logger):
    return ScheduleExplorer(
        loader=GraphLoader(), presenter=ExplorationPresenter(), logger=logger
    )


def test_sync_run_of_the_triangle(runner):
    response = runner.execute(request=RunRequest(graph=TRIANGLE, source="1"))

    assert isinstance(response, SyncTraceResponse)
    assert response.rounds == [[(1, 0), (1, 2)], [(0, 2), (2, 0)], [(0, 1), (2, 1)]]
    assert response.round_sets == [[1], [0, 2], [0, 2], [1]]
    assert response.termination_round == 3
    assert response.message_count == 6
    assert response.labels is None


def test_labelled_graphs_carry_their_labels(runner):
    response = runner.execute(
        request=RunRequest(graph=GraphSource(edge_list="x y\ny z\n"), source="z")
    )

    assert response.labels == ["x", "y", "z"]
    assert response.source == 2


def test_zero_delay_async_run_matches_sync(runner):
    graph = GraphSource(named="petersen")
    sync = runner.execute(request=RunRequest(graph=graph, source="4"))
    async_ = runner.execute(request=RunRequest(graph=graph, source="4", mode="async:zero"))

    assert isinstance(async_, AsyncRunResponse)
    keys = {"source", "rounds", "round_sets", "termination_round", "message_count"}
    assert async_.model_dump(include=keys) == sync.model_dump(include=keys)
    assert async_.verdict.outcome is AsyncOutcome.TERMINATED


def test_fig6_async_run_reports_the_cycle(runner):
    response = runner.execute(
        request=RunRequest(graph=TRIANGLE, source="0", mode="async:fig6")
    )

    assert response.verdict.outcome is AsyncOutcome.CYCLE_DETECTED
    assert (response.verdict.first_seen, response.verdict.period) == (3, 4)
    assert response.verdict.replay_ok is True
    assert len(response.rounds) == 6
    assert response.holds[2] == [(2, 0)]
    assert response.in_flight[0] == [(0, 1, 0), (0, 2, 0)]


def test_async_round_budget(runner):
    response = runner.execute(
        request=RunRequest(graph=TRIANGLE, source="1", mode="async:fig6", max_rounds=4)
    )

    assert response.verdict.outcome is AsyncOutcome.EXHAUSTED
    assert response.verdict.round == 4


def test_sync_round_budget_cut_short(runner, caplog):
    with caplog.at_level(logging.INFO, logger="tests.amnesia"):
        with pytest.raises(RunBudgetError, match="after 1 rounds"):
            runner.execute(request=RunRequest(graph=TRIANGLE, source="1", max_rounds=1))

    assert "flood_run_exhausted source=1 max_rounds=1" in caplog.text


def test_unknown_adversary(runner, caplog):
    with caplog.at_level(logging.INFO, logger="tests.amnesia"):
        with pytest.raises(RunInputError, match="fig6, random, zero"):
            runner.execute(request=RunRequest(graph=TRIANGLE, source="0", mode="async:eager"))

    assert "flood_run_failed_adversary name=eager" in caplog.text


def test_unknown_source(runner):
    with pytest.raises(RunInputError, match="Unknown node"):
        runner.execute(request=RunRequest(graph=TRIANGLE, source="hub"))


def test_source_out_of_range(runner):
    with pytest.raises(RunInputError, match="out of range"):
        runner.execute(request=RunRequest(graph=TRIANGLE, source="3"))


def test_disconnected_graph(runner):
    with pytest.raises(RunGraphError):
        runner.execute(
            request=RunRequest(graph=GraphSource(edge_list="0 1\n2 3\n"), source="0")
        )


def test_invalid_graph_content(runner):
    with pytest.raises(RunInputError, match="line 1"):
        runner.execute(request=RunRequest(graph=GraphSource(edge_list="0 0\n"), source="0"))


def test_missing_graph_file(runner, tmp_path):
    with pytest.raises(GraphSourceError):
        runner.execute(
            request=RunRequest(
                graph=GraphSource(file=str(tmp_path / "absent.txt")), source="0"
            )
        )


def test_exploration_of_a_path(explorer):
    response = explorer.execute(
        request=ExploreRequest(graph=GraphSource(named="path:4"), source="0")
    )

    assert not response.can_cycle
    assert response.worst_case_round == 6
    assert response.states == 7
    assert response.witness_cycle == []


def test_exploration_of_the_triangle(explorer):
    response = explorer.execute(request=ExploreRequest(graph=TRIANGLE, source="0"))

    assert response.can_cycle
    assert response.worst_case_round is None
    assert response.witness_cycle


def test_exploration_state_limit(explorer):
    with pytest.raises(RunInputError):
        explorer.execute(
            request=ExploreRequest(
                graph=GraphSource(named="petersen"), source="0", max_states=5
            )
        )
