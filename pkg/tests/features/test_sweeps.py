import logging

import pytest

from core.entities.sweep import SweepRecord
from core.values.objects import ChunkResult
from features.sweeps.errors import SweepInputError
from features.sweeps.presenters import (
    SharpSearchPresenter,
    SweepRecordPresenter,
    SweepSummaryPresenter,
)
from features.sweeps.schemas import SharpRequest, SweepRequest
from features.sweeps.use_cases import SharpExampleFinder, SweepLister, SweepRunner
from infra.workers.pool import ChunkExecutor


class InMemorySweepRepo:
    def __init__(self) -> None:
        self.records: list[SweepRecord] = []

    def save(self, record: SweepRecord) -> None:
        self.records.append(record)

    def list_all(self) -> list[SweepRecord]:
        return sorted(self.records, key=lambda r: (r.created_at, r.id))


@pytest.fixture
def repo():
    return InMemorySweepRepo()


@pytest.fixture
def runner(repo, logger):
    return SweepRunner(
        executor=ChunkExecutor(),
        repo=repo,
        presenter=SweepSummaryPresenter(),
        logger=logger,
    )


def test_sweep_up_to_four_nodes(runner, repo):
    summary = runner.execute(request=SweepRequest(n_max=4))

    assert summary.graphs == 43
    assert summary.runs == 166
    assert summary.bipartite_runs == 87
    assert summary.j_minus_e_histogram["0"] == 87
    assert sum(summary.j_minus_e_histogram.values()) == 166
    assert list(summary.j_minus_e_histogram) == sorted(
        summary.j_minus_e_histogram, key=int
    )
    assert summary.max_j == 5
    assert summary.clean

    (record,) = repo.records
    assert (record.n_max, record.graphs, record.runs) == (4, 43, 166)


def test_sweep_summary_is_the_same_for_any_job_count(runner):
    assert runner.execute(request=SweepRequest(n_max=4, jobs=1)) == runner.execute(
        request=SweepRequest(n_max=4, jobs=2)
    )


@pytest.mark.parametrize("n_max", [1, 8])
def test_sweep_size_out_of_range(runner, repo, n_max):
    with pytest.raises(SweepInputError):
        runner.execute(request=SweepRequest(n_max=n_max))

    assert repo.records == []


def test_sweep_logs_its_chunks(runner, caplog):
    with caplog.at_level(logging.DEBUG, logger="tests.amnesia"):
        runner.execute(request=SweepRequest(n_max=3))

    assert "sweep_chunk_completed n=3" in caplog.text
    assert "sweep_record_saved" in caplog.text


class _ViolatingExecutor:
    def map(self, units, *, jobs):
        from core.entities.graph import Graph
        from core.values.custom_types import NodeId
        from core.values.enums import SweepCheckName
        from core.values.objects import SweepViolation

        yield ChunkResult(
            graphs=1,
            runs=3,
            max_j=3,
            violations=(
                SweepViolation(
                    node_count=3,
                    edges=tuple(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]).sorted_edges()),
                    source=NodeId(0),
                    check=SweepCheckName.NONBIPARTITE_WINDOW,
                    detail="e=1 d=1 j=9",
                ),
            ),
        )


def test_violations_are_reported_logged_and_stored(repo, logger, caplog):
    runner = SweepRunner(
        executor=_ViolatingExecutor(),
        repo=repo,
        presenter=SweepSummaryPresenter(),
        logger=logger,
    )

    with caplog.at_level(logging.WARNING, logger="tests.amnesia"):
        summary = runner.execute(request=SweepRequest(n_max=3))

    assert not summary.clean
    assert summary.violations[0].check == "nonbipartite_window"
    assert summary.violations[0].edges == [(0, 1), (0, 2), (1, 2)]
    assert "sweep_violation_found" in caplog.text
    assert len(repo.records[0].violations) == 1


def test_stored_sweeps_are_listed(runner, repo, logger):
    runner.execute(request=SweepRequest(n_max=2))
    runner.execute(request=SweepRequest(n_max=3))
    lister = SweepLister(repo=repo, presenter=SweepRecordPresenter(), logger=logger)

    listed = lister.execute()

    assert sorted(r.n_max for r in listed) == [2, 3]
    assert all(r.violations == 0 for r in listed)
    assert len({r.id for r in listed}) == 2


@pytest.fixture
def finder(logger):
    return SharpExampleFinder(presenter=SharpSearchPresenter(), logger=logger)


def test_sharp_search_default(finder):
    response = finder.execute(request=SharpRequest())

    assert response.witness is not None
    assert response.witness.n == 4
    assert response.witness.edges == [(0, 1), (0, 2), (0, 3), (1, 2)]
    assert response.witness.termination_round == 4
    assert response.frontier == [(1, 1), (1, 2), (2, 2)]
    assert response.graphs_examined == 22


def test_sharp_search_out_of_range(finder):
    with pytest.raises(SweepInputError):
        finder.execute(request=SharpRequest(n_max=12))
