from functools import reduce

from core.services.enumeration import chunk_bounds
from core.values.objects import ChunkResult
from infra.workers.pool import ChunkExecutor


def _total(results):
    return reduce(ChunkResult.merge, results, ChunkResult())


def test_in_process_and_pooled_runs_agree():
    units = chunk_bounds(4, chunk_size=8)
    executor = ChunkExecutor()

    sequential = list(executor.map(units, jobs=1))
    pooled = list(executor.map(units, jobs=2))

    assert sequential == pooled
    assert _total(pooled).graphs == 43


def test_a_single_unit_stays_in_process():
    assert [r.graphs for r in ChunkExecutor().map([(3, 0, 8)], jobs=4)] == [4]
