"""
Ring: Infrastructure (Parallel Execution)

Responsibility:
Implements the sweep executor port: runs sweep work units (n, lo, hi) either in-process
or across a pool of worker processes, and yields their partial results in unit order.

Design intent:
Results come back in submission order whatever the job count, so aggregation
downstream is identical for jobs=1 and jobs=N.

Dependency constraints:
- Must depend on application ports (features/sweeps/ports) to implement them.
- May depend on the Domain layer (core/).
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor

from core.services.enumeration import sweep_chunk
from core.values.objects import ChunkResult
from features.sweeps.ports import SweepExecutorPort


class ChunkExecutor(SweepExecutorPort):
    def map(
        self, units: Sequence[tuple[int, int, int]], *, jobs: int
    ) -> Iterator[ChunkResult]:
        ns = [n for n, _, _ in units]
        los = [lo for _, lo, _ in units]
        his = [hi for _, _, hi in units]

        if jobs <= 1 or len(units) <= 1:
            yield from map(sweep_chunk, ns, los, his)
            return

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            yield from pool.map(sweep_chunk, ns, los, his)
