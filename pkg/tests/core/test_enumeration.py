from functools import reduce

import pytest

from core.entities.graph import Graph
from core.services.enumeration import (
    check_graph,
    chunk_bounds,
    connected_graphs,
    find_sharp_example,
    sweep_chunk,
)
from core.values.errors import DomainError


@pytest.mark.parametrize(("n", "count"), [(2, 1), (3, 4), (4, 38), (5, 728)])
def test_connected_labelled_graph_counts(n, count):
    assert sum(1 for _ in connected_graphs(n)) == count


def test_chunk_bounds_cover_every_mask_in_order():
    units = chunk_bounds(4, chunk_size=16)

    assert units[0] == (2, 0, 2)
    assert units[1] == (3, 0, 8)
    assert [u for u in units if u[0] == 4] == [(4, lo, lo + 16) for lo in range(0, 64, 16)]


@pytest.mark.parametrize("n_max", [1, 8])
def test_chunk_bounds_reject_out_of_range_sizes(n_max):
    with pytest.raises(DomainError):
        chunk_bounds(n_max)


def _sweep(n_max, chunk_size=16):
    return reduce(
        lambda acc, unit: acc.merge(sweep_chunk(*unit)),
        chunk_bounds(n_max, chunk_size=chunk_size),
        sweep_chunk(2, 0, 0),
    )


def test_sweep_up_to_four_nodes_is_clean():
    result = _sweep(4)

    assert result.graphs == 43
    assert result.runs == 166
    assert result.bipartite_runs == 87
    assert result.histogram[0] == 87
    assert result.max_j == 5
    assert result.violations == ()


def test_sweep_does_not_depend_on_the_chunking():
    assert _sweep(4, chunk_size=3) == _sweep(4, chunk_size=64)


def test_sweep_up_to_three_nodes():
    assert _sweep(3).max_j == 3


def test_check_graph_on_the_triangle(triangle):
    result = check_graph(triangle)

    assert result.graphs == 1
    assert result.runs == 3
    assert result.bipartite_runs == 0
    assert result.histogram == {2: 3}
    assert result.violations == ()


def test_check_graph_on_a_path(path4):
    result = check_graph(path4)

    assert result.bipartite_runs == 4
    assert result.max_j == 3


def test_sharp_search_prefers_eccentricity_below_diameter():
    result = find_sharp_example(8)

    witness = result.witness
    assert witness is not None
    assert witness.node_count == 4
    assert witness.edges == ((0, 1), (0, 2), (0, 3), (1, 2))
    assert witness.source == 0
    assert (witness.eccentricity, witness.diameter, witness.termination_round) == (1, 2, 4)
    assert result.frontier == ((1, 1), (1, 2), (2, 2))
    assert result.graphs_examined == 22


def test_non_strict_sharp_search_stops_at_the_triangle():
    result = find_sharp_example(8, strict=False)

    assert result.witness is not None
    assert result.witness.node_count == 3
    assert result.witness.termination_round == 3
    assert result.frontier == ((1, 1),)
    assert result.graphs_examined == 5


@pytest.mark.slow
def test_sharp_search_for_a_target_pair():
    result = find_sharp_example(8, target_eccentricity=2, target_diameter=4)

    assert result.witness is not None
    assert result.witness.node_count == 6
    assert result.witness.termination_round == 7


def test_sharp_search_reports_no_witness_when_out_of_reach():
    result = find_sharp_example(3, target_eccentricity=3, target_diameter=5)

    assert result.witness is None
    assert result.graphs_examined == 5


def test_sharp_search_rejects_out_of_range_sizes():
    with pytest.raises(DomainError):
        find_sharp_example(9)


def test_masks_enumerate_graphs_with_dense_ids():
    graphs = list(connected_graphs(3))

    assert all(isinstance(g, Graph) and g.node_count == 3 for g in graphs)
    assert sorted(g.m for g in graphs) == [2, 2, 2, 3]


@pytest.mark.slow
def test_sweep_up_to_six_nodes_is_clean():
    result = _sweep(6, chunk_size=4096)

    assert result.violations == ()
    assert result.histogram[0] == result.bipartite_runs
    assert result.graphs == 43 + 728 + 26704
