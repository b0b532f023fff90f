from core.entities.trace import Trace
from core.values.custom_types import NodeId
from core.values.objects import Configuration


def _triangle_trace() -> Trace:
    return Trace(
        source=NodeId(1),
        node_count=3,
        rounds=(
            Configuration.of([(1, 0), (1, 2)]),
            Configuration.of([(0, 2), (2, 0)]),
            Configuration.of([(0, 1), (2, 1)]),
        ),
    )


def test_round_sets_start_with_the_source():
    t = _triangle_trace()

    assert t.round_sets == (
        frozenset({1}),
        frozenset({0, 2}),
        frozenset({0, 2}),
        frozenset({1}),
    )
    assert t.termination_round == 3
    assert t.message_count == 6


def test_receipts_and_multiplicity():
    t = _triangle_trace()

    assert t.first_receipt(NodeId(1)) == 0
    assert t.second_receipt(NodeId(1)) == 3
    assert t.occurrences(NodeId(0)) == (1, 2)
    assert t.multiplicity() == {0: 2, 1: 2, 2: 2}


def test_out_of_range_lookups_are_empty():
    t = _triangle_trace()

    assert t.round_set(9) == frozenset()
    assert t.transmissions(0).is_empty()
    assert t.transmissions(4).is_empty()


def test_source_without_neighbours_terminates_at_round_zero():
    t = Trace(source=NodeId(0), node_count=1, rounds=())

    assert t.termination_round == 0
    assert t.second_receipt(NodeId(0)) is None
