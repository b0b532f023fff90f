import pytest

from core.values.errors import GraphValidationError
from features._shared.schemas import GraphSource, RandomGraphParams
from infra.graphs.generators import gen_random
from infra.graphs.loader import GraphLoader


def test_loads_an_edge_list_file(tmp_path):
    path = tmp_path / "paw.txt"
    path.write_text("a b\na c\na d\nb c\n", encoding="utf-8")

    g = GraphLoader().load(GraphSource(file=str(path)))

    assert g.labels == ("a", "b", "c", "d")
    assert g.m == 4


def test_missing_file_raises_os_error(tmp_path):
    with pytest.raises(OSError):
        GraphLoader().load(GraphSource(file=str(tmp_path / "absent.txt")))


def test_named_random_and_inline_sources():
    loader = GraphLoader()

    assert loader.load(GraphSource(named="cycle:4")).m == 4
    assert loader.load(
        GraphSource(random=RandomGraphParams(n=8, p=0.4, seed=3))
    ) == gen_random(8, 0.4, 3)
    assert loader.load(GraphSource(edge_list="0 1\n1 2\n")).node_count == 3


def test_bad_named_source_is_a_validation_error():
    with pytest.raises(GraphValidationError):
        GraphLoader().load(GraphSource(named="cycle:1"))
