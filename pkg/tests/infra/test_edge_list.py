import pytest
from hypothesis import given
from hypothesis import strategies as st

from core.entities.graph import Graph
from core.values.errors import EdgeListParseError, GraphValidationError
from infra.graphs.edge_list import parse_edge_list, render_edge_list


def test_numeric_ids_are_kept_as_is():
    g = parse_edge_list("# a triangle\n0 1\n\n1 2\n2 0\n")

    assert g.node_count == 3
    assert g.labels is None
    assert g.sorted_edges() == [(0, 1), (0, 2), (1, 2)]


def test_bare_words_get_ids_in_first_appearance_order():
    g = parse_edge_list("hub left\nhub right\nleft right\n")

    assert g.labels == ("hub", "left", "right")
    assert g.resolve("right") == 2
    assert g.has_edge(1, 2)


def test_numeric_ids_get_ids_in_first_appearance_order():
    g = parse_edge_list("2 1\n1 0\n")

    assert g.labels == ("2", "1", "0")
    assert g.sorted_edges() == [(0, 1), (1, 2)]
    assert (g.resolve("2"), g.resolve("0")) == (0, 2)


def test_sparse_numeric_ids_are_densified_and_kept_as_labels():
    g = parse_edge_list("10 30\n30 20\n")

    assert g.labels == ("10", "30", "20")
    assert g.sorted_edges() == [(0, 1), (1, 2)]
    assert g.resolve("20") == 2


def test_leading_zeros_name_the_same_node():
    g = parse_edge_list("0 01\n1 2\n")

    assert g.labels is None
    assert g.sorted_edges() == [(0, 1), (1, 2)]


def test_node_count_header_keeps_isolated_nodes():
    g = parse_edge_list("# n=4\n0 1\n1 2\n")

    assert g.node_count == 4
    assert g.degree(3) == 0


def test_labels_header_fixes_ids():
    g = parse_edge_list("# labels=c b a\na b\n")

    assert g.labels == ("c", "b", "a")
    assert g.sorted_edges() == [(1, 2)]


def test_duplicate_lines_collapse():
    assert parse_edge_list("0 1\n1 0\n0 1\n").m == 1


@pytest.mark.parametrize(
    ("text", "line_number"),
    [
        ("0 1\n1 2 3\n", 2),
        ("0 1\n\n2 2\n", 3),
        ("# n=zero\n0 1\n", 1),
        ("# labels=a a\na b\n", 1),
        ("# labels=a b\na c\n", 2),
        ("0 1\n# n=1\n", 2),
        ("# n=1\n0 1\n", 1),
        ("0 1\n1 2\n\n# n=2\n", 4),
        ("# n=3\n# labels=a b\na b\n", 1),
        ("# n=1\na b\n", 1),
    ],
)
def test_parse_errors_name_the_offending_line(text, line_number):
    with pytest.raises(EdgeListParseError) as excinfo:
        parse_edge_list(text)

    assert excinfo.value.line_number == line_number
    assert str(excinfo.value).startswith(f"line {line_number}:")


def test_parse_errors_are_graph_validation_errors():
    with pytest.raises(GraphValidationError):
        parse_edge_list("x\n")


def test_render_writes_headers():
    text = render_edge_list(Graph.from_edges(3, [(0, 1)], labels=["a", "b", "c"]))

    assert text == "# n=3\n# m=1\n# labels=a b c\na b\n"


@st.composite
def graphs(draw):
    n = draw(st.integers(min_value=1, max_value=9))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    labelled = draw(st.booleans())
    labels = [f"v{k}" for k in draw(st.permutations(range(n)))] if labelled else None
    return Graph.from_edges(n, edges, labels=labels)


@given(graphs())
def test_rendered_edge_lists_read_back_to_the_same_graph(g):
    assert parse_edge_list(render_edge_list(g)) == g
