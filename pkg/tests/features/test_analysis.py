import logging

import pytest

from core.values.enums import LemmaCheckName, TheoremApplied
from features._shared.schemas import GraphSource
from features.analysis.errors import AnalysisInputError
from features.analysis.presenters import GraphAnalysisPresenter
from features.analysis.schemas import AnalyzeRequest
from features.analysis.use_cases import GraphAnalyzer
from infra.graphs.loader import GraphLoader


@pytest.fixture
def analyzer(logger):
    return GraphAnalyzer(
        loader=GraphLoader(), presenter=GraphAnalysisPresenter(), logger=logger
    )


def test_petersen_analysis(analyzer, caplog):
    with caplog.at_level(logging.INFO, logger="tests.amnesia"):
        response = analyzer.execute(
            request=AnalyzeRequest(graph=GraphSource(named="petersen"), source="0")
        )

    classification = response.classification
    assert classification.theorem_applied is TheoremApplied.NONBIPARTITE_WINDOW
    assert (classification.eccentricity, classification.diameter) == (2, 2)
    assert classification.termination_round == 5
    assert classification.j_minus_e == 3
    assert response.audit.passed
    assert [c.name for c in response.audit.checks] == list(LemmaCheckName)
    assert response.odd_cycle is not None
    assert len(response.odd_cycle) % 2 == 1
    assert response.holds
    assert "graph_analysis_succeeded" in caplog.text


def test_hypercube_analysis_is_bipartite(analyzer):
    response = analyzer.execute(
        request=AnalyzeRequest(graph=GraphSource(named="hypercube:3"), source="5")
    )

    assert response.classification.bipartite
    assert response.classification.j_minus_e == 0
    assert response.ec_nodes == []
    assert response.odd_cycle is None


def test_paw_ec_nodes(analyzer):
    response = analyzer.execute(
        request=AnalyzeRequest(
            graph=GraphSource(edge_list="0 1\n0 2\n0 3\n1 2\n"), source="3"
        )
    )

    assert response.ec_nodes == [1, 2]
    assert response.classification.termination_round == 5


def test_disconnected_graph_is_an_input_error(analyzer):
    with pytest.raises(AnalysisInputError):
        analyzer.execute(
            request=AnalyzeRequest(graph=GraphSource(edge_list="0 1\n2 3\n"), source="0")
        )


def test_unknown_source_is_an_input_error(analyzer):
    with pytest.raises(AnalysisInputError):
        analyzer.execute(
            request=AnalyzeRequest(graph=GraphSource(named="cycle:5"), source="v9")
        )
