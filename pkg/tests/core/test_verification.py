import pytest

from core.entities.trace import Trace
from core.services.flooding import run_sync
from core.services.oracles import ec_nodes
from core.services.verification import audit_lemmas, classify
from core.values.custom_types import NodeId
from core.values.enums import LemmaCheckName, NamedGraphKind, TheoremApplied
from core.values.objects import Configuration
from infra.graphs.generators import gen_named


def test_hypercube_is_bipartite_exact():
    report = classify(gen_named(NamedGraphKind.HYPERCUBE, 3), NodeId(0))

    assert report.theorem_applied is TheoremApplied.BIPARTITE_EXACT
    assert report.window_ok
    assert report.termination_round == report.eccentricity == 3
    assert report.excess == 0


def test_triangle_sits_inside_the_window(triangle):
    report = classify(triangle, NodeId(1))

    assert report.theorem_applied is TheoremApplied.NONBIPARTITE_WINDOW
    assert report.window_ok
    assert report.excess == 2


def test_petersen_hits_the_upper_edge_of_the_window(petersen):
    report = classify(petersen, NodeId(0))

    assert report.window_ok
    assert report.excess == report.diameter + 1 == 3


@pytest.mark.parametrize("source", [0, 1, 2, 3])
def test_lemma_audit_passes_on_the_paw(paw, source):
    t = run_sync(paw, NodeId(source))
    audit = audit_lemmas(paw, NodeId(source), t)

    assert audit.passed
    assert [check.name for check in audit.checks] == list(LemmaCheckName)


def test_lemma_audit_passes_on_petersen(petersen):
    for s in petersen.nodes:
        assert audit_lemmas(petersen, NodeId(s), run_sync(petersen, NodeId(s))).passed


def test_audit_reports_a_counterexample_for_a_forged_trace(triangle):
    # Stops after the first round, so no node receives the message twice.
    forged = Trace(
        source=NodeId(0),
        node_count=3,
        rounds=(Configuration.of([(0, 1), (0, 2)]),),
    )

    audit = audit_lemmas(triangle, NodeId(0), forged, report=ec_nodes(triangle, NodeId(0)))

    assert not audit.passed
    failed = {check.name for check in audit.failures()}
    assert LemmaCheckName.EC_SECOND_RECEIPT in failed
    assert LemmaCheckName.SINGLE_OCCURRENCE in failed
    counterexample = audit.failures()[0].counterexample
    assert counterexample is not None
    assert counterexample.node in (1, 2)
