"""
Ring: Domain (Shared Kernel / Value Objects)

Responsibility:
Defines closed vocabularies of the flooding domain: the named graph families, the
theorem a classification is judged by, the outcome of an asynchronous run, the
per-message adversary action and the lemma checks performed by an audit.

Dependency constraints:
- Must only depend on the Python standard library.
- Must never import from application (features/), infrastructure (infra/), or delivery (root/).
"""

from enum import Enum


class NamedGraphKind(str, Enum):
    HYPERCUBE = "hypercube"
    PETERSEN = "petersen"
    CYCLE = "cycle"
    PATH = "path"
    COMPLETE = "complete"


class TheoremApplied(str, Enum):
    BIPARTITE_EXACT = "bipartite_exact"
    NONBIPARTITE_WINDOW = "nonbipartite_window"


class AsyncOutcome(str, Enum):
    TERMINATED = "terminated"
    CYCLE_DETECTED = "cycle_detected"
    EXHAUSTED = "exhausted"


class MessageAction(str, Enum):
    DELIVER = "deliver"
    HOLD = "hold"


class LemmaCheckName(str, Enum):
    DISTANCE_LAYERS = "distance_layers"
    FRONTIER_SENDS = "frontier_sends"
    EC_SECOND_RECEIPT = "ec_second_receipt"
    SINGLE_OCCURRENCE = "single_occurrence"
    NEIGHBOR_SECOND_OCCURRENCE = "neighbor_second_occurrence"


class SweepCheckName(str, Enum):
    TERMINATION_BOUND = "termination_bound"
    MULTIPLICITY = "multiplicity"
    BIPARTITE_EXACT = "bipartite_exact"
    NONBIPARTITE_WINDOW = "nonbipartite_window"
    LEMMA_AUDIT = "lemma_audit"
    ENGINE_ERROR = "engine_error"
