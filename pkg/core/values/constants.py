"""
Ring: Domain (Shared Kernel / Domain Constants)

Responsibility:
Defines the fixed numeric assumptions of the flooding harness: default round budgets,
fairness caps for the round-asynchronous adversary and the enumeration limits of the
exhaustive sweeps.

Design intent:
- These values describe the model, not a deployment.
- Runtime overrides go through the CLI or HTTP request, never by editing this file.

Dependency constraints:
- Must only depend on the Python standard library.
- Must never import from application (features/), infrastructure (infra/), or delivery (root/).
"""

# Sync budget is 2n + SYNC_ROUND_SLACK: one past the termination bound so a
# violation shows up instead of being cut off.
SYNC_ROUND_SLACK = 2

ASYNC_DEFAULT_MAX_ROUNDS = 64
DEFAULT_HOLD_CAP = 1

SWEEP_MIN_NODES = 2
SWEEP_MAX_NODES = 7
SHARP_SEARCH_MAX_NODES = 8

# Masks per unit of work handed to a sweep worker.
SWEEP_CHUNK_SIZE = 4096

EXPLORATION_MAX_STATES = 200_000
