"""
Ring: Application (Use Case / Feature Errors)

Responsibility:
Defines application-level errors of the Runs feature: a run request that cannot be
executed as asked.

This module contains:
- RunInputError: malformed mode, unknown adversary, unknown source node, invalid graph
  content or an unfair hold cap.
- RunGraphError: the graph loaded fine but flooding needs a connected graph.
- RunBudgetError: a synchronous run still active when its requested max_rounds ran out.

Dependency constraints:
- Must not import from any other feature!
- May depend on shared application contracts in features/_shared.
"""

from __future__ import annotations

from features._shared.errors import ApplicationError


class RunInputError(ApplicationError):
    """Raised when a run request is invalid for the application."""


class RunGraphError(ApplicationError):
    """Raised when the requested graph cannot be flooded (it is disconnected)."""


class RunBudgetError(ApplicationError):
    """Raised when a synchronous run outlives the round budget the request asked for."""
