"""
Ring: Application (Use Case / Feature Errors)

Responsibility:
Defines application-level errors of the Analysis feature.

Dependency constraints:
- Must not import from any other feature!
- May depend on shared application contracts in features/_shared.
"""

from __future__ import annotations

from features._shared.errors import ApplicationError


class AnalysisInputError(ApplicationError):
    """Raised when the graph or source of an analysis request is unusable."""
