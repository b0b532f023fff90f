"""
Ring: Application (Use Case / Feature Errors)

Responsibility:
Defines application-level errors of the Sweeps feature.

Dependency constraints:
- Must not import from any other feature!
- May depend on shared application contracts in features/_shared.
"""

from __future__ import annotations

from features._shared.errors import ApplicationError


class SweepInputError(ApplicationError):
    """Raised when sweep or sharpness-search parameters are out of range."""
