"""
Ring: Domain (Shared Utilities)

Responsibility:
Provides a minimal helper to express preconditions in a concise and
intention-revealing way, raising the domain error that fits the failed condition.

Dependency constraints:
- Must only depend on the Python standard library and core.values.
- Must never import from application (features/), infrastructure (infra/), or delivery (root/).
"""

from __future__ import annotations

from core.values.errors import DomainError


def require(
    condition: bool, message: str, *, error: type[DomainError] = DomainError
) -> None:
    """
    Minimal assertion helper for domain checks.
    """
    if not condition:
        raise error(message)
