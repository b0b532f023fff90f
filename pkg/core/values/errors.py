"""
Ring: Domain (Shared Kernel / Domain Errors)

Responsibility:
Defines the base class for all domain-level exceptions and the concrete errors that
represent invalid graphs, invalid run preconditions and broken engine invariants.

Design intent:
All domain errors inherit from DomainError so that domain failures can be treated as a
single category, distinct from technical or infrastructural failures.
InvariantViolationError is special: it signals a bug in the engine (or a genuine
counterexample to a theorem), never bad user input.

Dependency constraints:
- Must only depend on the Python standard library.
- Must never import from application (features/), infrastructure (infra/), or delivery (root/).

Usage:
- Raised by entities and services when invariants or preconditions are broken.
- Caught by outer layers and translated into protocol-specific errors (HTTP, exit codes).
"""

from __future__ import annotations


class DomainError(Exception):
    """Base class for domain-level errors."""


class GraphValidationError(DomainError):
    pass


class EdgeListParseError(GraphValidationError):
    def __init__(self, message: str, *, line_number: int) -> None:
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class DisconnectedGraphError(DomainError):
    pass


class InvalidSourceError(DomainError):
    pass


class UnfairScheduleError(DomainError):
    pass


class ExplorationLimitError(DomainError):
    pass


class RoundBudgetExhaustedError(DomainError):
    """
    A caller-chosen round budget ran out before the theoretical bound. Carries the
    partial trace as `dump`.
    """

    def __init__(self, message: str, *, dump: dict | None = None) -> None:
        super().__init__(message)
        self.dump = dump or {}


class InvariantViolationError(DomainError):
    """
    An engine invariant failed. `dump` carries the offending trace as plain data.
    """

    def __init__(self, message: str, *, dump: dict | None = None) -> None:
        super().__init__(message)
        self.dump = dump or {}


class NonTerminationError(InvariantViolationError):
    pass


class MultiplicityError(InvariantViolationError):
    pass
