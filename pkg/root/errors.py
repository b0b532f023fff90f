"""
Ring: Composition Root

Responsibility:
The single place where exception semantics are bound to delivery semantics:
- register_exception_handlers: domain and application errors to HTTP responses.
- ExitCode and exit_code_for: the same errors, and async outcomes, to CLI exit codes.

Mapping:
- InvariantViolationError: the engine broke one of its own guarantees. HTTP 500 with
  the trace dump; exit 1, the same code as a property violation.
- GraphSourceError (graph file missing or unreadable): HTTP 404; exit 2.
- RunBudgetError or RoundBudgetExhaustedError (a synchronous run outlived the
  requested max_rounds): HTTP 400; exit 4, the same code as an exhausted async run.
- Any other ApplicationError or DomainError: HTTP 400; exit 2.

Dependency constraints:
- May depend on all inner layers (core, features, infra) and FastAPI.
- Must not be imported by any inner layer.
"""

from __future__ import annotations

from enum import IntEnum

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import ValidationError

from core.values.enums import AsyncOutcome
from core.values.errors import (
    DomainError,
    InvariantViolationError,
    RoundBudgetExhaustedError,
)
from features._shared.errors import ApplicationError, GraphSourceError
from features.runs.errors import RunBudgetError


class ExitCode(IntEnum):
    OK = 0
    VIOLATION = 1
    INPUT_ERROR = 2
    CYCLE_DETECTED = 3
    EXHAUSTED = 4


_OUTCOME_EXIT_CODES = {
    AsyncOutcome.TERMINATED: ExitCode.OK,
    AsyncOutcome.CYCLE_DETECTED: ExitCode.CYCLE_DETECTED,
    AsyncOutcome.EXHAUSTED: ExitCode.EXHAUSTED,
}


def exit_code_for_outcome(outcome: AsyncOutcome) -> ExitCode:
    return _OUTCOME_EXIT_CODES[outcome]


def exit_code_for(exc: ApplicationError | DomainError | ValidationError) -> ExitCode:
    if isinstance(exc, InvariantViolationError):
        return ExitCode.VIOLATION
    if isinstance(exc, (RunBudgetError, RoundBudgetExhaustedError)):
        return ExitCode.EXHAUSTED
    return ExitCode.INPUT_ERROR


def register_exception_handlers(app: FastAPI) -> None:
    """
    Map domain and application exceptions to HTTP responses.

    Routers do not catch exceptions. Everything bubbles here.
    """

    @app.exception_handler(DomainError)
    async def _domain_error(_: Request, exc: DomainError) -> JSONResponse:
        return _json_error(400, exc)

    @app.exception_handler(ApplicationError)
    async def _application_error(_: Request, exc: ApplicationError) -> JSONResponse:
        return _json_error(400, exc)

    @app.exception_handler(GraphSourceError)
    async def _graph_source(_: Request, exc: GraphSourceError) -> JSONResponse:
        return _json_error(404, exc)

    @app.exception_handler(InvariantViolationError)
    async def _invariant_violation(
        _: Request, exc: InvariantViolationError
    ) -> JSONResponse:
        return JSONResponse(
            status_code=500,
            content={"detail": str(exc), "dump": exc.dump},
        )


def _json_error(status_code: int, exc: Exception) -> JSONResponse:
    """
    Standard JSON error response factory.
    """
    return JSONResponse(
        status_code=status_code,
        content={"detail": str(exc)},
    )
