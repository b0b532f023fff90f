"""
Ring: Composition Root

Responsibility:
Opens the sweep store and defines the per-request runtime context of the HTTP app.

This module contains:
- open_store: builds the engine for a database URL, creates the tables and returns a
  session factory. Used by both the CLI and the HTTP app.
- RequestContext: an immutable container for the request's session and logger.
- get_session / get_ctx: FastAPI dependencies building them.

Dependency constraints:
- May depend on infrastructure (database session, logging) and FastAPI.
- Must not be imported by domain or application layers.
"""

from __future__ import annotations

import logging
from collections.abc import Generator
from dataclasses import dataclass
from typing import Annotated

from fastapi import Depends, Request
from sqlalchemy.orm import Session, sessionmaker

from infra.db.session import (
    DEFAULT_DATABASE_URL,
    build_engine,
    build_session_factory,
    create_all_db_tables,
    session_scope,
)
from infra.db.sweeps.model import SweepModel, SweepViolationModel

STORED_TABLES = (SweepModel, SweepViolationModel)


def open_store(database_url: str | None = None) -> sessionmaker[Session]:
    engine = build_engine(database_url or DEFAULT_DATABASE_URL)
    create_all_db_tables(engine)
    return build_session_factory(engine)


@dataclass(frozen=True, slots=True)
class RequestContext:
    session: Session
    logger: logging.Logger


def get_session(request: Request) -> Generator[Session, None, None]:
    """
    FastAPI dependency: provides a transactional session per request.
    """
    with session_scope(request.app.state.session_factory) as session:
        yield session


SessionDep = Annotated[Session, Depends(get_session)]


def get_ctx(session: SessionDep, request: Request) -> RequestContext:
    if not hasattr(request.app.state, "logger"):
        raise RuntimeError("Logger not attached")

    return RequestContext(
        session=session,
        logger=request.app.state.logger,
    )


ContextDep = Annotated[RequestContext, Depends(get_ctx)]
