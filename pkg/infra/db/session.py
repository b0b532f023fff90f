"""
Ring: Infrastructure (Database / Session & Connection Management)

Responsibility:
Defines the database engine, ORM base, and session lifecycle management for the sweep
store. This module owns how the application connects to the database and how
transactions are opened, committed, rolled back, and closed.

Design intent:
It centralises all SQLAlchemy configuration and session handling so that:
- Domain code never sees ORM concepts.
- Application code never manages transactions.
- Delivery code (CLI command or HTTP request) only asks for a session.

The database URL is passed in by the composition root; this module never reads the
environment. The default is an in-memory SQLite database, which needs a StaticPool so
every session sees the same connection.

Dependency constraints:
- Must not import from the Domain layer (core/).
- Must not import from the Application layer (features/*).
- May depend only on infrastructure libraries and tooling (SQLAlchemy, DB drivers).
"""

from __future__ import annotations

from collections.abc import Iterator
from contextlib import contextmanager

from sqlalchemy import Engine, create_engine
from sqlalchemy.orm import DeclarativeBase, Session, sessionmaker
from sqlalchemy.pool import StaticPool

DEFAULT_DATABASE_URL = "sqlite+pysqlite:///:memory:"


class ORMBase(DeclarativeBase):
    """
    SQLAlchemy ORM base for all mapped models.
    """


def build_engine(url: str = DEFAULT_DATABASE_URL) -> Engine:
    if url.startswith("sqlite") and ":memory:" in url:
        return create_engine(
            url,
            echo=False,
            connect_args={"check_same_thread": False},
            poolclass=StaticPool,
        )
    return create_engine(url, echo=False)


def build_session_factory(engine: Engine) -> sessionmaker[Session]:
    return sessionmaker(bind=engine, autoflush=False, autocommit=False)


def create_all_db_tables(engine: Engine) -> None:
    """
    Create all database tables. Models must be imported before this is called.
    """
    ORMBase.metadata.create_all(bind=engine)


@contextmanager
def session_scope(factory: sessionmaker[Session]) -> Iterator[Session]:
    """
    One transaction: commit on success, roll back on any exception.
    """
    session = factory()
    try:
        yield session
        session.commit()
    except Exception:
        session.rollback()
        raise
    finally:
        session.close()
