# flake8: noqa: E402
"""
Ring: Composition Root (not on the Clean Architecture diagram)

Responsibility:
Defines the HTTP entry point and performs system composition: logging, the sweep store,
routers and exception handlers assembled into one FastAPI application.

Configuration:
- AMNESIA_LOG_LEVEL: log level of the app (default INFO).
- AMNESIA_DATABASE_URL: sweep store (default in-memory SQLite).

Dependency constraints:
- May depend on all inner layers (infra, features, core).
- Nothing may depend on this module except the CLI's serve command.
"""

from __future__ import annotations

import os
import sys
from pathlib import Path

import uvicorn
from fastapi import FastAPI

# Add project root to sys.path for uvicorn.
PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

from root.config import (
    DATABASE_URL_ENV,
    HOST,
    HTTP_LOG_LEVEL,
    LOG_LEVEL_ENV,
    PORT,
)
from root.di._shared import open_store
from root.errors import register_exception_handlers
from root.logging_setup import attach_logger
from root.routers import register_routers


def build_app(
    *, database_url: str | None = None, log_level: int | str | None = None
) -> FastAPI:
    """
    Application entry point.

    Responsibilities:
    - initialise infra (sweep store, logging)
    - register routers
    - register exception handlers
    """
    app = FastAPI(title="amnesia")

    attach_logger(app, level=log_level or os.environ.get(LOG_LEVEL_ENV, HTTP_LOG_LEVEL))
    app.state.session_factory = open_store(
        database_url or os.environ.get(DATABASE_URL_ENV)
    )

    register_exception_handlers(app)
    register_routers(app)

    return app


app = build_app()

if __name__ == "__main__":
    uvicorn.run(
        "root.main:app",
        host=HOST,
        port=PORT,
        reload=True,
    )
