"""
Ring: Composition Root (not on the Clean Architecture diagram)

Responsibility:
Wires the logging infrastructure into the running HTTP application: attaches the shared
harness logger to the FastAPI app and exposes it as a dependency.

Dependency constraints:
- May depend on infrastructure (infra.logging) and FastAPI.
- Must not be imported by domain, application, or infrastructure layers.
"""

from __future__ import annotations

import logging
from typing import Annotated

from fastapi import Depends, FastAPI, Request

from infra.logging.logger import build_logger


def attach_logger(app: FastAPI, *, level: int | str = logging.INFO) -> None:
    """
    Attach a process-wide logger to app.state.

    Logger initialisation stays in root; implementation stays in infra.
    """
    app.state.logger = build_logger(level=level)


def get_logger(request: Request) -> logging.Logger:
    """
    FastAPI dependency for retrieving the shared application logger.
    """
    return request.app.state.logger


LoggerDep = Annotated[logging.Logger, Depends(get_logger)]
