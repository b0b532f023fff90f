"""
Ring: Infrastructure (Logging)

Responsibility:
Defines the construction and configuration of the harness logger.
This module owns how logging is formatted, where it is written, and how loggers are
initialised for use across the system.

Design intent:
Log records go to stderr so that stdout carries nothing but the JSON documents the
CLI emits. Core services never log; use cases receive this logger by injection.

Dependency constraints:
- Must not import from the Domain layer (core/).
- Must not import from the Application layer (features/*).
- May depend only on infrastructure and standard library modules.
"""

from __future__ import annotations

import logging
import sys
from logging import Logger

LOGGER_NAME = "amnesia"


def parse_level(level: int | str) -> int:
    if isinstance(level, int):
        return level
    resolved = logging.getLevelName(level.upper())
    if not isinstance(resolved, int):
        raise ValueError(f"Unknown log level: {level}")
    return resolved


def build_logger(*, name: str = LOGGER_NAME, level: int | str = logging.INFO) -> Logger:
    """
    Build and configure the harness logger.
    Notes:
    - Safe to call multiple times; the level is updated, handlers are added once.
    """
    logger = logging.getLogger(name)
    logger.setLevel(parse_level(level))
    logger.propagate = False

    if logger.handlers:
        return logger

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(
        logging.Formatter(fmt="%(asctime)s %(levelname)s %(name)s %(message)s")
    )
    logger.addHandler(handler)

    return logger
