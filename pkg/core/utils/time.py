"""
Ring: Domain (Shared Utilities)

Responsibility:
Single source of the current UTC time, used to stamp stored sweep records.

Design intent:
Timestamps are metadata of a stored record only. They never enter the JSON documents
a run, analysis or sweep emits, which stay byte-stable across re-runs.

Dependency constraints:
- Must only depend on the Python standard library.
- Must never import from features/, infra/, or root/.
"""

from datetime import datetime, timezone


def utc_now() -> datetime:
    return datetime.now(tz=timezone.utc)
