"""
Ring: Application (Shared Types)

Responsibility:
Type aliases shared by the feature packages:
- Provider: a dependency factory handed to routers by the composition root.
- ArcPair, MessageTriple: how arcs and in-flight messages appear in JSON documents.
"""

from __future__ import annotations

from collections.abc import Callable
from typing import TypeAlias, TypeVar

T = TypeVar("T")
Provider = Callable[..., T]

ArcPair: TypeAlias = tuple[int, int]
MessageTriple: TypeAlias = tuple[int, int, int]
