"""
Ring: Domain (Shared Kernel / Value Types)

Responsibility:
Defines strongly-typed identifiers used across the flooding domain.
These types give semantic meaning to otherwise primitive values and prevent
accidental mixing of node ids with round indices or hop counts.

Design intent:
- NodeId is a dense integer in 0..n-1; labels only exist at the I/O boundary.
- Arc is a directed transmission (sender, receiver) over an undirected edge.
- Edge is the normalised undirected pair (low, high).

Dependency constraints:
- Must only depend on the Python standard library.
- Must never import from application (features/), infrastructure (infra/), or delivery (root/).

Usage:
- Used by entities, value objects and services to express identity.
- Used by outer layers as opaque identifiers without redefining their meaning.
"""

from typing import NewType, TypeAlias

NodeId = NewType("NodeId", int)

Arc: TypeAlias = tuple[NodeId, NodeId]
Edge: TypeAlias = tuple[NodeId, NodeId]

SweepId = NewType("SweepId", str)
