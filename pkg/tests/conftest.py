from __future__ import annotations

import logging

import pytest

from core.entities.graph import Graph
from core.values.enums import NamedGraphKind
from infra.graphs.generators import gen_named


@pytest.fixture
def triangle() -> Graph:
    return Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])


@pytest.fixture
def paw() -> Graph:
    # Triangle 0-1-2 with a pendant 3 hanging off 0.
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)])


@pytest.fixture
def path4() -> Graph:
    return gen_named(NamedGraphKind.PATH, 4)


@pytest.fixture
def petersen() -> Graph:
    return gen_named(NamedGraphKind.PETERSEN)


@pytest.fixture
def logger() -> logging.Logger:
    # Propagates to the root logger so caplog sees it.
    return logging.getLogger("tests.amnesia")
