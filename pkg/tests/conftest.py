import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from support import connected_graph_corpus


@pytest.fixture(scope="session")
def small_corpus():
    """All connected labeled graphs on at most 6 vertices (27476 graphs)."""
    return connected_graph_corpus(6)


@pytest.fixture(scope="session")
def tiny_corpus():
    """All connected labeled graphs on at most 5 vertices; cheap enough for
    per-module property tests."""
    return connected_graph_corpus(5)
