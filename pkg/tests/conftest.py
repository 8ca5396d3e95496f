"""
Shared fixtures and hypothesis strategies
"""
import os
import sys

import networkx as nx
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from app.graphs.catalog import named
from app.graphs.export import to_networkx
from app.graphs.types import Graph

PROPERTY_SETTINGS = settings(
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7):
    """Arbitrary simple graph, possibly disconnected"""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 7):
    """Random spanning tree plus random extra edges"""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    edges = [(draw(st.integers(min_value=0, max_value=v - 1)), v) for v in range(1, n)]
    pairs = [(i, j) for j in range(n) for i in range(j)]
    extra = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges.extend(p for p, keep in zip(pairs, extra) if keep and draw(st.booleans()))
    return Graph.from_edges(n, edges)


@st.composite
def rooted(draw, graph_strategy):
    """(G, root) with a non-empty root subset"""
    G = draw(graph_strategy)
    root = draw(st.sets(st.integers(min_value=0, max_value=G.n - 1), min_size=1))
    return G, tuple(sorted(root))


def nx_isomorphic(G: Graph, H: Graph) -> bool:
    """Independent isomorphism oracle"""
    return nx.is_isomorphic(to_networkx(G), to_networkx(H))


@pytest.fixture(scope="session")
def petersen():
    return named("petersen")


@pytest.fixture(scope="session")
def gray():
    return named("gray")


@pytest.fixture(scope="session")
def folkman():
    return named("folkman")


@pytest.fixture(scope="session")
def ljubljana():
    return named("ljubljana")
