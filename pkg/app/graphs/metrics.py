"""
Distance Metrics

BFS distance partitions, distance sequences, residual graphs and growth
polynomials.
"""
import logging
from collections import deque
from typing import Iterable, List, Optional

from .core import induced_subgraph
from .types import (
    DisconnectedGraphError,
    DistancePartition,
    DistanceSequence,
    Graph,
    GraphError,
    ResidualResult,
    VertexSet,
)

logger = logging.getLogger(__name__)


def bfs_distances(G: Graph, sources: Iterable[int]) -> List[Optional[int]]:
    """Multi-source BFS distances; None for unreachable vertices"""
    dist: List[Optional[int]] = [None] * G.n
    queue = deque()
    for s in sources:
        if dist[s] is None:
            dist[s] = 0
            queue.append(s)
    while queue:
        v = queue.popleft()
        for u in G.adj[v]:
            if dist[u] is None:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def distance(G: Graph, u: int, v: int) -> Optional[int]:
    """Single-pair shortest path length, None if v is unreachable from u"""
    if u == v:
        return 0
    return bfs_distances(G, [u])[v]


def distance_partition(G: Graph, root: Iterable[int]) -> DistancePartition:
    """
    Distance partition P(G, V_0) by multi-source BFS

    Args:
        G: Connected graph
        root: Non-empty vertex set V_0

    Raises:
        GraphError: Invalid root
        DisconnectedGraphError: Some vertex is unreachable (partition undefined)
    """
    members = VertexSet.of(G, root).members
    dist = bfs_distances(G, members)
    if any(d is None for d in dist):
        raise DisconnectedGraphError("partition undefined: graph is disconnected")

    r = max(dist)
    classes: List[List[int]] = [[] for _ in range(r + 1)]
    for v, d in enumerate(dist):
        classes[d].append(v)
    return DistancePartition(
        host=G,
        classes=tuple(tuple(c) for c in classes),
        levels=tuple(dist),
    )


def distance_sequence(G: Graph, root: Iterable[int]) -> DistanceSequence:
    """Sizes |V_0|, ..., |V_r| of the distance partition"""
    return distance_partition(G, root).sequence()


def residual(G: Graph, root: Iterable[int]) -> ResidualResult:
    """
    Distance-residual graph Res(G, R_G) = <V_r>

    A root covering V(G) gives r = 0 and the residual G itself.
    """
    partition = distance_partition(G, root)
    last = partition.classes[-1]
    return ResidualResult(
        residual=induced_subgraph(G, last),
        d_R=partition.r,
        origin=last,
    )


def vertex_residual(G: Graph, v: int) -> ResidualResult:
    return residual(G, [v])


def edge_residual(G: Graph, u: int, v: int) -> ResidualResult:
    """
    Residual with the K_2 root {u, v}

    Raises:
        GraphError: u and v are not adjacent
    """
    VertexSet.of(G, [u, v])
    if not G.has_edge(u, v):
        raise GraphError(f"edge root needs adjacent vertices, got {u} and {v}")
    return residual(G, [u, v])


def growth_polynomial(G: Graph, v: int) -> List[int]:
    """Coefficients of the growth polynomial at v (distance sequence of {v})"""
    return distance_sequence(G, [v]).as_list()


def is_growth_regular(G: Graph) -> bool:
    """Growth polynomial is the same at every vertex"""
    if G.n == 0:
        return True
    reference = growth_polynomial(G, 0)
    return all(growth_polynomial(G, v) == reference for v in range(1, G.n))
