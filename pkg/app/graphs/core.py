"""
Graph Core Operations

Induced subgraphs, connectivity, bipartition, line graphs and the
transitivity predicates built on the automorphism search.
"""
import logging
from collections import deque
from typing import Iterable, List, Optional, Sequence, Tuple

from .isomorphism import are_isomorphic, automorphism_orbits
from .types import Graph, GraphError, VertexSet

logger = logging.getLogger(__name__)

__all__ = [
    "induced_subgraph",
    "is_connected",
    "components",
    "bipartition",
    "line_graph",
    "are_isomorphic",
    "automorphism_orbits",
    "is_vertex_transitive",
    "is_edge_transitive",
    "is_semisymmetric",
    "is_regular",
    "degree_sequence",
    "disjoint_union",
]


def induced_subgraph(G: Graph, S: Iterable[int]) -> Graph:
    """
    Subgraph induced on S, relabeled 0..|S|-1 in sorted order of S

    Labels record the original vertex labels (ids when G is unlabeled).

    Raises:
        GraphError: "empty vertex set" or ids outside G
    """
    members = VertexSet.of(G, S).members
    index = {v: i for i, v in enumerate(members)}
    edges = [
        (i, index[u])
        for i, v in enumerate(members)
        for u in G.adj[v]
        if u in index and v < u
    ]
    return Graph.from_edges(len(members), edges, labels=[G.label(v) for v in members])


def _reach(G: Graph, start: int) -> List[int]:
    seen = [False] * G.n
    seen[start] = True
    order = [start]
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in G.adj[v]:
            if not seen[u]:
                seen[u] = True
                order.append(u)
                queue.append(u)
    return order


def is_connected(G: Graph) -> bool:
    """True iff one BFS from vertex 0 reaches every vertex"""
    if G.n < 1:
        raise GraphError("connectivity needs at least one vertex")
    return len(_reach(G, 0)) == G.n


def components(G: Graph) -> List[Tuple[int, ...]]:
    """Vertex sets of the connected components, ordered by smallest member"""
    seen = [False] * G.n
    result = []
    for v in range(G.n):
        if not seen[v]:
            part = _reach(G, v)
            for u in part:
                seen[u] = True
            result.append(tuple(sorted(part)))
    return result


def bipartition(G: Graph) -> Optional[Tuple[VertexSet, VertexSet]]:
    """
    Two-coloring of a connected graph

    Returns:
        (P_1, P_2) with 0 in P_1 and every edge crossing, or None if G has an odd cycle

    Raises:
        GraphError: G disconnected (partition not unique) or of order < 2
    """
    if G.n < 2:
        raise GraphError("bipartition needs at least two vertices")
    if not is_connected(G):
        raise GraphError("bipartition of a disconnected graph is not unique")

    side = [-1] * G.n
    side[0] = 0
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in G.adj[v]:
            if side[u] < 0:
                side[u] = 1 - side[v]
                queue.append(u)
            elif side[u] == side[v]:
                return None
    first = [v for v in range(G.n) if side[v] == 0]
    second = [v for v in range(G.n) if side[v] == 1]
    return VertexSet.of(G, first), VertexSet.of(G, second)


def line_graph(G: Graph) -> Graph:
    """
    L(G): one vertex per edge of G (lexicographic pair order), adjacent iff the edges share an endpoint

    Raises:
        GraphError: G has no edges
    """
    edges = G.edges
    if not edges:
        raise GraphError("line graph of an edgeless graph")
    incident: List[List[int]] = [[] for _ in range(G.n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    pairs = [(a, b) for group in incident for k, a in enumerate(group) for b in group[k + 1:]]
    labels = [f"{G.label(u)}-{G.label(v)}" for u, v in edges]
    return Graph.from_edges(len(edges), pairs, labels=labels)


def degree_sequence(G: Graph) -> List[int]:
    return sorted((G.degree(v) for v in range(G.n)), reverse=True)


def is_regular(G: Graph) -> bool:
    return len({G.degree(v) for v in range(G.n)}) <= 1


def is_vertex_transitive(G: Graph) -> bool:
    """Aut(G) has a single vertex orbit"""
    if G.n <= 1:
        return True
    if not is_regular(G):
        return False
    return len(automorphism_orbits(G.without_labels()).vertex_orbits) == 1


def is_edge_transitive(G: Graph) -> bool:
    """
    Aut(G) has a single edge orbit

    Raises:
        GraphError: G has no edges
    """
    if G.m == 0:
        raise GraphError("edge transitivity of an edgeless graph")
    return len(automorphism_orbits(G.without_labels()).edge_orbits) == 1


def is_semisymmetric(G: Graph) -> bool:
    """Regular, edge-transitive and not vertex-transitive"""
    if G.m == 0 or not is_regular(G):
        return False
    return is_edge_transitive(G) and not is_vertex_transitive(G)


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    """Disjoint union with vertices numbered block by block"""
    edges = []
    labels = []
    offset = 0
    for k, H in enumerate(graphs):
        edges.extend((u + offset, v + offset) for u, v in H.edges)
        labels.extend(f"{k}:{H.label(v)}" for v in range(H.n))
        offset += H.n
    return Graph.from_edges(offset, edges, labels=labels)
