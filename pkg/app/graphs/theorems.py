"""
Residual Theorems

Closed-form expected residuals for graph products and the bipartite edge
root, plus the two constructions that realize any graph as a residual.

Every function here computes its answer from the factors only; the
verification module compares them against brute-force residuals of the
actual products.
"""
import logging
from typing import Iterable, List, Optional, Sequence, Tuple

from .catalog import cycle
from .core import bipartition, disjoint_union, induced_subgraph, is_connected, is_vertex_transitive
from .metrics import distance_partition, residual
from .products import common_walk_lengths, coordinates, default_walk_bound, product, product_id, product_many
from .types import Graph, GraphError, ProductKind, ResidualResult, TheoremPreconditionError, VertexSet

logger = logging.getLogger(__name__)

RootedGraph = Tuple[Graph, Iterable[int]]


def _require_connected(G: Graph, what: str) -> None:
    if G.n == 0 or not is_connected(G):
        raise TheoremPreconditionError(f"{what} must be connected")


def _factor_residual(G: Graph, root: Iterable[int], what: str) -> ResidualResult:
    _require_connected(G, what)
    return residual(G, root)


# -----------------------------
# Cartesian
# -----------------------------
def expected_cartesian_residual(G: Graph, R_G: Iterable[int], H: Graph, R_H: Iterable[int]) -> Graph:
    """Res(G, R_G) □ Res(H, R_H)"""
    left = _factor_residual(G, R_G, "G")
    right = _factor_residual(H, R_H, "H")
    return product(ProductKind.CARTESIAN, left.residual, right.residual)


def expected_cartesian_nary_residual(factors: Sequence[RootedGraph]) -> Graph:
    """Cartesian product of the factor residuals"""
    if not factors:
        raise GraphError("product of an empty factor list")
    residuals = [_factor_residual(F, R, f"factor {i}").residual for i, (F, R) in enumerate(factors)]
    return product_many(ProductKind.CARTESIAN, residuals)


# -----------------------------
# Strong
# -----------------------------
def strong_case(G: Graph, R_G: Iterable[int], H: Graph, R_H: Iterable[int]) -> str:
    """Compare d_{R_G} with d_{R_H}: "greater", "less" or "equal"."""
    d_G = distance_partition(G, R_G).r
    d_H = distance_partition(H, R_H).r
    if d_G > d_H:
        return "greater"
    if d_G < d_H:
        return "less"
    return "equal"


def expected_strong_residual(G: Graph, R_G: Iterable[int], H: Graph, R_H: Iterable[int]) -> Graph:
    """
    Residual of G ⊠ H with root R_G x R_H

    Distances in the strong product are maxima of factor distances, so the
    farther factor decides:
    - d_{R_G} > d_{R_H}: Res(G, R_G) ⊠ H
    - d_{R_G} < d_{R_H}: G ⊠ Res(H, R_H)
    - equal: induced on V(Res_G) x V(H) ∪ V(G) x V(Res_H) inside G ⊠ H
    """
    left = _factor_residual(G, R_G, "G")
    right = _factor_residual(H, R_H, "H")
    if left.d_R > right.d_R:
        return product(ProductKind.STRONG, left.residual, H)
    if left.d_R < right.d_R:
        return product(ProductKind.STRONG, G, right.residual)

    far_g = set(left.origin)
    far_h = set(right.origin)
    members = [g * H.n + h for g in range(G.n) for h in range(H.n) if g in far_g or h in far_h]
    return induced_subgraph(product(ProductKind.STRONG, G, H), members)


def expected_strong_gmax_residual(factors: Sequence[RootedGraph]) -> Graph:
    """
    Residual of G_1 ⊠ ... ⊠ G_n with the product root

    G_max holds the factors attaining the largest root distance. A single
    member i gives G_1 ⊠ ... ⊠ Res(G_i) ⊠ ... ⊠ G_n; otherwise the residual
    is induced on the product vertices whose i-th coordinate lies in
    Res(G_i) for some i in G_max.
    """
    if not factors:
        raise GraphError("product of an empty factor list")
    graphs = [F for F, _ in factors]
    results = [_factor_residual(F, R, f"factor {i}") for i, (F, R) in enumerate(factors)]
    top = max(res.d_R for res in results)
    g_max = [i for i, res in enumerate(results) if res.d_R == top]

    if len(g_max) == 1:
        i = g_max[0]
        swapped = graphs[:i] + [results[i].residual] + graphs[i + 1:]
        return product_many(ProductKind.STRONG, swapped)

    orders = [F.n for F in graphs]
    far = [set(res.origin) for res in results]
    full = product_many(ProductKind.STRONG, graphs)
    members = [
        v for v in range(full.n)
        if any(c in far[i] for i, c in enumerate(coordinates(v, orders)) if i in g_max)
    ]
    return induced_subgraph(full, members)


# -----------------------------
# Lexicographic
# -----------------------------
def _isolated_root_vertices(G: Graph, R_G: Iterable[int]) -> List[int]:
    """Root vertices with no neighbor inside the root"""
    root = set(VertexSet.of(G, R_G).members)
    return sorted(g for g in root if not (G.neighbors(g) & root))


def _far_from_root(H: Graph, R_H: Iterable[int]) -> List[int]:
    """Vertices of H outside the closed neighborhood of R_H"""
    root = set(VertexSet.of(H, R_H).members)
    near = set(root)
    for h in root:
        near |= H.neighbors(h)
    return [h for h in range(H.n) if h not in near]


def _check_lexicographic(G: Graph, H: Graph) -> None:
    _require_connected(G, "G")
    if G.n < 2:
        raise TheoremPreconditionError("G must be nontrivial")
    if H.n == 0:
        raise TheoremPreconditionError("H must be non-empty")


def lexicographic_case(G: Graph, R_G: Iterable[int], H: Graph, R_H: Iterable[int]) -> str:
    """
    Case of the lexicographic residual

    - "isolated_copies": d_{R_G} <= 1 with isolated root vertices and
      vertices of H beyond distance 1 from R_H
    - "complement": d_{R_G} <= 1 otherwise
    - "union": d_{R_G} = 2
    - "outer": d_{R_G} >= 3
    """
    d_G = distance_partition(G, R_G).r
    if d_G >= 3:
        return "outer"
    if d_G == 2:
        return "union"
    if _isolated_root_vertices(G, R_G) and _far_from_root(H, R_H):
        return "isolated_copies"
    return "complement"


def expected_lexicographic_residual(G: Graph, R_G: Iterable[int], H: Graph, R_H: Iterable[int]) -> Graph:
    """
    Residual of G ∘ H with root R_G x R_H

    Args:
        G: Connected nontrivial outer factor
        R_G: Root in G
        H: Inner factor, possibly disconnected
        R_H: Root in H

    Raises:
        TheoremPreconditionError: G disconnected or trivial, H empty
    """
    _check_lexicographic(G, H)
    outer = distance_partition(G, R_G)
    isolated = _isolated_root_vertices(G, R_G)
    far = _far_from_root(H, R_H)
    copies = [induced_subgraph(H, far)] * len(isolated) if far else []

    if outer.r >= 2:
        res_g = induced_subgraph(G, outer.classes[-1])
        blown_up = product(ProductKind.LEXICOGRAPHIC, res_g, H)
        if outer.r == 2 and copies:
            return disjoint_union([blown_up] + copies)
        return blown_up

    if copies:
        return disjoint_union(copies)

    root_g = set(outer.classes[0])
    root_h = set(VertexSet.of(H, R_H).members)
    full = product(ProductKind.LEXICOGRAPHIC, G, H)
    members = [g * H.n + h for g in range(G.n) for h in range(H.n) if not (g in root_g and h in root_h)]
    if not members:
        return full
    return induced_subgraph(full, members)


def expected_lexicographic_nary_residual(factors: Sequence[RootedGraph]) -> Graph:
    """
    Res(G_1, R_1) ∘ G_2 ∘ ... ∘ G_n

    Raises:
        TheoremPreconditionError: d_{R_1} < 3, or G_1 disconnected or trivial
    """
    if not factors:
        raise GraphError("product of an empty factor list")
    G1, R1 = factors[0]
    rest = [F for F, _ in factors[1:]]
    _check_lexicographic(G1, rest[0] if rest else Graph.empty(1))
    first = residual(G1, R1)
    if first.d_R < 3 and rest:
        raise TheoremPreconditionError(f"outer root distance {first.d_R} is below 3")
    return product_many(ProductKind.LEXICOGRAPHIC, [first.residual] + rest)


# -----------------------------
# Bipartite edge root
# -----------------------------
def _check_bipartite_edge(G: Graph, u: int, v: int) -> Tuple[int, int]:
    VertexSet.of(G, [u, v])
    if not G.has_edge(u, v):
        raise TheoremPreconditionError(f"{u} and {v} are not adjacent")
    if G.n == 2:
        raise TheoremPreconditionError("edge residual of K_2 is excluded")
    _require_connected(G, "G")
    if bipartition(G) is None:
        raise TheoremPreconditionError("G is not bipartite")
    d_u = distance_partition(G, [u]).r
    d_v = distance_partition(G, [v]).r
    if abs(d_u - d_v) > 1:
        raise TheoremPreconditionError(f"vertex residual distances {d_u} and {d_v} differ by more than 1")
    return d_u, d_v


def bipartite_edge_case(G: Graph, u: int, v: int) -> str:
    """Compare d_u with d_v: "equal", "u_farther" or "v_farther"."""
    d_u, d_v = _check_bipartite_edge(G, u, v)
    if d_u == d_v:
        return "equal"
    return "u_farther" if d_u > d_v else "v_farther"


def expected_bipartite_edge_residual(G: Graph, u: int, v: int) -> Graph:
    """
    Edge residual of a connected bipartite graph from its vertex residuals

    - d_u = d_v: induced on V(Res(G, {u})) ∪ V(Res(G, {v}))
    - d_u = d_v + 1: Res(G, {u})
    - d_v = d_u + 1: Res(G, {v})

    Raises:
        TheoremPreconditionError: Non-bipartite, disconnected, K_2 or u, v not adjacent
    """
    d_u, d_v = _check_bipartite_edge(G, u, v)
    at_u = residual(G, [u])
    at_v = residual(G, [v])
    if d_u > d_v:
        return at_u.residual
    if d_v > d_u:
        return at_v.residual
    return induced_subgraph(G, set(at_u.origin) | set(at_v.origin))


# -----------------------------
# Direct
# -----------------------------
def direct_root_distances(
    G: Graph, R_G: Iterable[int], H: Graph, R_H: Iterable[int], L: Optional[int] = None
) -> List[Optional[int]]:
    """
    Distance of each vertex of G x H from R_G x R_H, by common walk lengths

    Entry g * |V(H)| + h is the smallest l with a walk of length l from R_G
    to g and one from R_H to h, or None if there is none up to L.
    """
    roots = [VertexSet.of(G, R_G).members, VertexSet.of(H, R_H).members]
    bound = default_walk_bound([G, H]) if L is None else L
    result: List[Optional[int]] = []
    for g in range(G.n):
        for h in range(H.n):
            common = common_walk_lengths([G, H], roots, [[g], [h]], bound)
            result.append((common & -common).bit_length() - 1 if common else None)
    return result


def expected_direct_residual(G: Graph, R_G: Iterable[int], H: Graph, R_H: Iterable[int]) -> Graph:
    """
    Residual of G x H with root R_G x R_H, built from factor walk lengths

    The residual is induced on the vertices farthest from the root; its
    edges are pairs adjacent in both factors.

    Raises:
        TheoremPreconditionError: A factor is disconnected, or both are bipartite
    """
    _require_connected(G, "G")
    _require_connected(H, "H")
    if G.n > 1 and H.n > 1 and bipartition(G) is not None and bipartition(H) is not None:
        raise TheoremPreconditionError("direct product of two bipartite graphs is disconnected")

    dist = direct_root_distances(G, R_G, H, R_H)
    if any(d is None for d in dist):
        raise TheoremPreconditionError("direct product is disconnected")
    top = max(dist)
    members = [x for x, d in enumerate(dist) if d == top]
    index = {x: i for i, x in enumerate(members)}
    edges = []
    for x in members:
        g, h = divmod(x, H.n)
        for a in G.adj[g]:
            for b in H.adj[h]:
                y = product_id((a, b), (G.n, H.n))
                if y in index and x < y:
                    edges.append((index[x], index[y]))
    labels = [f"({G.label(x // H.n)},{H.label(x % H.n)})" for x in members]
    return Graph.from_edges(len(members), edges, labels=labels)


def direct_example_factors() -> Tuple[RootedGraph, RootedGraph]:
    """
    P_3 rooted at an end vertex, and K_3 with a pendant edge on each vertex
    rooted at a pendant vertex

    Vertex ids: P_3 is 0-1-2; the triangle is 0, 1, 2 with pendants 3-0,
    4-1 and 5-2. The residual of the direct product is the single vertex
    (1, 3), product id 9.
    """
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    crown = Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])
    return (path, (0,)), (crown, (3,))


# -----------------------------
# Embeddings
# -----------------------------
def embed_as_residual(H: Graph, n: int, root_graph: Optional[Graph] = None) -> Tuple[Graph, VertexSet]:
    """
    Join of H with a root graph of order n

    H keeps ids 0..|H|-1 and the root takes the next n ids; every root
    vertex is adjacent to every vertex of H, so the residual is H at
    distance 1.

    Args:
        H: Non-empty target residual
        n: Root order
        root_graph: Root graph (default n isolated vertices)

    Returns:
        (G, root vertex set)
    """
    if H.n == 0:
        raise GraphError("H must be non-empty")
    if n < 1:
        raise GraphError(f"root order must be positive, got {n}")
    root_graph = root_graph if root_graph is not None else Graph.empty(n)
    if root_graph.n != n:
        raise GraphError(f"root graph has order {root_graph.n}, expected {n}")

    edges = list(H.edges)
    edges.extend((H.n + a, H.n + b) for a, b in root_graph.edges)
    edges.extend((h, H.n + r) for h in range(H.n) for r in range(n))
    labels = [f"H:{H.label(h)}" for h in range(H.n)] + [f"R:{r}" for r in range(n)]
    G = Graph.from_edges(H.n + n, edges, labels=labels)
    return G, VertexSet(members=tuple(range(H.n, H.n + n)))


def vt_embed_as_residual(H: Graph, n: int) -> Tuple[Graph, VertexSet]:
    """
    C_{n+5} ∘ H with root (n consecutive cycle vertices) x (H vertex 0)

    The cycle vertex opposite the root path is the only one at distance 3,
    so the residual is K_1 ∘ H = H, and G is vertex-transitive with H.

    Raises:
        TheoremPreconditionError: H is not vertex-transitive
    """
    if n < 1:
        raise GraphError(f"root order must be positive, got {n}")
    if H.n == 0 or not is_vertex_transitive(H):
        raise TheoremPreconditionError("H must be vertex-transitive")
    G = product(ProductKind.LEXICOGRAPHIC, cycle(n + 5), H)
    root = VertexSet(members=tuple(c * H.n for c in range(n)))
    logger.debug("Vertex-transitive embedding: n=%d, |H|=%d, |G|=%d", n, H.n, G.n)
    return G, root
