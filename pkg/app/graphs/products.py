"""
Graph Products

Cartesian, strong, lexicographic and direct products with row-major vertex
ids: vertex (g, h) of a product of G and H has id g * |V(H)| + h, the first
factor outer. The direct-product distance is computed from factor walk-length
profiles.
"""
import logging
import math
from functools import lru_cache
from itertools import product as cartesian_tuples
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .types import Graph, GraphError, ProductKind, VertexSet, WalkLengthProfile

logger = logging.getLogger(__name__)

Distance = Union[int, float]


# -----------------------------
# Row-major indexing
# -----------------------------
def product_id(coords: Sequence[int], orders: Sequence[int]) -> int:
    """Row-major id of a coordinate tuple"""
    if len(coords) != len(orders):
        raise GraphError(f"{len(coords)} coordinates for {len(orders)} factors")
    index = 0
    for c, n in zip(coords, orders):
        if not 0 <= c < n:
            raise GraphError(f"coordinate {c} out of range for factor of order {n}")
        index = index * n + c
    return index


def coordinates(index: int, orders: Sequence[int]) -> Tuple[int, ...]:
    """Inverse of product_id"""
    total = math.prod(orders)
    if not 0 <= index < total:
        raise GraphError(f"product vertex {index} out of range for order {total}")
    coords = []
    for n in reversed(orders):
        index, c = divmod(index, n)
        coords.append(c)
    return tuple(reversed(coords))


def product_root(roots: Sequence[Iterable[int]], orders: Sequence[int]) -> VertexSet:
    """Set product R_1 x ... x R_k of factor roots as product vertex ids"""
    if len(roots) != len(orders):
        raise GraphError(f"{len(roots)} roots for {len(orders)} factors")
    members = [sorted(set(r)) for r in roots]
    ids = [product_id(coords, orders) for coords in cartesian_tuples(*members)]
    if not ids:
        raise GraphError("empty vertex set")
    return VertexSet(members=tuple(sorted(ids)))


# -----------------------------
# Constructions
# -----------------------------
def _expected_edge_count(kind: ProductKind, G: Graph, H: Graph) -> int:
    if kind is ProductKind.CARTESIAN:
        return G.m * H.n + G.n * H.m
    if kind is ProductKind.STRONG:
        return G.m * H.n + G.n * H.m + 2 * G.m * H.m
    if kind is ProductKind.DIRECT:
        return 2 * G.m * H.m
    return G.m * H.n * H.n + G.n * H.m


def product(kind: Union[ProductKind, str], G: Graph, H: Graph) -> Graph:
    """
    Binary graph product

    Args:
        kind: Product kind (lexicographic is G[H], G outer)
        G: First (outer) factor
        H: Second (inner) factor

    Returns:
        Product graph with vertex (g, h) at id g * |V(H)| + h

    Raises:
        GraphError: Empty factor
    """
    kind = ProductKind.parse(kind) if isinstance(kind, str) else kind
    if G.n == 0 or H.n == 0:
        raise GraphError("product factors must be non-empty")

    k = H.n
    edges: List[Tuple[int, int]] = []
    if kind is not ProductKind.DIRECT:
        # moves inside one copy of H
        edges.extend((g * k + a, g * k + b) for g in range(G.n) for a, b in H.edges)
    if kind in (ProductKind.CARTESIAN, ProductKind.STRONG):
        edges.extend((a * k + h, b * k + h) for a, b in G.edges for h in range(k))
    if kind in (ProductKind.STRONG, ProductKind.DIRECT):
        for a, b in G.edges:
            for x, y in H.edges:
                edges.append((a * k + x, b * k + y))
                edges.append((a * k + y, b * k + x))
    if kind is ProductKind.LEXICOGRAPHIC:
        edges.extend((a * k + x, b * k + y) for a, b in G.edges for x in range(k) for y in range(k))

    labels = [f"({G.label(g)},{H.label(h)})" for g in range(G.n) for h in range(k)]
    result = Graph.from_edges(G.n * k, edges, labels=labels)

    expected = _expected_edge_count(kind, G, H)
    if result.m != expected:
        raise GraphError(f"{kind.value} product has {result.m} edges, expected {expected}")
    logger.debug("%s product: %d x %d -> n=%d, m=%d", kind.value, G.n, H.n, result.n, result.m)
    return result


def product_many(kind: Union[ProductKind, str], factors: Sequence[Graph]) -> Graph:
    """
    Left fold of product over factors

    Vertex ids are row-major over all factors; labels are flat tuples
    "(a,b,c)".

    Raises:
        GraphError: Empty factor list
    """
    if not factors:
        raise GraphError("product of an empty factor list")
    kind = ProductKind.parse(kind) if isinstance(kind, str) else kind
    result = factors[0]
    for H in factors[1:]:
        result = product(kind, result, H)
    if len(factors) == 1:
        return result

    orders = [F.n for F in factors]
    labels = [
        "(" + ",".join(F.label(c) for F, c in zip(factors, coordinates(v, orders))) + ")"
        for v in range(result.n)
    ]
    return Graph(n=result.n, adj=result.adj, labels=tuple(labels))


# -----------------------------
# Direct-product distances
# -----------------------------
def default_walk_bound(factors: Sequence[Graph]) -> int:
    """2 * sum of factor orders"""
    return 2 * sum(F.n for F in factors)


@lru_cache(maxsize=1024)
def _walk_masks(G: Graph, u: int, bound: int) -> Tuple[int, ...]:
    """frontiers[l] = bitset of vertices ending a u-walk of length exactly l"""
    neighbor_masks = [sum(1 << w for w in row) for row in G.adj]
    frontier = 1 << u
    frontiers = [frontier]
    for _ in range(bound):
        nxt = 0
        rest = frontier
        while rest:
            low = rest & -rest
            nxt |= neighbor_masks[low.bit_length() - 1]
            rest ^= low
        frontier = nxt
        frontiers.append(frontier)
    return tuple(frontiers)


def walk_length_profile(G: Graph, u: int, v: int, L: Optional[int] = None) -> WalkLengthProfile:
    """
    Achievable u-v walk lengths 0..L

    stable_from is the smallest l0 with every length in l0..L achievable,
    set only when both parities are achievable at the tail (L-1 and L);
    parity_mix mirrors it.

    Args:
        G: Graph
        u, v: Endpoints
        L: Length bound, default 2 * |V(G)|

    Raises:
        GraphError: Invalid endpoint or L < 1
    """
    VertexSet.of(G, [u, v])
    bound = default_walk_bound([G]) if L is None else L
    if bound < 1:
        raise GraphError(f"walk length bound must be positive, got {bound}")

    target = 1 << v
    mask = 0
    for length, frontier in enumerate(_walk_masks(G, u, bound)):
        if frontier & target:
            mask |= 1 << length

    threshold = (mask & -mask).bit_length() - 1 if mask else None
    stable_from = None
    if mask >> (bound - 1) & 1 and mask >> bound & 1:
        stable_from = bound
        while stable_from > 0 and mask >> (stable_from - 1) & 1:
            stable_from -= 1
    return WalkLengthProfile(
        u=u,
        v=v,
        bound=bound,
        mask=mask,
        threshold=threshold,
        parity_mix=stable_from is not None,
        stable_from=stable_from,
    )


def common_walk_lengths(
    factors: Sequence[Graph],
    sources: Sequence[Iterable[int]],
    targets: Sequence[Iterable[int]],
    L: int,
) -> int:
    """
    Bitset of lengths l <= L such that every factor i has a walk of length l
    from some vertex of sources[i] to some vertex of targets[i]
    """
    common = (1 << (L + 1)) - 1
    for F, src, dst in zip(factors, sources, targets):
        target = sum(1 << w for w in set(dst))
        mask = 0
        for s in set(src):
            for length, frontier in enumerate(_walk_masks(F, s, L)):
                if frontier & target:
                    mask |= 1 << length
        common &= mask
        if not common:
            break
    return common


def direct_distance(
    factors: Sequence[Graph],
    x: Sequence[int],
    y: Sequence[int],
    L: Optional[int] = None,
) -> Distance:
    """
    Distance between x and y in the direct product of factors

    The smallest m <= L such that every factor has an x_i-y_i walk of
    length exactly m; math.inf if there is none.

    Raises:
        GraphError: Coordinate count or range mismatch
    """
    if not factors:
        raise GraphError("direct distance needs at least one factor")
    if len(x) != len(factors) or len(y) != len(factors):
        raise GraphError(f"coordinates must have {len(factors)} components")
    for F, a, b in zip(factors, x, y):
        VertexSet.of(F, [a, b])
    bound = default_walk_bound(factors) if L is None else L
    if tuple(x) == tuple(y):
        return 0

    common = common_walk_lengths(factors, [[a] for a in x], [[b] for b in y], bound)
    if not common:
        return math.inf
    return (common & -common).bit_length() - 1
