"""
Isomorphism and Automorphism Search

Exact search by individualization-refinement:
- color refinement (degree within class) to the coarsest equitable partition
- a search tree individualizing vertices of the first smallest non-singleton
  cell; every leaf is a discrete coloring, i.e. a relabeling of the graph
- the least leaf (by cell-size trace, then relabeled graph) is the canonical
  form; two colored graphs are isomorphic iff their canonical forms agree
- leaves giving the same relabeled graph yield automorphisms, which prune
  equivalent subtrees; the automorphisms found generate the full group
- disconnected graphs are labeled component by component
"""
import logging
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from app.utils.config import config
from .types import Graph, IsoCertificate, OrbitPartition

logger = logging.getLogger(__name__)

# (colors by canonical position, relabeled edge list)
Certificate = Tuple[Tuple[int, ...], Tuple[Tuple[int, int], ...]]


def refine(adj: Sequence[Sequence[int]], colors: Sequence[int]) -> List[int]:
    """
    Refine a vertex coloring until it is equitable

    New colors are ranks of sorted signatures (own color, neighbor color
    multiset), so the result depends only on the colored structure: two
    isomorphic colored graphs refine to corresponding colors.
    """
    current = list(colors)
    count = len(set(current))
    while True:
        signatures = [(current[v], tuple(sorted(current[u] for u in row))) for v, row in enumerate(adj)]
        ranks = {sig: rank for rank, sig in enumerate(sorted(set(signatures)))}
        refined = [ranks[sig] for sig in signatures]
        if len(ranks) == count:
            return refined
        current, count = refined, len(ranks)


def _certificate(G: Graph, colors: Sequence[int], labeling: Sequence[int]) -> Certificate:
    by_position = [0] * G.n
    for v, position in enumerate(labeling):
        by_position[position] = colors[v]
    edges = sorted(
        (labeling[u], labeling[v]) if labeling[u] < labeling[v] else (labeling[v], labeling[u])
        for u, v in G.edges
    )
    return tuple(by_position), tuple(edges)


def _inverse(labeling: Sequence[int]) -> List[int]:
    inverse = [0] * len(labeling)
    for v, position in enumerate(labeling):
        inverse[position] = v
    return inverse


class _DisjointSets:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)

    def absorb(self, sigma: Sequence[int]) -> None:
        for x, y in enumerate(sigma):
            self.union(x, y)

    def groups(self, size: int) -> List[List[int]]:
        by_root: Dict[int, List[int]] = {}
        for x in range(size):
            by_root.setdefault(self.find(x), []).append(x)
        return sorted(by_root.values())


class _CanonicalSearch:
    """Search tree of one connected colored graph"""

    def __init__(self, G: Graph, colors: Sequence[int]):
        self.G = G
        self.colors = list(colors)
        self.best_trace: Optional[List[Tuple[int, ...]]] = None
        self.best: Optional[Tuple[Certificate, List[int]]] = None
        self.leaves: Dict[Certificate, Tuple[List[int], List[int]]] = {}
        self.generators: List[List[int]] = []
        self.nodes = 0

    def run(self) -> Tuple[List[int], Certificate]:
        self._visit(self.colors, [], [])
        labeling, certificate = self.best[1], self.best[0]
        logger.debug("Canonical search visited %d nodes (n=%d, %d generators)",
                     self.nodes, self.G.n, len(self.generators))
        return labeling, certificate

    def _leaf(self, labeling: List[int], path: List[int], trace: List[Tuple[int, ...]]) -> Optional[int]:
        certificate = _certificate(self.G, self.colors, labeling)
        if self.best is None or (trace, certificate) < (self.best_trace, self.best[0]):
            self.best_trace, self.best = trace, (certificate, labeling)

        stored = self.leaves.get(certificate)
        if stored is None:
            self.leaves[certificate] = (labeling, path)
            return None

        first, first_path = stored
        inverse = _inverse(labeling)
        sigma = [inverse[position] for position in first]
        if sigma == list(range(self.G.n)):
            return None
        self.generators.append(sigma)
        if all(sigma[a] == b for a, b in zip(first_path, path)):
            # the whole subtree below the divergence is an image of an explored one
            return next((depth for depth, (a, b) in enumerate(zip(first_path, path)) if a != b), None)
        return None

    def _stabilizer_orbits(self, path: List[int]) -> _DisjointSets:
        orbits = _DisjointSets(self.G.n)
        for sigma in self.generators:
            if all(sigma[v] == v for v in path):
                orbits.absorb(sigma)
        return orbits

    def _visit(self, colors: List[int], path: List[int], trace: List[Tuple[int, ...]]) -> Optional[int]:
        """Explore a node; returns the depth to unwind to when a subtree is pruned"""
        self.nodes += 1
        colors = refine(self.G.adj, colors)
        sizes = [0] * (max(colors) + 1)
        for c in colors:
            sizes[c] += 1
        trace = trace + [tuple(sizes)]
        if self.best_trace is not None and trace > self.best_trace[:len(trace)]:
            return None

        if len(sizes) == self.G.n:
            return self._leaf(colors, path, trace)

        target = min((size, c) for c, size in enumerate(sizes) if size > 1)[1]
        cell = [v for v, c in enumerate(colors) if c == target]
        explored: List[int] = []
        for v in cell:
            if explored and self.generators:
                orbits = self._stabilizer_orbits(path)
                if any(orbits.find(v) == orbits.find(u) for u in explored):
                    continue
            explored.append(v)
            trial = list(colors)
            trial[v] = self.G.n
            unwind = self._visit(trial, path + [v], trace)
            if unwind is not None and unwind < len(path):
                return unwind
        return None


def _components(G: Graph) -> List[List[int]]:
    seen = [False] * G.n
    parts: List[List[int]] = []
    for start in range(G.n):
        if seen[start]:
            continue
        seen[start] = True
        stack, part = [start], []
        while stack:
            v = stack.pop()
            part.append(v)
            for u in G.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        parts.append(sorted(part))
    return parts


def _restrict(G: Graph, part: Sequence[int]) -> Graph:
    index = {v: i for i, v in enumerate(part)}
    return Graph.from_edges(len(part), [(index[u], index[v]) for u, v in G.edges if u in index])


@lru_cache(maxsize=512)
def _connected_search(G: Graph, colors: Tuple[int, ...]) -> Tuple[Tuple[int, ...], Certificate, Tuple[Tuple[int, ...], ...]]:
    search = _CanonicalSearch(G, colors)
    labeling, certificate = search.run()
    return tuple(labeling), certificate, tuple(tuple(s) for s in search.generators)


def _component_labelings(G: Graph, colors: Sequence[int]):
    """Components sorted by certificate, each with its local canonical labeling and generators"""
    labeled = []
    for part in _components(G):
        sub = _restrict(G, part)
        labeling, certificate, generators = _connected_search(sub, tuple(colors[v] for v in part))
        labeled.append((certificate, part, labeling, generators))
    labeled.sort(key=lambda item: item[0])
    return labeled


def canonical_labeling(G: Graph, colors: Optional[Sequence[int]] = None) -> Tuple[List[int], Certificate]:
    """
    Canonical relabeling of a colored graph

    Returns:
        (labeling, certificate): labeling[v] is the canonical position of v;
        colored graphs are isomorphic iff their certificates are equal
    """
    colors = list(colors) if colors is not None else [0] * G.n
    labeling = [0] * G.n
    offset = 0
    for _, part, local, _ in _component_labelings(G, colors):
        for i, v in enumerate(part):
            labeling[v] = offset + local[i]
        offset += len(part)
    return labeling, _certificate(G, colors, labeling)


def _warn_if_large(n: int, what: str) -> None:
    if n > config.DISTRES_MAX_ORDER:
        logger.warning("%s on %d vertices exceeds the tested bound %d; search may be slow",
                       what, n, config.DISTRES_MAX_ORDER)


def find_isomorphism(
    left: Graph,
    right: Graph,
    left_colors: Optional[Sequence[int]] = None,
    right_colors: Optional[Sequence[int]] = None,
) -> Optional[List[int]]:
    """
    Find a color-preserving isomorphism left -> right

    Args:
        left, right: Graphs to compare (labels are ignored)
        left_colors, right_colors: Optional initial vertex colors

    Returns:
        mapping with mapping[v] = image of v, or None
    """
    if left.n != right.n or left.m != right.m:
        return None
    if left.n == 0:
        return []
    _warn_if_large(left.n, "Isomorphism search")
    left_colors = list(left_colors) if left_colors is not None else [0] * left.n
    right_colors = list(right_colors) if right_colors is not None else [0] * right.n

    # refinement of the disjoint union rejects most pairs without a search
    union = [list(row) for row in left.adj] + [[u + left.n for u in row] for row in right.adj]
    joint = refine(union, left_colors + right_colors)
    if sorted(joint[:left.n]) != sorted(joint[left.n:]):
        return None

    left_labeling, left_certificate = canonical_labeling(left.without_labels(), left_colors)
    right_labeling, right_certificate = canonical_labeling(right.without_labels(), right_colors)
    if left_certificate != right_certificate:
        return None
    inverse = _inverse(right_labeling)
    return [inverse[position] for position in left_labeling]


def are_isomorphic(G: Graph, H: Graph) -> IsoCertificate:
    """Exact isomorphism test with a verifiable certificate"""
    mapping = find_isomorphism(G, H)
    return IsoCertificate(mapping=tuple(mapping) if mapping is not None else None)


def _generators(G: Graph) -> List[List[int]]:
    """Generating set of Aut(G): per-component generators plus swaps of isomorphic components"""
    generators: List[List[int]] = []
    components = _component_labelings(G, [0] * G.n)
    for _, part, _, local_generators in components:
        for local in local_generators:
            sigma = list(range(G.n))
            for i, v in enumerate(part):
                sigma[v] = part[local[i]]
            generators.append(sigma)
    for (cert_a, part_a, lab_a, _), (cert_b, part_b, lab_b, _) in zip(components, components[1:]):
        if cert_a != cert_b:
            continue
        at_a, at_b = _inverse(lab_a), _inverse(lab_b)
        sigma = list(range(G.n))
        for position in range(len(part_a)):
            x, y = part_a[at_a[position]], part_b[at_b[position]]
            sigma[x], sigma[y] = y, x
        generators.append(sigma)
    return generators


@lru_cache(maxsize=64)
def automorphism_orbits(G: Graph) -> OrbitPartition:
    """Vertex and edge orbits of Aut(G), closed under a generating set found by the canonical search"""
    n = G.n
    _warn_if_large(n, "Orbit computation")
    generators = _generators(G.without_labels())

    vertex_sets = _DisjointSets(n)
    for sigma in generators:
        vertex_sets.absorb(sigma)

    edges = G.edges
    position = {e: i for i, e in enumerate(edges)}
    edge_sets = _DisjointSets(len(edges))
    for sigma in generators:
        for i, (a, b) in enumerate(edges):
            x, y = sigma[a], sigma[b]
            edge_sets.union(i, position[(x, y) if x < y else (y, x)])

    vertex_orbits = tuple(tuple(group) for group in vertex_sets.groups(n))
    edge_orbits = tuple(tuple(edges[i] for i in group) for group in edge_sets.groups(len(edges)))
    logger.debug("Orbits of graph (n=%d): %d vertex, %d edge, %d generators",
                 n, len(vertex_orbits), len(edge_orbits), len(generators))
    return OrbitPartition(
        vertex_orbits=vertex_orbits,
        edge_orbits=edge_orbits,
        generators=tuple(tuple(s) for s in generators),
    )
