"""
Graph Catalog

Named graphs and parameterized families used throughout the toolkit:
complete graphs, cycles, paths, hypercubes, generalized Petersen graphs,
the Clebsch graph, and the semisymmetric Gray, Folkman and Ljubljana graphs
together with the W(3) incidence graph.

Every generated graph is checked against its expected order and degree;
the data-file graphs are additionally validated by their distance
sequences and semisymmetry.
"""
import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as cartesian_tuples
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Set, Tuple, Union

from app.utils.config import config
from .core import is_semisymmetric, is_regular
from .graph6 import read_graph6_file
from .metrics import distance_sequence
from .types import CatalogEntry, CatalogError, Graph, Graph6Error

logger = logging.getLogger(__name__)

LJUBLJANA_FILE = "ljubljana.g6"
FOLKMAN_FILE = "folkman.lcf"

LJUBLJANA_SEQUENCES = {(1, 3, 6, 12, 24, 34, 24, 7, 1), (1, 3, 6, 12, 24, 34, 25, 7)}
FOLKMAN_SEQUENCES = {(1, 4, 9, 6), (1, 4, 6, 6, 3)}


# -----------------------------
# Families
# -----------------------------
def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for j in range(n) for i in range(j)])


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n}; the first part is 0..m-1"""
    return Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise CatalogError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """P_n on n vertices"""
    if n < 1:
        raise CatalogError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def hypercube(d: int) -> Graph:
    """Q_d: bit strings of length d, adjacent at Hamming distance 1"""
    if d < 0:
        raise CatalogError(f"hypercube dimension must be non-negative, got {d}")
    n = 1 << d
    return Graph.from_edges(n, [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if not v >> b & 1])


def generalized_petersen(n: int, k: int) -> Graph:
    """
    P(n, k): outer cycle 0..n-1, inner vertices n..2n-1 joined i ~ i+k, spokes i ~ n+i

    Raises:
        CatalogError: Unless n >= 3 and 1 <= k < n/2
    """
    if n < 3 or not 1 <= k or not 2 * k < n:
        raise CatalogError(f"generalized_petersen needs n >= 3 and 1 <= k < n/2, got ({n}, {k})")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((n + i, n + (i + k) % n))
        edges.append((i, n + i))
    return Graph.from_edges(2 * n, edges)


def petersen() -> Graph:
    return generalized_petersen(5, 2)


def clebsch() -> Graph:
    """4-bit strings adjacent at Hamming distance 1 or 4"""
    edges = [(u, v) for u in range(16) for v in range(u + 1, 16) if bin(u ^ v).count("1") in (1, 4)]
    return Graph.from_edges(16, edges)


def gray() -> Graph:
    """
    Levi graph of the 3x3x3 grid: 27 cells vs 27 axis-parallel lines

    Cell (x, y, z) is 9x + 3y + z; the line along axis a through the cell
    is 27 + 9a + (index of the two fixed coordinates).
    """
    edges = []
    for x, y, z in cartesian_tuples(range(3), repeat=3):
        cell = 9 * x + 3 * y + z
        edges.append((cell, 27 + 3 * y + z))
        edges.append((cell, 36 + 3 * x + z))
        edges.append((cell, 45 + 3 * x + y))
    return Graph.from_edges(54, edges)


def _symplectic(p: Sequence[int], q: Sequence[int]) -> int:
    return (p[0] * q[2] - p[2] * q[0] + p[1] * q[3] - p[3] * q[1]) % 3


def _normalize(vector: Sequence[int]) -> Tuple[int, ...]:
    lead = next(c for c in vector if c)
    # over the 3-element field every nonzero scalar is its own inverse
    return tuple(c * lead % 3 for c in vector)


def w3_incidence() -> Graph:
    """
    Levi graph of the symplectic generalized quadrangle W(3)

    Points 0..39 are the projective points of the 4-dim space over the
    3-element field (first nonzero coordinate 1); lines 40..79 are the
    totally isotropic lines of the form x0y2 - x2y0 + x1y3 - x3y1, sorted by
    their point sets.
    """
    points = [v for v in cartesian_tuples(range(3), repeat=4) if any(v) and next(c for c in v if c) == 1]
    index = {p: i for i, p in enumerate(points)}

    lines: Set[Tuple[int, ...]] = set()
    for a, p in enumerate(points):
        for q in points[a + 1:]:
            if _symplectic(p, q):
                continue
            span = {p, q}
            for s in (1, 2):
                span.add(_normalize([(x + s * y) % 3 for x, y in zip(p, q)]))
            lines.add(tuple(sorted(index[v] for v in span)))

    ordered = sorted(lines)
    edges = [(point, len(points) + k) for k, line in enumerate(ordered) for point in line]
    return Graph.from_edges(len(points) + len(ordered), edges)


# -----------------------------
# LCF notation
# -----------------------------
_LCF_PATTERN = re.compile(r"^\[\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\]\s*(?:\^\s*(\d+))?$")


def from_lcf(jumps: Sequence[int], repeats: int = 1, consistent: bool = True) -> Graph:
    """
    Hamiltonian cycle 0..n-1 plus chords i -> i + jumps[i mod |jumps|] (mod n)

    Args:
        jumps: Chord offsets
        repeats: Number of repetitions of the jump list
        consistent: Require the chords to pair up (the jump at i + j is -j),
            which yields a cubic graph; otherwise every chord is added as is

    Raises:
        CatalogError: Empty or degenerate jumps, odd n, or inconsistent list
    """
    if not jumps or repeats < 1:
        raise CatalogError("LCF needs a non-empty jump list and repeats >= 1")
    n = len(jumps) * repeats
    if n < 4 or n % 2:
        raise CatalogError(f"LCF cycle length must be even and at least 4, got {n}")

    chords = []
    for i in range(n):
        j = jumps[i % len(jumps)] % n
        if j in (0, 1, n - 1):
            raise CatalogError(f"jump {jumps[i % len(jumps)]} at {i} hits the vertex or a cycle neighbor")
        target = (i + j) % n
        if consistent and (jumps[target % len(jumps)] + j) % n:
            raise CatalogError(f"inconsistent LCF: chord {i} -> {target} has no matching reverse jump")
        chords.append((i, target))
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)] + chords)


def parse_lcf(text: str) -> Tuple[List[int], int]:
    """
    Parse "[j1,j2,...]^r" (comments with # and blank lines ignored)

    Raises:
        CatalogError: No LCF expression found
    """
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        match = _LCF_PATTERN.match(line)
        if not match:
            raise CatalogError(f"malformed LCF line: {raw!r}")
        jumps = [int(j) for j in match.group(1).split(",")]
        return jumps, int(match.group(2) or 1)
    raise CatalogError("no LCF expression found")


@lru_cache(maxsize=8)
def load_lcf_file(path: Union[str, Path]) -> Tuple[Tuple[int, ...], int]:
    """Jump list and repeat count stored in an LCF data file"""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise CatalogError(f"cannot read LCF data {path}: {e}") from e
    jumps, repeats = parse_lcf(text)
    logger.info("Loaded LCF data from %s: %d jumps x %d", path, len(jumps), repeats)
    return tuple(jumps), repeats


@lru_cache(maxsize=8)
def load_graph6_file(path: Union[str, Path]) -> Graph:
    """Graph stored in a graph6 data file"""
    try:
        G = read_graph6_file(path)
    except (OSError, Graph6Error) as e:
        raise CatalogError(f"cannot load graph6 data {path}: {e}") from e
    logger.info("Loaded graph6 data from %s: n=%d, m=%d", path, G.n, G.m)
    return G


def _validate_semisymmetric(name: str, G: Graph, order: int, degree: int, sequences: Set[Tuple[int, ...]]) -> Graph:
    if G.n != order:
        raise CatalogError(f"{name} data has order {G.n}, expected {order}")
    if not is_regular(G) or G.degree(0) != degree:
        raise CatalogError(f"{name} data is not {degree}-regular")
    found = {tuple(distance_sequence(G, [v]).counts) for v in range(G.n)}
    if found != sequences:
        raise CatalogError(f"{name} data has distance sequences {sorted(found)}, expected {sorted(sequences)}")
    if not is_semisymmetric(G):
        raise CatalogError(f"{name} data is not semisymmetric")
    return G


def folkman() -> Graph:
    """Folkman graph from the bundled LCF data (every chord added, 4-regular)"""
    jumps, repeats = load_lcf_file(config.data_path(FOLKMAN_FILE))
    G = from_lcf(jumps, repeats, consistent=False)
    return _validate_semisymmetric("folkman", G, 20, 4, FOLKMAN_SEQUENCES)


def ljubljana() -> Graph:
    """Ljubljana graph from the bundled graph6 data"""
    G = load_graph6_file(config.data_path(LJUBLJANA_FILE))
    return _validate_semisymmetric("ljubljana", G, 112, 3, LJUBLJANA_SEQUENCES)


# -----------------------------
# Registry
# -----------------------------
@dataclass(frozen=True)
class _Family:
    generator: Callable[..., Graph]
    arity: int
    order: Callable[..., int]
    degree: Callable[..., Optional[int]]
    defaults: Tuple[int, ...] = ()


_FAMILIES: Dict[str, _Family] = {
    "complete": _Family(complete, 1, lambda n: n, lambda n: n - 1, (4,)),
    "complete_bipartite": _Family(complete_bipartite, 2, lambda m, n: m + n, lambda m, n: m if m == n else None, (2, 3)),
    "cycle": _Family(cycle, 1, lambda n: n, lambda n: 2, (6,)),
    "path": _Family(path, 1, lambda n: n, lambda n: None, (4,)),
    "hypercube": _Family(hypercube, 1, lambda d: 1 << d, lambda d: d, (3,)),
    "generalized_petersen": _Family(generalized_petersen, 2, lambda n, k: 2 * n, lambda n, k: 3, (5, 2)),
    "petersen": _Family(petersen, 0, lambda: 10, lambda: 3),
    "clebsch": _Family(clebsch, 0, lambda: 16, lambda: 5),
    "gray": _Family(gray, 0, lambda: 54, lambda: 3),
    "folkman": _Family(folkman, 0, lambda: 20, lambda: 4),
    "ljubljana": _Family(ljubljana, 0, lambda: 112, lambda: 3),
    "w3_incidence": _Family(w3_incidence, 0, lambda: 80, lambda: 4),
}


def _family(name: str) -> _Family:
    family = _FAMILIES.get(name.strip().lower())
    if family is None:
        raise CatalogError(f"unknown catalog graph: {name} (known: {', '.join(sorted(_FAMILIES))})")
    return family


def entry(name: str, params: Sequence[int] = ()) -> CatalogEntry:
    """
    Catalog entry for a family member

    Raises:
        CatalogError: Unknown name or wrong parameter count
    """
    family = _family(name)
    params = tuple(int(p) for p in params)
    if len(params) != family.arity:
        raise CatalogError(f"{name} takes {family.arity} parameter(s), got {len(params)}")
    return CatalogEntry(
        name=name.strip().lower(),
        params=params,
        generator=family.generator.__name__,
        expected_order=family.order(*params),
        expected_degree=family.degree(*params),
    )


def list_entries() -> List[CatalogEntry]:
    """Every family at its default parameters, sorted by name"""
    return [entry(name, _FAMILIES[name].defaults) for name in sorted(_FAMILIES)]


@lru_cache(maxsize=128)
def _build(name: str, params: Tuple[int, ...]) -> Graph:
    info = entry(name, params)
    if info.expected_order < 1:
        raise CatalogError(f"{name}{list(params)} has no vertices")
    G = _family(name).generator(*params)
    if G.n != info.expected_order:
        raise CatalogError(f"{name}{list(params)} has order {G.n}, expected {info.expected_order}")
    if info.expected_degree is not None and any(G.degree(v) != info.expected_degree for v in range(G.n)):
        raise CatalogError(f"{name}{list(params)} is not {info.expected_degree}-regular")
    logger.debug("Generated %s%s: n=%d, m=%d", name, list(params), G.n, G.m)
    return G


def named(name: str, params: Sequence[int] = ()) -> Graph:
    """
    Generate a catalog graph

    Args:
        name: Family name, e.g. "generalized_petersen", "gray"
        params: Integer parameters of the family

    Raises:
        CatalogError: Unknown name, invalid parameters or failed self-check
    """
    try:
        return _build(name.strip().lower(), tuple(int(p) for p in params))
    except CatalogError:
        raise
    except ValueError as e:
        raise CatalogError(str(e)) from e
