"""
Distance-Residual Data Types

그래프, 거리 분할, 잔여 그래프, 검증 리포트 등 도메인 데이터 타입 정의
"""
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, ValidationError, field_validator, model_validator


# -----------------------------
# Exceptions
# -----------------------------
class DistresError(Exception):
    """Base class for every domain error"""


class GraphError(DistresError, ValueError):
    """Invalid graph, vertex set or parameter"""


class DisconnectedGraphError(GraphError):
    """Distance partition requested on a disconnected graph"""


class Graph6Error(DistresError, ValueError):
    """Malformed graph6 text"""


class CatalogError(DistresError, ValueError):
    """Unknown catalog name, bad parameters or failed data validation"""


class TheoremPreconditionError(GraphError):
    """Input violates a theorem's hypotheses"""


Edge = Tuple[int, int]


# -----------------------------
# Graph core
# -----------------------------
class Graph(BaseModel):
    """Simple undirected finite graph on vertices 0..n-1"""
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0)
    adj: Tuple[Tuple[int, ...], ...]
    labels: Optional[Tuple[str, ...]] = None

    _neighbors: Tuple[FrozenSet[int], ...] = PrivateAttr(default=())
    _edges: Tuple[Edge, ...] = PrivateAttr(default=())

    def __init__(self, **data):
        try:
            super().__init__(**data)
        except ValidationError as e:
            raise GraphError(str(e)) from e

    @model_validator(mode="after")
    def _check_simple(self) -> "Graph":
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError(f"{len(self.labels)} labels for n={self.n}")
        for v, row in enumerate(self.adj):
            previous = -1
            for u in row:
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbor {u} of vertex {v} out of range")
                if u == v:
                    raise ValueError(f"self-loop at vertex {v}")
                if u <= previous:
                    raise ValueError(f"adjacency of vertex {v} is not sorted and duplicate-free")
                previous = u
        return self

    def model_post_init(self, __context) -> None:
        neighbors = tuple(frozenset(row) for row in self.adj)
        for v, row in enumerate(self.adj):
            for u in row:
                if v not in neighbors[u]:
                    raise GraphError(f"adjacency is not symmetric: {v}->{u} without {u}->{v}")
        self._neighbors = neighbors
        self._edges = tuple((v, u) for v, row in enumerate(self.adj) for u in row if v < u)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Sequence[int]],
        labels: Optional[Sequence[str]] = None,
    ) -> "Graph":
        """
        Build a graph from an edge list

        Args:
            n: Vertex count
            edges: Pairs (u, v); duplicates are merged
            labels: Optional per-vertex provenance strings

        Raises:
            GraphError: On self-loops or out-of-range endpoints
        """
        rows: List[set] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u].add(v)
            rows[v].add(u)
        return cls(
            n=n,
            adj=tuple(tuple(sorted(row)) for row in rows),
            labels=tuple(labels) if labels is not None else None,
        )

    @classmethod
    def empty(cls, n: int) -> "Graph":
        """n isolated vertices (nK_1)"""
        return cls.from_edges(n, [])

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> Tuple[Edge, ...]:
        """Edges (u, v) with u < v in lexicographic order"""
        return self._edges

    @property
    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self._neighbors[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbors[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def relabel(self, permutation: Sequence[int]) -> "Graph":
        """Graph with vertex v renamed to permutation[v]"""
        if sorted(permutation) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of 0..n-1")
        return Graph.from_edges(self.n, ((permutation[u], permutation[v]) for u, v in self._edges))

    def without_labels(self) -> "Graph":
        return self if self.labels is None else Graph(n=self.n, adj=self.adj)


class VertexSet(BaseModel):
    """Sorted duplicate-free non-empty set of vertex ids of a host graph"""
    model_config = ConfigDict(frozen=True)

    members: Tuple[int, ...]

    @field_validator("members")
    @classmethod
    def _check_members(cls, members: Tuple[int, ...]) -> Tuple[int, ...]:
        if not members:
            raise ValueError("empty vertex set")
        if list(members) != sorted(set(members)):
            raise ValueError("vertex set must be sorted and duplicate-free")
        return members

    @classmethod
    def of(cls, host: Graph, ids: Iterable[int]) -> "VertexSet":
        """
        Normalize ids into a VertexSet of host

        Raises:
            GraphError: Empty set or ids outside 0..n-1
        """
        if isinstance(ids, VertexSet):
            ids = ids.members
        members = tuple(sorted(set(int(v) for v in ids)))
        if not members:
            raise GraphError("empty vertex set")
        bad = [v for v in members if not 0 <= v < host.n]
        if bad:
            raise GraphError(f"vertex ids {bad} not in graph of order {host.n}")
        return cls(members=members)

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: object) -> bool:
        return v in set(self.members)


class IsoCertificate(BaseModel):
    """Isomorphism witness: mapping[v] is the image of vertex v, or None"""
    model_config = ConfigDict(frozen=True)

    mapping: Optional[Tuple[int, ...]] = None

    @property
    def isomorphic(self) -> bool:
        return self.mapping is not None


class OrbitPartition(BaseModel):
    """Vertex and edge orbits of the full automorphism group"""
    model_config = ConfigDict(frozen=True)

    vertex_orbits: Tuple[Tuple[int, ...], ...]
    edge_orbits: Tuple[Tuple[Edge, ...], ...]
    generators: Tuple[Tuple[int, ...], ...] = ()


# -----------------------------
# Metrics
# -----------------------------
class DistanceSequence(BaseModel):
    """Class sizes |V_0|, ..., |V_r|"""
    model_config = ConfigDict(frozen=True)

    counts: Tuple[int, ...]

    @field_validator("counts")
    @classmethod
    def _check_positive(cls, counts: Tuple[int, ...]) -> Tuple[int, ...]:
        if not counts or any(c <= 0 for c in counts):
            raise ValueError("distance sequence entries must be positive")
        return counts

    def as_list(self) -> List[int]:
        return list(self.counts)


class DistancePartition(BaseModel):
    """Ordered distance classes V_0..V_r of a host graph"""
    model_config = ConfigDict(frozen=True)

    host: Graph
    classes: Tuple[Tuple[int, ...], ...]
    levels: Tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.classes) - 1

    def level(self, v: int) -> int:
        """Index i of the class V_i containing v"""
        return self.levels[v]

    def sequence(self) -> DistanceSequence:
        return DistanceSequence(counts=tuple(len(c) for c in self.classes))


class ResidualResult(BaseModel):
    """Residual graph on V_r with its distance d_R from the root"""
    model_config = ConfigDict(frozen=True)

    residual: Graph
    d_R: int = Field(ge=0)
    origin: Tuple[int, ...]


# -----------------------------
# Products
# -----------------------------
class ProductKind(str, Enum):
    CARTESIAN = "cartesian"
    STRONG = "strong"
    LEXICOGRAPHIC = "lexicographic"
    DIRECT = "direct"

    @classmethod
    def parse(cls, text: str) -> "ProductKind":
        key = text.strip().lower()
        if key == "lex":
            key = "lexicographic"
        try:
            return cls(key)
        except ValueError as e:
            raise GraphError(f"unknown product kind: {text}") from e


class WalkLengthProfile(BaseModel):
    """Lengths 0..bound of u-v walks, as a bitmask (bit l set iff length l is achievable)"""
    u: int
    v: int
    bound: int = Field(ge=1)
    mask: int = Field(ge=0)
    threshold: Optional[int] = None
    parity_mix: bool = False
    stable_from: Optional[int] = None

    def is_achievable(self, length: int) -> bool:
        return 0 <= length <= self.bound and bool(self.mask >> length & 1)

    @property
    def lengths(self) -> List[int]:
        return [k for k in range(self.bound + 1) if self.mask >> k & 1]


# -----------------------------
# Theorems / verification
# -----------------------------
class TheoremId(str, Enum):
    CARTESIAN = "cartesian"
    CARTESIAN_NARY = "cartesian_nary"
    STRONG = "strong"
    STRONG_GMAX = "strong_gmax"
    LEXICOGRAPHIC = "lexicographic"
    LEXICOGRAPHIC_NARY = "lexicographic_nary"
    BIPARTITE_EDGE = "bipartite_edge"
    DIRECT_DISTANCE_FORMULA = "direct_distance_formula"
    DIRECT_RESIDUAL = "direct_residual"
    EMBED_UNIVERSAL = "embed_universal"
    EMBED_VERTEX_TRANSITIVE = "embed_vertex_transitive"


class TrialFailure(BaseModel):
    """One theorem-vs-oracle mismatch, reproducible from seed and trial index"""
    trial: int
    seed: int
    case: Optional[str] = None
    factors: List[str] = []
    expected_g6: Optional[str] = None
    actual_g6: Optional[str] = None
    detail: Optional[str] = None


class VerificationReport(BaseModel):
    """Outcome of a randomized theorem verification run"""
    theorem: TheoremId
    trials: int
    seed: int
    max_n: int
    failures: List[TrialFailure] = []
    case_counts: Dict[str, int] = {}
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures


# -----------------------------
# Catalog
# -----------------------------
class CatalogEntry(BaseModel):
    """Named graph family member with its self-check data"""
    name: str
    params: Tuple[int, ...] = ()
    generator: str
    expected_order: int
    expected_degree: Optional[int] = None
