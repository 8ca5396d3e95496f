"""
Theorem Verification

Randomized comparison of every closed-form residual against the
brute-force residual of the actual product (or construction).

Each trial draws its graphs from its own SplitMix64 stream, so a report is
reproducible from (theorem, seed, trial index) alone, in any process and
in any completion order. Trials are stratified: trial i aims at case
i mod (number of cases) and resamples until it hits it or runs out of
attempts.
"""
import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from tqdm import tqdm

from app.utils.config import config
from app.utils.rng import SplitMix64
from .catalog import path
from .core import bipartition, is_connected
from .graph6 import serialize_graph6
from .isomorphism import are_isomorphic
from .metrics import bfs_distances, residual
from .products import coordinates, direct_distance, product, product_many, product_root
from .theorems import (
    bipartite_edge_case,
    embed_as_residual,
    expected_bipartite_edge_residual,
    expected_cartesian_nary_residual,
    expected_cartesian_residual,
    expected_direct_residual,
    expected_lexicographic_nary_residual,
    expected_lexicographic_residual,
    expected_strong_gmax_residual,
    expected_strong_residual,
    lexicographic_case,
    strong_case,
    vt_embed_as_residual,
)
from .types import DistresError, Graph, GraphError, ProductKind, TheoremId, TrialFailure, VerificationReport

logger = logging.getLogger(__name__)

MAX_ATTEMPTS = 200
NARY_MAX_ORDER = 4
DISCONNECTED_H_PROBABILITY = 0.25

RootedGraph = Tuple[Graph, Tuple[int, ...]]


# -----------------------------
# Samplers
# -----------------------------
def _edge_probability(rng: SplitMix64) -> float:
    return 0.25 + 0.5 * rng.random()


def random_graph(rng: SplitMix64, n: int, p: Optional[float] = None) -> Graph:
    """Erdős–Rényi G(n, p); p drawn from [0.25, 0.75) when omitted"""
    p = _edge_probability(rng) if p is None else p
    return Graph.from_edges(n, [(i, j) for j in range(n) for i in range(j) if rng.chance(p)])


def random_connected_graph(rng: SplitMix64, n: int, p: Optional[float] = None) -> Graph:
    """G(n, p) resampled until connected"""
    p = _edge_probability(rng) if p is None else p
    while True:
        G = random_graph(rng, n, p)
        if is_connected(G):
            return G


def random_bipartite_graph(rng: SplitMix64, max_n: int) -> Graph:
    """
    Connected bipartite graph on 3..max_n vertices

    Sides are 0..a-1 and a..n-1. A random spanning tree grows by attaching
    each vertex to an earlier vertex of the other side; cross edges are then
    added with a per-graph probability, so no rejection loop is needed.
    """
    n = rng.randint(3, max(3, max_n))
    a = rng.randint(1, n - 1)
    p = 0.6 * rng.random()
    placed: Dict[bool, List[int]] = {True: [0], False: [a]}
    edges = [(0, a)]
    rest = [v for v in range(n) if v not in (0, a)]
    rng.shuffle(rest)
    for v in rest:
        first_side = v < a
        edges.append((v, rng.choice(placed[not first_side])))
        placed[first_side].append(v)
    edges.extend((i, j) for i in range(a) for j in range(a, n) if rng.chance(p))
    return Graph.from_edges(n, edges)


def random_non_bipartite_graph(rng: SplitMix64, n: int) -> Graph:
    """Connected graph on n >= 3 vertices containing the triangle 0, 1, 2"""
    G = random_connected_graph(rng, n)
    return Graph.from_edges(n, list(G.edges) + [(0, 1), (1, 2), (0, 2)])


def random_circulant(rng: SplitMix64, n: int) -> Graph:
    """Circulant graph on n vertices with a random connection set"""
    jumps = [s for s in range(1, n // 2 + 1) if rng.chance(0.5)]
    return Graph.from_edges(n, [(i, (i + s) % n) for i in range(n) for s in jumps])


def random_root(rng: SplitMix64, G: Graph) -> Tuple[int, ...]:
    """Non-empty vertex subset of uniformly random size"""
    size = rng.randint(1, G.n)
    return tuple(sorted(rng.sample(range(G.n), size)))


def _rooted_connected(rng: SplitMix64, low: int, high: int) -> RootedGraph:
    G = random_connected_graph(rng, rng.randint(low, max(low, high)))
    return G, random_root(rng, G)


def _describe(G: Graph, root: Optional[Sequence[int]] = None) -> str:
    text = serialize_graph6(G)
    if root is not None:
        text += " root=" + ",".join(str(v) for v in root)
    return text


# -----------------------------
# Trials
# -----------------------------
@dataclass
class _Outcome:
    case: str
    factors: List[str]
    expected: Optional[Graph] = None
    actual: Optional[Graph] = None
    detail: Optional[str] = None
    extra_checks: List[Tuple[bool, str]] = field(default_factory=list)


Draw = Callable[[SplitMix64], tuple]


def _stratified(rng: SplitMix64, target: str, draw: Draw, classify: Callable[..., str]) -> Tuple[tuple, str]:
    """Resample until classify(*sample) == target; keep the last sample otherwise"""
    sample, case = None, None
    for _ in range(MAX_ATTEMPTS):
        sample = draw(rng)
        case = classify(*sample)
        if case == target:
            break
    return sample, case


def _binary_outcome(kind: ProductKind, sample: tuple, case: str, expected: Graph) -> _Outcome:
    G, R_G, H, R_H = sample
    actual = residual(product(kind, G, H), product_root([R_G, R_H], [G.n, H.n])).residual
    return _Outcome(case, [_describe(G, R_G), _describe(H, R_H)], expected, actual)


def _nary_outcome(kind: ProductKind, factors: Sequence[RootedGraph], case: str, expected: Graph) -> _Outcome:
    graphs = [F for F, _ in factors]
    root = product_root([R for _, R in factors], [F.n for F in graphs])
    actual = residual(product_many(kind, graphs), root).residual
    return _Outcome(case, [_describe(F, R) for F, R in factors], expected, actual)


def _trial_cartesian(rng: SplitMix64, max_n: int, target: str) -> _Outcome:
    G, R_G = _rooted_connected(rng, 1, max_n)
    H, R_H = _rooted_connected(rng, 1, max_n)
    return _binary_outcome(ProductKind.CARTESIAN, (G, R_G, H, R_H), target,
                           expected_cartesian_residual(G, R_G, H, R_H))


def _trial_cartesian_nary(rng: SplitMix64, max_n: int, target: str) -> _Outcome:
    factors = [_rooted_connected(rng, 1, min(max_n, NARY_MAX_ORDER)) for _ in range(3)]
    return _nary_outcome(ProductKind.CARTESIAN, factors, target, expected_cartesian_nary_residual(factors))


def _trial_strong(rng: SplitMix64, max_n: int, target: str) -> _Outcome:
    def draw(r: SplitMix64) -> tuple:
        return _rooted_connected(r, 1, max_n) + _rooted_connected(r, 1, max_n)

    sample, case = _stratified(rng, target, draw, strong_case)
    return _binary_outcome(ProductKind.STRONG, sample, case, expected_strong_residual(*sample))


def _gmax_case(*factors: RootedGraph) -> str:
    distances = [residual(F, R).d_R for F, R in factors]
    return "single" if distances.count(max(distances)) == 1 else "multiple"


def _trial_strong_gmax(rng: SplitMix64, max_n: int, target: str) -> _Outcome:
    def draw(r: SplitMix64) -> tuple:
        return tuple(_rooted_connected(r, 1, min(max_n, NARY_MAX_ORDER)) for _ in range(3))

    factors, case = _stratified(rng, target, draw, _gmax_case)
    return _nary_outcome(ProductKind.STRONG, factors, case, expected_strong_gmax_residual(factors))


def _trial_lexicographic(rng: SplitMix64, max_n: int, target: str) -> _Outcome:
    def draw(r: SplitMix64) -> tuple:
        G, R_G = _rooted_connected(r, 2, max_n)
        n = r.randint(1, max_n)
        H = random_graph(r, n) if r.chance(DISCONNECTED_H_PROBABILITY) else random_connected_graph(r, n)
        return G, R_G, H, random_root(r, H)

    sample, case = _stratified(rng, target, draw, lexicographic_case)
    return _binary_outcome(ProductKind.LEXICOGRAPHIC, sample, case, expected_lexicographic_residual(*sample))


def _trial_lexicographic_nary(rng: SplitMix64, max_n: int, target: str) -> _Outcome:
    high = max(4, min(max_n, NARY_MAX_ORDER + 2))
    first: Optional[RootedGraph] = None
    for _ in range(MAX_ATTEMPTS):
        G, R = _rooted_connected(rng, 4, high)
        if residual(G, R).d_R >= 3:
            first = (G, R)
            break
    if first is None:
        first = (path(4), (0,))
    rest = [_rooted_connected(rng, 1, min(max_n, 3)) for _ in range(2)]
    factors = [first] + rest
    return _nary_outcome(ProductKind.LEXICOGRAPHIC, factors, target, expected_lexicographic_nary_residual(factors))


def _trial_bipartite_edge(rng: SplitMix64, max_n: int, target: str) -> _Outcome:
    def draw(r: SplitMix64) -> tuple:
        G = random_bipartite_graph(r, max_n)
        u, v = r.choice(G.edges)
        return (G, u, v) if r.chance(0.5) else (G, v, u)

    (G, u, v), case = _stratified(rng, target, draw, bipartite_edge_case)
    expected = expected_bipartite_edge_residual(G, u, v)
    actual = residual(G, [u, v]).residual
    return _Outcome(case, [_describe(G, (u, v))], expected, actual)


def _trial_direct_distance(rng: SplitMix64, max_n: int, target: str) -> _Outcome:
    if target == "forced_odd":
        G = random_non_bipartite_graph(rng, rng.randint(3, max(3, max_n)))
    else:
        G = random_graph(rng, rng.randint(1, max_n))
    H = random_graph(rng, rng.randint(1, max_n))
    P = product(ProductKind.DIRECT, G, H)
    orders = (G.n, H.n)

    outcome = _Outcome(target, [_describe(G), _describe(H)])
    for x in range(P.n):
        bfs = bfs_distances(P, [x])
        for y in range(P.n):
            formula = direct_distance([G, H], coordinates(x, orders), coordinates(y, orders))
            found = math.inf if bfs[y] is None else bfs[y]
            if formula != found:
                outcome.detail = f"d({coordinates(x, orders)}, {coordinates(y, orders)}): formula {formula}, BFS {found}"
                return outcome
    return outcome


def _direct_case(G: Graph, R_G: Sequence[int], H: Graph, R_H: Sequence[int]) -> str:
    return "both_odd" if bipartition(H) is None else "one_odd"


def _trial_direct_residual(rng: SplitMix64, max_n: int, target: str) -> _Outcome:
    def draw(r: SplitMix64) -> tuple:
        G = random_non_bipartite_graph(r, r.randint(3, max(3, max_n)))
        H = random_connected_graph(r, r.randint(2, max(2, max_n)))
        return G, random_root(r, G), H, random_root(r, H)

    sample, case = _stratified(rng, target, draw, _direct_case)
    return _binary_outcome(ProductKind.DIRECT, sample, case, expected_direct_residual(*sample))


def _trial_embed_universal(rng: SplitMix64, max_n: int, target: str) -> _Outcome:
    H = random_graph(rng, rng.randint(1, max_n))
    n = rng.randint(1, 3)
    root_graph = random_graph(rng, n) if target == "explicit_root" else None
    G, root = embed_as_residual(H, n, root_graph)
    result = residual(G, root)
    outcome = _Outcome(target, [_describe(H), f"root order {n}"], H, result.residual)
    outcome.extra_checks.append((result.d_R == 1, f"d_R = {result.d_R}, expected 1"))
    return outcome


def _trial_embed_vertex_transitive(rng: SplitMix64, max_n: int, target: str) -> _Outcome:
    H = random_circulant(rng, rng.randint(1, max_n))
    n = rng.randint(1, 3)
    G, root = vt_embed_as_residual(H, n)
    result = residual(G, root)
    outcome = _Outcome(target, [_describe(H), f"root order {n}"], H, result.residual)
    outcome.extra_checks.append((result.d_R == 3, f"d_R = {result.d_R}, expected 3"))
    return outcome


TrialFn = Callable[[SplitMix64, int, str], _Outcome]

_TRIALS: Dict[TheoremId, Tuple[Tuple[str, ...], TrialFn]] = {
    TheoremId.CARTESIAN: (("default",), _trial_cartesian),
    TheoremId.CARTESIAN_NARY: (("default",), _trial_cartesian_nary),
    TheoremId.STRONG: (("greater", "less", "equal"), _trial_strong),
    TheoremId.STRONG_GMAX: (("single", "multiple"), _trial_strong_gmax),
    TheoremId.LEXICOGRAPHIC: (("isolated_copies", "complement", "union", "outer"), _trial_lexicographic),
    TheoremId.LEXICOGRAPHIC_NARY: (("outer",), _trial_lexicographic_nary),
    TheoremId.BIPARTITE_EDGE: (("equal", "u_farther", "v_farther"), _trial_bipartite_edge),
    TheoremId.DIRECT_DISTANCE_FORMULA: (("forced_odd", "free"), _trial_direct_distance),
    TheoremId.DIRECT_RESIDUAL: (("one_odd", "both_odd"), _trial_direct_residual),
    TheoremId.EMBED_UNIVERSAL: (("isolated_root", "explicit_root"), _trial_embed_universal),
    TheoremId.EMBED_VERTEX_TRANSITIVE: (("default",), _trial_embed_vertex_transitive),
}


def theorem_cases(theorem: Union[TheoremId, str]) -> Tuple[str, ...]:
    """Case labels a theorem's trials are stratified over"""
    return _TRIALS[TheoremId(theorem)][0]


def run_trial(theorem: TheoremId, index: int, seed: int, max_n: int) -> Tuple[str, Optional[TrialFailure]]:
    """
    Run one trial

    Returns:
        (case label, failure or None)
    """
    cases, trial = _TRIALS[theorem]
    target = cases[index % len(cases)]
    rng = SplitMix64.for_trial(seed, index)
    try:
        outcome = trial(rng, max_n, target)
    except DistresError as e:
        return target, TrialFailure(trial=index, seed=seed, case=target, detail=f"{type(e).__name__}: {e}")

    detail = outcome.detail
    if detail is None and outcome.expected is not None:
        if not are_isomorphic(outcome.expected, outcome.actual).isomorphic:
            detail = "closed form and brute-force residual are not isomorphic"
        else:
            detail = next((message for ok, message in outcome.extra_checks if not ok), None)
    if detail is None:
        return outcome.case, None
    return outcome.case, TrialFailure(
        trial=index,
        seed=seed,
        case=outcome.case,
        factors=outcome.factors,
        expected_g6=serialize_graph6(outcome.expected) if outcome.expected is not None else None,
        actual_g6=serialize_graph6(outcome.actual) if outcome.actual is not None else None,
        detail=detail,
    )


def _run_packed(args: Tuple[TheoremId, int, int, int]) -> Tuple[str, Optional[TrialFailure]]:
    return run_trial(*args)


def verify(
    theorem: Union[TheoremId, str],
    trials: int,
    max_n: int,
    seed: Optional[int] = None,
    jobs: Optional[int] = None,
    progress: Optional[bool] = None,
) -> VerificationReport:
    """
    Verify a theorem on random instances

    Args:
        theorem: Theorem to check
        trials: Number of trials
        max_n: Largest factor order drawn
        seed: 64-bit seed (default from config)
        jobs: Worker processes; results are merged by trial index
        progress: Show a tqdm progress bar

    Returns:
        VerificationReport with per-case hit counts and every failure

    Raises:
        GraphError: Non-positive trials, max_n or jobs
    """
    theorem = TheoremId(theorem)
    seed = config.DISTRES_SEED if seed is None else seed
    jobs = config.DISTRES_JOBS if jobs is None else jobs
    progress = config.DISTRES_PROGRESS if progress is None else progress
    if trials < 1 or max_n < 1 or jobs < 1:
        raise GraphError(f"trials, max_n and jobs must be positive (got {trials}, {max_n}, {jobs})")

    logger.info("Verifying %s: %d trials, max_n=%d, seed=%d, jobs=%d", theorem.value, trials, max_n, seed, jobs)
    start = time.perf_counter()
    tasks = [(theorem, index, seed, max_n) for index in range(trials)]
    bar = dict(total=trials, desc=f"verify {theorem.value}", disable=not progress)

    if jobs == 1:
        results = [run_trial(*task) for task in tqdm(tasks, **bar)]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunk = max(1, trials // (jobs * 8))
            results = list(tqdm(pool.map(_run_packed, tasks, chunksize=chunk), **bar))

    case_counts: Dict[str, int] = {case: 0 for case in theorem_cases(theorem)}
    failures: List[TrialFailure] = []
    for case, failure in results:
        case_counts[case] = case_counts.get(case, 0) + 1
        if failure is not None:
            logger.error("Trial %d of %s failed (%s): %s", failure.trial, theorem.value, failure.case, failure.detail)
            failures.append(failure)

    elapsed = time.perf_counter() - start
    logger.info("Verified %s: %d/%d passed in %.2fs", theorem.value, trials - len(failures), trials, elapsed)
    return VerificationReport(
        theorem=theorem,
        trials=trials,
        seed=seed,
        max_n=max_n,
        failures=failures,
        case_counts=case_counts,
        elapsed=elapsed,
    )
