"""
Unit Tests for Distance Metrics

거리 분할, 거리 수열, 잔여 그래프, 성장 다항식 테스트
"""
import networkx as nx
import pytest
from hypothesis import given

from app.graphs.catalog import complete, complete_bipartite, cycle, hypercube, named, path
from app.graphs.core import disjoint_union, induced_subgraph
from app.graphs.export import to_networkx
from app.graphs.isomorphism import are_isomorphic
from app.graphs.metrics import (
    bfs_distances,
    distance,
    distance_partition,
    distance_sequence,
    edge_residual,
    growth_polynomial,
    is_growth_regular,
    residual,
    vertex_residual,
)
from app.graphs.types import DisconnectedGraphError, Graph, GraphError
from app.graphs.verification import random_bipartite_graph
from app.utils.rng import SplitMix64
from tests.conftest import PROPERTY_SETTINGS, connected_graphs, rooted


def copies(H: Graph, k: int) -> Graph:
    return disjoint_union([H] * k)


class TestDistancePartition:
    """다중 출발점 BFS 거리 분할"""

    def test_cycle_from_vertex(self):
        partition = distance_partition(cycle(6), [0])
        assert partition.classes == ((0,), (1, 5), (2, 4), (3,))
        assert partition.r == 3
        assert partition.level(4) == 2

    def test_multi_source(self):
        partition = distance_partition(path(5), [0, 4])
        assert partition.classes == ((0, 4), (1, 3), (2,))

    def test_root_is_everything(self):
        partition = distance_partition(cycle(5), range(5))
        assert partition.r == 0
        assert residual(cycle(5), range(5)).residual.adj == cycle(5).adj

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError, match="partition undefined"):
            distance_partition(Graph.from_edges(4, [(0, 1), (2, 3)]), [0])

    def test_empty_root(self):
        with pytest.raises(GraphError, match="empty vertex set"):
            distance_partition(cycle(4), [])

    @PROPERTY_SETTINGS
    @given(rooted(connected_graphs(min_n=1, max_n=9)))
    def test_classes_partition_vertices(self, sample):
        G, root = sample
        partition = distance_partition(G, root)
        members = sorted(v for cls in partition.classes for v in cls)
        assert members == list(range(G.n))
        assert partition.classes[0] == root
        assert all(cls for cls in partition.classes)

    @PROPERTY_SETTINGS
    @given(rooted(connected_graphs(min_n=1, max_n=9)))
    def test_levels_match_networkx(self, sample):
        G, root = sample
        graph = to_networkx(G)
        lengths = nx.multi_source_dijkstra_path_length(graph, set(root))
        partition = distance_partition(G, root)
        assert all(partition.level(v) == lengths[v] for v in range(G.n))

    @PROPERTY_SETTINGS
    @given(rooted(connected_graphs(min_n=2, max_n=9)))
    def test_edges_join_adjacent_classes(self, sample):
        G, root = sample
        partition = distance_partition(G, root)
        assert all(abs(partition.level(u) - partition.level(v)) <= 1 for u, v in G.edges)


class TestResidual:
    """잔여 그래프"""

    def test_cycle_residuals(self):
        assert residual(cycle(6), [0]).residual.n == 1
        result = residual(cycle(7), [0])
        assert result.origin == (3, 4)
        assert result.residual.m == 1
        assert result.d_R == 3

    def test_labels_record_origin(self):
        result = residual(cycle(7), [0])
        assert result.residual.labels == ("3", "4")

    def test_hypercube_vertex_residual(self):
        assert residual(hypercube(4), [0]).residual.n == 1

    def test_complete_bipartite_edge_residual(self):
        result = edge_residual(complete_bipartite(3, 4), 0, 3)
        assert result.origin == (1, 2, 4, 5, 6)
        assert are_isomorphic(result.residual, complete_bipartite(2, 3)).isomorphic
        assert result.d_R == 1

    def test_edge_residual_requires_adjacency(self):
        with pytest.raises(GraphError):
            edge_residual(cycle(6), 0, 2)

    @PROPERTY_SETTINGS
    @given(rooted(connected_graphs(min_n=1, max_n=9)))
    def test_residual_is_induced_on_last_class(self, sample):
        G, root = sample
        result = residual(G, root)
        partition = distance_partition(G, root)
        assert result.origin == partition.classes[-1]
        assert result.residual.adj == induced_subgraph(G, result.origin).adj
        assert result.d_R == partition.r


class TestPetersenTable:
    """Petersen 그래프의 잔여 그래프 표"""

    @pytest.mark.parametrize("root, expected", [
        ([0], cycle(6)),
        ([0, 1], copies(complete(2), 2)),
        ([4, 0, 1], Graph.empty(2)),
        ([4, 0, 1, 2], Graph.empty(1)),
        ([0, 1, 2, 3, 4], cycle(5)),
    ])
    def test_residuals(self, petersen, root, expected):
        assert are_isomorphic(residual(petersen, root).residual, expected).isomorphic

    def test_root_shapes(self, petersen):
        assert induced_subgraph(petersen, [4, 0, 1]).m == 2
        assert induced_subgraph(petersen, [4, 0, 1, 2]).m == 3
        assert are_isomorphic(induced_subgraph(petersen, range(5)), cycle(5)).isomorphic


class TestSequencesAndGrowth:
    """거리 수열과 성장 다항식"""

    def test_petersen_sequence(self, petersen):
        assert distance_sequence(petersen, [0]).as_list() == [1, 3, 6]

    def test_growth_polynomial(self):
        assert growth_polynomial(hypercube(3), 0) == [1, 3, 3, 1]

    def test_growth_regular(self, petersen):
        assert is_growth_regular(petersen)
        assert not is_growth_regular(path(3))

    def test_gray_is_not_growth_regular(self, gray):
        assert not is_growth_regular(gray)

    def test_clebsch_residual_is_petersen(self, petersen):
        clebsch = named("clebsch")
        for v in range(clebsch.n):
            assert are_isomorphic(vertex_residual(clebsch, v).residual, petersen).isomorphic


class TestDistances:
    """단일 출발점 거리"""

    def test_bfs_distances_unreachable(self):
        G = Graph.from_edges(4, [(0, 1), (2, 3)])
        assert bfs_distances(G, [0]) == [0, 1, None, None]

    def test_distance(self):
        assert distance(cycle(8), 1, 5) == 4
        assert distance(cycle(8), 3, 3) == 0
        assert distance(Graph.empty(2), 0, 1) is None


class TestSymmetricResiduals:
    """대칭 그래프의 잔여 그래프는 출발점에 무관 (동형)"""

    @pytest.mark.parametrize("G", [
        named("petersen"), hypercube(3), hypercube(4), cycle(5), cycle(8), complete(4), complete(6),
    ])
    def test_vertex_residuals_pairwise_isomorphic(self, G):
        first = vertex_residual(G, 0)
        for v in range(1, G.n):
            other = vertex_residual(G, v)
            assert other.d_R == first.d_R
            assert are_isomorphic(other.residual, first.residual).isomorphic

    @pytest.mark.parametrize("G", [
        named("petersen"), complete_bipartite(2, 3), complete_bipartite(3, 4), complete_bipartite(4, 4),
    ])
    def test_edge_residuals_pairwise_isomorphic(self, G):
        u0, v0 = G.edges[0]
        first = edge_residual(G, u0, v0)
        for u, v in G.edges[1:]:
            other = edge_residual(G, u, v)
            assert other.d_R == first.d_R
            assert are_isomorphic(other.residual, first.residual).isomorphic


class TestBipartiteDistances:
    """이분 그래프에서 인접한 두 정점까지의 거리 차는 정확히 1"""

    @staticmethod
    def _check(G: Graph) -> None:
        for u, v in G.edges:
            from_u = bfs_distances(G, [u])
            from_v = bfs_distances(G, [v])
            assert all(abs(a - b) == 1 for a, b in zip(from_u, from_v))

    @pytest.mark.parametrize("G", [cycle(6), hypercube(3), complete_bipartite(2, 5), path(5), named("gray")])
    def test_catalog_graphs(self, G):
        self._check(G)

    @pytest.mark.parametrize("index", range(25))
    def test_sampled_graphs(self, index):
        G = random_bipartite_graph(SplitMix64.for_trial(11, index), 12)
        self._check(G)
