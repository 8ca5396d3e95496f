"""
Unit Tests for Residual Theorems

그래프 곱의 잔여 그래프 닫힌 형태와 임베딩 구성 테스트
"""
import pytest
from hypothesis import given

from app.graphs.catalog import complete, complete_bipartite, cycle, hypercube, named, path
from app.graphs.core import disjoint_union, is_vertex_transitive
from app.graphs.isomorphism import are_isomorphic
from app.graphs.metrics import residual
from app.graphs.products import product, product_many, product_root
from app.graphs.theorems import (
    bipartite_edge_case,
    direct_example_factors,
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
from app.graphs.types import Graph, ProductKind, TheoremPreconditionError
from tests.conftest import PROPERTY_SETTINGS, connected_graphs, graphs, rooted


def brute_force(kind: ProductKind, G: Graph, R_G, H: Graph, R_H):
    return residual(product(kind, G, H), product_root([R_G, R_H], [G.n, H.n]))


def iso(G: Graph, H: Graph) -> bool:
    return are_isomorphic(G, H).isomorphic


class TestCartesian:
    """데카르트 곱"""

    def test_hypercube_factors(self):
        assert iso(expected_cartesian_residual(complete(2), [0], complete(2), [0]), complete(1))

    def test_triangles(self):
        expected = expected_cartesian_residual(complete(3), [0], complete(3), [0])
        assert iso(expected, cycle(4))
        assert iso(brute_force(ProductKind.CARTESIAN, complete(3), [0], complete(3), [0]).residual, expected)

    def test_unit_residuals(self):
        assert iso(expected_cartesian_residual(cycle(6), [0], complete(2), [0]), complete(1))

    def test_disconnected_factor(self):
        with pytest.raises(TheoremPreconditionError):
            expected_cartesian_residual(Graph.empty(2), [0], complete(2), [0])

    def test_three_factors(self):
        factors = [(cycle(5), (0,)), (path(3), (0,)), (complete(2), (1,))]
        expected = expected_cartesian_nary_residual(factors)
        actual = residual(product_many(ProductKind.CARTESIAN, [F for F, _ in factors]),
                          product_root([R for _, R in factors], [5, 3, 2])).residual
        assert iso(expected, actual)
        assert expected.n == 2

    @PROPERTY_SETTINGS
    @given(rooted(connected_graphs(max_n=6)), rooted(connected_graphs(max_n=6)))
    def test_matches_brute_force(self, left, right):
        (G, R_G), (H, R_H) = left, right
        actual = brute_force(ProductKind.CARTESIAN, G, R_G, H, R_H).residual
        assert iso(expected_cartesian_residual(G, R_G, H, R_H), actual)


class TestStrong:
    """강곱"""

    @pytest.mark.parametrize("m, n, s, t", [(3, 4, 1, 2), (4, 4, 2, 3), (2, 5, 1, 4)])
    def test_complete_graphs(self, m, n, s, t):
        expected = expected_strong_residual(complete(m), range(s), complete(n), range(t))
        assert iso(expected, complete(m * n - s * t))

    def test_farther_first_factor(self):
        assert strong_case(cycle(6), [0], complete(2), [0]) == "greater"
        assert iso(expected_strong_residual(cycle(6), [0], complete(2), [0]), complete(2))

    def test_equal_distances(self):
        assert strong_case(cycle(4), [0], cycle(4), [0]) == "equal"
        expected = expected_strong_residual(cycle(4), [0], cycle(4), [0])
        actual = brute_force(ProductKind.STRONG, cycle(4), [0], cycle(4), [0])
        assert expected.n == 7
        assert actual.d_R == 2
        assert iso(expected, actual.residual)

    def test_gmax_all_equal(self):
        factors = [(complete(2), (0,))] * 3
        assert iso(expected_strong_gmax_residual(factors), complete(7))

    def test_gmax_single(self):
        factors = [(cycle(8), (0,)), (complete(2), (0,)), (complete(2), (0,))]
        assert iso(expected_strong_gmax_residual(factors), complete(4))

    def test_gmax_single_factor(self):
        assert iso(expected_strong_gmax_residual([(cycle(7), (0,))]), complete(2))

    @PROPERTY_SETTINGS
    @given(rooted(connected_graphs(max_n=6)), rooted(connected_graphs(max_n=6)))
    def test_matches_brute_force(self, left, right):
        (G, R_G), (H, R_H) = left, right
        actual = brute_force(ProductKind.STRONG, G, R_G, H, R_H).residual
        assert iso(expected_strong_residual(G, R_G, H, R_H), actual)


class TestLexicographic:
    """사전식 곱"""

    def test_outer_case(self):
        assert lexicographic_case(cycle(8), [0], complete(2), [0]) == "outer"
        assert iso(expected_lexicographic_residual(cycle(8), [0], complete(2), [0]), complete(2))

    def test_isolated_copies_case(self):
        assert lexicographic_case(complete(2), [0], path(3), [0]) == "isolated_copies"
        expected = expected_lexicographic_residual(complete(2), [0], path(3), [0])
        assert iso(expected, complete(1))
        assert iso(brute_force(ProductKind.LEXICOGRAPHIC, complete(2), [0], path(3), [0]).residual, expected)

    def test_complement_case(self):
        G, H = path(3), complete(2)
        assert lexicographic_case(G, [1], H, [0]) == "complement"
        expected = expected_lexicographic_residual(G, [1], H, [0])
        assert expected.n == 5
        assert iso(brute_force(ProductKind.LEXICOGRAPHIC, G, [1], H, [0]).residual, expected)

    def test_union_case(self):
        G, H = path(3), path(4)
        assert lexicographic_case(G, [0], H, [0]) == "union"
        expected = expected_lexicographic_residual(G, [0], H, [0])
        # the far end of G blown up, plus the far part of H next to the root
        assert iso(expected, disjoint_union([path(4), path(2)]))
        assert iso(brute_force(ProductKind.LEXICOGRAPHIC, G, [0], H, [0]).residual, expected)

    def test_whole_product_root(self):
        G, H = cycle(4), path(2)
        expected = expected_lexicographic_residual(G, range(4), H, range(2))
        assert expected.n == 8

    def test_disconnected_inner_factor(self):
        H = disjoint_union([complete(2), complete(1)])
        expected = expected_lexicographic_residual(complete(2), [0], H, [0])
        assert iso(brute_force(ProductKind.LEXICOGRAPHIC, complete(2), [0], H, [0]).residual, expected)

    def test_trivial_outer_factor(self):
        with pytest.raises(TheoremPreconditionError):
            expected_lexicographic_residual(complete(1), [0], cycle(4), [0])

    def test_three_factors(self):
        factors = [(cycle(8), (0,)), (complete(2), (0,)), (complete(2), (1,))]
        assert iso(expected_lexicographic_nary_residual(factors), complete(4))

    def test_three_factors_need_distance_three(self):
        with pytest.raises(TheoremPreconditionError):
            expected_lexicographic_nary_residual([(cycle(4), (0,)), (complete(2), (0,)), (complete(2), (0,))])

    @PROPERTY_SETTINGS
    @given(rooted(connected_graphs(min_n=2, max_n=6)), rooted(graphs(max_n=5)))
    def test_matches_brute_force(self, left, right):
        (G, R_G), (H, R_H) = left, right
        actual = brute_force(ProductKind.LEXICOGRAPHIC, G, R_G, H, R_H).residual
        assert iso(expected_lexicographic_residual(G, R_G, H, R_H), actual)


class TestBipartiteEdge:
    """이분 그래프 간선 잔여"""

    @pytest.mark.parametrize("m, n", [(m, n) for m in range(2, 9) for n in range(2, 9)])
    def test_complete_bipartite(self, m, n):
        actual = residual(complete_bipartite(m, n), [0, m]).residual
        assert actual.n == m + n - 2
        assert iso(actual, complete_bipartite(m - 1, n - 1))
        assert iso(expected_bipartite_edge_residual(complete_bipartite(m, n), 0, m), actual)

    def test_cases(self):
        assert bipartite_edge_case(path(4), 1, 2) == "equal"
        assert bipartite_edge_case(path(4), 0, 1) == "u_farther"
        assert bipartite_edge_case(path(4), 1, 0) == "v_farther"

    def test_gray(self, gray):
        u, v = gray.edges[0]
        expected = expected_bipartite_edge_residual(gray, u, v)
        assert iso(expected, disjoint_union([path(3)] * 4))

    def test_folkman(self, folkman):
        u, v = folkman.edges[0]
        assert iso(expected_bipartite_edge_residual(folkman, u, v), Graph.empty(3))

    def test_ljubljana(self, ljubljana):
        u, v = ljubljana.edges[0]
        assert expected_bipartite_edge_residual(ljubljana, u, v).n == 1

    def test_k2_excluded(self):
        with pytest.raises(TheoremPreconditionError):
            expected_bipartite_edge_residual(complete(2), 0, 1)

    def test_non_bipartite(self):
        with pytest.raises(TheoremPreconditionError):
            expected_bipartite_edge_residual(cycle(5), 0, 1)

    def test_non_adjacent(self):
        with pytest.raises(TheoremPreconditionError):
            expected_bipartite_edge_residual(cycle(6), 0, 2)

    @pytest.mark.parametrize("G", [cycle(8), hypercube(4), path(6), named("generalized_petersen", [8, 3])])
    def test_matches_brute_force_on_every_edge(self, G):
        for u, v in G.edges:
            assert iso(expected_bipartite_edge_residual(G, u, v), residual(G, [u, v]).residual)


class TestDirect:
    """직접곱"""

    def test_example_residual_is_single_vertex(self):
        (G, R_G), (H, R_H) = direct_example_factors()
        actual = brute_force(ProductKind.DIRECT, G, R_G, H, R_H)
        assert actual.origin == (9,)
        assert actual.d_R == 5
        assert actual.residual.labels == ("(1,3)",)
        assert expected_direct_residual(G, R_G, H, R_H).labels == ("(1,3)",)

    def test_both_bipartite(self):
        with pytest.raises(TheoremPreconditionError):
            expected_direct_residual(path(3), [0], complete(2), [0])

    @PROPERTY_SETTINGS
    @given(rooted(connected_graphs(min_n=3, max_n=5)), rooted(connected_graphs(min_n=2, max_n=5)))
    def test_matches_brute_force(self, left, right):
        (G, R_G), (H, R_H) = left, right
        G = Graph.from_edges(G.n, list(G.edges) + [(0, 1), (1, 2), (0, 2)])
        actual = brute_force(ProductKind.DIRECT, G, R_G, H, R_H).residual
        assert iso(expected_direct_residual(G, R_G, H, R_H), actual)


class TestEmbeddings:
    """임의 그래프를 잔여 그래프로 실현"""

    @pytest.mark.parametrize("H, n, order", [
        (disjoint_union([complete(2), complete(2)]), 1, 5),
        (named("petersen"), 3, 13),
        (complete(1), 1, 2),
    ])
    def test_embed(self, H, n, order):
        G, root = embed_as_residual(H, n)
        result = residual(G, root)
        assert G.n == order
        assert len(root) == n
        assert result.d_R == 1
        assert iso(result.residual, H)

    def test_embed_single_vertex_is_edge(self):
        G, _ = embed_as_residual(complete(1), 1)
        assert G.adj == path(2).adj

    def test_embed_explicit_root_graph(self):
        G, root = embed_as_residual(cycle(5), 3, root_graph=path(3))
        assert iso(residual(G, root).residual, cycle(5))
        assert G.has_edge(root.members[0], root.members[1])

    @pytest.mark.parametrize("name, params", [
        ("gray", []), ("folkman", []), ("clebsch", []), ("hypercube", [3]), ("cycle", [5]),
    ])
    def test_embed_catalog(self, name, params):
        H = named(name, params)
        G, root = embed_as_residual(H, 2)
        assert iso(residual(G, root).residual, H)

    def test_vt_embed_petersen(self, petersen):
        G, root = vt_embed_as_residual(petersen, 2)
        assert G.n == 70
        assert iso(residual(G, root).residual, petersen)

    def test_vt_embed_trivial(self):
        G, root = vt_embed_as_residual(complete(1), 1)
        assert iso(G, cycle(6))
        assert residual(G, root).residual.n == 1

    def test_vt_embed_square(self):
        G, root = vt_embed_as_residual(cycle(4), 3)
        result = residual(G, root)
        assert G.n == 32
        assert result.d_R == 3
        assert iso(result.residual, cycle(4))

    @pytest.mark.parametrize("H", [cycle(4), complete(3), hypercube(3)])
    def test_vt_embed_is_vertex_transitive(self, H):
        G, _ = vt_embed_as_residual(H, 1)
        assert is_vertex_transitive(G)

    def test_vt_embed_requires_vertex_transitive(self):
        with pytest.raises(TheoremPreconditionError):
            vt_embed_as_residual(path(3), 1)
