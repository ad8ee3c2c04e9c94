from itertools import combinations
from math import comb

import networkx as nx
import pytest

from girth_thickness.models import Graph, VertexMap, ZigZag
from girth_thickness.services.bound_service import theta4
from girth_thickness.services.construction_service import (
    ConstructionError,
    ExcludedCaseError,
    _g_part,
    build_case_4k,
    build_case_4k_minus_1,
    build_case_4k_plus_1,
    build_case_4k_plus_2,
    center_edge,
    h_attachment_edges,
    hamiltonian_factorization,
    restrict,
    vertex_map_for,
)
from girth_thickness.services.verification_service import verify
from girth_thickness.utils.graph_utils import girth, relabel


def part_graph(decomposition, index) -> Graph:
    return Graph.from_edges(decomposition.n, decomposition.parts[index])


class TestHamiltonianFactorization:
    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_paths_partition_k2k(self, k):
        paths = hamiltonian_factorization(k)
        assert len(paths) == k
        all_edges = [edge for path in paths for edge in path]
        assert sorted(all_edges) == list(combinations(range(2 * k), 2))
        for path in paths:
            G = nx.Graph(path)
            assert G.number_of_nodes() == 2 * k
            assert nx.is_connected(G)
            assert max(d for _, d in G.degree()) <= 2

    @pytest.mark.parametrize("k", [2, 3, 4, 5])
    def test_center_edge_is_the_middle_edge(self, k):
        paths = hamiltonian_factorization(k)
        for i in range(1, k + 1):
            assert paths[i - 1][k - 1] == center_edge(k, i)

    def test_center_edge_k3(self):
        # F_1 = v_1 v_2 v_6 v_3 v_5 v_4; middle edge v_6 v_3
        assert center_edge(3, 1) == (2, 5)


class TestCase4k:
    @pytest.mark.parametrize("k", range(2, 11))
    def test_sizes(self, k):
        decomposition = build_case_4k(k)
        assert decomposition.n == 4 * k
        assert decomposition.part_sizes() == [8 * k - 4] * k + [2 * k]
        assert sum(decomposition.part_sizes()) == comb(4 * k, 2)

    @pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
    def test_verifies(self, k):
        assert verify(build_case_4k(k)).ok

    @pytest.mark.parametrize("k", range(2, 11))
    def test_chain_parts_are_bipartite_with_girth_four(self, k):
        decomposition = build_case_4k(k)
        for index in range(k):
            graph = part_graph(decomposition, index)
            assert nx.is_bipartite(graph.to_networkx())
            assert girth(graph).value == 4
            # v_j and v'_j sit on the side given by the parity of j's zig-zag position
            zigzag = ZigZag(k, index + 1)
            side = {vertex: zigzag.position(vertex % (2 * k) + 1) % 2 for vertex in range(4 * k)}
            assert all(side[u] != side[v] for u, v in graph.edges)
        assert girth(part_graph(decomposition, k)).is_infinite

    def test_first_chain_part_k2(self):
        # F_1 = v_1 v_2 v_4 v_3 doubled onto v'_j = 3 + j with the cross edges
        assert build_case_4k(2).parts[0] == [
            (0, 1), (0, 5), (1, 3), (1, 4), (1, 7), (2, 3),
            (2, 7), (3, 5), (3, 6), (4, 5), (5, 7), (6, 7),
        ]

    def test_first_chain_part_k3(self):
        # F_1 = v_1 v_2 v_6 v_3 v_5 v_4 doubled onto v'_j = 5 + j with the cross edges
        assert _g_part(3, 1) == [
            (0, 1), (0, 7), (1, 5), (1, 6), (1, 11), (2, 4), (2, 5), (2, 10), (2, 11), (3, 4),
            (3, 10), (4, 8), (4, 9), (5, 7), (5, 8), (6, 7), (7, 11), (8, 10), (8, 11), (9, 10),
        ]

    def test_first_chain_part_k4(self):
        # F_1 = v_1 v_2 v_8 v_3 v_7 v_4 v_6 v_5, v'_j = 7 + j
        assert _g_part(4, 1) == [
            (0, 1), (0, 9), (1, 7), (1, 8), (1, 15), (2, 6), (2, 7), (2, 14), (2, 15), (3, 5),
            (3, 6), (3, 13), (3, 14), (4, 5), (4, 13), (5, 11), (5, 12), (6, 10), (6, 11), (7, 9),
            (7, 10), (8, 9), (9, 15), (10, 14), (10, 15), (11, 13), (11, 14), (12, 13),
        ]

    @pytest.mark.parametrize(
        "k, path",
        [
            (2, [1, 2, 4, 3]),
            (3, [1, 2, 6, 3, 5, 4]),
            (4, [1, 2, 8, 3, 7, 4, 6, 5]),
            (5, [1, 2, 10, 3, 9, 4, 8, 5, 7, 6]),
        ],
    )
    def test_first_chain_part_from_written_path(self, k, path):
        def v(j):
            return j - 1

        def vp(j):
            return 2 * k + j - 1

        expected = set()
        for a, b in zip(path, path[1:]):
            for x, y in ((v(a), v(b)), (vp(a), vp(b)), (v(a), vp(b)), (vp(a), v(b))):
                expected.add((min(x, y), max(x, y)))
        assert _g_part(k, 1) == sorted(expected)
        assert len(expected) == 8 * k - 4

    def test_matching_part(self):
        decomposition = build_case_4k(3)
        assert decomposition.parts[-1] == [(j, j + 6) for j in range(6)]

    @pytest.mark.parametrize("k", [3, 4, 5])
    def test_parts_are_index_shifts(self, k):
        decomposition = build_case_4k(k)
        vmap = VertexMap(k)
        shift = {}
        for j in range(1, 2 * k + 1):
            shift[vmap.v(j)] = vmap.v(j + 1)
            shift[vmap.vp(j)] = vmap.vp(j + 1)
        for index in range(k - 1):
            shifted = relabel(part_graph(decomposition, index), shift)
            assert shifted == part_graph(decomposition, index + 1)

    def test_k_too_small(self):
        with pytest.raises(ConstructionError):
            build_case_4k(1)


class TestCase4kPlus2:
    @pytest.mark.parametrize("k", range(3, 9))
    def test_sizes(self, k):
        decomposition = build_case_4k_plus_2(k)
        assert decomposition.n == 4 * k + 2
        assert decomposition.part_sizes() == [8 * k] * k + [6 * k + 1]
        assert sum(decomposition.part_sizes()) == comb(4 * k + 2, 2)

    @pytest.mark.parametrize("k", [3, 4, 5, 6, 7, 8])
    def test_verifies(self, k):
        report = verify(build_case_4k_plus_2(k))
        assert report.ok, report.violations

    @pytest.mark.parametrize("k", range(3, 9))
    def test_girth_is_exactly_four(self, k):
        decomposition = build_case_4k_plus_2(k)
        for index in range(k):
            assert girth(part_graph(decomposition, index)).value == 4

    def test_attachments_k3_i1(self):
        # x - v'_5, x - v_6, y - v_5, y - v'_6
        assert sorted(h_attachment_edges(3, 1)) == [(4, 13), (5, 12), (10, 12), (11, 13)]

    @pytest.mark.parametrize("k", [3, 4, 5, 6])
    def test_hubs_gain_two_edges_each(self, k):
        vmap = VertexMap(k)
        for i in range(1, k + 1):
            hubs = [max(edge) for edge in h_attachment_edges(k, i)]
            assert sorted(hubs) == [vmap.x, vmap.x, vmap.y, vmap.y]

    def test_last_part_structure(self):
        decomposition = build_case_4k_plus_2(3)
        vmap = VertexMap(3)
        last = part_graph(decomposition, 3)
        assert (vmap.x, vmap.y) in last.edges
        assert last.adjacency[vmap.x] == tuple(sorted([0, 2, 4, 7, 9, 11, vmap.y]))

    def test_last_part_contains_hub_four_cycle(self):
        vmap = VertexMap(3)
        last = part_graph(build_case_4k_plus_2(3), 3)
        for u, v in [(vmap.x, vmap.y), (vmap.y, vmap.vp(1)), (vmap.vp(1), vmap.v(1)), (vmap.v(1), vmap.x)]:
            assert (min(u, v), max(u, v)) in last.edges

    def test_k2_is_excluded(self):
        with pytest.raises(ExcludedCaseError):
            build_case_4k_plus_2(2)

    def test_k1_is_out_of_range(self):
        with pytest.raises(ConstructionError):
            build_case_4k_plus_2(1)


class TestRestriction:
    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_4k_minus_1(self, k):
        decomposition = build_case_4k_minus_1(k)
        assert decomposition.n == 4 * k - 1
        assert decomposition.parts_count == k + 1
        assert verify(decomposition).ok

    @pytest.mark.parametrize("k", [3, 4, 5])
    def test_4k_plus_1(self, k):
        decomposition = build_case_4k_plus_1(k)
        assert decomposition.n == 4 * k + 1
        assert decomposition.parts_count == k + 1
        assert verify(decomposition).ok

    def test_emptied_part(self):
        decomposition = build_case_4k(2)
        unprimed = [0, 1, 2, 3]
        with pytest.raises(ConstructionError):
            restrict(decomposition, unprimed)


class TestDecompose:
    @pytest.mark.parametrize("n", range(1, 61))
    def test_part_count_and_validity(self, construction, n):
        decomposition = construction.decompose(n)
        assert decomposition.n == n
        assert decomposition.parts_count == theta4(n).hi
        assert verify(decomposition).ok

    @pytest.mark.slow
    @pytest.mark.parametrize("n", range(61, 101))
    def test_large_orders(self, construction, n):
        decomposition = construction.decompose(n)
        assert decomposition.parts_count == theta4(n).hi
        assert verify(decomposition).ok

    def test_k1_has_one_empty_part(self, construction):
        assert construction.decompose(1).part_sizes() == [0]

    def test_k10_is_upper_bound_only(self, construction):
        decomposition = construction.decompose(10)
        assert decomposition.parts_count == 4
        assert decomposition.optimal is False

    def test_optimal_flag(self, construction):
        assert construction.decompose(12).optimal
        assert construction.decompose(6).optimal

    def test_rejects_zero(self, construction):
        with pytest.raises(ConstructionError):
            construction.decompose(0)

    def test_vertex_map_for(self):
        assert vertex_map_for(13) == VertexMap(3)
        assert vertex_map_for(15) == VertexMap(4)
        assert vertex_map_for(10) == VertexMap(3)
        assert vertex_map_for(9) is None
