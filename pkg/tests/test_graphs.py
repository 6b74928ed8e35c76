import pytest
from conftest import small_graphs
from hypothesis import given, settings

from rigidity_lab.errors import IndexOutOfRange, PartialOverlap, SameVertex
from rigidity_lab.graphs import (Graph, clique_number, common_neighbours, complete_bipartite, complete_graph,
                                 connected_components, count_pairs, cycle_graph, disjoint_union, edges_between,
                                 external_neighbourhood, first_clique, glued_cliques, hyperoctahedral_graph,
                                 induced_pair, is_cds, is_connected, path_graph, star_graph)


class TestGraph:

    def test_duplicates_collapse(self):
        g = Graph(3, [(0, 1), (1, 0), (1, 2)])
        assert g.num_edges == 2
        assert g.edge_list == ((0, 1), (1, 2))

    def test_loops_rejected(self):
        with pytest.raises(ValueError):
            Graph(2, [(1, 1)])

    def test_endpoint_out_of_range(self):
        with pytest.raises(ValueError):
            Graph(2, [(0, 2)])

    def test_degrees(self):
        g = star_graph(5)
        assert g.degree(0) == 5
        assert g.min_degree() == 1
        assert g.max_degree() == 5
        assert Graph(0).min_degree() == 0


class TestInducedPair:

    def test_cross_edges_of_k4(self, k4):
        h = induced_pair(k4, {0, 1}, {2, 3})
        assert h.labels == (0, 1, 2, 3)
        assert h.original_edges() == {(0, 2), (0, 3), (1, 2), (1, 3)}

    def test_equal_sets_give_induced_subgraph(self, k4):
        h = induced_pair(k4, {0, 1}, {0, 1})
        assert h.n == 2
        assert h.original_edges() == {(0, 1)}

    def test_non_adjacent_pair(self, path3):
        h = induced_pair(path3, {0}, {2})
        assert h.labels == (0, 2)
        assert h.num_edges == 0

    def test_partial_overlap(self, k4):
        with pytest.raises(PartialOverlap):
            induced_pair(k4, {0, 1}, {1, 2})

    def test_vertex_out_of_range(self, k4):
        with pytest.raises(IndexOutOfRange):
            induced_pair(k4, {0, 7}, {1})


class TestConnectivity:

    def test_vertexless_graph_is_disconnected(self):
        assert not is_connected(Graph(0))

    def test_single_vertex_is_connected(self):
        assert is_connected(Graph(1))

    def test_two_disjoint_edges(self):
        assert not is_connected(Graph(4, [(0, 1), (2, 3)]))

    def test_components_ordered_by_smallest_vertex(self):
        components = connected_components(range(6), [(4, 5), (0, 3), (1, 2)])
        assert components == [frozenset({0, 3}), frozenset({1, 2}), frozenset({4, 5})]

    def test_foreign_edges_ignored(self):
        assert connected_components({0, 1}, [(1, 2), (0, 2)]) == [frozenset({0}), frozenset({1})]

    @settings(max_examples=60)
    @given(small_graphs())
    def test_components_partition_the_vertices(self, g):
        components = connected_components(g.vertices, g.edges)
        assert sorted(v for c in components for v in c) == list(g.vertices)
        assert all(not edges_between(g, a, b) for a in components for b in components if a != b)
        assert is_connected(g) == (len(components) == 1)


class TestDominatingSets:

    def test_centre_of_path(self, path3):
        assert is_cds(path3, {1})

    def test_end_of_path(self, path3):
        assert not is_cds(path3, {0})

    def test_cycle_arc(self):
        assert is_cds(cycle_graph(6), {0, 1, 2, 3})


class TestNeighbourhoods:

    def test_common_neighbours(self, c4, path3):
        assert common_neighbours(complete_graph(6), 0, 1) == {2, 3, 4, 5}
        assert common_neighbours(c4, 0, 2) == {1, 3}
        assert common_neighbours(path3, 0, 2) == {1}

    def test_same_vertex(self, k4):
        with pytest.raises(SameVertex):
            common_neighbours(k4, 1, 1)

    def test_ordered_pairs_count_twice_on_overlap(self, k4):
        assert count_pairs(k4, {0, 1}, {0, 1}) == 2
        assert len(edges_between(k4, {0, 1}, {0, 1})) == 1
        assert count_pairs(k4, {0, 1}, {2, 3}) == 4

    def test_external_neighbourhood(self, path3):
        assert external_neighbourhood(path3, {0}) == {1}
        assert external_neighbourhood(path3, {0, 1, 2}) == frozenset()


class TestCliques:

    def test_clique_number(self):
        assert clique_number(complete_graph(5)) == 5
        assert clique_number(cycle_graph(5)) == 2
        assert clique_number(Graph(3)) == 1
        assert clique_number(Graph(0)) == 0

    def test_first_clique_is_lexicographic(self):
        g = Graph(6, [(3, 4), (4, 5), (3, 5), (0, 1), (1, 2), (0, 2), (2, 5)])
        assert first_clique(g, 3) == (0, 1, 2)
        assert first_clique(g, 3, within={2, 3, 4, 5}) == (3, 4, 5)
        assert first_clique(g, 4) is None


class TestFamilies:

    def test_complete_bipartite_layout(self):
        bg = complete_bipartite(2, 3)
        assert bg.part_a == {0, 1}
        assert bg.part_b == {2, 3, 4}
        assert bg.graph.num_edges == 6

    def test_hyperoctahedral(self):
        g = hyperoctahedral_graph(6)
        assert g.num_edges == 15 - 3
        assert not g.has_edge(0, 1)
        assert g.min_degree() == g.max_degree() == 4
        with pytest.raises(ValueError):
            hyperoctahedral_graph(5)

    def test_disjoint_union_and_glue(self):
        g = disjoint_union(path_graph(2), path_graph(3))
        assert g.n == 5
        assert g.edge_list == ((0, 1), (2, 3), (3, 4))
        glued, n = glued_cliques(5, 2)
        assert n == 8
        assert glued.num_edges == 2 * 10 - 1
