from itertools import combinations

import pytest
from conftest import small_graphs
from hypothesis import given, settings
from hypothesis import strategies as st

from rigidity_lab.errors import NotRegular, TooLarge
from rigidity_lab.graphs import (BipartiteGraph, Graph, complete_bipartite, complete_graph, cycle_graph,
                                 disjoint_union, external_neighbourhood, induced_edges, path_graph, star_graph)
from rigidity_lab.properties import (is_bi_connector, is_connector, is_expander, is_jumbled_exact, is_sparse,
                                     jumbled_certificate_regular, matching_between, max_matching)
from rigidity_lab.schemas import PropertyKind, PropertyVerdict, VerdictMode


def two_triangles() -> Graph:
    return disjoint_union(complete_graph(3), complete_graph(3))


class TestPropertyVerdict:

    def test_violated_is_derived_from_kind(self):
        verdict = PropertyVerdict(property='sparse(x=4, y=1)', kind=PropertyKind.VIOLATED, mode=VerdictMode.EXACT)
        assert verdict.violated
        assert not verdict.model_copy(update={'kind': PropertyKind.HOLDS}).violated

    def test_dump_keeps_the_property_name(self):
        verdict = PropertyVerdict(property='expander(r=2)', kind=PropertyKind.HOLDS, mode=VerdictMode.EXACT)
        dumped = verdict.model_dump(mode='json')
        assert dumped['property'] == 'expander(r=2)'
        assert 'violated' not in dumped


class TestSparse:

    def test_cycle_holds(self):
        verdict = is_sparse(cycle_graph(5), 5, 1)
        assert verdict.kind is PropertyKind.HOLDS
        assert verdict.mode is VerdictMode.EXACT

    def test_dense_clique(self, k4):
        verdict = is_sparse(k4, 4, 1)
        assert verdict.violated
        assert verdict.witness == [[0, 1, 2, 3]]

    def test_looser_density(self, k4):
        assert is_sparse(k4, 4, 1.5).kind is PropertyKind.HOLDS

    def test_search_never_holds(self, k4):
        assert is_sparse(cycle_graph(5), 5, 1, mode=VerdictMode.RANDOM_SEARCH).kind is PropertyKind.NO_VIOLATION_FOUND
        assert is_sparse(k4, 4, 1, mode=VerdictMode.RANDOM_SEARCH).violated

    def test_exact_mode_size_limit(self):
        with pytest.raises(TooLarge):
            is_sparse(path_graph(30), 3, 1, mode=VerdictMode.EXACT)

    def test_size_bound_must_be_positive(self, k4):
        with pytest.raises(ValueError):
            is_sparse(k4, 0.5, 1)

    @settings(max_examples=40, deadline=None)
    @given(small_graphs(max_n=7), st.integers(min_value=1, max_value=7), st.sampled_from([0.5, 1.0, 1.5, 2.0]))
    def test_exact_verdict_matches_enumeration(self, g, x, y):
        dense = [
            set(a) for size in range(1, min(x, g.n) + 1) for a in combinations(range(g.n), size)
            if len(induced_edges(g, a)) > size * y
        ]
        verdict = is_sparse(g, x, y)
        assert verdict.violated == bool(dense)
        if verdict.violated:
            (witness,) = verdict.witness
            assert len(induced_edges(g, witness)) > len(witness) * y
            assert 1 <= len(witness) <= x


class TestConnectorAndExpander:

    def test_two_triangles_are_not_a_connector(self):
        verdict = is_connector(two_triangles(), 3)
        assert verdict.violated
        a, b = verdict.witness
        assert len(a) == len(b) == 3
        assert not set(b) & (set(a) | external_neighbourhood(two_triangles(), a))

    def test_cycle_is_a_connector(self):
        assert is_connector(cycle_graph(6), 3).kind is PropertyKind.HOLDS

    def test_connector_on_too_few_vertices(self, k4):
        assert is_connector(k4, 3).kind is PropertyKind.HOLDS

    def test_cycle_is_not_an_expander(self):
        verdict = is_expander(cycle_graph(6), 2)
        assert verdict.violated
        assert verdict.witness == [[0, 1]]

    def test_clique_expands(self):
        assert is_expander(complete_graph(7), 2).kind is PropertyKind.HOLDS

    def test_search_finds_disconnected_halves(self):
        verdict = is_connector(two_triangles(), 3, mode=VerdictMode.RANDOM_SEARCH, seed=4)
        assert verdict.violated
        assert verdict.mode is VerdictMode.RANDOM_SEARCH
        assert verdict.search_budget <= 2000

    def test_bi_connector(self):
        assert is_bi_connector(complete_bipartite(3, 3), 1).kind is PropertyKind.HOLDS
        empty = BipartiteGraph(Graph(4), [0, 1], [2, 3])
        assert is_bi_connector(empty, 1).violated


class TestJumbled:

    def test_regular_certificates(self, k4, c4):
        assert jumbled_certificate_regular(k4) == pytest.approx((0.75, 1.0))
        assert jumbled_certificate_regular(c4) == pytest.approx((0.5, 2.0))

    def test_irregular_graph(self, path3):
        with pytest.raises(NotRegular):
            jumbled_certificate_regular(path3)

    def test_certificate_is_sound(self):
        g = cycle_graph(6)
        p, beta = jumbled_certificate_regular(g)
        assert is_jumbled_exact(g, p, beta).kind is PropertyKind.HOLDS

    def test_tight_beta_is_violated(self, k4):
        verdict = is_jumbled_exact(k4, 0.75, 0.1)
        assert verdict.violated
        assert len(verdict.witness) == 2

    def test_exact_size_limit(self):
        with pytest.raises(TooLarge):
            is_jumbled_exact(path_graph(13), 0.5, 1.0)


class TestMatching:

    def test_complete_bipartite(self):
        assert len(max_matching(complete_bipartite(3, 3))) == 3

    def test_star(self):
        star = BipartiteGraph(star_graph(4), [0], [1, 2, 3, 4])
        assert len(max_matching(star)) == 1

    def test_sides_must_be_disjoint(self, k4):
        with pytest.raises(ValueError):
            matching_between(k4, [0, 1], [1, 2])
