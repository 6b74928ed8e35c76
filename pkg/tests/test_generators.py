import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rigidity_lab.errors import ParityError, RejectionCapExceeded, TooManyEdges
from rigidity_lab.generators import (derive_seed, gnm, gnnp, gnp, make_rng, process_hitting_time,
                                     random_graph_process, random_regular, random_regular_pairing)
from rigidity_lab.graphs import Graph, complete_graph


class TestSeeds:

    def test_derive_seed_is_stable(self):
        assert derive_seed(0, 1) == derive_seed(0, 1)
        assert derive_seed(0, 1) != derive_seed(0, 2)
        assert 0 <= derive_seed(123, 4) < 2**64

    def test_streams_are_independent(self):
        assert make_rng(5, 0).integers(0, 2**62) != make_rng(5, 1).integers(0, 2**62)
        assert make_rng(5, 3).random() == make_rng(5, 3).random()


class TestBinomialGraphs:

    def test_gnp_extremes(self):
        assert gnp(6, 0.0, seed=1).num_edges == 0
        assert gnp(6, 1.0, seed=1) == complete_graph(6)

    def test_gnp_is_reproducible(self):
        assert gnp(30, 0.3, seed=8) == gnp(30, 0.3, seed=8)

    def test_gnp_probability_range(self):
        with pytest.raises(ValueError):
            gnp(5, 1.5, seed=0)

    def test_gnnp_edges_cross(self):
        bg = gnnp(10, 0.5, seed=3)
        assert bg.part_a == frozenset(range(10))
        assert all((u < 10) != (v < 10) for u, v in bg.graph.edges)

    @pytest.mark.parametrize('n, m', [(5, 0), (5, 4), (5, 10), (40, 100)])
    def test_gnm_edge_count(self, n, m):
        assert gnm(n, m, seed=2).num_edges == m

    def test_gnm_too_many_edges(self):
        with pytest.raises(TooManyEdges):
            gnm(4, 7, seed=0)


class TestRandomGraphProcess:

    def test_process_enumerates_every_pair_once(self):
        edges = list(random_graph_process(7, seed=4))
        assert len(edges) == 21
        assert Graph(7, edges) == complete_graph(7)

    def test_hitting_time_of_an_edge(self):
        assert process_hitting_time(2, 1, seed=0).tau_d == 1

    def test_hitting_time_of_a_triangle(self):
        snapshot = process_hitting_time(3, 2, seed=0)
        assert snapshot.tau_d == 3
        assert snapshot.time == 3

    def test_degree_target_range(self):
        with pytest.raises(ValueError):
            process_hitting_time(4, 4, seed=0)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=3, max_value=14), st.integers(min_value=1, max_value=3), st.integers(0, 2**32))
    def test_hitting_invariant(self, n, d, seed):
        d = min(d, n - 1)
        snapshot = process_hitting_time(n, d, seed)
        assert Graph(n, snapshot.edges).min_degree() == d
        assert Graph(n, snapshot.edges[:-1]).min_degree() < d
        assert snapshot.edges == list(random_graph_process(n, seed))[:snapshot.tau_d]


class TestRegularGraphs:

    def test_single_edge(self):
        sample = random_regular(2, 1, seed=0)
        assert sample.graph == Graph(2, [(0, 1)])
        assert not sample.collapsed

    def test_triangle(self):
        assert random_regular(3, 2, seed=5).graph == complete_graph(3)

    def test_parity(self):
        with pytest.raises(ParityError):
            random_regular(3, 1, seed=0)
        with pytest.raises(ParityError):
            random_regular_pairing(5, 3, seed=0)

    def test_rejection_cap(self):
        with pytest.raises(RejectionCapExceeded):
            random_regular(10, 8, seed=0, rejection_cap=1)

    def test_collapsed_multigraph(self):
        sample = random_regular(6, 4, seed=1, simple=False)
        assert sample.attempts == 1
        assert sample.graph.max_degree() <= 4
        assert sample.collapsed == (sample.graph.num_edges < 12)

    @pytest.mark.parametrize('n, k', [(10, 3), (40, 12), (60, 29)])
    def test_pairing_sampler_is_regular(self, n, k):
        sample = random_regular_pairing(n, k, seed=3)
        assert sample.graph.min_degree() == sample.graph.max_degree() == k
        assert random_regular_pairing(n, k, seed=3).graph == sample.graph

    def test_pairing_sampler_degree_range(self):
        with pytest.raises(ValueError):
            random_regular_pairing(6, 6, seed=0)
