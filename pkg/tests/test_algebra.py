import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from rigidity_lab.algebra import (PrimeFieldMatrix, SymMatrix, eigenvalues_sym, is_prime, kth_smallest,
                                  laplacian_matrix, rank_mod_p, rank_mod_p_sparse, second_eigenvalue)
from rigidity_lab.errors import IndexOutOfRange, NonFinite
from rigidity_lab.graphs import complete_graph, cycle_graph, path_graph

small_matrices = st.integers(min_value=1, max_value=6).flatmap(lambda rows: st.integers(
    min_value=1, max_value=6).flatmap(lambda cols: st.lists(
        st.lists(st.integers(min_value=-50, max_value=50), min_size=cols, max_size=cols),
        min_size=rows,
        max_size=rows,
    )))


class TestPrimeField:

    def test_mersenne_prime(self):
        assert is_prime(2**31 - 1)
        assert not is_prime(2**31 + 1)
        assert not is_prime(1)

    def test_identity_rank(self):
        assert rank_mod_p(PrimeFieldMatrix(np.eye(3, dtype=np.int64))) == 3

    def test_proportional_rows(self):
        assert rank_mod_p(PrimeFieldMatrix([[1, 2, 3], [2, 4, 6]])) == 1

    def test_rank_depends_on_characteristic(self):
        m = [[1, 1], [1, -1]]
        assert rank_mod_p(PrimeFieldMatrix(m, p=2)) == 1
        assert rank_mod_p(PrimeFieldMatrix(m, p=3)) == 2

    def test_row_rank_equals_column_rank(self):
        m = PrimeFieldMatrix([[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 0, 1]], p=7)
        assert m.transpose().rows == 4
        assert rank_mod_p(m.transpose()) == rank_mod_p(m) == 2

    def test_zero_matrix(self):
        assert rank_mod_p(PrimeFieldMatrix(np.zeros((3, 4), dtype=np.int64))) == 0

    def test_rejects_composite_modulus(self):
        with pytest.raises(ValueError):
            PrimeFieldMatrix([[1]], p=15)

    def test_sparse_matches_dense(self):
        rows = [{0: 1, 2: 3}, {1: 5}, {0: 2, 2: 6}, {0: 1, 1: 1, 2: 3}]
        dense = [[row.get(c, 0) for c in range(3)] for row in rows]
        assert rank_mod_p_sparse(rows) == rank_mod_p(PrimeFieldMatrix(dense)) == 2

    def test_sparse_stops_early(self):
        rows = [{0: 1}, {1: 1}, {2: 1}]
        assert rank_mod_p_sparse(rows, stop_at=2) == 2

    @settings(max_examples=40, deadline=None)
    @given(small_matrices)
    def test_rank_agrees_with_rational_rank(self, entries):
        # small integer entries: rank over GF(2^31 - 1) equals the rational rank
        assert rank_mod_p(PrimeFieldMatrix(entries)) == sympy.Matrix(entries).rank()


class TestSpectra:

    def test_cycle_laplacian(self):
        values = eigenvalues_sym(laplacian_matrix(cycle_graph(4))).values
        assert values == pytest.approx([0, 2, 2, 4], abs=1e-9)

    def test_kth_smallest_is_one_indexed(self):
        spectrum = eigenvalues_sym(laplacian_matrix(path_graph(2)))
        assert kth_smallest(spectrum, 1) == pytest.approx(0, abs=1e-12)
        assert kth_smallest(spectrum, 2) == pytest.approx(2)
        with pytest.raises(IndexOutOfRange):
            kth_smallest(spectrum, 3)

    def test_empty_matrix(self):
        assert eigenvalues_sym(SymMatrix(np.zeros((0, 0)))).values == []

    def test_non_finite_entries(self):
        with pytest.raises(NonFinite):
            SymMatrix([[0.0, np.inf], [np.inf, 0.0]])

    def test_asymmetric_entries(self):
        with pytest.raises(ValueError):
            SymMatrix([[0.0, 1.0], [0.0, 0.0]])

    def test_gram_is_symmetric(self):
        rng = np.random.default_rng(3)
        m = SymMatrix.gram(rng.standard_normal((5, 3)))
        assert np.array_equal(m.entries, m.entries.T)
        assert min(eigenvalues_sym(m).values) > -1e-9

    def test_second_eigenvalue(self):
        assert second_eigenvalue(complete_graph(5)) == pytest.approx(1.0)
        assert second_eigenvalue(cycle_graph(4)) == pytest.approx(2.0)
