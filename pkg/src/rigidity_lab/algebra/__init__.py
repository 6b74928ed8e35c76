from .prime_field import PrimeFieldMatrix, SparseRow, is_prime, rank_mod_p, rank_mod_p_sparse
from .spectra import (SymMatrix, adjacency_matrix, adjacency_spectrum, eigenvalues_sym, kth_smallest,
                      laplacian_matrix, second_eigenvalue)

__all__ = [
    'PrimeFieldMatrix', 'SparseRow', 'is_prime', 'rank_mod_p', 'rank_mod_p_sparse', 'SymMatrix', 'adjacency_matrix',
    'adjacency_spectrum', 'eigenvalues_sym', 'kth_smallest', 'laplacian_matrix', 'second_eigenvalue'
]
