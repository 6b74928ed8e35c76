from typing import Optional

import numpy as np

from rigidity_lab.config import DEFAULT_SETTINGS
from rigidity_lab.errors import IndexOutOfRange, NonFinite
from rigidity_lab.graphs import Graph
from rigidity_lab.schemas import Spectrum


class SymMatrix:
    """Real symmetric matrix; symmetry is checked exactly on the stored entries"""

    def __init__(self, entries) -> None:
        array = np.asarray(entries, dtype=np.float64)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise ValueError(f"Symmetric matrix must be square, got shape {array.shape}")
        if not np.all(np.isfinite(array)):
            raise NonFinite('Symmetric matrix has non-finite entries')
        if not np.array_equal(array, array.T):
            raise ValueError('Matrix is not exactly symmetric')
        self.entries = array

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    @classmethod
    def gram(cls, factor) -> 'SymMatrix':
        """A·Aᵀ, symmetrised so that rounding cannot break exact symmetry"""
        a = np.asarray(factor, dtype=np.float64)
        product = a @ a.T
        return cls((product + product.T) / 2)


def eigenvalues_sym(m: SymMatrix, tol: Optional[float] = None) -> Spectrum:
    """All eigenvalues of a symmetric matrix in ascending order

    LAPACK's symmetric driver (Householder tridiagonalisation + divide and conquer) is
    backward stable, which keeps every eigenvalue well inside tol·(1+|λ|) at desk scale.

    Args:
        m (SymMatrix): Symmetric matrix.
        tol (Optional[float], optional): Accuracy recorded on the spectrum. defaults to DEFAULT_SETTINGS.eig_tol

    Returns:
        Spectrum: Ascending eigenvalues.
    """
    tol = DEFAULT_SETTINGS.eig_tol if tol is None else tol
    if tol <= 0:
        raise ValueError(f"Eigenvalue tolerance must be positive, got {tol}")
    if not np.all(np.isfinite(m.entries)):
        raise NonFinite('Symmetric matrix has non-finite entries')
    if m.order == 0:
        return Spectrum(values=[], tolerance=tol)
    values = np.linalg.eigvalsh(m.entries)
    return Spectrum(values=[float(v) for v in np.sort(values)], tolerance=tol)


def kth_smallest(s: Spectrum, k: int) -> float:
    """λ_k, 1-indexed from the smallest eigenvalue"""
    if not 1 <= k <= s.order:
        raise IndexOutOfRange(f"Eigenvalue index {k} outside 1..{s.order}")
    return s.values[k - 1]


def adjacency_matrix(g: Graph) -> SymMatrix:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1.0
    return SymMatrix(a)


def laplacian_matrix(g: Graph) -> SymMatrix:
    a = adjacency_matrix(g).entries
    return SymMatrix(np.diag(a.sum(axis=1)) - a)


def adjacency_spectrum(g: Graph, tol: Optional[float] = None) -> Spectrum:
    return eigenvalues_sym(adjacency_matrix(g), tol)


def second_eigenvalue(g: Graph, tol: Optional[float] = None) -> float:
    """max(|λ_2|, |λ_n|) of the adjacency matrix, indexing from the largest"""
    values = adjacency_spectrum(g, tol).values
    if len(values) < 2:
        return 0.0
    return max(abs(values[-2]), abs(values[0]))
