from math import comb
from typing import Dict, Iterator, Optional, Sequence

import numpy as np

from rigidity_lab.algebra import PrimeFieldMatrix, SparseRow
from rigidity_lab.graphs import Graph


class Embedding:
    """Map p: V -> R^d (or into a prime field) stored as an n x d array

    The array dtype is kept as given: float for numeric work, int64 residues for rank
    tests, object for exact rationals.
    """

    def __init__(self, coords) -> None:
        array = np.asarray(coords)
        if array.ndim != 2 or array.shape[1] < 1:
            raise ValueError(f"Embedding coordinates must have shape (n, d) with d >= 1, got {array.shape}")
        self.coords = array

    @property
    def dim(self) -> int:
        return self.coords.shape[1]

    @property
    def n(self) -> int:
        return self.coords.shape[0]

    def is_injective(self) -> bool:
        return np.unique(self.coords, axis=0).shape[0] == self.n


def required_rank(n: int, d: int) -> int:
    """d*n - C(d+1, 2), the rank of an infinitesimally rigid framework with n >= d+1"""
    return d * n - comb(d + 1, 2)


def rigidity_matrix(g: Graph, p: Embedding) -> np.ndarray:
    """R(G, p): row e = {u, v} carries p(u)-p(v) in u's block and p(v)-p(u) in v's block

    Rows follow ``g.edge_list``; the block of vertex v spans columns v*d .. v*d+d-1.

    Args:
        g (Graph): Graph.
        p (Embedding): Embedding of all n vertices.

    Returns:
        np.ndarray: |E| x d*n matrix with the dtype of the embedding.
    """
    if p.n != g.n:
        raise ValueError(f"Embedding covers {p.n} vertices, graph has {g.n}")
    d = p.dim
    matrix = np.zeros((g.num_edges, d * g.n), dtype=p.coords.dtype)
    for row, (u, v) in enumerate(g.edge_list):
        diff = p.coords[u] - p.coords[v]
        matrix[row, u * d:(u + 1) * d] = diff
        matrix[row, v * d:(v + 1) * d] = -diff
    return matrix


def rigidity_matrix_mod_p(g: Graph, p: Embedding, prime: int) -> PrimeFieldMatrix:
    return PrimeFieldMatrix(rigidity_matrix(g, p).astype(np.int64), prime)


def sparse_rigidity_rows(
    g: Graph,
    p: Embedding,
    prime: int,
    vertex_order: Optional[Sequence[int]] = None,
) -> Iterator[SparseRow]:
    """Rows of R(G, p) over GF(prime) as {column: residue}

    ``vertex_order`` places the column block of ``vertex_order[0]`` first; vertices not
    listed keep their relative order after the listed ones.
    """
    d = p.dim
    position: Dict[int, int] = {}
    if vertex_order is not None:
        for v in vertex_order:
            position.setdefault(v, len(position))
    for v in range(g.n):
        position.setdefault(v, len(position))
    for u, v in g.edge_list:
        row: SparseRow = {}
        for k in range(d):
            diff = int(p.coords[u, k] - p.coords[v, k]) % prime
            if diff:
                row[position[u] * d + k] = diff
                row[position[v] * d + k] = prime - diff
        yield row


def random_field_embedding(n: int, d: int, prime: int, rng: np.random.Generator) -> Embedding:
    """Independent uniform coordinates in GF(prime), resampled until injective"""
    while True:
        embedding = Embedding(rng.integers(0, prime, size=(n, d), dtype=np.int64))
        if embedding.is_injective():
            return embedding
