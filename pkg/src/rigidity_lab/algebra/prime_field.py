from functools import lru_cache
from typing import Dict, Iterable, Optional

import numpy as np

from rigidity_lab.config import DEFAULT_SETTINGS

SparseRow = Dict[int, int]


@lru_cache(maxsize=32)
def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class PrimeFieldMatrix:
    """Dense matrix of residues modulo a prime

    Residues live in an int64 array; p must stay below 2^31.5 so that a product of two
    residues fits in a signed 64-bit word.
    """

    def __init__(self, entries, p: Optional[int] = None) -> None:
        p = DEFAULT_SETTINGS.prime if p is None else p
        if not is_prime(p):
            raise ValueError(f"Modulus {p} is not prime")
        if p * p >= 2**63:
            raise ValueError(f"Modulus {p} too large for int64 residue products")
        if isinstance(entries, np.ndarray) and entries.dtype == np.int64:
            array = np.mod(entries, p)
        else:
            array = np.asarray(np.mod(np.asarray(entries, dtype=object), p), dtype=np.int64)
        if array.ndim == 1:
            array = array.reshape(1, -1) if array.size else array.reshape(0, 0)
        self.p = p
        self.entries = array

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def transpose(self) -> 'PrimeFieldMatrix':
        return PrimeFieldMatrix(self.entries.T.copy(), self.p)


def rank_mod_p(m: PrimeFieldMatrix) -> int:
    """Exact rank over GF(p) by row reduction with modular inverses

    Args:
        m (PrimeFieldMatrix): Matrix over GF(p).

    Returns:
        int: Rank.
    """
    p = m.p
    a = m.entries.copy()
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nonzero = np.flatnonzero(a[rank:, c])
        if nonzero.size == 0:
            continue
        pivot = rank + int(nonzero[0])
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        inverse = pow(int(a[rank, c]), p - 2, p)
        a[rank, c:] = (a[rank, c:] * inverse) % p
        below = rank + 1 + np.flatnonzero(a[rank + 1:, c])
        if below.size:
            factors = a[below, c][:, None]
            a[below, c:] = (a[below, c:] - (factors * a[rank, c:]) % p) % p
        rank += 1
    return rank


def rank_mod_p_sparse(rows: Iterable[SparseRow], p: Optional[int] = None, stop_at: Optional[int] = None) -> int:
    """Exact rank over GF(p) of a sparse row stream via an online echelon basis

    Each row is reduced against stored pivots in increasing column order. Callers that
    place the columns of late vertices first keep the fill-in local.

    Args:
        rows (Iterable[SparseRow]): Rows as {column: residue}.
        p (Optional[int], optional): Prime modulus. defaults to DEFAULT_SETTINGS.prime
        stop_at (Optional[int], optional): Stop reading rows once the rank reaches this value. defaults to None

    Returns:
        int: Rank.
    """
    p = DEFAULT_SETTINGS.prime if p is None else p
    basis: Dict[int, SparseRow] = {}
    for raw in rows:
        if stop_at is not None and len(basis) >= stop_at:
            break
        row = {c: v % p for c, v in raw.items() if v % p}
        while row:
            c = min(row)
            stored = basis.get(c)
            if stored is None:
                inverse = pow(row[c], p - 2, p)
                basis[c] = {cc: (v * inverse) % p for cc, v in row.items()}
                break
            factor = row[c]
            for cc, v in stored.items():
                updated = (row.get(cc, 0) - factor * v) % p
                if updated:
                    row[cc] = updated
                else:
                    row.pop(cc, None)
    return len(basis)
