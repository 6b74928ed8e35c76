from itertools import combinations
from math import comb

import numpy as np
import pytest
import sympy
from hypothesis import strategies as st

from rigidity_lab.graphs import Graph, complete_bipartite, complete_graph, cycle_graph, path_graph


@pytest.fixture
def k4() -> Graph:
    return complete_graph(4)


@pytest.fixture
def c4() -> Graph:
    return cycle_graph(4)


@pytest.fixture
def path3() -> Graph:
    return path_graph(3)


@pytest.fixture
def k46():
    return complete_bipartite(4, 6)


@st.composite
def small_graphs(draw, min_n: int = 1, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [pair for pair, keep in zip(pairs, chosen) if keep])


def exact_generic_rank(g: Graph, d: int, seed: int = 0, embeddings: int = 2) -> int:
    """Best rational rank of the rigidity matrix over a few random integer embeddings"""
    rng = np.random.default_rng(seed)
    best = 0
    for _ in range(embeddings):
        coords = rng.integers(-10**6, 10**6, size=(g.n, d)).tolist()
        rows = []
        for u, v in g.edge_list:
            row = [0] * (d * g.n)
            for k in range(d):
                diff = coords[u][k] - coords[v][k]
                row[d * u + k] = diff
                row[d * v + k] = -diff
            rows.append(row)
        rank = sympy.Matrix(rows).rank() if rows else 0
        best = max(best, rank)
    return best


def required(n: int, d: int) -> int:
    return d * n - comb(d + 1, 2)
