from typing import Iterator, NamedTuple, Optional

import networkx as nx
import numpy as np
from loguru import logger

from rigidity_lab.config import DEFAULT_SETTINGS
from rigidity_lab.errors import ParityError, RejectionCapExceeded, TooManyEdges
from rigidity_lab.generators.rng import derive_seed, make_rng
from rigidity_lab.graphs import BipartiteGraph, Edge, Graph
from rigidity_lab.schemas import ProcessSnapshot


class RegularSample(NamedTuple):
    graph: Graph
    collapsed: bool
    attempts: int


def _pair_arrays(n: int):
    return np.triu_indices(n, k=1)


def gnp(n: int, p: float, seed: int) -> Graph:
    """G(n, p): each of the C(n, 2) pairs independently with probability p"""
    if not 0 <= p <= 1:
        raise ValueError(f"Edge probability must lie in [0, 1], got {p}")
    rows, cols = _pair_arrays(n)
    keep = make_rng(seed).random(rows.size) < p
    return Graph(n, zip(rows[keep].tolist(), cols[keep].tolist()))


def gnnp(n: int, p: float, seed: int) -> BipartiteGraph:
    """G(n, n, p) with A = 0..n-1 and B = n..2n-1"""
    if not 0 <= p <= 1:
        raise ValueError(f"Edge probability must lie in [0, 1], got {p}")
    a, b = np.nonzero(make_rng(seed).random((n, n)) < p)
    graph = Graph(2 * n, zip(a.tolist(), (b + n).tolist()))
    return BipartiteGraph(graph, range(n), range(n, 2 * n))


def gnm(n: int, m: int, seed: int) -> Graph:
    """G(n, m): a uniform m-subset of the C(n, 2) pairs"""
    total = n * (n - 1) // 2
    if m > total:
        raise TooManyEdges(f"{m} edges requested but K_{n} has only {total}")
    if m < 0:
        raise ValueError(f"Edge count must be non-negative, got {m}")
    rows, cols = _pair_arrays(n)
    chosen = make_rng(seed).choice(total, size=m, replace=False)
    return Graph(n, zip(rows[chosen].tolist(), cols[chosen].tolist()))


def random_graph_process(n: int, seed: int) -> Iterator[Edge]:
    """Edges of K_n in the uniformly random order of the random graph process"""
    rows, cols = _pair_arrays(n)
    for index in make_rng(seed).permutation(rows.size):
        yield int(rows[index]), int(cols[index])


def process_hitting_time(n: int, d: int, seed: int) -> ProcessSnapshot:
    """Run the random graph process until the minimum degree reaches d

    Args:
        n (int): Vertex count.
        d (int): Target minimum degree, 1 <= d <= n-1.
        seed (int): Seed of the edge order.

    Returns:
        ProcessSnapshot: G(n, tau_d) together with its insertion order.
    """
    if not 1 <= d <= n - 1:
        raise ValueError(f"Minimum degree target must lie in 1..{n - 1}, got {d}")
    degree = [0] * n
    below = n
    edges = []
    for u, v in random_graph_process(n, seed):
        edges.append((u, v))
        for w in (u, v):
            degree[w] += 1
            if degree[w] == d:
                below -= 1
        if below == 0:
            break
    logger.debug(f"Hitting time tau_{d} = {len(edges)} for n = {n}, seed = {seed}")
    return ProcessSnapshot(n=n, d=d, tau_d=len(edges), seed=seed, edges=edges)


def random_regular(
    n: int,
    k: int,
    seed: int,
    simple: bool = True,
    rejection_cap: Optional[int] = None,
) -> RegularSample:
    """k-regular graph from the configuration model

    Half-edges (v, 0..k-1) are matched by a uniform perfect matching and projected onto
    their vertices. With ``simple`` the sample is rejected until it has neither loops nor
    parallel edges, which makes it uniform over simple k-regular graphs. Without it the
    multigraph is collapsed into a simple graph and ``collapsed`` reports whether that
    lost anything.

    Args:
        n (int): Vertex count.
        k (int): Degree.
        seed (int): Seed.
        simple (bool, optional): Reject non-simple samples. defaults to True
        rejection_cap (Optional[int], optional): Samples before giving up.
            defaults to DEFAULT_SETTINGS.regular_rejection_cap

    Returns:
        RegularSample: Graph, collapse flag and number of samples drawn.
    """
    if (n * k) % 2:
        raise ParityError(f"n*k must be even, got n={n}, k={k}")
    if k < 0:
        raise ValueError(f"Degree must be non-negative, got {k}")
    if simple and n > 0 and k >= n:
        raise ValueError(f"No simple {k}-regular graph on {n} vertices")
    rejection_cap = DEFAULT_SETTINGS.regular_rejection_cap if rejection_cap is None else rejection_cap
    rng = make_rng(seed)
    attempts = 0
    while True:
        attempts += 1
        half_edges = rng.permutation(n * k) // k if k else np.empty(0, dtype=np.int64)
        u, v = half_edges[0::2], half_edges[1::2]
        low, high = np.minimum(u, v), np.maximum(u, v)
        loops = bool(np.any(low == high))
        distinct = np.unique(low * n + high).size if low.size else 0
        is_simple = not loops and distinct == low.size
        if is_simple or not simple:
            keep = low != high
            graph = Graph(n, zip(low[keep].tolist(), high[keep].tolist()))
            if attempts > 1:
                logger.debug(f"Simple {k}-regular sample on {n} vertices after {attempts} attempts")
            return RegularSample(graph=graph, collapsed=not is_simple, attempts=attempts)
        if attempts >= rejection_cap:
            raise RejectionCapExceeded(f"No simple {k}-regular graph on {n} vertices in {attempts} samples")


def random_regular_pairing(n: int, k: int, seed: int) -> RegularSample:
    """Simple k-regular graph from the incremental pairing algorithm of networkx

    Rejection from the configuration model accepts a sample with probability about
    exp((1 - k^2) / 4), which is hopeless beyond k = 6. The pairing algorithm avoids loops
    and parallel edges while matching and stays close to uniform.

    Args:
        n (int): Vertex count.
        k (int): Degree, 0 <= k < n.
        seed (int): Seed.

    Returns:
        RegularSample: Graph; ``collapsed`` is always False.
    """
    if (n * k) % 2:
        raise ParityError(f"n*k must be even, got n={n}, k={k}")
    if not 0 <= k < max(n, 1):
        raise ValueError(f"No simple {k}-regular graph on {n} vertices")
    graph = nx.random_regular_graph(k, n, seed=derive_seed(seed, 0) % 2**32)
    return RegularSample(graph=Graph(n, graph.edges()), collapsed=False, attempts=1)
