from itertools import combinations
from typing import Tuple

from rigidity_lab.graphs.graph import BipartiteGraph, Graph


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"A cycle needs at least 3 vertices, got {n}")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0"""
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete_bipartite(m: int, n: int) -> BipartiteGraph:
    """K_{m,n} with A = 0..m-1 and B = m..m+n-1"""
    graph = Graph(m + n, ((a, m + b) for a in range(m) for b in range(n)))
    return BipartiteGraph(graph, range(m), range(m, m + n))


def hyperoctahedral_graph(n: int) -> Graph:
    """K_n minus the perfect matching {2i, 2i+1}"""
    if n % 2:
        raise ValueError(f"Hyperoctahedral graphs need an even vertex count, got {n}")
    return Graph(n, ((u, v) for u, v in combinations(range(n), 2) if u // 2 != v // 2))


def disjoint_union(*graphs: Graph) -> Graph:
    offset = 0
    edges = []
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, edges)


def glued_cliques(size: int, shared: int) -> Tuple[Graph, int]:
    """Two K_size sharing ``shared`` vertices; returns the graph and its vertex count"""
    n = 2 * size - shared
    first = range(size)
    second = range(size - shared, n)
    edges = list(combinations(first, 2)) + list(combinations(second, 2))
    return Graph(n, edges), n
