from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx
import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components as csgraph_components

from rigidity_lab.errors import IndexOutOfRange, PartialOverlap, SameVertex

Edge = Tuple[int, int]
VertexSubset = FrozenSet[int]


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph on the dense vertex range 0..n-1

    Values are immutable after construction. ``labels`` remembers host-graph ids when the
    graph was cut out of a larger one (``induced_pair``); it never affects the structure.
    """

    def __init__(self, n: int, edges: Iterable[Edge] = (), labels: Optional[Tuple[int, ...]] = None) -> None:
        """Instantiate Graph

        Args:
            n (int): Vertex count; vertices are 0..n-1.
            edges (Iterable[Edge], optional): Unordered vertex pairs. Duplicates collapse. defaults to ()
            labels (Optional[Tuple[int, ...]], optional): Host ids of the vertices. defaults to identity
        """
        if n < 0:
            raise ValueError(f"Vertex count must be non-negative, got {n}")
        edge_set = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"Loop at vertex {u} is not allowed in a simple graph")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"Edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            edge_set.add(canonical_edge(u, v))
        if labels is not None and len(labels) != n:
            raise ValueError(f"Expected {n} labels, got {len(labels)}")
        self.n = n
        self.edges: FrozenSet[Edge] = frozenset(edge_set)
        self.labels: Tuple[int, ...] = tuple(labels) if labels is not None else tuple(range(n))
        neighbour_lists: List[List[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            neighbour_lists[u].append(v)
            neighbour_lists[v].append(u)
        self.adjacency: Tuple[Tuple[int, ...], ...] = tuple(tuple(sorted(nb)) for nb in neighbour_lists)
        self._neighbour_sets: Tuple[FrozenSet[int], ...] = tuple(frozenset(nb) for nb in neighbour_lists)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    @cached_property
    def edge_list(self) -> Tuple[Edge, ...]:
        """Edges in canonical lexicographic order; row order of every edge-indexed matrix"""
        return tuple(sorted(self.edges))

    @cached_property
    def edge_index(self) -> Dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edge_list)}

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbour_sets[u]

    def neighbours(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def neighbour_set(self, v: int) -> FrozenSet[int]:
        return self._neighbour_sets[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def min_degree(self) -> int:
        return min((len(nb) for nb in self.adjacency), default=0)

    def max_degree(self) -> int:
        return max((len(nb) for nb in self.adjacency), default=0)

    def original_edges(self) -> FrozenSet[Edge]:
        """Edges expressed in host-graph ids"""
        return frozenset(canonical_edge(self.labels[u], self.labels[v]) for u, v in self.edges)

    def to_networkx(self) -> nx.Graph:
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.n))
        nx_graph.add_edges_from(self.edge_list)
        return nx_graph


class BipartiteGraph:
    """Graph together with a bipartition (A, B) that every edge crosses"""

    def __init__(self, graph: Graph, part_a: Iterable[int], part_b: Iterable[int]) -> None:
        self.graph = graph
        self.part_a: VertexSubset = as_subset(graph, part_a)
        self.part_b: VertexSubset = as_subset(graph, part_b)
        if self.part_a & self.part_b:
            raise ValueError('Bipartition classes must be disjoint')
        if len(self.part_a) + len(self.part_b) != graph.n:
            raise ValueError('Bipartition classes must cover every vertex')
        for u, v in graph.edges:
            if (u in self.part_a) == (v in self.part_a):
                raise ValueError(f"Edge ({u}, {v}) does not cross the bipartition")

    def __repr__(self) -> str:
        return f"BipartiteGraph(|A|={len(self.part_a)}, |B|={len(self.part_b)}, m={self.graph.num_edges})"


def as_subset(g: Graph, members: Iterable[int]) -> VertexSubset:
    subset = frozenset(int(v) for v in members)
    for v in subset:
        if not 0 <= v < g.n:
            raise IndexOutOfRange(f"Vertex {v} outside 0..{g.n - 1}")
    return subset


def connected_components(vertices: Iterable[int], edges: Iterable[Edge]) -> List[VertexSubset]:
    """Connected components of the graph (vertices, edges)

    Edges with an endpoint outside ``vertices`` are ignored. Components come back ordered by
    their smallest vertex.

    Args:
        vertices (Iterable[int]): Vertex set.
        edges (Iterable[Edge]): Edge set.

    Returns:
        List[VertexSubset]: Components.
    """
    vertex_list = sorted(set(vertices))
    if not vertex_list:
        return []
    position = {v: i for i, v in enumerate(vertex_list)}
    rows, cols = [], []
    for u, v in edges:
        if u in position and v in position:
            rows.append(position[u])
            cols.append(position[v])
    size = len(vertex_list)
    adjacency = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(size, size))
    count, component_of = csgraph_components(adjacency, directed=False)
    groups: List[List[int]] = [[] for _ in range(count)]
    for i, label in enumerate(component_of):
        groups[label].append(vertex_list[i])
    return sorted((frozenset(group) for group in groups), key=min)


def is_connected(g: Graph) -> bool:
    """A graph is connected when it has at least one vertex and a single component"""
    if g.n == 0:
        return False
    if g.n == 1:
        return True
    return len(connected_components(range(g.n), g.edges)) == 1


def is_connected_pair(vertices: Iterable[int], edges: Iterable[Edge]) -> bool:
    """Connectivity of (vertices, edges) with the vertexless convention of is_connected"""
    vertex_set = set(vertices)
    if not vertex_set:
        return False
    return len(connected_components(vertex_set, edges)) == 1


def edges_between(g: Graph, a: Iterable[int], b: Iterable[int]) -> FrozenSet[Edge]:
    """E(A, B): edges with one endpoint in A and the other in B"""
    a_set, b_set = frozenset(a), frozenset(b)
    smaller, other = (a_set, b_set) if len(a_set) <= len(b_set) else (b_set, a_set)
    found = set()
    for u in smaller:
        for w in g.neighbours(u):
            if w in other:
                found.add(canonical_edge(u, w))
    return frozenset(found)


def induced_edges(g: Graph, a: Iterable[int]) -> FrozenSet[Edge]:
    """E(A) = E(A, A)"""
    return edges_between(g, a, a)


def count_pairs(g: Graph, a: Iterable[int], b: Iterable[int]) -> int:
    """e(A, B): ordered pairs (u, v) in A x B that are edges; may exceed |E(A, B)| when A and B meet"""
    b_set = frozenset(b)
    return sum(1 for u in frozenset(a) for w in g.neighbours(u) if w in b_set)


def external_neighbourhood(g: Graph, a: Iterable[int]) -> VertexSubset:
    """N(A): vertices outside A with a neighbour in A"""
    a_set = frozenset(a)
    return frozenset(w for u in a_set for w in g.neighbours(u) if w not in a_set)


def induced_pair(g: Graph, a: Iterable[int], b: Iterable[int]) -> Graph:
    """G[A, B] on the vertex set A u B with edge set E(A, B)

    The result is relabelled to dense ids 0..|A u B|-1 in increasing host order; ``labels``
    maps back to host ids.

    Args:
        g (Graph): Host graph.
        a (Iterable[int]): Vertex set A.
        b (Iterable[int]): Vertex set B, equal to or disjoint from A.

    Returns:
        Graph: G[A, B]; G[A] when A = B.
    """
    a_set, b_set = as_subset(g, a), as_subset(g, b)
    if a_set != b_set and a_set & b_set:
        raise PartialOverlap('induced_pair needs A = B or A and B disjoint')
    labels = tuple(sorted(a_set | b_set))
    position = {v: i for i, v in enumerate(labels)}
    edges = [(position[u], position[v]) for u, v in edges_between(g, a_set, b_set)]
    return Graph(len(labels), edges, labels=labels)


def is_cds(g: Graph, s: Iterable[int]) -> bool:
    """Connected dominating set test: g[s] connected and every vertex outside s has a neighbour in s"""
    s_set = as_subset(g, s)
    if not is_connected_pair(s_set, induced_edges(g, s_set)):
        return False
    return all(v in s_set or not g.neighbour_set(v).isdisjoint(s_set) for v in g.vertices)


def common_neighbours(g: Graph, u: int, v: int) -> VertexSubset:
    if u == v:
        raise SameVertex(f"common_neighbours needs distinct vertices, got {u} twice")
    return g.neighbour_set(u) & g.neighbour_set(v)


def clique_number(g: Graph) -> int:
    """Exact clique number via maximal clique enumeration"""
    if g.n == 0:
        return 0
    return max(len(clique) for clique in nx.find_cliques(g.to_networkx()))


def first_clique(g: Graph, k: int, within: Optional[Iterable[int]] = None) -> Optional[Tuple[int, ...]]:
    """Lexicographically first k-clique, optionally restricted to a vertex set

    Every k-clique sits inside a maximal clique, so the least k-prefix over all maximal
    cliques is the global lexicographic minimum.
    """
    host = g.to_networkx()
    if within is not None:
        host = host.subgraph(set(within))
    best: Optional[Tuple[int, ...]] = None
    for clique in nx.find_cliques(host):
        if len(clique) < k:
            continue
        candidate = tuple(sorted(clique)[:k])
        if best is None or candidate < best:
            best = candidate
    return best
