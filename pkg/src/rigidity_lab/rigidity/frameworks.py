from math import inf
from typing import Dict, Optional, Tuple

import numpy as np

from rigidity_lab.algebra import SymMatrix, eigenvalues_sym, kth_smallest, laplacian_matrix
from rigidity_lab.errors import EmptyGraph, InvalidCertificate
from rigidity_lab.graphs import Edge, Graph
from rigidity_lab.rigidity.matrices import Embedding
from rigidity_lab.schemas import CutHierarchy, CutNode, RigidPartition

UNIT_TOL = 1e-12


class GeneralizedFramework:
    """Generalized d-dimensional framework (G, q)

    ``q[e, 0]`` is q(u, e) and ``q[e, 1]`` is q(v, e) for the e-th edge (u, v) of
    ``graph.edge_list`` (u < v). Limit frameworks built from partitions also carry the
    signing ``signs`` with the same layout.
    """

    def __init__(self, graph: Graph, q, signs: Optional[np.ndarray] = None) -> None:
        array = np.asarray(q, dtype=np.float64)
        if array.ndim != 3 or array.shape[:2] != (graph.num_edges, 2):
            raise ValueError(f"q must have shape ({graph.num_edges}, 2, d), got {array.shape}")
        if array.size and not np.all(np.abs(np.linalg.norm(array, axis=2) - 1.0) <= UNIT_TOL):
            raise ValueError('Every q(u, e) must be a unit vector')
        self.graph = graph
        self.q = array
        self.signs = signs

    @property
    def dim(self) -> int:
        return self.q.shape[2]

    def vector(self, u: int, e: Edge) -> np.ndarray:
        index = self.graph.edge_index[e]
        return self.q[index, 0 if u == e[0] else 1]

    def is_antisymmetric(self) -> bool:
        """q(u, e) = -q(v, e) on every edge, the limit-framework invariant"""
        return bool(np.array_equal(self.q[:, 0], -self.q[:, 1]))

    def normalized_rigidity_matrix(self) -> np.ndarray:
        """R̂(G, q) as an |E| x d*n array; row e carries q(u, e) in u's block"""
        d = self.dim
        matrix = np.zeros((self.graph.num_edges, d * self.graph.n))
        for row, (u, v) in enumerate(self.graph.edge_list):
            matrix[row, u * d:(u + 1) * d] = self.q[row, 0]
            matrix[row, v * d:(v + 1) * d] = self.q[row, 1]
        return matrix


def framework_from_embedding(g: Graph, p: Embedding) -> GeneralizedFramework:
    """q(u, {u, v}) = (p(u) - p(v)) / |p(u) - p(v)|"""
    coords = np.asarray(p.coords, dtype=np.float64)
    q = np.zeros((g.num_edges, 2, p.dim))
    for row, (u, v) in enumerate(g.edge_list):
        diff = coords[u] - coords[v]
        length = np.linalg.norm(diff)
        if length == 0:
            raise ValueError(f"Adjacent vertices {u} and {v} coincide in the embedding")
        q[row, 0] = diff / length
        q[row, 1] = -diff / length
    return GeneralizedFramework(g, q)


def stiffness_matrices(g: Graph, q: GeneralizedFramework) -> Tuple[SymMatrix, SymMatrix]:
    """Stiffness matrix L (d*n square) and lower stiffness matrix L^- (|E| square)

    With R the |E| x d*n normalized rigidity matrix, L = RᵀR and L^- = RRᵀ; they share
    their nonzero spectra.
    """
    if q.graph != g:
        raise ValueError('Framework belongs to a different graph')
    r = q.normalized_rigidity_matrix()
    return SymMatrix.gram(r.T), SymMatrix.gram(r)


def lower_stiffness_closed_form(q: GeneralizedFramework) -> SymMatrix:
    """2 on the diagonal, q(u, e1)·q(u, e2) when e1 ∩ e2 = {u}, 0 otherwise"""
    g = q.graph
    m = g.num_edges
    lower = 2.0 * np.eye(m)
    incident: Dict[int, list] = {v: [] for v in g.vertices}
    for row, (u, v) in enumerate(g.edge_list):
        incident[u].append((row, 0))
        incident[v].append((row, 1))
    for entries in incident.values():
        for a, (row_a, side_a) in enumerate(entries):
            for row_b, side_b in entries[a + 1:]:
                value = float(q.q[row_a, side_a] @ q.q[row_b, side_b])
                lower[row_a, row_b] = lower[row_b, row_a] = value
    return SymMatrix(lower)


def algebraic_connectivity(g: Graph) -> float:
    """a(G) = λ_2 of the Laplacian; ∞ for a single vertex"""
    if g.n == 0:
        raise EmptyGraph('Algebraic connectivity of the empty graph is undefined')
    if g.n == 1:
        return inf
    return kth_smallest(eigenvalues_sym(laplacian_matrix(g)), 2)


def regular_simplex(d: int) -> np.ndarray:
    """d+1 vertices of a regular simplex in R^d, centred at the origin, at unit distance from it

    The centred standard basis of R^{d+1} is expressed in an orthonormal basis of the
    hyperplane it spans.
    """
    if d < 1:
        raise ValueError(f"Dimension must be at least 1, got {d}")
    centred = np.eye(d + 1) - 1.0 / (d + 1)
    _, _, vt = np.linalg.svd(centred)
    points = centred @ vt[:d].T
    return points / np.linalg.norm(points, axis=1, keepdims=True)


def simplex_directions(d: int) -> np.ndarray:
    """y[i, j] = (x_i - x_j) / |x_i - x_j| for i != j; zero on the diagonal"""
    x = regular_simplex(d)
    y = np.zeros((d + 1, d + 1, d))
    for i in range(d + 1):
        for j in range(d + 1):
            if i != j:
                diff = x[i] - x[j]
                y[i, j] = diff / np.linalg.norm(diff)
    return y


def _comb_part(
    node: CutNode,
    part: int,
    edges_by_vertex: Dict[int, Dict[int, Tuple[int, int]]],
    colour_of: Dict[Edge, Tuple[int, int]],
    signs: np.ndarray,
    assigned: np.ndarray,
    edge_index: Dict[Edge, int],
) -> None:
    if node.is_leaf:
        if len(node.members) != 1:
            raise InvalidCertificate(f"Leaf {node.members} of part {part} is not a singleton")
        return
    block_of = {v: b for b, child in enumerate(node.children) for v in child.members}
    if set(block_of) != set(node.members):
        raise InvalidCertificate(f"Children of {node.members} do not partition it")
    j = node.colour
    for u in node.members:
        for w in edges_by_vertex.get(u, {}):
            if w not in block_of or block_of[w] <= block_of[u]:
                continue
            e = (min(u, w), max(u, w))
            if colour_of[e] != (min(part, j), max(part, j)):
                raise InvalidCertificate(
                    f"Edge {e} crosses a split of colour {j} in part {part} but lies in E_{colour_of[e]}")
            row = edge_index[e]
            signs[row, 0 if e[0] == u else 1] = 1.0
            signs[row, 0 if e[0] == w else 1] = -1.0
            assigned[row] = True
    for child in node.children:
        _comb_part(child, part, edges_by_vertex, colour_of, signs, assigned, edge_index)


def coloured_subgraph(g: Graph, rp: RigidPartition) -> Graph:
    """G' = (V, Ê)"""
    return Graph(g.n, rp.coloured_edges())


def limit_framework_from_partition(g: Graph, rp: RigidPartition, hierarchy: CutHierarchy) -> GeneralizedFramework:
    """Limit framework of G' = (V, Ê) built from a verified rigid partition

    Parts sit at the vertices of a regular simplex. A cross edge of E_ij from V_i to V_j
    gets q = y_ij at its V_i end. Edges inside a part are combed along the stored cut
    hierarchy: at a node split with colour j into blocks B_1, B_2, ..., an edge from an
    earlier block to a later one gets +y_ij at its earlier end and -y_ij at the other.
    ``signs`` records η(u, e), the sign of q(u, e) against y_{part(u), other part}.

    Args:
        g (Graph): Host graph.
        rp (RigidPartition): Verified partition.
        hierarchy (CutHierarchy): Certificate returned by the verifier.

    Returns:
        GeneralizedFramework: Antisymmetric framework on G' with signs attached.
    """
    d = rp.d
    prime = coloured_subgraph(g, rp)
    part_of = rp.part_of_vertex()
    colour_of = rp.colour_of_edge()
    y = simplex_directions(d)
    m = prime.num_edges
    signs = np.zeros((m, 2))
    assigned = np.zeros(m, dtype=bool)
    within: Dict[int, Dict[int, Tuple[int, int]]] = {}
    for row, (u, v) in enumerate(prime.edge_list):
        if part_of[u] != part_of[v]:
            signs[row] = 1.0
            assigned[row] = True
        else:
            within.setdefault(u, {})[v] = (u, v)
            within.setdefault(v, {})[u] = (u, v)
    for part, tree in enumerate(hierarchy.trees):
        if tree is None:
            continue
        if sorted(tree.members) != sorted(rp.parts[part]):
            raise InvalidCertificate(f"Hierarchy root of part {part} does not cover the part")
        _comb_part(tree, part, within, colour_of, signs, assigned, prime.edge_index)
    if not np.all(assigned):
        missing = [prime.edge_list[row] for row in np.flatnonzero(~assigned)]
        raise InvalidCertificate(f"Edges {missing[:5]} are never separated by the hierarchy")
    q = np.zeros((m, 2, max(d, 1)))
    for row, (u, v) in enumerate(prime.edge_list):
        i, j = colour_of[(u, v)]
        for side, w in enumerate((u, v)):
            own = part_of[w]
            other = j if own == i else i
            q[row, side] = signs[row, side] * y[own, other]
    return GeneralizedFramework(prime, q, signs=signs)
