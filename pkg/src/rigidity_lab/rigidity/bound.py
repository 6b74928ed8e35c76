from math import comb, inf
from typing import Dict, Optional, Tuple

import numpy as np
from loguru import logger

from rigidity_lab.algebra import eigenvalues_sym, kth_smallest
from rigidity_lab.config import DEFAULT_SETTINGS
from rigidity_lab.errors import EdgeDeficit
from rigidity_lab.graphs import Graph
from rigidity_lab.rigidity.frameworks import (GeneralizedFramework, algebraic_connectivity, framework_from_embedding,
                                              limit_framework_from_partition, stiffness_matrices)
from rigidity_lab.rigidity.matrices import Embedding, required_rank
from rigidity_lab.schemas import BoundReport, CutHierarchy, RigidPartition, colour_key


def colour_pair_graph(g: Graph, rp: RigidPartition, i: int, j: int) -> Graph:
    """G_ij = (V_i ∪ V_j, E_ij), relabelled densely in increasing vertex order"""
    labels = tuple(sorted(set(rp.parts[i]) | set(rp.parts[j])))
    position = {v: k for k, v in enumerate(labels)}
    return Graph(len(labels), ((position[u], position[v]) for u, v in rp.colour_class(i, j)), labels=labels)


def signed_block_matrices(framework: GeneralizedFramework, rp: RigidPartition) -> Tuple[np.ndarray, np.ndarray]:
    """M and T of the signing η carried by a limit framework

    M(e, e') = η(u, e)·η(u, e') when e ∩ e' = {u}, 2 on the diagonal; T keeps the same
    entries only between edges of the same colour class.
    """
    g = framework.graph
    signs = framework.signs
    colour_of = rp.colour_of_edge()
    m = g.num_edges
    full = 2.0 * np.eye(m)
    block = 2.0 * np.eye(m)
    incident: Dict[int, list] = {v: [] for v in g.vertices}
    for row, (u, v) in enumerate(g.edge_list):
        incident[u].append((row, 0))
        incident[v].append((row, 1))
    for entries in incident.values():
        for a, (row_a, side_a) in enumerate(entries):
            for row_b, side_b in entries[a + 1:]:
                value = signs[row_a, side_a] * signs[row_b, side_b]
                full[row_a, row_b] = full[row_b, row_a] = value
                if colour_of[g.edge_list[row_a]] == colour_of[g.edge_list[row_b]]:
                    block[row_a, row_b] = block[row_b, row_a] = value
    return full, block


def quantitative_bound_check(
    g: Graph,
    rp: RigidPartition,
    hierarchy: CutHierarchy,
    tol: Optional[float] = None,
) -> BoundReport:
    """Check λ_{C(d+1,2)+1}(L(G', q)) >= min a(G_ij)/2 for the limit framework of a partition

    The eigenvalue is read off the lower stiffness matrix as λ_m(L^-) with
    m = |Ê| - d*n + C(d+1, 2) + 1. L^- is also rebuilt as (M + T)/2 from the signing and
    the two must agree entrywise.

    Args:
        g (Graph): Host graph.
        rp (RigidPartition): Verified partition.
        hierarchy (CutHierarchy): Its cut hierarchy.
        tol (Optional[float], optional): Comparison tolerance. defaults to DEFAULT_SETTINGS.bound_tol

    Returns:
        BoundReport: Both sides of the inequality and the decomposition error.
    """
    tol = DEFAULT_SETTINGS.bound_tol if tol is None else tol
    d, n = rp.d, g.n
    framework = limit_framework_from_partition(g, rp, hierarchy)
    coloured = framework.graph.num_edges
    if coloured < required_rank(n, d):
        raise EdgeDeficit(f"{coloured} coloured edges, at least {required_rank(n, d)} needed")
    per_pair = {}
    for i, j in rp.colour_pairs():
        per_pair[colour_key(i, j)] = algebraic_connectivity(colour_pair_graph(g, rp, i, j))
    min_half_a = min(per_pair.values()) / 2
    m = coloured - d * n + comb(d + 1, 2) + 1
    _, lower = stiffness_matrices(framework.graph, framework)
    lambda_value = kth_smallest(eigenvalues_sym(lower), m) if coloured else inf
    full, block = signed_block_matrices(framework, rp)
    decomposition_error = float(np.max(np.abs(lower.entries - (full + block) / 2))) if coloured else 0.0
    assert decomposition_error <= DEFAULT_SETTINGS.identity_tol, \
        f"L^- differs from (M+T)/2 by {decomposition_error}"
    holds = lambda_value >= min_half_a - tol
    if not holds:
        logger.warning(f"Bound fails: lambda_{m}(L^-) = {lambda_value} < {min_half_a}")
    return BoundReport(
        dim=d,
        min_half_a=min_half_a,
        lambda_value=lambda_value,
        lambda_index=m,
        holds=holds,
        per_pair_a=per_pair,
        decomposition_error=decomposition_error,
        tol=tol,
    )


def stiffness_lower_bound(g: Graph, p: Embedding) -> float:
    """λ_{C(d+1,2)+1}(L(G, p)), a lower bound on a_d(G) from one concrete embedding"""
    framework = framework_from_embedding(g, p)
    stiffness, _ = stiffness_matrices(g, framework)
    return kth_smallest(eigenvalues_sym(stiffness), comb(p.dim + 1, 2) + 1)


def stiffness_spectra(framework: GeneralizedFramework) -> Tuple[list, list]:
    """Spectra of L and L^-, used to compare their nonzero parts"""
    stiffness, lower = stiffness_matrices(framework.graph, framework)
    return eigenvalues_sym(stiffness).values, eigenvalues_sym(lower).values
