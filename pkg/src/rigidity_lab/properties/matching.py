from typing import FrozenSet, Iterable

import networkx as nx

from rigidity_lab.graphs import BipartiteGraph, Edge, Graph, canonical_edge, edges_between


def max_matching(g: BipartiteGraph) -> FrozenSet[Edge]:
    """Maximum matching by Hopcroft-Karp augmenting paths"""
    return matching_between(g.graph, g.part_a, g.part_b)


def matching_between(g: Graph, a: Iterable[int], b: Iterable[int]) -> FrozenSet[Edge]:
    """Maximum matching of G[A, B] for disjoint A and B, in host vertex ids"""
    a_set, b_set = frozenset(a), frozenset(b)
    if a_set & b_set:
        raise ValueError('Matching sides must be disjoint')
    host = nx.Graph()
    host.add_nodes_from(a_set)
    host.add_nodes_from(b_set)
    host.add_edges_from(edges_between(g, a_set, b_set))
    mate = nx.bipartite.hopcroft_karp_matching(host, top_nodes=a_set)
    return frozenset(canonical_edge(u, mate[u]) for u in a_set if u in mate)
