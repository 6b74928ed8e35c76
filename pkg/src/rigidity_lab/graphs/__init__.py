from .families import (complete_bipartite, complete_graph, cycle_graph, disjoint_union, glued_cliques,
                       hyperoctahedral_graph, path_graph, star_graph)
from .graph import (BipartiteGraph, Edge, Graph, VertexSubset, as_subset, canonical_edge, clique_number,
                    common_neighbours, connected_components, count_pairs, edges_between, external_neighbourhood,
                    first_clique, induced_edges, induced_pair, is_cds, is_connected, is_connected_pair)

__all__ = [
    'BipartiteGraph', 'Edge', 'Graph', 'VertexSubset', 'as_subset', 'canonical_edge', 'clique_number',
    'common_neighbours', 'connected_components', 'count_pairs', 'edges_between', 'external_neighbourhood',
    'first_clique', 'induced_edges', 'induced_pair', 'is_cds', 'is_connected', 'is_connected_pair',
    'complete_bipartite', 'complete_graph', 'cycle_graph', 'disjoint_union', 'glued_cliques',
    'hyperoctahedral_graph', 'path_graph', 'star_graph'
]
