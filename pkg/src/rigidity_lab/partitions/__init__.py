from .constructors import (SPARSE_CONNECTOR_ALPHA, balanced_random_partition, bipartite_strong_partition,
                           common_neighbour_partition, complete_bipartite_partition, dirac_partition, random_partition,
                           strong_partition_type_ii, strong_partition_via_sparse_connector)
from .converters import convert_to_rigid_partition, validate_cds_family
from .model import (brute_force_cut_oracle, build_hierarchy, part_edges, recheck_hierarchy, restriction_bound_check,
                    singleton_clique_check, validate_structure, verify_rigid_partition)
from .strong import (complete_bipartite_scores, is_forest, landau_tournament, normalise_scores, scores_feasible,
                     split_sides, verify_bipartite_matching, verify_strong)

__all__ = [
    'SPARSE_CONNECTOR_ALPHA', 'balanced_random_partition', 'bipartite_strong_partition', 'common_neighbour_partition',
    'complete_bipartite_partition', 'dirac_partition', 'random_partition', 'strong_partition_type_ii',
    'strong_partition_via_sparse_connector', 'convert_to_rigid_partition', 'validate_cds_family',
    'brute_force_cut_oracle', 'build_hierarchy', 'part_edges', 'recheck_hierarchy', 'restriction_bound_check',
    'singleton_clique_check', 'validate_structure', 'verify_rigid_partition', 'complete_bipartite_scores', 'is_forest',
    'landau_tournament', 'normalise_scores', 'scores_feasible', 'split_sides', 'verify_bipartite_matching',
    'verify_strong'
]
