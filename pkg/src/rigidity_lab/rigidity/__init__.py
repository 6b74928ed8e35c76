from .bound import (colour_pair_graph, quantitative_bound_check, signed_block_matrices, stiffness_lower_bound,
                    stiffness_spectra)
from .frameworks import (GeneralizedFramework, algebraic_connectivity, coloured_subgraph, framework_from_embedding,
                         limit_framework_from_partition, lower_stiffness_closed_form, regular_simplex,
                         simplex_directions, stiffness_matrices)
from .matrices import (Embedding, random_field_embedding, required_rank, rigidity_matrix, rigidity_matrix_mod_p,
                       sparse_rigidity_rows)
from .randomized import randomized_rigidity_test, rigidity_number, rigidity_profile

__all__ = [
    'colour_pair_graph', 'quantitative_bound_check', 'signed_block_matrices', 'stiffness_lower_bound',
    'stiffness_spectra', 'GeneralizedFramework', 'algebraic_connectivity', 'coloured_subgraph',
    'framework_from_embedding', 'limit_framework_from_partition', 'lower_stiffness_closed_form', 'regular_simplex',
    'simplex_directions', 'stiffness_matrices', 'Embedding', 'random_field_embedding', 'required_rank',
    'rigidity_matrix', 'rigidity_matrix_mod_p', 'sparse_rigidity_rows', 'randomized_rigidity_test', 'rigidity_number',
    'rigidity_profile'
]
