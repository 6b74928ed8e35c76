from typing import Dict, Type

from .exact_builders import BipartiteTableBuilder, HyperoctahedralBuilder, bipartite_condition, hyperoctahedral_formula
from .experiment_builder import ExperimentBuilder, plain
from .partition_builders import (BipartiteRandomBuilder, DiracBuilder, PseudorandomBuilder, RegularPartitionBuilder,
                                 SpreadSparseBuilder, complement, spread_sparse_thresholds)
from .process_builders import GiantComponentBuilder, HittingTimeBuilder
from .rigid_component import greedy_rigid_closure
from .survey_builder import SOURCES, BoundSurveyBuilder, planted_cds_family

EXPERIMENT_BUILDERS: Dict[str, Type[ExperimentBuilder]] = {
    builder.experiment: builder
    for builder in (
        HittingTimeBuilder,
        GiantComponentBuilder,
        BipartiteTableBuilder,
        HyperoctahedralBuilder,
        BoundSurveyBuilder,
        RegularPartitionBuilder,
        PseudorandomBuilder,
        BipartiteRandomBuilder,
        SpreadSparseBuilder,
        DiracBuilder,
    )
}

__all__ = [
    'ExperimentBuilder',
    'EXPERIMENT_BUILDERS',
    'HittingTimeBuilder',
    'GiantComponentBuilder',
    'BipartiteTableBuilder',
    'HyperoctahedralBuilder',
    'BoundSurveyBuilder',
    'RegularPartitionBuilder',
    'PseudorandomBuilder',
    'BipartiteRandomBuilder',
    'SpreadSparseBuilder',
    'DiracBuilder',
    'SOURCES',
    'bipartite_condition',
    'complement',
    'greedy_rigid_closure',
    'hyperoctahedral_formula',
    'plain',
    'planted_cds_family',
    'spread_sparse_thresholds',
]
