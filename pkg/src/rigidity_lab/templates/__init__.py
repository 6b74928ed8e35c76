from .provenance_templates import (BIPARTITE_RANDOM_PROVENANCE, BIPARTITE_TABLE_PROVENANCE, BOUND_SURVEY_PROVENANCE,
                                   DIRAC_PROVENANCE, GIANT_PROVENANCE, HITTING_TIME_PROVENANCE,
                                   HYPEROCTAHEDRAL_PROVENANCE, PSEUDORANDOM_PROVENANCE, REGULAR_PARTITION_PROVENANCE,
                                   SPREAD_SPARSE_PROVENANCE)
from .text_templates import (BOUND_TEXT_TEMPLATE, CONSTRUCTION_TEXT_TEMPLATE, HYPEROCTAHEDRAL_ROW_TEMPLATE,
                             KEY_VALUE_ROW_TEMPLATE, PROFILE_ROW_TEMPLATE, PROFILE_TEXT_TEMPLATE,
                             PROPERTY_TEXT_TEMPLATE, REPORT_TEXT_TEMPLATE, VERDICT_TEXT_TEMPLATE,
                             VERIFICATION_TEXT_TEMPLATE)

__all__ = [
    'HITTING_TIME_PROVENANCE',
    'GIANT_PROVENANCE',
    'BIPARTITE_TABLE_PROVENANCE',
    'HYPEROCTAHEDRAL_PROVENANCE',
    'BOUND_SURVEY_PROVENANCE',
    'REGULAR_PARTITION_PROVENANCE',
    'PSEUDORANDOM_PROVENANCE',
    'BIPARTITE_RANDOM_PROVENANCE',
    'SPREAD_SPARSE_PROVENANCE',
    'DIRAC_PROVENANCE',
    'VERDICT_TEXT_TEMPLATE',
    'PROFILE_TEXT_TEMPLATE',
    'PROFILE_ROW_TEMPLATE',
    'VERIFICATION_TEXT_TEMPLATE',
    'BOUND_TEXT_TEMPLATE',
    'PROPERTY_TEXT_TEMPLATE',
    'CONSTRUCTION_TEXT_TEMPLATE',
    'REPORT_TEXT_TEMPLATE',
    'HYPEROCTAHEDRAL_ROW_TEMPLATE',
    'KEY_VALUE_ROW_TEMPLATE',
]
