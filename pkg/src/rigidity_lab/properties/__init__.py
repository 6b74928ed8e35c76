from .checkers import (JUMBLED_EXACT_MAX_N, is_bi_connector, is_connector, is_expander, is_jumbled_exact, is_sparse,
                       jumbled_certificate_regular)
from .matching import matching_between, max_matching

__all__ = [
    'JUMBLED_EXACT_MAX_N', 'is_bi_connector', 'is_connector', 'is_expander', 'is_jumbled_exact', 'is_sparse',
    'jumbled_certificate_regular', 'matching_between', 'max_matching'
]
