from .random_graphs import (RegularSample, gnm, gnnp, gnp, process_hitting_time, random_graph_process,
                            random_regular, random_regular_pairing)
from .rng import derive_seed, make_rng

__all__ = [
    'RegularSample', 'gnm', 'gnnp', 'gnp', 'process_hitting_time', 'random_graph_process', 'random_regular',
    'random_regular_pairing', 'derive_seed', 'make_rng'
]
