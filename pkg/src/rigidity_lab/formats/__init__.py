from .graph_text import SIDE_A_PRAGMA, dump_graph, load_bipartite_graph, load_graph, load_side_a
from .json_io import dump_model, dump_report, load_model, load_report

__all__ = [
    'SIDE_A_PRAGMA', 'dump_graph', 'load_bipartite_graph', 'load_graph', 'load_side_a', 'dump_model', 'dump_report',
    'load_model', 'load_report'
]
