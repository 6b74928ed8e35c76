from typing import List, Optional, Union

from rigidity_lab.graphs import BipartiteGraph, Graph

SIDE_A_PRAGMA = '# side_a'


def dump_graph(g: Union[Graph, BipartiteGraph]) -> str:
    """Header "n m", then one "u v" line per edge with u < v in lexicographic order

    A bipartite graph also records its class A in a ``# side_a`` comment line, which plain
    readers skip.
    """
    lines = []
    if isinstance(g, BipartiteGraph):
        lines.append(' '.join([SIDE_A_PRAGMA] + [str(v) for v in sorted(g.part_a)]))
        g = g.graph
    lines.append(f"{g.n} {g.num_edges}")
    lines.extend(f"{u} {v}" for u, v in g.edge_list)
    return '\n'.join(lines) + '\n'


def _content_lines(text: str) -> List[tuple]:
    return [(number, line.strip()) for number, line in enumerate(text.splitlines(), start=1)
            if line.strip() and not line.strip().startswith('#')]


def load_graph(text: str) -> Graph:
    """Parse the graph text format; raises ValueError with the offending line number"""
    lines = _content_lines(text)
    if not lines:
        raise ValueError('Graph text has no "n m" header')
    number, header = lines[0]
    try:
        n, m = (int(token) for token in header.split())
    except ValueError as e:
        raise ValueError(f"Line {number}: expected header \"n m\", got {header!r}") from e
    edges = []
    for number, line in lines[1:]:
        tokens = line.split()
        if len(tokens) != 2:
            raise ValueError(f"Line {number}: expected \"u v\", got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError as e:
            raise ValueError(f"Line {number}: expected integer endpoints, got {line!r}") from e
        if not 0 <= u < v < n:
            raise ValueError(f"Line {number}: edge ({u}, {v}) needs 0 <= u < v < {n}")
        edges.append((u, v))
    g = Graph(n, edges)
    if g.num_edges != m or len(edges) != m:
        raise ValueError(f"Header announces {m} edges, found {len(edges)} lines and {g.num_edges} distinct edges")
    return g


def load_side_a(text: str) -> Optional[List[int]]:
    """Class A recorded by dump_graph for bipartite graphs, if present"""
    for line in text.splitlines():
        if line.strip().startswith(SIDE_A_PRAGMA):
            return [int(token) for token in line.strip()[len(SIDE_A_PRAGMA):].split()]
    return None


def load_bipartite_graph(text: str) -> BipartiteGraph:
    side_a = load_side_a(text)
    if side_a is None:
        raise ValueError(f"Bipartite graph text needs a '{SIDE_A_PRAGMA} ...' line")
    g = load_graph(text)
    side_b = sorted(set(g.vertices) - set(side_a))
    return BipartiteGraph(g, side_a, side_b)
