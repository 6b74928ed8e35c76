from math import floor
from typing import Callable, List, Optional, Sequence, Set, Tuple

import numpy as np
from loguru import logger

from rigidity_lab.algebra import second_eigenvalue
from rigidity_lab.config import DEFAULT_SETTINGS
from rigidity_lab.errors import EmptyGraph, NotRegular, TooLarge
from rigidity_lab.generators import make_rng
from rigidity_lab.graphs import BipartiteGraph, Graph, external_neighbourhood, induced_edges
from rigidity_lab.schemas import PropertyKind, PropertyVerdict, VerdictMode

JUMBLED_EXACT_MAX_N = 12
_JUMBLED_BLOCK = 256

# margin > 0 means the set violates the property
Margin = Callable[[Set[int]], float]


def _resolve_mode(n: int, limit: int, mode: Optional[VerdictMode], name: str) -> VerdictMode:
    if mode is None:
        return VerdictMode.EXACT if n <= limit else VerdictMode.RANDOM_SEARCH
    if mode is VerdictMode.EXACT and n > limit:
        raise TooLarge(f"Exact {name} check accepts n <= {limit}, got {n}")
    return mode


def _neighbour_masks(g: Graph, positions: Optional[dict] = None) -> List[int]:
    """Neighbourhood of every vertex as a bitmask; bits follow ``positions`` when given"""
    masks = []
    for v in g.vertices:
        bits = 0
        for w in g.neighbours(v):
            if positions is None:
                bits |= 1 << w
            elif w in positions:
                bits |= 1 << positions[w]
        masks.append(bits)
    return masks


def _members(mask: int, labels: Sequence[int]) -> List[int]:
    return [labels[k] for k in range(len(labels)) if mask >> k & 1]


def _popcount(array: np.ndarray) -> np.ndarray:
    return np.bitwise_count(array).astype(np.int64)


def _union_of(masks: np.ndarray, per_bit: Sequence[int]) -> np.ndarray:
    """For every mask, the OR of per_bit[k] over its set bits"""
    union = np.zeros_like(masks)
    for k, bits in enumerate(per_bit):
        union |= np.where((masks >> k) & 1 == 1, masks.dtype.type(bits), masks.dtype.type(0))
    return union


def _first_hit(flags: np.ndarray) -> Optional[int]:
    hits = np.flatnonzero(flags)
    return int(hits[0]) if hits.size else None


def _verdict(name: str, mode: VerdictMode, witness: Optional[List[List[int]]], spent: int = 0) -> PropertyVerdict:
    if witness is not None:
        kind = PropertyKind.VIOLATED
    elif mode is VerdictMode.EXACT:
        kind = PropertyKind.HOLDS
    else:
        kind = PropertyKind.NO_VIOLATION_FOUND
    return PropertyVerdict(property=name, kind=kind, mode=mode, witness=witness, search_budget=spent)


def _mutate(current: Set[int], pool: Sequence[int], low: int, high: int, rng: np.random.Generator) -> Set[int]:
    outside = [v for v in pool if v not in current]
    moves = []
    if outside and current:
        moves.append('swap')
    if outside and len(current) < high:
        moves.append('add')
    if len(current) > low:
        moves.append('drop')
    if not moves:
        return set(current)
    move = moves[int(rng.integers(len(moves)))]
    candidate = set(current)
    if move in ('swap', 'drop'):
        candidate.remove(sorted(current)[int(rng.integers(len(current)))])
    if move in ('swap', 'add'):
        candidate.add(outside[int(rng.integers(len(outside)))])
    return candidate


def _hill_climb(
    pool: Sequence[int],
    low: int,
    high: int,
    margin: Margin,
    seed: int,
    starts: int,
    budget: int,
) -> Tuple[Optional[Set[int]], int]:
    """Seeded hill climbing over vertex sets with low <= |A| <= high, maximising the margin

    Plateau moves are accepted. The budget of local moves is shared evenly by the starts.

    Returns:
        Tuple[Optional[Set[int]], int]: A set with positive margin or None, and the moves spent.
    """
    high = min(high, len(pool))
    if low > high or not pool:
        return None, 0
    per_start = max(1, budget // max(starts, 1))
    spent = 0
    for start in range(starts):
        rng = make_rng(seed, start)
        size = int(rng.integers(low, high + 1))
        current = {int(v) for v in rng.choice(np.asarray(pool), size=size, replace=False)}
        value = margin(current)
        for _ in range(per_start):
            if value > 0:
                return current, spent
            spent += 1
            candidate = _mutate(current, pool, low, high, rng)
            candidate_value = margin(candidate)
            if candidate_value >= value:
                current, value = candidate, candidate_value
        if value > 0:
            return current, spent
        logger.debug(f"Search start {start} ended at margin {value}")
    return None, spent


def _peel_for_dense_set(g: Graph, x: int, y: float) -> Optional[Set[int]]:
    """Repeatedly drop a minimum-degree vertex; report the first prefix of size <= x that is too dense"""
    alive = set(g.vertices)
    degree = {v: g.degree(v) for v in alive}
    edges = g.num_edges
    while alive:
        if len(alive) <= x and edges > len(alive) * y:
            return set(alive)
        v = min(alive, key=lambda w: (degree[w], w))
        alive.remove(v)
        edges -= degree[v]
        for w in g.neighbours(v):
            if w in alive:
                degree[w] -= 1
    return None


def is_sparse(
    g: Graph,
    x: float,
    y: float,
    mode: Optional[VerdictMode] = None,
    seed: int = 0,
    starts: Optional[int] = None,
    budget: Optional[int] = None,
) -> PropertyVerdict:
    """(x, y)-sparseness: every A with 1 <= |A| <= x spans at most |A|·y edges

    Args:
        g (Graph): Graph.
        x (float): Size bound; floored.
        y (float): Edge density bound.
        mode (Optional[VerdictMode], optional): Exact or RandomSearch.
            defaults to Exact when n <= DEFAULT_SETTINGS.sparse_exact_max_n
        seed (int, optional): Search seed. defaults to 0
        starts (Optional[int], optional): Search starts. defaults to DEFAULT_SETTINGS.search_starts
        budget (Optional[int], optional): Search moves. defaults to DEFAULT_SETTINGS.search_budget

    Returns:
        PropertyVerdict: Violated with a too-dense set A as witness, or Holds/NoViolationFound.
    """
    size_cap = floor(x)
    if size_cap < 1:
        raise ValueError(f"Sparseness needs x >= 1, got {x}")
    name = f"sparse(x={size_cap}, y={y})"
    mode = _resolve_mode(g.n, DEFAULT_SETTINGS.sparse_exact_max_n, mode, 'sparseness')
    if mode is VerdictMode.EXACT:
        masks = np.arange(1 << g.n, dtype=np.uint32)
        size = _popcount(masks)
        twice = np.zeros(masks.shape, dtype=np.int64)
        for v, bits in enumerate(_neighbour_masks(g)):
            twice += ((masks >> v) & 1).astype(np.int64) * _popcount(masks & np.uint32(bits))
        hit = _first_hit((size >= 1) & (size <= size_cap) & (twice // 2 > size * y))
        return _verdict(name, mode, None if hit is None else [_members(hit, range(g.n))])
    dense = _peel_for_dense_set(g, size_cap, y)
    if dense is not None:
        return _verdict(name, mode, [sorted(dense)])
    found, spent = _hill_climb(
        list(g.vertices), 1, size_cap,
        lambda a: len(induced_edges(g, a)) - len(a) * y,
        seed,
        DEFAULT_SETTINGS.search_starts if starts is None else starts,
        DEFAULT_SETTINGS.search_budget if budget is None else budget,
    )
    return _verdict(name, mode, None if found is None else [sorted(found)], spent)


def is_expander(
    g: Graph,
    r: float,
    mode: Optional[VerdictMode] = None,
    seed: int = 0,
    starts: Optional[int] = None,
    budget: Optional[int] = None,
) -> PropertyVerdict:
    """R-expansion: every A with 1 <= |A| <= r has |N(A)| >= 2|A|"""
    size_cap = floor(r)
    if size_cap < 1:
        raise ValueError(f"Expansion needs r >= 1, got {r}")
    name = f"expander(r={size_cap})"
    mode = _resolve_mode(g.n, DEFAULT_SETTINGS.connector_exact_max_n, mode, 'expansion')
    if mode is VerdictMode.EXACT:
        masks = np.arange(1 << g.n, dtype=np.uint32)
        size = _popcount(masks)
        full = np.uint32((1 << g.n) - 1)
        boundary = _union_of(masks, _neighbour_masks(g)) & (full ^ masks)
        hit = _first_hit((size >= 1) & (size <= size_cap) & (_popcount(boundary) < 2 * size))
        return _verdict(name, mode, None if hit is None else [_members(hit, range(g.n))])
    found, spent = _hill_climb(
        list(g.vertices), 1, size_cap,
        lambda a: 2 * len(a) - len(external_neighbourhood(g, a)),
        seed,
        DEFAULT_SETTINGS.search_starts if starts is None else starts,
        DEFAULT_SETTINGS.search_budget if budget is None else budget,
    )
    return _verdict(name, mode, None if found is None else [sorted(found)], spent)


def _closed_outside(g: Graph, a: Set[int], pool: Sequence[int]) -> List[int]:
    reach = set(a) | external_neighbourhood(g, a)
    return [v for v in pool if v not in reach]


def is_connector(
    g: Graph,
    k: int,
    mode: Optional[VerdictMode] = None,
    seed: int = 0,
    starts: Optional[int] = None,
    budget: Optional[int] = None,
) -> PropertyVerdict:
    """K-connector: every two disjoint sets of size k are joined by an edge

    Larger sets contain size-k subsets, so checking size exactly k suffices. A set A of size
    k violates the property when at least k vertices lie outside A ∪ N(A).
    """
    if k < 1:
        raise ValueError(f"Connector level must be at least 1, got {k}")
    name = f"connector(k={k})"
    mode = _resolve_mode(g.n, DEFAULT_SETTINGS.connector_exact_max_n, mode, 'connector')
    if 2 * k > g.n:
        return _verdict(name, mode, None)
    if mode is VerdictMode.EXACT:
        masks = np.arange(1 << g.n, dtype=np.uint32)
        full = np.uint32((1 << g.n) - 1)
        outside = full ^ (_union_of(masks, _neighbour_masks(g)) | masks)
        hit = _first_hit((_popcount(masks) == k) & (_popcount(outside) >= k))
        if hit is None:
            return _verdict(name, mode, None)
        a = _members(hit, range(g.n))
        return _verdict(name, mode, [a, _closed_outside(g, set(a), range(g.n))[:k]])
    pool = list(g.vertices)
    found, spent = _hill_climb(
        pool, k, k,
        lambda a: len(_closed_outside(g, a, pool)) - k + 1,
        seed,
        DEFAULT_SETTINGS.search_starts if starts is None else starts,
        DEFAULT_SETTINGS.search_budget if budget is None else budget,
    )
    witness = None if found is None else [sorted(found), _closed_outside(g, found, pool)[:k]]
    return _verdict(name, mode, witness, spent)


def is_bi_connector(
    g: BipartiteGraph,
    k: int,
    mode: Optional[VerdictMode] = None,
    seed: int = 0,
    starts: Optional[int] = None,
    budget: Optional[int] = None,
) -> PropertyVerdict:
    """K-bi-connector: every A_1 ⊆ A and A_2 ⊆ B of size k are joined by an edge"""
    if k < 1:
        raise ValueError(f"Bi-connector level must be at least 1, got {k}")
    name = f"bi-connector(k={k})"
    host = g.graph
    mode = _resolve_mode(host.n, DEFAULT_SETTINGS.connector_exact_max_n, mode, 'bi-connector')
    side_a, side_b = sorted(g.part_a), sorted(g.part_b)
    if k > len(side_a) or k > len(side_b):
        return _verdict(name, mode, None)
    if mode is VerdictMode.EXACT:
        b_position = {v: t for t, v in enumerate(side_b)}
        into_b = _neighbour_masks(host, b_position)
        masks = np.arange(1 << len(side_a), dtype=np.uint32)
        full_b = np.uint32((1 << len(side_b)) - 1)
        missed = full_b ^ _union_of(masks, [into_b[v] for v in side_a])
        hit = _first_hit((_popcount(masks) == k) & (_popcount(missed) >= k))
        if hit is None:
            return _verdict(name, mode, None)
        a = _members(hit, side_a)
        return _verdict(name, mode, [a, _closed_outside(host, set(a), side_b)[:k]])
    found, spent = _hill_climb(
        side_a, k, k,
        lambda a: len(_closed_outside(host, a, side_b)) - k + 1,
        seed,
        DEFAULT_SETTINGS.search_starts if starts is None else starts,
        DEFAULT_SETTINGS.search_budget if budget is None else budget,
    )
    witness = None if found is None else [sorted(found), _closed_outside(host, found, side_b)[:k]]
    return _verdict(name, mode, witness, spent)


def jumbled_certificate_regular(g: Graph) -> Tuple[float, float]:
    """(k/n, λ) for a k-regular graph, λ = max(|λ_2|, |λ_n|) of the adjacency matrix

    By the expander mixing lemma such a graph is (k/n, λ)-jumbled.
    """
    if g.n == 0:
        raise EmptyGraph('Jumbledness of the empty graph is undefined')
    k = g.degree(0)
    if any(g.degree(v) != k for v in g.vertices):
        raise NotRegular(f"Degrees range over {g.min_degree()}..{g.max_degree()}")
    return k / g.n, second_eigenvalue(g)


def is_jumbled_exact(g: Graph, p: float, beta: float, slack: float = 1e-9) -> PropertyVerdict:
    """(p, β)-jumbledness by enumerating every pair of vertex sets (A, B)

    e(A, B) counts ordered pairs, so A and B may overlap.

    Args:
        g (Graph): Graph with n <= 12.
        p (float): Density.
        beta (float): Discrepancy bound.
        slack (float, optional): Rounding allowance on the comparison. defaults to 1e-9

    Returns:
        PropertyVerdict: Holds, or Violated with witness [A, B].
    """
    if g.n > JUMBLED_EXACT_MAX_N:
        raise TooLarge(f"Exact jumbledness accepts n <= {JUMBLED_EXACT_MAX_N}, got {g.n}")
    name = f"jumbled(p={p}, beta={beta})"
    masks = np.arange(1 << g.n, dtype=np.uint32)
    bits = ((masks[:, None] >> np.arange(g.n, dtype=np.uint32)) & 1).astype(np.float64)
    size = bits.sum(axis=1)
    adjacency = np.zeros((g.n, g.n))
    for u, v in g.edges:
        adjacency[u, v] = adjacency[v, u] = 1.0
    into = bits @ adjacency
    for start in range(0, masks.size, _JUMBLED_BLOCK):
        block = slice(start, start + _JUMBLED_BLOCK)
        pairs = into[block] @ bits.T
        product = size[block, None] * size[None, :]
        bad = np.abs(pairs - p * product) > beta * np.sqrt(product) + slack
        hits = np.argwhere(bad)
        if hits.size:
            a_row, b_row = hits[0]
            witness = [_members(start + int(a_row), range(g.n)), _members(int(b_row), range(g.n))]
            return _verdict(name, VerdictMode.EXACT, witness)
    return _verdict(name, VerdictMode.EXACT, None)
