from itertools import combinations
from math import comb
from typing import FrozenSet, List, Optional, Sequence, Set

from loguru import logger

from rigidity_lab.errors import InfeasibleScores
from rigidity_lab.graphs import (Edge, Graph, canonical_edge, connected_components, edges_between,
                                 is_connected_pair)
from rigidity_lab.properties import matching_between
from rigidity_lab.schemas import StrongKind, StrongPartition, Tournament, colour_key


def _covers(g: Graph, parts: Sequence[Sequence[int]]) -> bool:
    seen: Set[int] = set()
    for part in parts:
        for v in part:
            if not 0 <= v < g.n or v in seen:
                return False
            seen.add(v)
    return len(seen) == g.n


def _pair_connected(g: Graph, a: Sequence[int], b: Sequence[int]) -> bool:
    """G[A, B] connected, with G[A] when A = B and the empty graph counted as disconnected"""
    a_set, b_set = frozenset(a), frozenset(b)
    return is_connected_pair(a_set | b_set, edges_between(g, a_set, b_set))


def split_sides(sp: StrongPartition) -> List[tuple]:
    """(A_i, B_i) for every part of a bipartite strong partition"""
    side_a = frozenset(sp.side_a or ())
    return [(frozenset(p) & side_a, frozenset(p) - side_a) for p in sp.parts]


def scores_feasible(scores: Sequence[int]) -> bool:
    """0 <= s_1 <= s_2 <= ... with Σ_{i<=k} s_i >= C(k, 2) for every k"""
    if any(s < 0 for s in scores) or any(a > b for a, b in zip(scores, scores[1:])):
        return False
    total = 0
    for k, s in enumerate(scores, start=1):
        total += s
        if total < comb(k, 2):
            return False
    return True


def is_forest(edges: Sequence[Edge]) -> bool:
    vertices = {v for e in edges for v in e}
    return len(set(edges)) == len(edges) and len(edges) == len(vertices) - len(connected_components(vertices, edges))


def complete_bipartite_scores(d: int) -> List[int]:
    """1, 1, 1, 3, 4, ..., d summing to C(d+1, 2); (0, 1) when d = 1"""
    if d == 1:
        return [0, 1]
    return [1 if t < 3 else t for t in range(d + 1)]


def normalise_scores(scores: Sequence[int]) -> List[int]:
    """Lower a feasible score sequence until it sums to exactly C(len, 2)

    Each step decrements the first entry of the highest block of equal values that can lose
    one without breaking monotonicity or a partial-sum condition.
    """
    current = list(scores)
    if not scores_feasible(current):
        raise InfeasibleScores(f"Scores {current} are not a feasible nondecreasing sequence")
    target = comb(len(current), 2)
    while sum(current) > target:
        for t in reversed(range(len(current))):
            if current[t] == 0 or (t and current[t - 1] == current[t]):
                continue
            current[t] -= 1
            if scores_feasible(current):
                break
            current[t] += 1
        else:
            raise InfeasibleScores(f"Scores {list(scores)} cannot be lowered to sum {target}")
    return current


def landau_tournament(scores: Sequence[int]) -> Tournament:
    """Tournament on 0..len-1 whose out-degree sequence is ``scores``

    The remaining player with the smallest score loses to the players with the most wins
    still to place and beats everyone else; Landau's condition keeps this greedy feasible.

    Args:
        scores (Sequence[int]): Target out-degrees.

    Returns:
        Tournament: Realising tournament.
    """
    size = len(scores)
    if size == 0:
        raise InfeasibleScores('A tournament needs at least one player')
    ordered = sorted(scores)
    if not scores_feasible(ordered) or sum(ordered) != comb(size, 2):
        raise InfeasibleScores(f"Scores {list(scores)} violate Landau's condition")
    remaining = {i: s for i, s in enumerate(scores)}
    winner = {}
    while remaining:
        player = min(remaining, key=lambda i: (remaining[i], i))
        wins = remaining.pop(player)
        losses = len(remaining) - wins
        if losses < 0:
            raise InfeasibleScores(f"Player {player} needs {wins} wins among {len(remaining)} opponents")
        stronger = sorted(remaining, key=lambda i: (-remaining[i], i))[:losses]
        for other in remaining:
            if other in stronger:
                winner[colour_key(player, other)] = other
                remaining[other] -= 1
            else:
                winner[colour_key(player, other)] = player
    tournament = Tournament(size=size, winner=winner)
    if tournament.out_degrees() != list(scores):
        raise InfeasibleScores(f"Greedy tournament reached {tournament.out_degrees()} instead of {list(scores)}")
    return tournament


def verify_bipartite_matching(
    g: Graph,
    parts: Sequence[Sequence[int]],
    side_a: Sequence[int],
    d: int,
) -> Optional[StrongPartition]:
    """Matching route to a strong bipartite partition

    Every G[A_i, B_j] (i != j) must be connected and every G[A_i, B_i] must hold a matching
    of size d. The matchings, cut to d edges, become the forests and the scores are
    0, 1, ..., d.

    Returns:
        Optional[StrongPartition]: The certified partition, or None.
    """
    if len(parts) != d + 1 or not _covers(g, parts):
        return None
    a_set = frozenset(side_a)
    sides = [(frozenset(p) & a_set, frozenset(p) - a_set) for p in parts]
    for i, j in combinations(range(d + 1), 2):
        if not _pair_connected(g, sides[i][0], sides[j][1]) or not _pair_connected(g, sides[j][0], sides[i][1]):
            logger.debug(f"G[A_{i}, B_{j}] or G[A_{j}, B_{i}] is disconnected")
            return None
    forests = []
    for i, (a_i, b_i) in enumerate(sides):
        matching = sorted(matching_between(g, a_i, b_i))
        if len(matching) < d:
            logger.debug(f"G[A_{i}, B_{i}] has a maximum matching of size {len(matching)} < {d}")
            return None
        forests.append(matching[:d])
    return StrongPartition(
        kind=StrongKind.BIPARTITE,
        d=d,
        parts=[sorted(p) for p in parts],
        side_a=sorted(a_set),
        forests=forests,
        scores=list(range(d + 1)),
    )


def _forest_inside(g: Graph, forest: Sequence[Edge], a_i: FrozenSet[int], b_i: FrozenSet[int]) -> bool:
    for u, v in forest:
        if not g.has_edge(u, v):
            return False
        if not ((u in a_i and v in b_i) or (u in b_i and v in a_i)):
            return False
    return is_forest([canonical_edge(u, v) for u, v in forest])


def _verify_bipartite(g: Graph, sp: StrongPartition) -> bool:
    if sp.side_a is None or len(sp.parts) != sp.d + 1:
        return False
    a_set = frozenset(sp.side_a)
    if any((u in a_set) == (v in a_set) for u, v in g.edges):
        logger.debug('Graph is not bipartite with respect to side_a')
        return False
    if sp.forests is None or sp.scores is None:
        return verify_bipartite_matching(g, sp.parts, sp.side_a, sp.d) is not None
    sides = split_sides(sp)
    for i, j in combinations(range(sp.d + 1), 2):
        if not _pair_connected(g, sides[i][0], sides[j][1]) or not _pair_connected(g, sides[j][0], sides[i][1]):
            return False
    if len(sp.scores) != sp.d + 1 or len(sp.forests) != sp.d + 1 or not scores_feasible(sp.scores):
        return False
    return all(
        len(forest) >= s and _forest_inside(g, forest, a_i, b_i)
        for forest, s, (a_i, b_i) in zip(sp.forests, sp.scores, sides)
    )


def verify_strong(g: Graph, sp: StrongPartition) -> bool:
    """Decide whether sp is a strong d-rigid partition of g

    TypeI needs G[V_i, V_j] connected for all i <= j over d parts, TypeII for all i < j over
    d+1 parts. Bipartite partitions are checked through their forests and scores, or
    through the matching condition when those are absent.
    """
    if not _covers(g, sp.parts):
        logger.debug('Strong partition parts do not partition the vertex set')
        return False
    if sp.kind is StrongKind.BIPARTITE:
        return _verify_bipartite(g, sp)
    expected = sp.d if sp.kind is StrongKind.TYPE_I else sp.d + 1
    if len(sp.parts) != expected or any(not part for part in sp.parts):
        return False
    if sp.kind is StrongKind.TYPE_I:
        pairs = [(i, j) for i in range(expected) for j in range(i, expected)]
    else:
        pairs = list(combinations(range(expected), 2))
    for i, j in pairs:
        if not _pair_connected(g, sp.parts[i], sp.parts[j]):
            logger.debug(f"G[V_{i}, V_{j}] is disconnected")
            return False
    return True
