import heapq
from typing import Dict, List, Optional, Set, Tuple

import networkx as nx
from loguru import logger

from rigidity_lab.config import DEFAULT_SETTINGS
from rigidity_lab.errors import NoSeedClique
from rigidity_lab.graphs import Graph, first_clique
from rigidity_lab.rigidity import randomized_rigidity_test
from rigidity_lab.schemas import GrowthReason, GrowthStep, GrowthTrace, RigidityVerdict


def _zero_extend(g: Graph, members: Set[int], order: List[int], d: int) -> List[GrowthStep]:
    """Add vertices with at least d neighbours in ``members`` until none is left, smallest id first"""
    count: Dict[int, int] = {}
    for u in members:
        for w in g.neighbours(u):
            if w not in members:
                count[w] = count.get(w, 0) + 1
    ready = [v for v, c in count.items() if c >= d]
    heapq.heapify(ready)
    steps = []
    while ready:
        v = heapq.heappop(ready)
        if v in members:
            continue
        anchors = [w for w in g.neighbours(v) if w in members][:d]
        members.add(v)
        order.append(v)
        steps.append(GrowthStep(vertex=v, reason=GrowthReason.ZERO_EXTENSION, anchors=anchors))
        for w in g.neighbours(v):
            if w not in members:
                count[w] = count.get(w, 0) + 1
                if count[w] == d:
                    heapq.heappush(ready, w)
    return steps


def _seed_cliques(g: Graph, d: int, cap: int) -> List[Tuple[int, ...]]:
    """(d+1)-prefixes of maximal cliques, deduplicated and sorted, at most cap of them"""
    prefixes = {tuple(sorted(c)[:d + 1]) for c in nx.find_cliques(g.to_networkx()) if len(c) >= d + 1}
    return sorted(prefixes)[:cap]


def _grow(g: Graph, seed: Tuple[int, ...], d: int) -> Tuple[Set[int], List[int]]:
    members, order = set(seed), list(seed)
    _zero_extend(g, members, order, d)
    return members, order


def _validation_graph(g: Graph, order: List[int]) -> Graph:
    """G[final_set] relabelled so that later additions get smaller ids

    Rows of the rigidity matrix then arrive grouped by the latest endpoint, which keeps
    sparse elimination close to triangular.
    """
    size = len(order)
    position = {v: size - 1 - k for k, v in enumerate(order)}
    edges = [(position[u], position[w]) for u in order for w in g.neighbours(u) if w in position and u < w]
    labels = tuple(sorted(order, key=lambda v: position[v]))
    return Graph(size, edges, labels=labels)


def greedy_rigid_closure(
    g: Graph,
    d: int,
    seed: int = 0,
    max_seed_cliques: Optional[int] = None,
    validate: bool = True,
) -> GrowthTrace:
    """Grow a d-rigid vertex set from the lexicographically first (d+1)-clique

    0-extensions add any vertex with d neighbours in the set. When they stall, sets grown
    from other seed cliques are glued on if they share at least d vertices with the current
    set. The final set is re-validated by the randomized rank test, so the result never
    rests on the growth rules alone.

    Args:
        g (Graph): Graph.
        d (int): Dimension.
        seed (int, optional): Seed of the validation rank test. defaults to 0
        max_seed_cliques (Optional[int], optional): Glue candidates tried. defaults to DEFAULT_SETTINGS.max_seed_cliques
        validate (bool, optional): Run the rank test on the final set. defaults to True

    Returns:
        GrowthTrace: Seed, additions in order and the validation verdict.
    """
    max_seed_cliques = DEFAULT_SETTINGS.max_seed_cliques if max_seed_cliques is None else max_seed_cliques
    if d < 1:
        raise ValueError(f"Dimension must be at least 1, got {d}")
    start = first_clique(g, d + 1)
    if start is None:
        raise NoSeedClique(f"Graph has no {d + 1}-clique to grow from")
    members, order = set(start), list(start)
    additions = _zero_extend(g, members, order, d)
    candidates = _seed_cliques(g, d, max_seed_cliques)
    glued = True
    while glued:
        glued = False
        for clique in candidates:
            if members.issuperset(clique):
                continue
            other, other_order = _grow(g, clique, d)
            shared = sorted(members & other)
            if len(shared) < d or members.issuperset(other):
                continue
            anchors = shared[:d]
            for v in other_order:
                if v not in members:
                    members.add(v)
                    order.append(v)
                    additions.append(GrowthStep(vertex=v, reason=GrowthReason.GLUE, anchors=anchors))
            additions.extend(_zero_extend(g, members, order, d))
            logger.debug(f"Glued a set of {len(other)} vertices on {len(shared)} shared ones; now {len(members)}")
            glued = True
    verdict: Optional[RigidityVerdict] = None
    if validate and len(order) >= d + 1:
        verdict = randomized_rigidity_test(_validation_graph(g, order), d, seed=seed)
        if not verdict.certified:
            logger.warning(f"Grown set of {len(order)} vertices did not validate at d={d}")
    return GrowthTrace(d=d, seed_clique=list(start), additions=additions, final_set=sorted(members), verdict=verdict)
