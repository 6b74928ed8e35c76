from math import comb, floor, log
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from rigidity_lab.config import DEFAULT_SETTINGS
from rigidity_lab.errors import ConditionViolated, UnequalClasses
from rigidity_lab.generators import make_rng
from rigidity_lab.graphs import BipartiteGraph, Graph
from rigidity_lab.partitions.strong import complete_bipartite_scores, verify_bipartite_matching, verify_strong
from rigidity_lab.schemas import ConstructionOutcome, PartitionRequest, StrongKind, StrongPartition

SPARSE_CONNECTOR_ALPHA = 1 / 7

# Extra acceptance test on a candidate assignment: (accepted, strong partition if one was built)
Acceptance = Callable[[List[List[int]]], Tuple[bool, Optional[StrongPartition]]]


def _cross_counts(g: Graph, labels: np.ndarray, parts: int) -> np.ndarray:
    """counts[v, i] = number of neighbours of v in part i"""
    counts = np.zeros((g.n, parts), dtype=np.int64)
    if g.num_edges:
        edges = np.asarray(g.edge_list, dtype=np.int64)
        np.add.at(counts, (edges[:, 0], labels[edges[:, 1]]), 1)
        np.add.at(counts, (edges[:, 1], labels[edges[:, 0]]), 1)
    return counts


def _parts_of(labels: np.ndarray, parts: int) -> List[List[int]]:
    return [np.flatnonzero(labels == i).tolist() for i in range(parts)]


def _degree_search(
    g: Graph,
    parts: int,
    req: PartitionRequest,
    accept: Optional[Acceptance] = None,
    check_degrees: bool = True,
) -> ConstructionOutcome:
    """Uniform i.i.d. assignments to ``parts`` parts, retried until every condition holds

    Attempt t draws from stream t of the request seed, so the first success is the one with
    the lowest attempt index.
    """
    target = (1 - req.alpha) * g.min_degree() / parts
    best = -1
    for attempt in range(req.max_retries):
        rng = make_rng(req.seed, attempt)
        labels = rng.integers(0, parts, size=g.n)
        min_cross = int(_cross_counts(g, labels, parts).min()) if g.n else 0
        best = max(best, min_cross)
        if check_degrees and min_cross < target:
            logger.debug(f"Attempt {attempt}: min cross-degree {min_cross} < {target:.3f}")
            continue
        candidate = _parts_of(labels, parts)
        strong = None
        if accept is not None:
            accepted, strong = accept(candidate)
            if not accepted:
                logger.debug(f"Attempt {attempt}: degree condition met, structural check failed")
                continue
        return ConstructionOutcome(
            success=True,
            parts=candidate,
            attempts=attempt + 1,
            min_cross_degree=min_cross,
            target=target,
            strong=strong,
        )
    logger.warning(f"No partition into {parts} parts after {req.max_retries} attempts")
    return ConstructionOutcome(
        success=False,
        attempts=req.max_retries,
        min_cross_degree=best,
        target=target,
        reason=f"no attempt out of {req.max_retries} met every condition",
    )


def random_partition(g: Graph, req: PartitionRequest) -> ConstructionOutcome:
    """Partition where every vertex has at least (1-α)δ/d neighbours in every part"""
    return _degree_search(g, req.d, req)


def _balance_check(classes: Sequence[Sequence[int]], d: int, beta: float, n: int) -> Callable[[List[List[int]]], bool]:
    t = len(classes)
    low, high = (1 - beta) * n / (t * d), (1 + beta) * n / (t * d)
    class_sets = [set(c) for c in classes]

    def balanced(parts: List[List[int]]) -> bool:
        for part in parts:
            for members in class_sets:
                share = sum(1 for v in part if v in members)
                if not low <= share <= high:
                    return False
        return True

    return balanced


def _check_classes(g: Graph, classes: Sequence[Sequence[int]]) -> None:
    if not classes:
        raise ValueError('At least one class is needed')
    if len({len(c) for c in classes}) != 1:
        raise UnequalClasses(f"Class sizes {[len(c) for c in classes]} differ")
    covered = sorted(v for c in classes for v in c)
    if covered != list(g.vertices):
        raise ValueError('Classes must partition the vertex set')


def balanced_random_partition(g: Graph, req: PartitionRequest, classes: Sequence[Sequence[int]]) -> ConstructionOutcome:
    """random_partition that also keeps every |V_i ∩ A_j| within (1±β)n/(td)

    Args:
        g (Graph): Graph.
        req (PartitionRequest): Parts, slack, balance slack, seed and retries.
        classes (Sequence[Sequence[int]]): Equal-size classes A_1..A_t partitioning V.

    Returns:
        ConstructionOutcome: Partition or Failure with the best cross-degree seen.
    """
    _check_classes(g, classes)
    balanced = _balance_check(classes, req.d, req.beta, g.n)
    return _degree_search(g, req.d, req, accept=lambda parts: (balanced(parts), None))


def strong_partition_via_sparse_connector(
    g: Graph,
    d: int,
    seed: int = 0,
    max_retries: Optional[int] = None,
) -> ConstructionOutcome:
    """Type I strong partition: degree condition with α = 1/7, then G[V_i, V_j] connected for all i <= j"""
    if d < 2:
        raise ValueError(f"Strong partitions via sparse connectors need d >= 2, got {d}")
    req = PartitionRequest(
        d=d,
        alpha=SPARSE_CONNECTOR_ALPHA,
        seed=seed,
        max_retries=DEFAULT_SETTINGS.max_retries if max_retries is None else max_retries,
    )

    def accept(parts: List[List[int]]) -> Tuple[bool, Optional[StrongPartition]]:
        sp = StrongPartition(kind=StrongKind.TYPE_I, d=d, parts=parts)
        return (True, sp) if verify_strong(g, sp) else (False, None)

    return _degree_search(g, d, req, accept=accept)


def strong_partition_type_ii(
    g: Graph,
    d: int,
    seed: int = 0,
    max_retries: Optional[int] = None,
    alpha: float = SPARSE_CONNECTOR_ALPHA,
) -> ConstructionOutcome:
    """Type II strong partition: d+1 parts with G[V_i, V_j] connected for all i < j"""
    req = PartitionRequest(
        d=d + 1,
        alpha=alpha,
        seed=seed,
        max_retries=DEFAULT_SETTINGS.max_retries if max_retries is None else max_retries,
    )

    def accept(parts: List[List[int]]) -> Tuple[bool, Optional[StrongPartition]]:
        sp = StrongPartition(kind=StrongKind.TYPE_II, d=d, parts=parts)
        return (True, sp) if verify_strong(g, sp) else (False, None)

    return _degree_search(g, d + 1, req, accept=accept)


def bipartite_strong_partition(
    g: BipartiteGraph,
    d: int,
    seed: int = 0,
    max_retries: Optional[int] = None,
    beta: float = 0.5,
) -> ConstructionOutcome:
    """Strong bipartite partition through the matching condition

    Assignments to d+1 parts must be balanced over the two classes; then every G[A_i, B_j]
    (i != j) must be connected and every G[A_i, B_i] must contain a matching of size d.
    """
    if len(g.part_a) != len(g.part_b):
        raise UnequalClasses(f"|A| = {len(g.part_a)} and |B| = {len(g.part_b)} differ")
    classes = [sorted(g.part_a), sorted(g.part_b)]
    req = PartitionRequest(
        d=d + 1,
        alpha=SPARSE_CONNECTOR_ALPHA,
        beta=beta,
        seed=seed,
        max_retries=DEFAULT_SETTINGS.max_retries if max_retries is None else max_retries,
    )
    balanced = _balance_check(classes, d + 1, beta, g.graph.n)

    def accept(parts: List[List[int]]) -> Tuple[bool, Optional[StrongPartition]]:
        if not balanced(parts):
            return False, None
        sp = verify_bipartite_matching(g.graph, parts, classes[0], d)
        return sp is not None, sp

    return _degree_search(g.graph, d + 1, req, accept=accept, check_degrees=False)


def complete_bipartite_partition(m: int, n: int, d: int) -> StrongPartition:
    """Deterministic strong bipartite partition of K_{m,n} (A = 0..m-1, B = m..m+n-1)

    Scores are 1, 1, 1, 3, ..., d. Part i gets one vertex of each side, then enough spare
    vertices to reach max(2, s_i + 1); the rest join the last part. Forests are the first
    s_i edges of a spanning tree of G[A_i, B_i].

    Args:
        m (int): |A|.
        n (int): |B|.
        d (int): Dimension.

    Returns:
        StrongPartition: Bipartite partition with forests and scores.
    """
    if d < 1:
        raise ValueError(f"Dimension must be at least 1, got {d}")
    if m < d + 1 or n < d + 1 or m + n < comb(d + 2, 2):
        raise ConditionViolated(f"K_{{{m},{n}}} needs m, n >= {d + 1} and m + n >= {comb(d + 2, 2)} for d={d}")
    scores = complete_bipartite_scores(d)
    side_a, side_b = list(range(m)), list(range(m, m + n))
    parts = [[side_a[i], side_b[i]] for i in range(d + 1)]
    spare = side_a[d + 1:] + side_b[d + 1:]
    for i, s in enumerate(scores):
        need = max(2, s + 1) - 2
        parts[i].extend(spare[:need])
        spare = spare[need:]
    parts[-1].extend(spare)
    forests = []
    for part, s in zip(parts, scores):
        a_i = sorted(v for v in part if v < m)
        b_i = sorted(v for v in part if v >= m)
        tree = [(a_i[0], b) for b in b_i] + [(a, b_i[0]) for a in a_i[1:]]
        forests.append(sorted(tree[:s]))
    return StrongPartition(
        kind=StrongKind.BIPARTITE,
        d=d,
        parts=[sorted(p) for p in parts],
        side_a=side_a,
        forests=forests,
        scores=scores,
    )


def common_neighbour_partition(
    g: Graph,
    d: int,
    seed: int = 0,
    max_retries: Optional[int] = None,
) -> ConstructionOutcome:
    """Random near-equipartition into d parts where every pair has a common neighbour in every part

    Part sizes differ by at most one when d does not divide n. The result is re-verified as
    a type I strong partition.
    """
    if d < 1:
        raise ValueError(f"Dimension must be at least 1, got {d}")
    max_retries = DEFAULT_SETTINGS.max_retries if max_retries is None else max_retries
    adjacency = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        adjacency[u, v] = adjacency[v, u] = 1
    off_diagonal = ~np.eye(g.n, dtype=bool)
    best = -1
    for attempt in range(max_retries):
        order = make_rng(seed, attempt).permutation(g.n)
        parts = [sorted(order[i::d].tolist()) for i in range(d)]
        worst = min(
            (int((adjacency[:, p] @ adjacency[p, :])[off_diagonal].min()) if g.n > 1 else 0) for p in parts
        ) if all(parts) else -1
        best = max(best, worst)
        if worst < 1:
            continue
        sp = StrongPartition(kind=StrongKind.TYPE_I, d=d, parts=parts)
        if not verify_strong(g, sp):
            logger.warning(f"Attempt {attempt}: common neighbours everywhere but G[V_i, V_j] disconnected")
            continue
        return ConstructionOutcome(
            success=True,
            parts=parts,
            attempts=attempt + 1,
            min_cross_degree=worst,
            target=1.0,
            strong=sp,
        )
    return ConstructionOutcome(
        success=False,
        attempts=max_retries,
        min_cross_degree=best,
        target=1.0,
        reason=f"some pair lacked a common neighbour in some part in all {max_retries} attempts",
    )


def dirac_partition(g: Graph, seed: int = 0, max_retries: Optional[int] = None) -> Tuple[int, ConstructionOutcome]:
    """Dimension and strong partition for a graph with δ(G) = n/2 + ℓ, ℓ > 0

    Every pair then has at least 2ℓ common neighbours; d = max(1, ⌊2ℓ / (3 ln n)⌋).
    """
    if g.n < 2:
        raise ConditionViolated(f"Dirac condition needs at least 2 vertices, got {g.n}")
    ell = g.min_degree() - g.n / 2
    if ell <= 0:
        raise ConditionViolated(f"Minimum degree {g.min_degree()} does not exceed n/2 = {g.n / 2}")
    d = max(1, floor(2 * ell / (3 * log(g.n))))
    logger.info(f"Dirac surplus ℓ = {ell}, trying d = {d}")
    return d, common_neighbour_partition(g, d, seed=seed, max_retries=max_retries)
