from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from loguru import logger

from rigidity_lab.config import DEFAULT_SETTINGS
from rigidity_lab.errors import StructuralError, TooLarge
from rigidity_lab.graphs import Edge, Graph, canonical_edge, clique_number, connected_components, is_connected_pair
from rigidity_lab.schemas import CutHierarchy, CutNode, RigidPartition, VerificationResult, parse_colour_key

# Ê-edges inside one part, each tagged with the colour index j != part of its class E_{part, j}
PartEdges = Dict[Edge, int]


def validate_structure(g: Graph, rp: RigidPartition) -> None:
    """Raise StructuralError unless rp is a well-formed partial colouring of g"""
    d = rp.d
    if len(rp.parts) != d + 1:
        raise StructuralError(f"A {d}-rigid partition has {d + 1} parts, got {len(rp.parts)}")
    seen: Set[int] = set()
    for i, part in enumerate(rp.parts):
        for v in part:
            if not 0 <= v < g.n:
                raise StructuralError(f"Vertex {v} of part {i} outside 0..{g.n - 1}")
            if v in seen:
                raise StructuralError(f"Vertex {v} lies in more than one part")
            seen.add(v)
    if len(seen) != g.n:
        raise StructuralError(f"Parts cover {len(seen)} of {g.n} vertices")
    part_of = rp.part_of_vertex()
    owner: Dict[Edge, str] = {}
    for key, edges in rp.edge_colours.items():
        try:
            i, j = parse_colour_key(key)
        except ValueError as e:
            raise StructuralError(f"Malformed colour key {key!r}") from e
        if not 0 <= i < j <= d:
            raise StructuralError(f"Colour key {key!r} outside 0 <= i < j <= {d}")
        for u, v in edges:
            e = canonical_edge(u, v)
            if e not in g.edges:
                raise StructuralError(f"Coloured pair {e} is not an edge of the graph")
            if {part_of[u], part_of[v]} - {i, j}:
                raise StructuralError(f"Edge {e} of E_{key} leaves V_{i} ∪ V_{j}")
            if owner.setdefault(e, key) != key:
                raise StructuralError(f"Edge {e} is coloured both {owner[e]} and {key}")


def part_edges(rp: RigidPartition, i: int) -> PartEdges:
    """Ê ∩ E(V_i) with the colour index each edge carries from part i's point of view"""
    members = set(rp.parts[i])
    tagged: PartEdges = {}
    for (a, b), (lo, hi) in rp.colour_of_edge().items():
        if a in members and b in members:
            tagged[(a, b)] = hi if lo == i else lo
    return tagged


def _split(u_set: FrozenSet[int], edges: PartEdges, colour: int) -> List[FrozenSet[int]]:
    kept = [e for e, j in edges.items() if j != colour and e[0] in u_set and e[1] in u_set]
    return connected_components(u_set, kept)


def build_hierarchy(rp: RigidPartition, i: int) -> Tuple[Optional[CutNode], Optional[FrozenSet[int]]]:
    """Backtracking search for a laminar monochromatic-cut certificate of part i

    At a set U every colour j != i is tried in increasing order; when removing E_ij
    disconnects (U, Ê ∩ E(U)) the node splits into all components and recurses. Sets
    proven to have no certificate are memoized.

    Returns:
        Tuple[Optional[CutNode], Optional[FrozenSet[int]]]: Tree, or None and a set without a certificate.
    """
    members = frozenset(rp.parts[i])
    if not members:
        return None, None
    edges = part_edges(rp, i)
    colours = [j for j in range(rp.d + 1) if j != i]
    failed: Set[FrozenSet[int]] = set()
    blocker: List[FrozenSet[int]] = []

    def grow(u_set: FrozenSet[int]) -> Optional[CutNode]:
        if len(u_set) == 1:
            return CutNode(members=sorted(u_set))
        if u_set in failed:
            return None
        for j in colours:
            blocks = _split(u_set, edges, j)
            if len(blocks) < 2:
                continue
            children = []
            for block in blocks:
                child = grow(block)
                if child is None:
                    break
                children.append(child)
            else:
                return CutNode(members=sorted(u_set), colour=j, children=children)
        failed.add(u_set)
        if not blocker or len(u_set) < len(blocker[0]):
            blocker[:] = [u_set]
        return None

    tree = grow(members)
    return tree, (None if tree is not None else blocker[0])


def _node_is_valid(node: CutNode, i: int, d: int, edges: PartEdges) -> bool:
    if node.is_leaf:
        return len(node.members) == 1
    if node.colour is None or node.colour == i or not 0 <= node.colour <= d or len(node.children) < 2:
        return False
    block_of: Dict[int, int] = {}
    for b, child in enumerate(node.children):
        for v in child.members:
            if v in block_of:
                return False
            block_of[v] = b
    if set(block_of) != set(node.members):
        return False
    for (u, v), j in edges.items():
        if u in block_of and v in block_of and block_of[u] != block_of[v] and j != node.colour:
            return False
    return all(_node_is_valid(child, i, d, edges) for child in node.children)


def recheck_hierarchy(g: Graph, rp: RigidPartition, hierarchy: CutHierarchy) -> bool:
    """Independent re-verification of a cut hierarchy against the literal cut condition"""
    validate_structure(g, rp)
    if len(hierarchy.trees) != rp.d + 1:
        return False
    for i, tree in enumerate(hierarchy.trees):
        if tree is None:
            if rp.parts[i]:
                return False
            continue
        if sorted(tree.members) != sorted(rp.parts[i]):
            return False
        if not _node_is_valid(tree, i, rp.d, part_edges(rp, i)):
            return False
    return True


def brute_force_cut_oracle(g: Graph, rp: RigidPartition, i: int, cap: Optional[int] = None) -> bool:
    """All-subsets check: every U ⊆ V_i with |U| >= 2 has a monochromatic cut

    Every bipartition of every subset is enumerated with bitmasks.

    Args:
        g (Graph): Host graph.
        rp (RigidPartition): Partition.
        i (int): Part index.
        cap (Optional[int], optional): Largest part accepted. defaults to DEFAULT_SETTINGS.oracle_cap

    Returns:
        bool: True iff the quantified cut condition holds for part i.
    """
    cap = DEFAULT_SETTINGS.oracle_cap if cap is None else cap
    members = sorted(rp.parts[i])
    if len(members) > cap:
        raise TooLarge(f"Part {i} has {len(members)} vertices; the oracle accepts at most {cap}")
    bit = {v: 1 << k for k, v in enumerate(members)}
    tagged = [(bit[u] | bit[v], bit[u], j) for (u, v), j in part_edges(rp, i).items()]
    for u_mask in range(1, 1 << len(members)):
        if u_mask & (u_mask - 1) == 0:
            continue
        inside = [(mask, low, j) for mask, low, j in tagged if mask & u_mask == mask]
        if not inside:
            continue
        anchor = u_mask & -u_mask
        rest = u_mask ^ anchor
        found = False
        sub = rest
        while True:
            side = anchor | sub
            if side != u_mask:
                colours = {j for mask, low, j in inside if bool(low & side) != bool((mask ^ low) & side)}
                if len(colours) <= 1:
                    found = True
                    break
            if sub == 0:
                break
            sub = (sub - 1) & rest
        if not found:
            return False
    return True


def verify_rigid_partition(g: Graph, rp: RigidPartition, exact_threshold: Optional[int] = None) -> VerificationResult:
    """Decide whether rp is a d-rigid partition of g, with a cut-hierarchy certificate

    Args:
        g (Graph): Graph.
        rp (RigidPartition): Candidate partition.
        exact_threshold (Optional[int], optional): Parts up to this size are also checked by the all-subsets
            oracle. defaults to DEFAULT_SETTINGS.exact_cut_threshold

    Returns:
        VerificationResult: Accepted with a hierarchy, or Rejected with a reason.
    """
    exact_threshold = DEFAULT_SETTINGS.exact_cut_threshold if exact_threshold is None else exact_threshold
    validate_structure(g, rp)
    empty = [i for i, part in enumerate(rp.parts) if not part]
    if len(empty) > 1:
        return VerificationResult(accepted=False, reason=f"Parts {empty} are empty; at most one may be")
    for i, j in combinations(range(rp.d + 1), 2):
        if not is_connected_pair(set(rp.parts[i]) | set(rp.parts[j]), rp.colour_class(i, j)):
            return VerificationResult(accepted=False, reason=f"G_{i},{j} is disconnected")
    trees: List[Optional[CutNode]] = []
    for i in range(rp.d + 1):
        tree, blocker = build_hierarchy(rp, i)
        if tree is None and blocker is not None:
            return VerificationResult(
                accepted=False,
                reason=f"Subset {sorted(blocker)} of part {i} has no monochromatic cut certificate",
            )
        trees.append(tree)
    hierarchy = CutHierarchy(trees=trees)
    checked, divergences = [], []
    for i, part in enumerate(rp.parts):
        if 2 <= len(part) <= min(exact_threshold, DEFAULT_SETTINGS.oracle_cap):
            checked.append(i)
            if not brute_force_cut_oracle(g, rp, i):
                divergences.append(i)
                logger.warning(f"Part {i} is a hierarchy-only certificate: some subset has no monochromatic cut")
    return VerificationResult(
        accepted=True,
        hierarchy=hierarchy,
        oracle_checked=checked,
        oracle_divergences=divergences,
    )


def singleton_clique_check(g: Graph, rp: RigidPartition) -> bool:
    """Vertices in singleton parts are pairwise adjacent and there are at least 2d - n of them"""
    singles = [part[0] for part in rp.parts if len(part) == 1]
    adjacent = all(g.has_edge(u, v) for u, v in combinations(singles, 2))
    if len(singles) < 2 * rp.d - g.n:
        logger.warning(f"Only {len(singles)} singleton parts, fewer than 2d - n = {2 * rp.d - g.n}")
        return False
    return adjacent


def restriction_bound_check(g: Graph, rp: RigidPartition) -> bool:
    """d <= (n + ω(G)) / 2 with the exact clique number"""
    return 2 * rp.d <= g.n + clique_number(g)
