from itertools import combinations
from math import comb
from typing import Dict, List, Set, Tuple, Union

from loguru import logger

from rigidity_lab.errors import InfeasibleScores, InvalidSource
from rigidity_lab.graphs import Edge, Graph, canonical_edge, edges_between, induced_edges, is_cds
from rigidity_lab.partitions.model import validate_structure
from rigidity_lab.partitions.strong import landau_tournament, normalise_scores, verify_bipartite_matching, verify_strong
from rigidity_lab.schemas import CdsFamily, RigidPartition, StrongKind, StrongPartition, colour_key, parse_colour_key

Colours = Dict[Tuple[int, int], Set[Edge]]


def validate_cds_family(g: Graph, family: CdsFamily) -> None:
    """Raise InvalidSource unless the sets A_ij are C(d+1, 2) disjoint CDSs covering V"""
    expected = {colour_key(i, j) for i, j in combinations(range(family.d + 1), 2)}
    if set(family.sets) != expected:
        raise InvalidSource(f"A CDS family for d={family.d} needs the {comb(family.d + 1, 2)} keys {sorted(expected)}")
    seen: Set[int] = set()
    for key in sorted(family.sets):
        members = family.sets[key]
        if seen & set(members):
            raise InvalidSource(f"A_{key} meets an earlier set")
        seen.update(members)
        if not members or not is_cds(g, members):
            raise InvalidSource(f"A_{key} is not a connected dominating set")
    if seen != set(g.vertices):
        raise InvalidSource(f"The CDS family covers {len(seen)} of {g.n} vertices")


def _from_cds(g: Graph, family: CdsFamily) -> RigidPartition:
    validate_cds_family(g, family)
    d = family.d
    sets = {parse_colour_key(key): frozenset(members) for key, members in family.sets.items()}
    if d == 1:
        whole = sets[(0, 1)]
        return RigidPartition.from_sets(1, [whole, []], {(0, 1): induced_edges(g, whole)})
    parts: List[Set[int]] = [set(sets[(0, 2)]), set(sets[(0, 1)]), set(sets[(1, 2)])]
    for j in range(3, d + 1):
        parts.append(set().union(*(sets[(i, j)] for i in range(j))))
    colours: Colours = {}
    for i, j in combinations(range(d + 1), 2):
        colours[(i, j)] = set(edges_between(g, parts[i], parts[j])) | set(induced_edges(g, sets[(i, j)]))
    return RigidPartition.from_sets(d, parts, colours)


def _from_type_i(g: Graph, sp: StrongPartition) -> RigidPartition:
    d = sp.d
    colours: Colours = {}
    for i, j in combinations(range(d), 2):
        colours[(i, j)] = set(edges_between(g, sp.parts[i], sp.parts[j]))
    for i in range(d):
        colours[(i, d)] = set(induced_edges(g, sp.parts[i]))
    return RigidPartition.from_sets(d, list(sp.parts) + [[]], colours)


def _from_type_ii(g: Graph, sp: StrongPartition) -> RigidPartition:
    colours: Colours = {
        (i, j): set(edges_between(g, sp.parts[i], sp.parts[j])) for i, j in combinations(range(sp.d + 1), 2)
    }
    return RigidPartition.from_sets(sp.d, sp.parts, colours)


def _from_bipartite(g: Graph, sp: StrongPartition) -> RigidPartition:
    """Label forest edges by out-neighbours of a Landau tournament and add e_ij to E(V_i, V_j)"""
    if sp.forests is None or sp.scores is None:
        sp = verify_bipartite_matching(g, sp.parts, sp.side_a or [], sp.d)
    d = sp.d
    try:
        scores = normalise_scores(sp.scores)
        tournament = landau_tournament(scores)
    except InfeasibleScores as e:
        raise InvalidSource(f"Scores {sp.scores} admit no tournament") from e
    named: Dict[Tuple[int, int], Edge] = {}
    for i in range(d + 1):
        forest = sorted(canonical_edge(u, v) for u, v in sp.forests[i])
        for t, j in enumerate(tournament.out_neighbours(i)):
            named[(i, j)] = forest[t]
    colours: Colours = {}
    for i, j in combinations(range(d + 1), 2):
        extra = named[(i, j)] if tournament.beats(i, j) else named[(j, i)]
        colours[(i, j)] = set(edges_between(g, sp.parts[i], sp.parts[j])) | {extra}
    logger.debug(f"Tournament scores {scores} realised for a bipartite partition with d={d}")
    return RigidPartition.from_sets(d, sp.parts, colours)


def convert_to_rigid_partition(g: Graph, source: Union[StrongPartition, CdsFamily]) -> RigidPartition:
    """Turn a verified strong partition or CDS family into a d-rigid partition

    Args:
        g (Graph): Host graph.
        source (Union[StrongPartition, CdsFamily]): TypeI, TypeII or Bipartite strong partition, or a CDS family.

    Returns:
        RigidPartition: Canonical partition with every colour key present.
    """
    if isinstance(source, CdsFamily):
        rp = _from_cds(g, source)
    else:
        if not verify_strong(g, source):
            raise InvalidSource(f"{source.kind.value} source is not a strong {source.d}-rigid partition")
        if source.kind is StrongKind.TYPE_I:
            rp = _from_type_i(g, source)
        elif source.kind is StrongKind.TYPE_II:
            rp = _from_type_ii(g, source)
        else:
            rp = _from_bipartite(g, source)
    validate_structure(g, rp)
    return rp
