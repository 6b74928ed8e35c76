from itertools import combinations
from math import comb
from typing import Any, Dict, List, Optional, Tuple, Union

import numpy as np
from loguru import logger

from rigidity_lab.config import DEFAULT_SETTINGS
from rigidity_lab.errors import EdgeDeficit
from rigidity_lab.generators import gnnp, gnp, make_rng
from rigidity_lab.graphs import Graph, complete_bipartite
from rigidity_lab.partitions import (bipartite_strong_partition, complete_bipartite_partition,
                                     convert_to_rigid_partition, restriction_bound_check, singleton_clique_check,
                                     strong_partition_type_ii, strong_partition_via_sparse_connector,
                                     verify_rigid_partition)
from rigidity_lab.rigidity import Embedding, quantitative_bound_check, stiffness_lower_bound
from rigidity_lab.schemas import CdsFamily, StrongPartition, TrialRecord, colour_key
from rigidity_lab.templates import BOUND_SURVEY_PROVENANCE
from rigidity_lab.workflow.experiment_builder import ExperimentBuilder

SOURCES = ('cds', 'type-i', 'type-ii', 'bipartite')

Source = Union[StrongPartition, CdsFamily]


def planted_cds_family(d: int, group_size: int, extra_p: float, rng: np.random.Generator) -> Tuple[Graph, CdsFamily]:
    """Graph on C(d+1, 2) consecutive groups, each made a connected dominating set

    Every group carries a random spanning path, every vertex gets one random neighbour in
    every other group, and G(n, extra_p) noise is laid on top.

    Args:
        d (int): Dimension.
        group_size (int): Vertices per group.
        extra_p (float): Probability of every noise edge.
        rng (np.random.Generator): Source of randomness.

    Returns:
        Tuple[Graph, CdsFamily]: Graph and the planted family.
    """
    pairs = list(combinations(range(d + 1), 2))
    n = len(pairs) * group_size
    groups = [list(range(k * group_size, (k + 1) * group_size)) for k in range(len(pairs))]
    edges = set()
    for members in groups:
        order = rng.permutation(members).tolist()
        edges.update(zip(order, order[1:]))
    for v in range(n):
        for k, members in enumerate(groups):
            if v // group_size != k:
                edges.add((v, int(rng.choice(members))))
    rows, cols = np.triu_indices(n, k=1)
    keep = rng.random(rows.size) < extra_p
    edges.update(zip(rows[keep].tolist(), cols[keep].tolist()))
    family = CdsFamily(d=d, sets={colour_key(i, j): groups[k] for k, (i, j) in enumerate(pairs)})
    return Graph(n, edges), family


class BoundSurveyBuilder(ExperimentBuilder):
    """Quantitative stiffness bound over partitions converted from every source kind"""

    experiment = 'bound-survey'
    provenance = BOUND_SURVEY_PROVENANCE
    default_parameters = {
        'trials': 240,
        'min_accepted': 200,
        'tol': 1e-8,
        'max_n': 40,
        'max_d': 4,
        'density': 0.9,
        'clique_check_max_n': 20,
    }

    def plan(self, params: Dict[str, Any]) -> List[Dict[str, Any]]:
        return [{'source': SOURCES[t % len(SOURCES)]} for t in range(params['trials'])]

    def _cds(self, rng: np.random.Generator, params: Dict[str, Any]) -> Tuple[Graph, Source]:
        max_d = max(1, params['max_d'])
        d = int(rng.integers(1, max_d + 1))
        while d > 1 and 2 * comb(d + 1, 2) > params['max_n']:
            d -= 1
        largest = max(2, params['max_n'] // comb(d + 1, 2))
        return planted_cds_family(d, int(rng.integers(2, largest + 1)), 0.1, rng)

    def _type_i(self, rng: np.random.Generator, seed: int, params: Dict[str, Any]) -> Tuple[Graph, Optional[Source]]:
        d = int(rng.integers(2, max(2, params['max_d']) + 1))
        n = min(params['max_n'], 8 * d + int(rng.integers(0, 5)))
        g = gnp(n, params['density'], seed)
        outcome = strong_partition_via_sparse_connector(g, d, seed=seed)
        return g, outcome.strong

    def _type_ii(self, rng: np.random.Generator, seed: int, params: Dict[str, Any]) -> Tuple[Graph, Optional[Source]]:
        d = int(rng.integers(1, max(1, params['max_d']) + 1))
        n = min(params['max_n'], 8 * (d + 1) + int(rng.integers(0, 5)))
        g = gnp(n, params['density'], seed)
        outcome = strong_partition_type_ii(g, d, seed=seed)
        return g, outcome.strong

    def _bipartite(self, rng: np.random.Generator, seed: int, params: Dict[str, Any]) -> Tuple[Graph, Optional[Source]]:
        d = int(rng.integers(1, max(1, params['max_d']) + 1))
        if rng.random() < 0.5:
            low = max(d + 1, (comb(d + 2, 2) + 1) // 2)
            m = int(rng.integers(low, max(low, params['max_n'] // 2) + 1))
            n = int(rng.integers(max(d + 1, comb(d + 2, 2) - m), max(d + 1, params['max_n'] - m) + 1))
            return complete_bipartite(m, n).graph, complete_bipartite_partition(m, n, d)
        side = params['max_n'] // 2
        bg = gnnp(side, params['density'], seed)
        return bg.graph, bipartite_strong_partition(bg, d, seed=seed).strong

    def run_trial(self, spec: Dict[str, Any], seed: int, params: Dict[str, Any]) -> Dict[str, Any]:
        rng = make_rng(seed, 1)
        if spec['source'] == 'cds':
            g, source = self._cds(rng, params)
        elif spec['source'] == 'type-i':
            g, source = self._type_i(rng, seed, params)
        elif spec['source'] == 'type-ii':
            g, source = self._type_ii(rng, seed, params)
        else:
            g, source = self._bipartite(rng, seed, params)
        if source is None:
            logger.debug(f"Trial seed {seed}: no {spec['source']} source found")
            return {'n': g.n, 'constructed': False, 'accepted': False}
        rp = convert_to_rigid_partition(g, source)
        result = verify_rigid_partition(g, rp)
        values: Dict[str, Any] = {'n': g.n, 'd': rp.d, 'constructed': True, 'accepted': result.accepted}
        if not result.accepted:
            logger.warning(f"Converted {spec['source']} partition rejected: {result.reason}")
            return values
        try:
            report = quantitative_bound_check(g, rp, result.hierarchy, tol=params['tol'])
        except EdgeDeficit as e:
            logger.warning(f"Accepted {spec['source']} partition lacks coloured edges: {e}")
            return {**values, 'edge_deficit': True}
        coords = make_rng(seed, 2).standard_normal((g.n, rp.d))
        values.update({
            'holds': report.holds,
            'lambda_value': report.lambda_value,
            'min_half_a': report.min_half_a,
            'decomposition_error': report.decomposition_error,
            'identity_ok': report.decomposition_error <= DEFAULT_SETTINGS.identity_tol,
            'embedding_lower_bound': stiffness_lower_bound(g, Embedding(coords)),
        })
        if g.n <= params['clique_check_max_n']:
            values['singleton_clique'] = singleton_clique_check(g, rp)
            values['restriction_bound'] = restriction_bound_check(g, rp)
        return values

    def aggregate(self, records: List[TrialRecord], params: Dict[str, Any]) -> Dict[str, Any]:
        rows = [r.values for r in records]
        bounded = [row for row in rows if 'holds' in row]
        small = [row for row in rows if 'singleton_clique' in row]
        per_source = {
            source: {
                'constructed': sum(row['constructed'] for row in rows if row['source'] == source),
                'accepted': sum(row['accepted'] for row in rows if row['source'] == source),
            }
            for source in SOURCES
        }
        return {
            'constructed': sum(row['constructed'] for row in rows),
            'accepted': sum(row['accepted'] for row in rows),
            'rejected_conversions': sum(row['constructed'] and not row['accepted'] for row in rows),
            'bound_checked': len(bounded),
            'bound_failures': sum(not row['holds'] for row in bounded),
            'identity_failures': sum(not row['identity_ok'] for row in bounded),
            'edge_deficits': sum(row.get('edge_deficit', False) for row in rows),
            'clique_check_failures': sum(not (row['singleton_clique'] and row['restriction_bound']) for row in small),
            'per_source': per_source,
            'meets_threshold': len(bounded) >= params['min_accepted']
            and all(row['holds'] and row['identity_ok'] for row in bounded),
        }
