from itertools import combinations
from math import exp, log
from typing import Any, Dict, List, Tuple

from rigidity_lab.generators import gnnp, gnp, random_regular_pairing
from rigidity_lab.graphs import Graph
from rigidity_lab.partitions import (bipartite_strong_partition, convert_to_rigid_partition, dirac_partition,
                                     strong_partition_via_sparse_connector, verify_rigid_partition)
from rigidity_lab.properties import is_sparse, jumbled_certificate_regular
from rigidity_lab.rigidity import randomized_rigidity_test
from rigidity_lab.schemas import ConstructionOutcome, TrialRecord, VerdictMode
from rigidity_lab.templates import (BIPARTITE_RANDOM_PROVENANCE, DIRAC_PROVENANCE, PSEUDORANDOM_PROVENANCE,
                                    REGULAR_PARTITION_PROVENANCE, SPREAD_SPARSE_PROVENANCE)
from rigidity_lab.workflow.experiment_builder import ExperimentBuilder


def _outcome_values(outcome: ConstructionOutcome) -> Dict[str, Any]:
    return {
        'success': outcome.success,
        'attempts': outcome.attempts,
        'min_cross_degree': outcome.min_cross_degree,
        'target': outcome.target,
    }


def _rate(records: List[TrialRecord], key: str) -> float:
    return sum(bool(r.values.get(key)) for r in records) / len(records) if records else 0.0


def spread_sparse_thresholds(n: int, p: float, spread: float) -> Tuple[float, float]:
    """x = 2L e^-(1+1/L) log(np) / p and y = L log(np) for the spread constant L"""
    log_np = log(n * p)
    return 2 * spread * exp(-(1 + 1 / spread)) * log_np / p, spread * log_np


def complement(g: Graph) -> Graph:
    return Graph(g.n, [(u, v) for u, v in combinations(g.vertices, 2) if not g.has_edge(u, v)])


class _TrialCountMixin:

    def plan(self, params: Dict[str, Any]) -> List[Dict[str, Any]]:
        return [{'repeat': t} for t in range(params['trials'])]


class RegularPartitionBuilder(_TrialCountMixin, ExperimentBuilder):
    """Strong partitions and rank verdicts of random k-regular graphs"""

    experiment = 'regular-partition'
    provenance = REGULAR_PARTITION_PROVENANCE
    default_parameters = {'n': 200, 'k': 40, 'd': 2, 'trials': 20, 'rank_trials': 3}

    def run_trial(self, spec: Dict[str, Any], seed: int, params: Dict[str, Any]) -> Dict[str, Any]:
        g = random_regular_pairing(params['n'], params['k'], seed).graph
        outcome = strong_partition_via_sparse_connector(g, params['d'], seed=seed)
        verdict = randomized_rigidity_test(g, params['d'], trials=params['rank_trials'], seed=seed)
        return {**_outcome_values(outcome), 'certified': verdict.certified}

    def aggregate(self, records: List[TrialRecord], params: Dict[str, Any]) -> Dict[str, Any]:
        return {
            'trials': len(records),
            'partition_rate': _rate(records, 'success'),
            'certified_rate': _rate(records, 'certified'),
            'best_min_cross_degree': max((r.values['min_cross_degree'] for r in records), default=0),
        }


class PseudorandomBuilder(_TrialCountMixin, ExperimentBuilder):
    """Spectral (n, k, lambda) certificates of random regular graphs and strong partitions"""

    experiment = 'pseudorandom'
    provenance = PSEUDORANDOM_PROVENANCE
    default_parameters = {'n': 100, 'k': 40, 'd': 2, 'trials': 20}

    def run_trial(self, spec: Dict[str, Any], seed: int, params: Dict[str, Any]) -> Dict[str, Any]:
        g = random_regular_pairing(params['n'], params['k'], seed).graph
        density, lam = jumbled_certificate_regular(g)
        outcome = strong_partition_via_sparse_connector(g, params['d'], seed=seed)
        return {
            'density': density,
            'lambda': lam,
            'spectral_condition': params['k'] >= 9 * params['d'] * lam,
            **_outcome_values(outcome),
        }

    def aggregate(self, records: List[TrialRecord], params: Dict[str, Any]) -> Dict[str, Any]:
        lambdas = [r.values['lambda'] for r in records]
        return {
            'trials': len(records),
            'max_lambda': max(lambdas, default=0.0),
            'spectral_condition_rate': _rate(records, 'spectral_condition'),
            'partition_rate': _rate(records, 'success'),
        }


class BipartiteRandomBuilder(_TrialCountMixin, ExperimentBuilder):
    """Strong bipartite partitions of G(n, n, p)"""

    experiment = 'bipartite-random'
    provenance = BIPARTITE_RANDOM_PROVENANCE
    default_parameters = {'n': 40, 'p': 0.5, 'd': 3, 'trials': 20, 'rank_trials': 3}

    def run_trial(self, spec: Dict[str, Any], seed: int, params: Dict[str, Any]) -> Dict[str, Any]:
        bg = gnnp(params['n'], params['p'], seed)
        outcome = bipartite_strong_partition(bg, params['d'], seed=seed)
        accepted = False
        if outcome.strong is not None:
            accepted = verify_rigid_partition(bg.graph, convert_to_rigid_partition(bg.graph, outcome.strong)).accepted
        verdict = randomized_rigidity_test(bg.graph, params['d'], trials=params['rank_trials'], seed=seed)
        return {**_outcome_values(outcome), 'converted_accepted': accepted, 'certified': verdict.certified}

    def aggregate(self, records: List[TrialRecord], params: Dict[str, Any]) -> Dict[str, Any]:
        return {
            'trials': len(records),
            'partition_rate': _rate(records, 'success'),
            'converted_rate': _rate(records, 'converted_accepted'),
            'certified_rate': _rate(records, 'certified'),
        }


class SpreadSparseBuilder(_TrialCountMixin, ExperimentBuilder):
    """Falsification search for dense sets in G(n, p) at the spread-graph thresholds"""

    experiment = 'spread-sparse'
    provenance = SPREAD_SPARSE_PROVENANCE
    default_parameters = {'n': 200, 'p': 0.05, 'Lambda': 2.0, 'trials': 20}

    def run_trial(self, spec: Dict[str, Any], seed: int, params: Dict[str, Any]) -> Dict[str, Any]:
        x, y = spread_sparse_thresholds(params['n'], params['p'], params['Lambda'])
        g = gnp(params['n'], params['p'], seed)
        verdict = is_sparse(g, x, y, mode=VerdictMode.RANDOM_SEARCH, seed=seed)
        return {
            'x': x,
            'y': y,
            'kind': verdict.kind,
            'witness_size': len(verdict.witness[0]) if verdict.witness else 0,
            'search_budget': verdict.search_budget,
        }

    def aggregate(self, records: List[TrialRecord], params: Dict[str, Any]) -> Dict[str, Any]:
        violated = sum(r.values['kind'] == 'Violated' for r in records)
        return {
            'trials': len(records),
            'violations': violated,
            'no_violation_rate': 1 - violated / len(records) if records else 0.0,
        }


class DiracBuilder(_TrialCountMixin, ExperimentBuilder):
    """Common-neighbour partitions of dense graphs with minimum degree n/2 + l"""

    experiment = 'dirac'
    provenance = DIRAC_PROVENANCE
    default_parameters = {'n': 60, 'ell': 12, 'trials': 20, 'rank_trials': 3}

    def run_trial(self, spec: Dict[str, Any], seed: int, params: Dict[str, Any]) -> Dict[str, Any]:
        n, ell = params['n'], params['ell']
        g = complement(random_regular_pairing(n, n // 2 - ell - 1, seed).graph)
        d, outcome = dirac_partition(g, seed=seed)
        verdict = randomized_rigidity_test(g, d, trials=params['rank_trials'], seed=seed)
        return {'d': d, 'min_degree': g.min_degree(), **_outcome_values(outcome), 'certified': verdict.certified}

    def aggregate(self, records: List[TrialRecord], params: Dict[str, Any]) -> Dict[str, Any]:
        return {
            'trials': len(records),
            'dimensions': sorted({r.values['d'] for r in records}),
            'partition_rate': _rate(records, 'success'),
            'certified_rate': _rate(records, 'certified'),
        }
