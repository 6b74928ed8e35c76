from math import log
from typing import Any, Dict, List

from loguru import logger

from rigidity_lab.errors import NoSeedClique
from rigidity_lab.generators import gnp, process_hitting_time
from rigidity_lab.graphs import Graph
from rigidity_lab.rigidity import randomized_rigidity_test
from rigidity_lab.schemas import TrialRecord
from rigidity_lab.templates import GIANT_PROVENANCE, HITTING_TIME_PROVENANCE
from rigidity_lab.workflow.experiment_builder import ExperimentBuilder
from rigidity_lab.workflow.rigid_component import greedy_rigid_closure


class HittingTimeBuilder(ExperimentBuilder):
    """Rigidity of the random graph process at the hitting time of minimum degree d"""

    experiment = 'hitting-time'
    provenance = HITTING_TIME_PROVENANCE
    default_parameters = {'n': 300, 'dims': [2, 3], 'trials': 20, 'rank_trials': 3, 'required_fraction': 0.9}

    def plan(self, params: Dict[str, Any]) -> List[Dict[str, Any]]:
        return [{'d': d, 'repeat': t} for d in params['dims'] for t in range(params['trials'])]

    def run_trial(self, spec: Dict[str, Any], seed: int, params: Dict[str, Any]) -> Dict[str, Any]:
        n, d = params['n'], spec['d']
        snapshot = process_hitting_time(n, d, seed)
        g = Graph(n, snapshot.edges)
        before = Graph(n, snapshot.edges[:-1])
        verdict = randomized_rigidity_test(g, d, trials=params['rank_trials'], seed=seed)
        return {
            'tau_d': snapshot.tau_d,
            'min_degree': g.min_degree(),
            'min_degree_before': before.min_degree(),
            'hitting_invariant': g.min_degree() >= d > before.min_degree(),
            'certified': verdict.certified,
            'observed_rank': verdict.observed_rank,
            'required_rank': verdict.required_rank,
        }

    def aggregate(self, records: List[TrialRecord], params: Dict[str, Any]) -> Dict[str, Any]:
        per_dim = {}
        for d in params['dims']:
            rows = [r.values for r in records if r.values['d'] == d]
            certified = sum(row['certified'] for row in rows)
            per_dim[str(d)] = {
                'trials': len(rows),
                'certified': certified,
                'invariant_failures': sum(not row['hitting_invariant'] for row in rows),
                'mean_tau_d': sum(row['tau_d'] for row in rows) / len(rows) if rows else 0.0,
                'meets_threshold': certified >= params['required_fraction'] * len(rows),
            }
        return {'per_dim': per_dim, 'all_meet_threshold': all(v['meets_threshold'] for v in per_dim.values())}


class GiantComponentBuilder(ExperimentBuilder):
    """Greedy d-rigid closure in G(n, C d log d / n)"""

    experiment = 'giant'
    provenance = GIANT_PROVENANCE
    default_parameters = {
        'n': 2000,
        'd': 2,
        'C': 20.0,
        'trials': 20,
        'min_fraction': 0.5,
        'required_fraction': 0.9,
    }

    def plan(self, params: Dict[str, Any]) -> List[Dict[str, Any]]:
        return [{'repeat': t} for t in range(params['trials'])]

    def run_trial(self, spec: Dict[str, Any], seed: int, params: Dict[str, Any]) -> Dict[str, Any]:
        n, d = params['n'], params['d']
        p = min(1.0, params['C'] * d * log(max(d, 2)) / n)
        g = gnp(n, p, seed)
        try:
            trace = greedy_rigid_closure(g, d, seed=seed)
        except NoSeedClique:
            logger.warning(f"G({n}, {p:.5f}) with seed {seed} has no {d + 1}-clique")
            return {'p': p, 'size': 0, 'fraction': 0.0, 'validated': False, 'reached': False}
        size = len(trace.final_set)
        validated = trace.verdict is not None and trace.verdict.certified
        return {
            'p': p,
            'size': size,
            'fraction': size / n,
            'validated': validated,
            'reached': validated and size >= params['min_fraction'] * n,
        }

    def aggregate(self, records: List[TrialRecord], params: Dict[str, Any]) -> Dict[str, Any]:
        reached = sum(r.values['reached'] for r in records)
        return {
            'reached': reached,
            'trials': len(records),
            'mean_fraction': sum(r.values['fraction'] for r in records) / len(records) if records else 0.0,
            'meets_threshold': reached >= params['required_fraction'] * len(records),
        }
