import asyncio
import json
from itertools import combinations

import numpy as np
import pytest
from conftest import exact_generic_rank

from rigidity_lab import RigidityLab
from rigidity_lab.errors import NoSeedClique
from rigidity_lab.formats import load_report
from rigidity_lab.generators import gnp
from rigidity_lab.graphs import (clique_number, complete_graph, glued_cliques, hyperoctahedral_graph, induced_pair,
                                 is_cds, path_graph)
from rigidity_lab.rigidity import required_rank
from rigidity_lab.schemas import GrowthReason, VerdictKind
from rigidity_lab.workflow import (EXPERIMENT_BUILDERS, SOURCES, BipartiteTableBuilder, BoundSurveyBuilder,
                                   GiantComponentBuilder, HittingTimeBuilder, HyperoctahedralBuilder,
                                   bipartite_condition, complement, greedy_rigid_closure, hyperoctahedral_formula,
                                   plain, planted_cds_family, spread_sparse_thresholds)


def build(builder_cls, threads=2, **params):
    return asyncio.run(builder_cls(threads=threads).build_report(params))


class TestGreedyRigidClosure:

    def test_glued_cliques_are_covered(self):
        g, n = glued_cliques(5, 2)
        trace = greedy_rigid_closure(g, 2, seed=0)
        assert trace.seed_clique == [0, 1, 2]
        assert trace.final_set == list(range(n))
        assert trace.verdict.kind is VerdictKind.RIGID_CERTIFIED
        assert all(step.reason is GrowthReason.ZERO_EXTENSION for step in trace.additions)
        assert [step.vertex for step in trace.additions] == [3, 4, 5, 6, 7]

    def test_additions_have_enough_anchors(self):
        g = complete_graph(7)
        trace = greedy_rigid_closure(g, 3, validate=False)
        assert trace.verdict is None
        assert all(len(step.anchors) == 3 for step in trace.additions)
        assert trace.final_set == list(range(7))

    def test_no_seed_clique(self):
        with pytest.raises(NoSeedClique):
            greedy_rigid_closure(path_graph(5), 2)

    def test_final_set_lies_in_a_maximal_rigid_set(self):
        checked = 0
        for seed in range(12):
            g = gnp(7, 0.6, seed=seed)
            if clique_number(g) < 3:
                continue
            final = set(greedy_rigid_closure(g, 2, seed=seed).final_set)
            rest = [v for v in range(g.n) if v not in final]
            rigid_supersets = []
            for size in range(len(rest) + 1):
                for extra in combinations(rest, size):
                    members = sorted(final | set(extra))
                    sub = induced_pair(g, members, members)
                    if exact_generic_rank(sub, 2, seed=seed, embeddings=1) == required_rank(len(members), 2):
                        rigid_supersets.append(set(members))
            assert final in rigid_supersets
            largest = max(rigid_supersets, key=len)
            assert not any(largest < other for other in rigid_supersets)
            checked += 1
        assert checked >= 5


class TestHelpers:

    def test_bipartite_condition(self):
        assert bipartite_condition(4, 6, 3)
        assert not bipartite_condition(4, 5, 3)
        assert not bipartite_condition(3, 12, 3)

    @pytest.mark.parametrize('n, expected', [(6, 3), (8, 4), (10, 6), (16, 11)])
    def test_hyperoctahedral_formula(self, n, expected):
        assert hyperoctahedral_formula(n) == expected

    def test_complement(self):
        assert complement(hyperoctahedral_graph(6)).edge_list == ((0, 1), (2, 3), (4, 5))

    def test_spread_sparse_thresholds(self):
        x, y = spread_sparse_thresholds(200, 0.05, 2.0)
        assert y == pytest.approx(2.0 * np.log(10.0))
        assert x == pytest.approx(4.0 * np.exp(-1.5) * np.log(10.0) / 0.05)

    def test_planted_cds_family(self):
        g, family = planted_cds_family(2, 4, 0.1, np.random.default_rng(0))
        assert g.n == 12
        assert sorted(family.sets) == ['0,1', '0,2', '1,2']
        assert all(is_cds(g, members) for members in family.sets.values())

    def test_plain(self):
        value = plain({
            'a': np.int64(3),
            'b': (np.float64(0.5), np.bool_(True)),
            'c': {2, 1},
            'k': VerdictKind.RIGID_CERTIFIED,
        })
        assert value == {'a': 3, 'b': [0.5, True], 'c': [1, 2], 'k': 'RigidCertified'}
        assert json.dumps(value)


class TestParameters:

    def test_defaults_include_seed(self):
        params = HyperoctahedralBuilder().resolve_parameters()
        assert params == {'seed': 0, 'min_n': 6, 'max_n': 16, 'rank_trials': 3}

    def test_overrides_are_coerced(self):
        params = HittingTimeBuilder().resolve_parameters({'dims': '2,4', 'n': '50', 'required_fraction': 1})
        assert params['dims'] == [2, 4]
        assert params['n'] == 50
        assert params['required_fraction'] == 1.0

    def test_unknown_parameter(self):
        with pytest.raises(ValueError, match='Unknown parameters'):
            GiantComponentBuilder().resolve_parameters({'size': 10})

    def test_every_experiment_is_registered(self):
        assert sorted(EXPERIMENT_BUILDERS) == sorted([
            'hitting-time', 'giant', 'bipartite-table', 'hyperoctahedral', 'bound-survey', 'regular-partition',
            'pseudorandom', 'bipartite-random', 'spread-sparse', 'dirac'
        ])

    def test_provenance_templates_format(self):
        for builder_cls in EXPERIMENT_BUILDERS.values():
            params = builder_cls().resolve_parameters()
            assert all(text.format(**params) for text in builder_cls.provenance.values())


class TestBuilders:

    def test_hyperoctahedral(self):
        report = build(HyperoctahedralBuilder, min_n=6, max_n=10)
        assert [t.values['n'] for t in report.trials] == [6, 8, 10]
        assert report.aggregate == {'rows': 3, 'mismatches': []}
        assert report.provenance['free_choices'] == 'even n in 6..10'

    def test_reports_do_not_depend_on_threads(self):
        one = build(HyperoctahedralBuilder, threads=1, min_n=6, max_n=12, seed=5)
        many = build(HyperoctahedralBuilder, threads=4, min_n=6, max_n=12, seed=5)
        assert one.model_dump(exclude={'wall_clock'}) == many.model_dump(exclude={'wall_clock'})
        assert [t.index for t in many.trials] == [0, 1, 2, 3]

    def test_bipartite_table(self):
        report = build(BipartiteTableBuilder, min_side=2, max_side=5, max_d=3)
        assert report.aggregate['cells'] == 30
        assert report.aggregate['mismatches'] == []
        assert report.aggregate['partition_failures'] == []

    def test_hitting_time(self):
        report = build(HittingTimeBuilder, n=30, dims=[1, 2], trials=3)
        per_dim = report.aggregate['per_dim']
        assert set(per_dim) == {'1', '2'}
        assert all(row['trials'] == 3 and row['invariant_failures'] == 0 for row in per_dim.values())

    def test_giant(self):
        report = build(GiantComponentBuilder, n=60, d=2, C=20.0, trials=3)
        assert report.aggregate['trials'] == 3
        assert all(0.0 <= t.values['fraction'] <= 1.0 for t in report.trials)

    def test_bound_survey(self):
        report = build(BoundSurveyBuilder, trials=8, max_n=16, max_d=2, min_accepted=1)
        aggregate = report.aggregate
        assert set(aggregate['per_source']) == set(SOURCES)
        assert aggregate['rejected_conversions'] == 0
        assert aggregate['bound_failures'] == 0
        assert aggregate['identity_failures'] == 0
        assert aggregate['bound_checked'] >= 1

    @pytest.mark.parametrize(
        'experiment, params',
        [
            ('regular-partition', {'n': 30, 'k': 10, 'trials': 2}),
            ('pseudorandom', {'n': 30, 'k': 10, 'trials': 2}),
            ('bipartite-random', {'n': 10, 'p': 0.7, 'd': 1, 'trials': 2}),
            ('spread-sparse', {'n': 60, 'p': 0.1, 'trials': 2}),
            ('dirac', {'n': 20, 'ell': 4, 'trials': 2}),
        ],
    )
    def test_partition_experiments(self, experiment, params):
        report = build(EXPERIMENT_BUILDERS[experiment], **params)
        assert report.experiment == experiment
        assert report.aggregate['trials'] == 2
        assert len(report.trials) == 2

    def test_spread_sparse_never_claims_holds(self):
        report = build(EXPERIMENT_BUILDERS['spread-sparse'], n=60, p=0.1, trials=2)
        assert all(t.values['kind'] != 'Holds' for t in report.trials)


class TestRigidityLab:

    def test_run_writes_a_report(self, tmp_path):
        lab = RigidityLab(threads=2, log_to_file=False)
        path = asyncio.run(lab.run('hyperoctahedral', {'max_n': 8}, str(tmp_path)))
        assert path.endswith('hyperoctahedral.json')
        with open(path) as f:
            report = load_report(f.read())
        assert report.aggregate['rows'] == 2

    def test_unknown_experiment(self):
        with pytest.raises(ValueError):
            asyncio.run(RigidityLab(log_to_file=False).report('no-such-thing', {}))


@pytest.mark.slow
class TestAcceptance:

    def test_hitting_time_at_desk_scale(self):
        report = build(HittingTimeBuilder, threads=4)
        assert report.aggregate['all_meet_threshold']

    def test_bipartite_table_at_desk_scale(self):
        report = build(BipartiteTableBuilder, threads=4)
        assert report.aggregate['mismatches'] == []
        assert report.aggregate['partition_failures'] == []

    def test_hyperoctahedral_at_desk_scale(self):
        assert build(HyperoctahedralBuilder, threads=4).aggregate['mismatches'] == []

    def test_bound_survey_at_desk_scale(self):
        assert build(BoundSurveyBuilder, threads=4).aggregate['meets_threshold']

    def test_giant_component_at_desk_scale(self):
        assert build(GiantComponentBuilder, threads=4).aggregate['meets_threshold']
