import json

import pytest

from rigidity_lab.cli import EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE, run_command
from rigidity_lab.formats import dump_graph, dump_model, load_graph
from rigidity_lab.graphs import complete_graph, cycle_graph
from rigidity_lab.partitions import convert_to_rigid_partition
from rigidity_lab.schemas import CdsFamily, RigidPartition


@pytest.fixture
def write(tmp_path):

    def _write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


def run(capsys, *argv):
    code = run_command(list(argv))
    return code, capsys.readouterr().out


class TestUsage:

    def test_help(self, capsys):
        assert run_command(['--help']) == EXIT_OK

    def test_unknown_group(self):
        assert run_command(['frobnicate']) == EXIT_USAGE

    def test_stray_arguments(self, write):
        path = write('k3.edges', dump_graph(complete_graph(3)))
        assert run_command(['rigidity', 'test', '--input', path, '--dim', '2', '--colour', 'red']) == EXIT_USAGE

    def test_missing_file(self, tmp_path):
        assert run_command(['rigidity', 'test', '--input', str(tmp_path / 'nope'), '--dim', '2']) == EXIT_USAGE

    def test_malformed_graph(self, write):
        path = write('bad.edges', '3 2\n0 1\n')
        assert run_command(['rigidity', 'test', '--input', path, '--dim', '1']) == EXIT_USAGE


class TestRigidity:

    def test_triangle_is_rigid_in_the_plane(self, capsys, write):
        path = write('k3.edges', dump_graph(complete_graph(3)))
        code, out = run(capsys, 'rigidity', 'test', '--input', path, '--dim', '2')
        assert code == EXIT_OK
        verdict = json.loads(out)
        assert verdict['kind'] == 'RigidCertified'
        assert verdict['observed_rank'] == 3

    def test_square_is_flexible(self, capsys, write):
        path = write('c4.edges', dump_graph(cycle_graph(4)))
        code, out = run(capsys, 'rigidity', 'test', '--input', path, '--dim', '2', '--format', 'text')
        assert code == EXIT_NEGATIVE
        assert out.startswith('ProbablyFlexible at d=2')

    def test_number(self, capsys, write):
        path = write('k5.edges', dump_graph(complete_graph(5)))
        code, out = run(capsys, 'rigidity', 'number', '--input', path)
        assert code == EXIT_OK
        assert json.loads(out)['rigidity_number'] == 4


class TestPartition:

    @pytest.fixture
    def k6(self, write):
        return write('k6.edges', dump_graph(complete_graph(6)))

    @pytest.fixture
    def cds(self, write):
        family = CdsFamily(d=2, sets={'0,1': [0, 1], '0,2': [2, 3], '1,2': [4, 5]})
        return write('cds.json', dump_model(family))

    def test_convert_then_verify(self, capsys, write, k6, cds):
        code, out = run(capsys, 'partition', 'convert', '--input', k6, '--source', cds)
        assert code == EXIT_OK
        rp = RigidPartition.model_validate_json(out)
        assert rp.parts == [[2, 3], [0, 1], [4, 5]]
        path = write('rp.json', out)
        code, out = run(capsys, 'partition', 'verify', '--input', k6, '--partition', path, '--format', 'text')
        assert code == EXIT_OK
        assert out.startswith('Accepted')

    def test_rejected_partition(self, capsys, write):
        graph = write('c4.edges', dump_graph(cycle_graph(4)))
        rp = RigidPartition.from_sets(1, [[0, 1, 2, 3], []], {(0, 1): [(0, 1), (2, 3)]})
        path = write('rp.json', dump_model(rp))
        code, out = run(capsys, 'partition', 'verify', '--input', graph, '--partition', path)
        assert code == EXIT_NEGATIVE
        assert json.loads(out)['accepted'] is False

    def test_unreadable_partition(self, write, k6):
        path = write('rp.json', '{"d": 0}')
        assert run_command(['partition', 'verify', '--input', k6, '--partition', path]) == EXIT_USAGE

    def test_complete_bipartite(self, capsys):
        code, out = run(capsys, 'partition', 'construct', '--method', 'complete-bipartite', '--m', '4', '--n', '6',
                        '--dim', '3')
        assert code == EXIT_OK
        assert json.loads(out)['kind'] == 'Bipartite'

    def test_complete_bipartite_condition(self):
        argv = ['partition', 'construct', '--method', 'complete-bipartite', '--m', '4', '--n', '5', '--dim', '3']
        assert run_command(argv) == EXIT_USAGE

    def test_construct_needs_a_graph(self):
        assert run_command(['partition', 'construct', '--method', 'type-ii', '--dim', '2']) == EXIT_USAGE

    def test_bound_check(self, capsys, write, k6):
        rp = convert_to_rigid_partition(complete_graph(6),
                                        CdsFamily(d=2, sets={'0,1': [0, 1], '0,2': [2, 3], '1,2': [4, 5]}))
        path = write('rp.json', dump_model(rp))
        code, out = run(capsys, 'bound', 'check', '--input', k6, '--partition', path)
        assert code == EXIT_OK
        assert json.loads(out)['holds'] is True


class TestProperty:

    def test_dense_clique_is_not_sparse(self, capsys, write):
        path = write('k4.edges', dump_graph(complete_graph(4)))
        code, out = run(capsys, 'property', 'sparse', '--input', path, '--x', '4', '--y', '1')
        assert code == EXIT_NEGATIVE
        assert json.loads(out)['kind'] == 'Violated'

    def test_search_mode(self, capsys, write):
        path = write('c6.edges', dump_graph(cycle_graph(6)))
        code, out = run(capsys, 'property', 'connector', '--input', path, '--k', '3', '--mode', 'search')
        assert code == EXIT_OK
        assert json.loads(out)['kind'] == 'NoViolationFound'

    def test_jumbled_certificate(self, capsys, write):
        path = write('c4.edges', dump_graph(cycle_graph(4)))
        code, out = run(capsys, 'property', 'jumbled', '--input', path)
        assert code == EXIT_OK
        assert json.loads(out) == pytest.approx({'p': 0.5, 'beta': 2.0})


class TestGen:

    def test_gnp_writes_a_graph(self, capsys):
        code, out = run(capsys, 'gen', 'gnp', '--n', '8', '--p', '1.0')
        assert code == EXIT_OK
        assert load_graph(out) == complete_graph(8)

    def test_same_seed_same_graph(self, capsys):
        _, first = run(capsys, 'gen', 'gnm', '--n', '20', '--m', '30', '--seed', '7')
        _, second = run(capsys, 'gen', 'gnm', '--n', '20', '--m', '30', '--seed', '7')
        assert first == second

    def test_regular_parity(self):
        assert run_command(['gen', 'regular', '--n', '5', '--k', '3']) == EXIT_USAGE

    def test_process_snapshot(self, capsys):
        code, out = run(capsys, 'gen', 'process', '--n', '10', '--dim', '2', '--format', 'text')
        assert code == EXIT_OK
        assert load_graph(out).min_degree() == 2


class TestExperiment:

    def test_text_report(self, capsys):
        code, out = run(capsys, 'experiment', 'hyperoctahedral', '--max-n', '8', '--format', 'text')
        assert code == EXIT_OK
        assert out.startswith('experiment: hyperoctahedral')
        assert 'n=8' in out

    def test_json_report(self, capsys):
        code, out = run(capsys, 'experiment', 'hyperoctahedral', '--max_n', '8')
        assert code == EXIT_OK
        assert json.loads(out)['aggregate']['rows'] == 2

    def test_unpaired_override(self):
        assert run_command(['experiment', 'giant', '--n']) == EXIT_USAGE

    def test_unknown_override(self):
        assert run_command(['experiment', 'giant', '--size', '10']) == EXIT_USAGE
