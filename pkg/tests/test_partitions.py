import pytest

from rigidity_lab.errors import (ConditionViolated, InfeasibleScores, InvalidSource, StructuralError,
                                 UnequalClasses)
from rigidity_lab.graphs import Graph, complete_bipartite, complete_graph, cycle_graph
from rigidity_lab.partitions import (balanced_random_partition, bipartite_strong_partition, brute_force_cut_oracle,
                                     common_neighbour_partition, complete_bipartite_partition,
                                     complete_bipartite_scores, convert_to_rigid_partition, dirac_partition,
                                     is_forest, landau_tournament, normalise_scores, random_partition,
                                     recheck_hierarchy, restriction_bound_check, scores_feasible,
                                     singleton_clique_check, strong_partition_via_sparse_connector,
                                     validate_structure, verify_rigid_partition, verify_strong)
from rigidity_lab.schemas import CdsFamily, PartitionRequest, RigidPartition, StrongKind, StrongPartition


def k4_two_coloured_paths() -> RigidPartition:
    """K6 whose part {0, 1, 2, 3} is split into two Hamiltonian paths of different colours"""
    cross_1 = [(v, 4) for v in range(4)]
    cross_2 = [(v, 5) for v in range(4)]
    return RigidPartition.from_sets(
        2,
        [[0, 1, 2, 3], [4], [5]],
        {
            (0, 1): [(0, 1), (1, 2), (2, 3)] + cross_1,
            (0, 2): [(1, 3), (0, 3), (0, 2)] + cross_2,
            (1, 2): [(4, 5)],
        },
    )


class TestTournaments:

    def test_transitive(self):
        tournament = landau_tournament([0, 1, 2])
        assert tournament.out_degrees() == [0, 1, 2]
        assert tournament.beats(2, 1) and tournament.beats(2, 0) and tournament.beats(1, 0)

    def test_three_cycle(self):
        tournament = landau_tournament([1, 1, 1])
        assert tournament.out_degrees() == [1, 1, 1]
        assert all(len(tournament.out_neighbours(i)) == 1 for i in range(3))

    def test_complete_bipartite_scores_are_realisable(self):
        assert complete_bipartite_scores(4) == [1, 1, 1, 3, 4]
        assert complete_bipartite_scores(1) == [0, 1]
        assert landau_tournament([1, 1, 1, 3, 4]).out_degrees() == [1, 1, 1, 3, 4]

    def test_infeasible_scores(self):
        assert not scores_feasible([0, 0, 3])
        with pytest.raises(InfeasibleScores):
            landau_tournament([0, 0, 3])

    def test_normalise_scores(self):
        assert normalise_scores([1, 1, 2]) == [1, 1, 1]
        assert normalise_scores([0, 1, 2]) == [0, 1, 2]
        assert sum(normalise_scores([2, 2, 3, 4])) == 6

    def test_is_forest(self):
        assert is_forest([(0, 1), (1, 2), (3, 4)])
        assert not is_forest([(0, 1), (1, 2), (0, 2)])


class TestVerifier:

    def test_cds_partition_of_k6(self):
        g = complete_graph(6)
        rp = convert_to_rigid_partition(g, CdsFamily(d=2, sets={'0,1': [0, 1], '0,2': [2, 3], '1,2': [4, 5]}))
        result = verify_rigid_partition(g, rp)
        assert result.accepted
        assert result.oracle_divergences == []
        assert recheck_hierarchy(g, rp, result.hierarchy)
        assert singleton_clique_check(g, rp)
        assert restriction_bound_check(g, rp)

    def test_disconnected_colour_pair(self, c4):
        rp = RigidPartition.from_sets(1, [[0, 1, 2, 3], []], {(0, 1): [(0, 1), (2, 3)]})
        result = verify_rigid_partition(c4, rp)
        assert not result.accepted
        assert 'disconnected' in result.reason

    def test_missing_monochromatic_cut(self):
        g = complete_graph(6)
        rp = k4_two_coloured_paths()
        result = verify_rigid_partition(g, rp)
        assert not result.accepted
        assert 'monochromatic' in result.reason
        assert not brute_force_cut_oracle(g, rp, 0)

    def test_two_empty_parts(self):
        g = complete_graph(2)
        rp = RigidPartition.from_sets(2, [[0, 1], [], []], {(0, 1): [(0, 1)]})
        assert not verify_rigid_partition(g, rp).accepted

    def test_overlapping_parts(self, k4):
        rp = RigidPartition.from_sets(1, [[0, 1, 2], [2, 3]], {})
        with pytest.raises(StructuralError):
            validate_structure(k4, rp)

    def test_foreign_edge(self, c4):
        rp = RigidPartition.from_sets(1, [[0, 1], [2, 3]], {(0, 1): [(0, 2)]})
        with pytest.raises(StructuralError):
            validate_structure(c4, rp)

    def test_edge_leaving_its_colour_pair(self, k4):
        rp = RigidPartition.from_sets(2, [[0], [1], [2, 3]], {(0, 1): [(0, 2)]})
        with pytest.raises(StructuralError):
            validate_structure(k4, rp)


class TestConverters:

    def test_type_i_on_k4(self, k4):
        sp = StrongPartition(kind=StrongKind.TYPE_I, d=2, parts=[[0, 1], [2, 3]])
        rp = convert_to_rigid_partition(k4, sp)
        assert rp.parts == [[0, 1], [2, 3], []]
        assert rp.colour_class(0, 2) == {(0, 1)}
        assert rp.colour_class(1, 2) == {(2, 3)}
        assert rp.colour_class(0, 1) == {(0, 2), (0, 3), (1, 2), (1, 3)}
        assert verify_rigid_partition(k4, rp).accepted

    def test_type_ii_on_k6(self):
        g = complete_graph(6)
        sp = StrongPartition(kind=StrongKind.TYPE_II, d=2, parts=[[0, 1], [2, 3], [4, 5]])
        rp = convert_to_rigid_partition(g, sp)
        assert rp.coloured_edges() == {e for e in g.edges if e[0] // 2 != e[1] // 2}
        assert verify_rigid_partition(g, rp).accepted

    def test_invalid_strong_source(self, c4):
        sp = StrongPartition(kind=StrongKind.TYPE_I, d=2, parts=[[0, 2], [1, 3]])
        with pytest.raises(InvalidSource):
            convert_to_rigid_partition(c4, sp)

    def test_invalid_cds_family(self, path3):
        family = CdsFamily(d=1, sets={'0,1': [0, 1]})
        with pytest.raises(InvalidSource):
            convert_to_rigid_partition(path3, family)

    def test_cds_family_for_a_single_dimension(self, path3):
        rp = convert_to_rigid_partition(path3, CdsFamily(d=1, sets={'0,1': [0, 1, 2]}))
        assert rp.parts == [[0, 1, 2], []]
        assert verify_rigid_partition(path3, rp).accepted

    @pytest.mark.parametrize('m, n, d', [(2, 2, 1), (4, 6, 3), (5, 5, 3), (5, 10, 4)])
    def test_complete_bipartite_partition(self, m, n, d):
        bg = complete_bipartite(m, n)
        sp = complete_bipartite_partition(m, n, d)
        assert verify_strong(bg.graph, sp)
        rp = convert_to_rigid_partition(bg.graph, sp)
        assert verify_rigid_partition(bg.graph, rp).accepted

    def test_complete_bipartite_condition(self):
        with pytest.raises(ConditionViolated):
            complete_bipartite_partition(4, 5, 3)
        with pytest.raises(ConditionViolated):
            complete_bipartite_partition(3, 12, 3)


class TestConstructors:

    def test_random_partition(self):
        g = complete_graph(12)
        req = PartitionRequest(d=2, alpha=0.5, seed=0)
        outcome = random_partition(g, req)
        assert outcome.success
        assert outcome.min_cross_degree >= outcome.target
        assert sorted(v for part in outcome.parts for v in part) == list(range(12))
        assert random_partition(g, req) == outcome

    def test_random_partition_failure_reports_best_attempt(self):
        g = cycle_graph(6)
        outcome = random_partition(g, PartitionRequest(d=3, alpha=0.1, seed=0, max_retries=5))
        assert not outcome.success
        assert outcome.attempts == 5
        assert outcome.min_cross_degree < outcome.target
        assert outcome.reason

    def test_balanced_partition_needs_equal_classes(self, path3):
        with pytest.raises(UnequalClasses):
            balanced_random_partition(path3, PartitionRequest(d=1), [[0], [1, 2]])

    def test_sparse_connector_partition(self):
        g = complete_graph(12)
        outcome = strong_partition_via_sparse_connector(g, 2, seed=1)
        assert outcome.success
        assert outcome.strong.kind is StrongKind.TYPE_I
        assert verify_strong(g, outcome.strong)

    def test_bipartite_strong_partition(self):
        bg = complete_bipartite(6, 6)
        outcome = bipartite_strong_partition(bg, 1, seed=2)
        assert outcome.success
        rp = convert_to_rigid_partition(bg.graph, outcome.strong)
        assert verify_rigid_partition(bg.graph, rp).accepted

    def test_bipartite_strong_partition_needs_balanced_sides(self):
        with pytest.raises(UnequalClasses):
            bipartite_strong_partition(complete_bipartite(3, 4), 1)

    def test_common_neighbour_partition(self):
        outcome = common_neighbour_partition(complete_graph(9), 3, seed=0)
        assert outcome.success
        assert sorted(len(part) for part in outcome.parts) == [3, 3, 3]
        assert outcome.min_cross_degree >= 1

    def test_dirac_partition(self):
        d, outcome = dirac_partition(complete_graph(40), seed=0)
        assert d == 3
        assert outcome.success
        assert outcome.strong.kind is StrongKind.TYPE_I

    def test_dirac_condition(self, c4):
        with pytest.raises(ConditionViolated):
            dirac_partition(c4)
        with pytest.raises(ConditionViolated):
            dirac_partition(Graph(1))
