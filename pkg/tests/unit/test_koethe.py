"""
Unit tests for the Köthe deciders and the separated quiver
"""

import sys
from pathlib import Path

import pytest

# Add project root to path
project_root = Path(__file__).parent.parent.parent
sys.path.append(str(project_root))

from src.combinatorics.dimension_sequences import generate, is_koethe_rank2, koethe_shape
from src.koethe.decision import FailureKind, decide_component, decide_hereditary
from src.koethe.separated import decide_radical_square_zero, separated_name, separated_quiver
from src.quivers.catalog import (
    koethe_e7,
    type_a,
    type_b,
    type_c,
    type_d,
    type_e,
    type_f4,
    type_g2,
    type_h,
    type_i2,
)
from src.quivers.quiver import Arrow, DualizationSequence, Quiver, QuiverMode, components, orientations
from src.utils.exceptions import WrongModeError

B_LABEL = DualizationSequence((2, 1, 2, 1))
B_OTHER = DualizationSequence((1, 2, 1, 2))


def single_arrow(entries) -> Quiver:
    return Quiver.build([Arrow("1", "2", DualizationSequence(tuple(entries)))])


def general(arrows, vertices=()) -> Quiver:
    return Quiver.build(arrows, vertices=list(vertices), mode=QuiverMode.GENERAL)


class TestTypeA:
    """Test clause 1"""

    def test_every_orientation_of_a3(self):
        """Test the four A3 orientations"""
        found = orientations(type_a(3))
        assert len(found) == 4
        for q in found:
            verdict = decide_hereditary(q)
            assert verdict.overall
            assert verdict.components[0].clause == 1

    def test_single_vertex(self):
        """Test A1"""
        verdict = decide_hereditary(Quiver.build([], vertices=["x"]))
        assert verdict.overall
        assert str(verdict.components[0].diagram) == "A1"


class TestTypeB:
    """Test clauses 2 and 3"""

    def test_rank2_koethe_sequence(self):
        """Test a single arrow labeled (2,1,2,1)"""
        verdict = decide_component(single_arrow((2, 1, 2, 1)))
        assert verdict.koethe
        assert verdict.clause == 2

    def test_rank2_other_sequence(self):
        """Test a single arrow labeled (1,2,1,2)"""
        verdict = decide_component(single_arrow((1, 2, 1, 2)))
        assert not verdict.koethe
        assert verdict.reason.kind is FailureKind.DIMENSION_SEQUENCE_MISMATCH
        assert verdict.reason.expected == (2, 1, 2, 1)
        assert verdict.reason.found == (1, 2, 1, 2)
        assert verdict.reason.arrow == ("1", "2")

    def test_linear_orientation(self):
        """Test the linear B4"""
        assert decide_component(type_b(4)).clause == 2

    def test_two_chains_into_sink(self):
        """Test C3 with the sink inside"""
        verdict = decide_component(type_c(3))
        assert verdict.clause == 3
        assert verdict.parameter == 2

    def test_single_chain_towards_first_vertex(self):
        """Test the sink at the first vertex"""
        q = Quiver.build([Arrow("3", "2", B_LABEL), Arrow("2", "1")])
        verdict = decide_component(q)
        assert verdict.clause == 3
        assert verdict.parameter == 1

    def test_sink_inside_long_path(self):
        """Test a sink in the middle of B5"""
        q = Quiver.build([Arrow("1", "2"), Arrow("2", "3"), Arrow("5", "4", B_LABEL), Arrow("4", "3")])
        verdict = decide_component(q)
        assert verdict.clause == 3
        assert verdict.parameter == 3

    def test_source_in_the_middle(self):
        """Test a source between the heavy arrow and the rest"""
        q = Quiver.build([Arrow("2", "1"), Arrow("2", "3", B_LABEL)])
        verdict = decide_component(q)
        assert verdict.reason.kind is FailureKind.ORIENTATION_MISMATCH
        assert verdict.reason.vertex == "3"

    def test_linear_with_wrong_sequence(self):
        """Test linear B3 with the other label"""
        q = Quiver.build([Arrow("1", "2"), Arrow("2", "3", B_OTHER)])
        verdict = decide_component(q)
        assert verdict.reason.kind is FailureKind.DIMENSION_SEQUENCE_MISMATCH
        assert verdict.reason.arrow == ("2", "3")


class TestTypeD:
    """Test clause 4"""

    def test_three_arrows_out_of_center(self):
        """Test the branch with three outgoing arrows"""
        q = Quiver.build([Arrow("2", "1"), Arrow("2", "3"), Arrow("2", "4")])
        verdict = decide_component(q)
        assert not verdict.koethe
        assert verdict.reason.kind is FailureKind.CONDITION_VIOLATED
        assert verdict.reason.detail == "Dn-a"
        assert verdict.reason.vertex == "2"

    def test_catalog_orientation(self):
        """Test D4 and D6 from the catalog"""
        assert decide_component(type_d(4)).clause == 4
        assert decide_component(type_d(6)).clause == 4

    def test_long_arm_vertex_with_two_arrows_out(self):
        """Test a long arm vertex with out-degree 2"""
        q = Quiver.build([Arrow("2", "1"), Arrow("2", "3"), Arrow("3", "4"), Arrow("3", "5")])
        verdict = decide_component(q)
        assert verdict.reason.detail == "Dn-b"
        assert verdict.reason.vertex == "2"

    def test_d4_leaves_are_never_checked(self):
        """Test D4 with every arrow into the branch"""
        q = Quiver.build([Arrow("1", "2"), Arrow("3", "2"), Arrow("4", "2")])
        assert decide_component(q).clause == 4


class TestExceptional:
    """Test clauses 5 to 8 and the forbidden types"""

    def test_e6_catalog(self):
        """Test E6 from the catalog"""
        assert decide_component(type_e(6)).clause == 5

    def test_e6_all_arrows_into_branch(self):
        """Test E6 with every arrow into the branch"""
        q = Quiver.build([Arrow("1", "2"), Arrow("2", "3"), Arrow("4", "3"), Arrow("5", "4"), Arrow("6", "3")])
        verdict = decide_component(q)
        assert verdict.reason.detail == "E6-a"
        assert verdict.reason.vertex == "3"

    def test_e6_neighbour_with_two_arrows_out(self):
        """Test an arm root with out-degree 2"""
        q = Quiver.build([Arrow("1", "2"), Arrow("2", "3"), Arrow("4", "3"), Arrow("4", "5"), Arrow("3", "6")])
        verdict = decide_component(q)
        assert verdict.reason.detail == "E6-a"
        assert verdict.reason.vertex == "4"

    def test_e6_source_predecessor(self):
        """Test a source feeding the branch"""
        q = Quiver.build([Arrow("1", "2"), Arrow("2", "3"), Arrow("6", "3"), Arrow("3", "4"), Arrow("4", "5")])
        verdict = decide_component(q)
        assert verdict.reason.detail == "E6-b"
        assert verdict.reason.vertex == "6"

    def test_e7_unique_orientation(self):
        """Test the Köthe orientation of E7"""
        assert decide_component(koethe_e7()).clause == 6

    def test_e7_other_orientation(self):
        """Test the first mismatching arrow of E7"""
        verdict = decide_component(type_e(7))
        assert verdict.reason.kind is FailureKind.ORIENTATION_MISMATCH
        assert verdict.reason.arrow == ("6", "5")

    def test_e8_every_orientation(self):
        """Test all 128 orientations of E8"""
        q = type_e(8)
        found = orientations(q)
        assert len(found) == 128
        for oriented in found:
            verdict = decide_component(oriented)
            assert verdict.rep_finite
            assert verdict.reason.kind is FailureKind.FORBIDDEN_TYPE
            assert verdict.reason.detail == "E8"

    @pytest.mark.parametrize("label", [B_LABEL, B_OTHER])
    def test_f4_every_orientation(self, label):
        """Test all 8 orientations of F4 under both labels"""
        q = type_f4()
        relabeled = q.with_arrows(Arrow(a.source, a.target, label) if not a.label.is_trivial else a for a in q.arrows)
        found = orientations(relabeled)
        assert len(found) == 8
        for oriented in found:
            verdict = decide_hereditary(oriented)
            assert not verdict.overall
            component = verdict.components[0]
            assert component.rep_finite
            assert component.clause is None
            assert component.reason.kind is FailureKind.FORBIDDEN_TYPE
            assert component.reason.detail == "F4"

    @pytest.mark.parametrize("q,name", [(type_f4(), "F4"), (type_h(3), "H3"), (type_h(4), "H4")])
    def test_forbidden(self, q, name):
        """Test F4, H3 and H4 from the catalog"""
        verdict = decide_component(q)
        assert verdict.reason.kind is FailureKind.FORBIDDEN_TYPE
        assert verdict.reason.detail == name

    def test_g2_shapes(self):
        """Test both G2 labels"""
        assert decide_component(type_g2((4, 1, 2, 2, 2, 1))).clause == 7
        verdict = decide_component(type_g2())
        assert verdict.reason.kind is FailureKind.DIMENSION_SEQUENCE_MISMATCH
        assert verdict.reason.expected == (4, 1, 2, 2, 2, 1)

    @pytest.mark.parametrize("p", [5, 7, 8, 9])
    def test_i2_shape(self, p):
        """Test I2(p) with the Köthe label"""
        assert decide_component(type_i2(p)).clause == 8

    def test_i2_rotated_shape(self):
        """Test I2(7) with a rotated label"""
        rotated = koethe_shape(7)[1:] + koethe_shape(7)[:1]
        verdict = decide_component(type_i2(7, rotated))
        assert verdict.reason.expected == koethe_shape(7)
        assert verdict.reason.found == rotated

    def test_representation_infinite(self):
        """Test the star with four arms"""
        verdict = decide_component(Quiver.build([Arrow("c", v) for v in "abde"]))
        assert not verdict.rep_finite
        assert verdict.reason.kind is FailureKind.NOT_REPRESENTATION_FINITE

    def test_unbounded_arrow(self):
        """Test an unbounded valuation"""
        q = Quiver.build([Arrow("1", "2", DualizationSequence.from_valuation(1, 4))])
        assert decide_component(q).reason.kind is FailureKind.NOT_REPRESENTATION_FINITE


class TestHereditaryVerdict:
    """Test per-component verdicts"""

    def test_overall_needs_every_component(self):
        """Test one failing component"""
        q = Quiver.build([Arrow("1", "2"), Arrow("a", "b", B_OTHER)])
        verdict = decide_hereditary(q)
        assert [c.koethe for c in verdict.components] == [True, False]
        assert not verdict.overall

    def test_general_mode(self):
        """Test a general-mode quiver"""
        with pytest.raises(WrongModeError):
            decide_hereditary(general([Arrow("1", "2")]))

    @pytest.mark.parametrize("m", range(3, 8))
    def test_rank2_agrees_with_sequence_shape(self, m):
        """Test every rank-2 label of length m"""
        for sequence_class in generate(m):
            for member in sequence_class.members:
                assert decide_hereditary(single_arrow(member)).overall == is_koethe_rank2(member)

    def test_renaming(self):
        """Test verdicts survive renaming"""
        names = {str(i): name for i, name in enumerate("uvwxyz", start=1)}
        for q in [type_e(6), type_c(3), koethe_e7()]:
            before = decide_component(q)
            after = decide_component(q.rename(names))
            assert (after.clause, after.parameter) == (before.clause, before.parameter)

    def test_component_order(self):
        """Test components ordered by least name"""
        q = Quiver.build([Arrow("b1", "b2", B_LABEL), Arrow("a1", "a2")])
        verdict = decide_hereditary(q)
        assert [c.vertices for c in verdict.components] == [("a1", "a2"), ("b1", "b2")]
        assert [c.clause for c in verdict.components] == [1, 2]


class TestSeparatedQuiver:
    """Test the radical-square-zero reduction"""

    def test_two_cycle(self):
        """Test the separated 2-cycle"""
        s = separated_quiver(general([Arrow("1", "2"), Arrow("2", "1")]))
        assert s.mode is QuiverMode.HEREDITARY
        assert sorted(a.key for a in s.arrows) == [("(1,0)", "(2,1)"), ("(2,0)", "(1,1)")]
        assert len(components(s)) == 2

    def test_loop(self):
        """Test the separated loop"""
        s = separated_quiver(general([Arrow("1", "1")]))
        assert s.vertices == ("(1,0)", "(1,1)")
        assert s.arrow("(1,0)", "(1,1)") is not None

    def test_isolated_vertices(self):
        """Test vertices without arrows"""
        s = separated_quiver(general([], vertices=["1", "2"]))
        assert len(s.vertices) == 4
        assert not s.arrows

    def test_labels_are_carried(self):
        """Test labels on separated arrows"""
        s = separated_quiver(general([Arrow("1", "2", B_LABEL)]))
        assert s.arrow(separated_name("1", 0), separated_name("2", 1)).label == B_LABEL

    def test_bipartite_and_acyclic(self):
        """Test the shape of the separated quiver"""
        q = general([Arrow("1", "1"), Arrow("1", "2"), Arrow("2", "3"), Arrow("3", "1")])
        s = separated_quiver(q)
        assert s.is_bipartite()
        assert not s.has_directed_cycle()

    def test_applied_twice(self):
        """Test separating twice"""
        twice = separated_quiver(separated_quiver(general([Arrow("1", "2")])))
        assert len(twice.vertices) == 8
        assert twice.arrow("((1,0),0)", "((2,1),1)") is not None


class TestRadicalSquareZero:
    """Test decisions through the separated quiver"""

    def test_loop(self):
        """Test the loop"""
        verdict = decide_radical_square_zero(general([Arrow("1", "1")]))
        assert verdict.overall
        assert str(verdict.components[0].diagram) == "A2"

    def test_two_cycle(self):
        """Test the 2-cycle"""
        assert decide_radical_square_zero(general([Arrow("1", "2"), Arrow("2", "1")])).overall

    def test_star(self):
        """Test the star with a failing branch"""
        q = general([Arrow("1", "2"), Arrow("1", "3"), Arrow("1", "4"), Arrow("5", "1")])
        verdict = decide_radical_square_zero(q)
        assert not verdict.overall
        star = verdict.components[0]
        assert star.vertices == ("(1,0)", "(2,1)", "(3,1)", "(4,1)")
        assert star.reason.detail == "Dn-a"
        assert star.reason.vertex == "(1,0)"
