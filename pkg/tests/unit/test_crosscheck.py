"""
Unit tests for the brute-force cross check of the Köthe decision
"""

import logging
import sys
from pathlib import Path

import pytest

# Add project root to path
project_root = Path(__file__).parent.parent.parent
sys.path.append(str(project_root))

from src.koethe.crosscheck import brute_force_component, cross_check_component, cross_validate
from src.koethe.decision import ComponentVerdict, FailureKind, FailureReason
from src.quivers.catalog import koethe_e7, type_a, type_b, type_d, type_e, type_g2
from src.quivers.diagrams import classify
from src.quivers.quiver import Arrow, Quiver, QuiverMode, orientations
from src.utils.exceptions import UnsupportedTypeError, WrongModeError

E6_FAILING = Quiver.build([Arrow("1", "2"), Arrow("2", "3"), Arrow("4", "3"), Arrow("5", "4"), Arrow("6", "3")])

E6_ORDER = ["1", "2", "3", "4", "5", "6"]
SIMPLY_LACED = [type_a(n) for n in range(2, 6)] + [type_d(n) for n in range(4, 7)] + [type_e(n) for n in (6, 7, 8)]


class TestAgreement:
    """Test that both verdicts coincide on simply-laced orientations"""

    @pytest.mark.parametrize("q", SIMPLY_LACED, ids=lambda q: str(classify(q)))
    def test_every_orientation(self, q):
        """Test every orientation of A2-A5, D4-D6 and E6-E8"""
        for oriented in orientations(q):
            result = cross_check_component(oriented)
            assert result.agree, [a.key for a in oriented.arrows]

    def test_a4_has_no_witness(self):
        """Test all ten A4 indecomposables on every orientation"""
        for oriented in orientations(type_a(4)):
            result = cross_check_component(oriented)
            assert result.brute_force
            assert result.witness is None
            assert result.checked == 10

    def test_e7_koethe_orientation(self):
        """Test the Köthe orientation of E7"""
        result = cross_check_component(koethe_e7())
        assert result.decision and result.brute_force
        assert result.checked == 63

    def test_e8_never_koethe(self):
        """Test a witness on every orientation of E8"""
        for oriented in orientations(type_e(8)):
            result = cross_check_component(oriented)
            assert not result.decision
            assert not result.brute_force
            assert result.witness is not None


class TestWitness:
    """Test the first indecomposable without multiplicity-free top"""

    def test_e6_failing_orientation(self):
        """Test the witness at the highest root of E6"""
        ok, rep, top, checked = brute_force_component(E6_FAILING)
        assert not ok
        assert rep.dims.as_tuple(E6_ORDER) == (1, 2, 3, 2, 1, 2)
        assert top.as_tuple(E6_ORDER) == (1, 1, 0, 1, 1, 2)
        assert top["6"] == 2
        assert 1 <= checked <= 36

    def test_d4_three_out(self):
        """Test the D4 branch with three outgoing arrows"""
        q = Quiver.build([Arrow("2", "1"), Arrow("2", "3"), Arrow("2", "4")])
        result = cross_check_component(q)
        assert not result.decision and not result.brute_force
        assert result.witness_top["2"] == 2

    def test_report_witness(self):
        """Test the report picks the failing component"""
        q = Quiver.build([Arrow("1", "2"), Arrow("x2", "x1"), Arrow("x2", "x3"), Arrow("x2", "x4")])
        report = cross_validate(q)
        assert len(report.components) == 2
        assert not report.decision
        assert not report.brute_force
        assert report.agree
        assert report.witness is report.components[1].witness


class TestRejections:
    """Test inputs the matrix engine cannot take"""

    @pytest.mark.parametrize("q", [type_b(3), type_g2()])
    def test_valued_components(self, q):
        """Test valued components"""
        with pytest.raises(UnsupportedTypeError):
            cross_check_component(q)

    def test_general_mode(self):
        """Test a general-mode quiver"""
        q = Quiver.build([Arrow("1", "1")], mode=QuiverMode.GENERAL)
        with pytest.raises(WrongModeError):
            cross_validate(q)

    def test_disagreement_is_logged(self, mocker, caplog):
        """Test the error log on disagreement"""
        q = type_a(3)
        wrong = ComponentVerdict(
            vertices=q.vertices,
            diagram=classify(q),
            rep_finite=True,
            reason=FailureReason(FailureKind.CONDITION_VIOLATED, detail="Dn-a"),
        )
        mocker.patch("src.koethe.crosscheck.decide_component", return_value=wrong)
        with caplog.at_level(logging.ERROR, logger="src.koethe.crosscheck"):
            result = cross_check_component(q)
        assert not result.agree
        assert "disagree" in caplog.text
