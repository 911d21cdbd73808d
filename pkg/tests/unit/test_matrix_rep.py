"""
Unit tests for exact matrix representations and reflection functors
"""

import sys
from pathlib import Path

import numpy as np
import pytest
from sympy import ImmutableMatrix

# Add project root to path
project_root = Path(__file__).parent.parent.parent
sys.path.append(str(project_root))

from src.quivers.catalog import type_a, type_b, type_d, type_e
from src.quivers.quiver import Arrow, Quiver, arms
from src.quivers.vectors import DimVector
from src.reflection.coxeter import SpeciesState, enumerate_indecomposables, reflect_vector_at_sink
from src.representations.linalg import hstack, identity, span_contains, to_matrix, zero_matrix
from src.representations.matrix_rep import (
    MatrixRep,
    SubRep,
    check_subrep,
    enumerate_indec_reps,
    find_rep,
    is_conical_on_arm,
    is_multiplicity_free_top,
    is_small_subrep,
    iter_indec_reps,
    radical,
    reflect_rep_sink,
    reflect_rep_source,
    simple_rep,
    top_dims,
)
from src.utils.exceptions import (
    IncompatibleSubrepError,
    NotAnArmError,
    NotSimplyLacedError,
    RepresentationShapeError,
    UnknownVertexError,
)

A4_ZIGZAG = Quiver.build([Arrow("1", "2"), Arrow("3", "2"), Arrow("3", "4")])

SMALL_ADE = (
    [type_a(n) for n in range(2, 7)] + [A4_ZIGZAG] + [type_d(n) for n in range(4, 7)] + [type_e(6)]
)
SMALL_ADE_IDS = ["A2", "A3", "A4", "A5", "A6", "A4-zigzag", "D4", "D5", "D6", "E6"]


def path_rep(maps=None) -> MatrixRep:
    """1 -> 2 -> 3 with one-dimensional spaces"""
    q = type_a(3)
    if maps is None:
        maps = {("1", "2"): identity(1), ("2", "3"): identity(1)}
    return MatrixRep(q, DimVector.from_sequence(["1", "2", "3"], [1, 1, 1]), maps)


class TestMatrixRepConstruction:
    """Test shape and label checks"""

    def test_missing_maps_are_zero(self):
        """Test omitted maps default to zero"""
        r = MatrixRep(type_a(2), DimVector({"1": 2, "2": 1}), {})
        assert r.maps[("1", "2")].shape == (1, 2)

    def test_wrong_shape(self):
        """Test a map of the wrong shape"""
        with pytest.raises(RepresentationShapeError):
            MatrixRep(type_a(2), DimVector({"1": 1, "2": 1}), {("1", "2"): ImmutableMatrix([[1, 1]])})

    def test_map_for_missing_arrow(self):
        """Test a map on a missing arrow"""
        with pytest.raises(RepresentationShapeError):
            MatrixRep(type_a(2), DimVector({"1": 1, "2": 1}), {("2", "1"): identity(1)})

    def test_negative_dimension(self):
        """Test a negative dimension"""
        with pytest.raises(RepresentationShapeError):
            MatrixRep(type_a(2), DimVector({"1": -1, "2": 1}), {})

    def test_wrong_vertices(self):
        """Test a dimension vector on other vertices"""
        with pytest.raises(UnknownVertexError):
            MatrixRep(type_a(2), DimVector({"1": 1}), {})

    def test_valued_quiver_rejected(self):
        """Test a valued arrow"""
        with pytest.raises(NotSimplyLacedError):
            MatrixRep(type_b(2), DimVector({"1": 1, "2": 1}), {})


class TestReflectionFunctors:
    """Test kernel and cokernel constructions"""

    def test_sink_reflection_of_simple(self):
        """Test S_2^+ on the simple at 1"""
        r = reflect_rep_sink(simple_rep(type_a(2), "1"), "2")
        assert r.dims.as_tuple() == (1, 1)
        assert r.quiver.arrow("2", "1") is not None
        assert r.maps[("2", "1")] == identity(1)

    def test_sink_reflection_kills_simple_at_sink(self):
        """Test S_k^+ on the simple at k"""
        r = reflect_rep_sink(simple_rep(type_a(2), "2"), "2")
        assert r.is_zero()

    def test_source_reflection_undoes_sink_reflection(self):
        """Test S_k^- after S_k^+"""
        q = type_a(2)
        back = reflect_rep_source(reflect_rep_sink(simple_rep(q, "1"), "2"), "2")
        assert back.quiver == q
        assert back.dims == simple_rep(q, "1").dims

    def test_sink_reflection_of_two_arrows(self):
        """Test the kernel at a sink with two arrows"""
        q = Quiver.build([Arrow("1", "3"), Arrow("2", "3")])
        dims = DimVector({"1": 1, "2": 1, "3": 1})
        r = MatrixRep(q, dims, {("1", "3"): identity(1), ("2", "3"): identity(1)})
        reflected = reflect_rep_sink(r, "3")
        assert reflected.dims["3"] == 1
        assert reflected.quiver.sources() == frozenset({"3"})


class TestTopAndRadical:
    """Test radicals, tops and small subrepresentations"""

    def test_top_of_interval(self):
        """Test the interval 1 -> 2 -> 3"""
        r = path_rep()
        assert top_dims(r).as_tuple() == (1, 0, 0)
        assert radical(r).dims.as_tuple() == (0, 1, 1)
        assert is_multiplicity_free_top(r)

    def test_top_of_decomposable(self):
        """Test a broken map"""
        r = path_rep({("1", "2"): identity(1)})
        assert top_dims(r).as_tuple() == (1, 0, 1)

    def test_top_with_multiplicity(self):
        """Test a two-dimensional space at one vertex"""
        q = Quiver.build([], vertices=["1"])
        r = MatrixRep(q, DimVector({"1": 2}), {})
        assert top_dims(r)["1"] == 2
        assert not is_multiplicity_free_top(r)

    def test_radical_is_small(self):
        """Test the radical and the zero subrepresentation"""
        r = path_rep()
        assert is_small_subrep(r, radical(r))
        assert is_small_subrep(r, SubRep.zero(r))

    def test_full_subrep_is_not_small(self):
        """Test the whole representation"""
        r = path_rep()
        assert not is_small_subrep(r, SubRep.full(r))

    def test_subrep_not_closed_under_maps(self):
        """Test subspaces not closed under the maps"""
        r = MatrixRep(type_a(2), DimVector({"1": 1, "2": 1}), {("1", "2"): identity(1)})
        y = SubRep({"1": identity(1), "2": zero_matrix(1, 0)})
        with pytest.raises(IncompatibleSubrepError):
            check_subrep(r, y)

    def test_subrep_with_dependent_columns(self):
        """Test a basis with dependent columns"""
        r = MatrixRep(type_a(2), DimVector({"1": 1, "2": 1}), {("1", "2"): identity(1)})
        y = SubRep({"1": zero_matrix(1, 0), "2": to_matrix(1, 2, [[1, 2]])})
        with pytest.raises(IncompatibleSubrepError):
            check_subrep(r, y)

    def test_subrep_missing_vertex(self):
        """Test a subrepresentation missing a vertex"""
        r = path_rep()
        with pytest.raises(IncompatibleSubrepError):
            check_subrep(r, SubRep({"1": identity(1)}))

    def test_enlarged_radical_at_sink_with_top(self):
        """Test the whole space at a sink with top"""
        q = Quiver.build([Arrow("1", "2")])
        r = MatrixRep(q, DimVector({"1": 1, "2": 2}), {("1", "2"): to_matrix(2, 1, [[1], [0]])})
        assert top_dims(r)["2"] == 1
        assert not is_small_subrep(r, SubRep({"1": zero_matrix(1, 0), "2": identity(2)}))


class TestConical:
    """Test injectivity towards and surjectivity away from an arm base"""

    def test_interval_is_conical(self):
        """Test every arm of the interval"""
        r = path_rep()
        assert all(is_conical_on_arm(r, arm) for arm in arms(r.quiver))

    def test_broken_map(self):
        """Test a zero map on the arm"""
        r = path_rep({("1", "2"): identity(1)})
        assert not is_conical_on_arm(r, ("1", "2", "3"))

    def test_not_an_arm(self):
        """Test a vertex sequence that is not an arm"""
        with pytest.raises(NotAnArmError):
            is_conical_on_arm(path_rep(), ("1", "3"))

    @pytest.mark.parametrize("q", [A4_ZIGZAG, type_d(5), type_e(6)])
    def test_indecomposables_are_conical(self, q):
        """Test arms of every indecomposable"""
        for rep in enumerate_indec_reps(q):
            for arm in arms(q):
                if rep.dims[arm[0]]:
                    assert is_conical_on_arm(rep, arm)


class TestEnumeration:
    """Test the functor images of simples"""

    @pytest.mark.parametrize("q", [type_a(4), A4_ZIGZAG, type_d(4), type_e(6)])
    def test_dims_follow_vector_enumeration(self, q):
        """Test dimension vectors in enumeration order"""
        reps = enumerate_indec_reps(q)
        assert [r.dims for r in reps] == [item.vector for item in enumerate_indecomposables(q)]

    def test_linear_tops_are_simple(self):
        """Test simple tops for linear A4"""
        for rep in enumerate_indec_reps(type_a(4)):
            assert sum(top_dims(rep).values()) == 1

    def test_lazy(self):
        """Test the first indecomposable"""
        first = next(iter_indec_reps(type_a(3)))
        assert first.dims == DimVector.unit(["1", "2", "3"], "3")

    def test_find_rep(self):
        """Test lookup by dimension vector"""
        reps = enumerate_indec_reps(type_d(4))
        center = DimVector.from_sequence(["1", "2", "3", "4"], [1, 2, 1, 1])
        assert find_rep(reps, center).dims == center
        assert find_rep(reps, center.scaled(2)) is None

    def test_valued_quiver_rejected(self):
        """Test a valued quiver"""
        with pytest.raises(NotSimplyLacedError):
            enumerate_indec_reps(type_b(3))


class TestSweeps:
    """Test radicals and reflection functors on every indecomposable of small A, D and E quivers"""

    @pytest.mark.parametrize("q", SMALL_ADE, ids=SMALL_ADE_IDS)
    def test_radical_is_small_everywhere(self, q):
        """Test rad V is small for every indecomposable V"""
        for rep in enumerate_indec_reps(q):
            assert is_small_subrep(rep, radical(rep)), dict(rep.dims)

    def test_enlarged_radical_is_never_small(self):
        """Test the radical plus one vector outside it on random indecomposables"""
        rng = np.random.default_rng(20240611)
        reps = [rep for q in SMALL_ADE for rep in enumerate_indec_reps(q)]
        for _ in range(100):
            rep = reps[int(rng.integers(0, len(reps)))]
            rad = radical(rep)
            top = top_dims(rep)
            candidates = sorted(v for v in rep.quiver.vertices if top[v] > 0)
            v = candidates[int(rng.integers(0, len(candidates)))]
            extra = to_matrix(rep.dims[v], 1, [[int(x)] for x in rng.integers(-3, 4, size=rep.dims[v])])
            while span_contains(rad.bases[v], extra):
                extra = to_matrix(rep.dims[v], 1, [[int(x)] for x in rng.integers(-3, 4, size=rep.dims[v])])
            bases = dict(rad.bases)
            bases[v] = hstack(rep.dims[v], [rad.bases[v], extra])
            assert not is_small_subrep(rep, SubRep(bases))

    @pytest.mark.parametrize("q", SMALL_ADE, ids=SMALL_ADE_IDS)
    def test_sink_functor_matches_vector_reflection(self, q):
        """Test S_k^+ on dimension vectors at every sink of every non-simple indecomposable"""
        for rep in enumerate_indec_reps(q):
            if sum(rep.dims.values()) == 1:
                continue
            for k in sorted(rep.quiver.sinks()):
                expected = reflect_vector_at_sink(SpeciesState(rep.quiver), k, rep.dims)
                assert reflect_rep_sink(rep, k).dims == expected
