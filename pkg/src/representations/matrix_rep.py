"""
Exact-rational matrix representations of trivially labeled quivers.

The map of an arrow s -> t is a dims(t) x dims(s) matrix acting on column
vectors and is stored under the key (s, t).  Reflection functors are the
kernel construction at a sink and the cokernel construction at a source.
"""

import logging
from dataclasses import dataclass
from typing import Iterator, List, Mapping, Optional, Sequence, Tuple

from sympy import ImmutableMatrix

from config.settings import TOWER_STEP_CAP
from src.quivers.quiver import Quiver, VertexId, is_arm
from src.quivers.vectors import DimVector
from src.reflection.coxeter import CoxeterTower, enumerate_indecomposables
from src.representations.linalg import (
    column_basis,
    cokernel_projection,
    hstack,
    identity,
    kernel_basis,
    rank,
    span_contains,
    vstack,
    zero_matrix,
)
from src.utils.exceptions import (
    IncompatibleSubrepError,
    NotAnArmError,
    NotSimplyLacedError,
    QuiverError,
    RepresentationShapeError,
    UnknownVertexError,
)

logger = logging.getLogger(__name__)

ArrowKey = Tuple[VertexId, VertexId]


@dataclass(frozen=True, eq=False)
class MatrixRep:
    """A representation (X_v, phi_a) with rational matrices"""

    quiver: Quiver
    dims: DimVector
    maps: Mapping[ArrowKey, ImmutableMatrix]

    def __post_init__(self):
        if not self.quiver.is_trivially_labeled():
            raise NotSimplyLacedError("matrix representations need every arrow label to be (1,1,1)")
        if set(self.dims) != set(self.quiver.vertices):
            raise UnknownVertexError("dimension vector does not match the quiver vertices")
        if not self.dims.is_nonnegative():
            raise RepresentationShapeError(f"negative dimension in {dict(self.dims)}")

        arrow_keys = {a.key for a in self.quiver.arrows}
        unknown = set(self.maps) - arrow_keys
        if unknown:
            raise RepresentationShapeError(f"maps given for missing arrows {sorted(unknown)}")

        maps = {}
        for source, target in sorted(arrow_keys):
            shape = (self.dims[target], self.dims[source])
            matrix = self.maps.get((source, target))
            matrix = zero_matrix(*shape) if matrix is None else ImmutableMatrix(matrix)
            if matrix.shape != shape:
                raise RepresentationShapeError(
                    f"map {source}->{target} has shape {matrix.shape}, expected {shape}"
                )
            maps[(source, target)] = matrix
        object.__setattr__(self, "maps", maps)

    def is_zero(self) -> bool:
        return self.dims.is_zero()

    def incoming_images(self, v: VertexId) -> ImmutableMatrix:
        """The row of matrices of all arrows into v, as one dims(v) x * matrix"""
        arrows = sorted(self.quiver.incoming(v), key=lambda a: a.source)
        return hstack(self.dims[v], [self.maps[a.key] for a in arrows])


@dataclass(frozen=True, eq=False)
class SubRep:
    """Subspaces Y_v of X_v given by independent basis columns"""

    bases: Mapping[VertexId, ImmutableMatrix]

    @property
    def dims(self) -> DimVector:
        return DimVector({v: basis.cols for v, basis in self.bases.items()})

    @classmethod
    def full(cls, r: MatrixRep) -> "SubRep":
        return cls({v: identity(r.dims[v]) for v in r.quiver.vertices})

    @classmethod
    def zero(cls, r: MatrixRep) -> "SubRep":
        return cls({v: zero_matrix(r.dims[v], 0) for v in r.quiver.vertices})


def simple_rep(q: Quiver, k: VertexId) -> MatrixRep:
    return MatrixRep(q, DimVector.unit(q.vertices, k), {})


def reflect_rep_sink(r: MatrixRep, k: VertexId) -> MatrixRep:
    """Y_k = kernel of the row (phi_a) over arrows into k; new maps are projections"""
    reflected = r.quiver.reflect_at_sink(k)
    arrows = sorted(r.quiver.incoming(k), key=lambda a: a.source)
    basis = kernel_basis(r.incoming_images(k))

    maps = {key: matrix for key, matrix in r.maps.items() if key[1] != k}
    start = 0
    for arrow in arrows:
        size = r.dims[arrow.source]
        maps[(k, arrow.source)] = basis[start:start + size, :]
        start += size
    return MatrixRep(reflected, r.dims.replace(k, basis.cols), maps)


def reflect_rep_source(r: MatrixRep, k: VertexId) -> MatrixRep:
    """Y_k = cokernel of the column (phi_a) over arrows out of k; new maps are quotients"""
    reflected = r.quiver.reflect_at_source(k)
    arrows = sorted(r.quiver.outgoing(k), key=lambda a: a.target)
    stacked = vstack(r.dims[k], [r.maps[a.key] for a in arrows])
    quotient = cokernel_projection(stacked)

    maps = {key: matrix for key, matrix in r.maps.items() if key[0] != k}
    start = 0
    for arrow in arrows:
        size = r.dims[arrow.target]
        maps[(arrow.target, k)] = quotient[:, start:start + size]
        start += size
    return MatrixRep(reflected, r.dims.replace(k, quotient.rows), maps)


def radical(r: MatrixRep) -> SubRep:
    """Sum of the images of incoming arrows at each vertex; zero at sources"""
    return SubRep({v: column_basis(r.incoming_images(v)) for v in r.quiver.vertices})


def top_dims(r: MatrixRep) -> DimVector:
    rad = radical(r)
    return DimVector({v: r.dims[v] - rad.bases[v].cols for v in r.quiver.vertices})


def is_multiplicity_free_top(r: MatrixRep) -> bool:
    return all(value <= 1 for value in top_dims(r).values())


def check_subrep(r: MatrixRep, y: SubRep) -> None:
    if set(y.bases) != set(r.quiver.vertices):
        raise IncompatibleSubrepError("subrepresentation is not given on every vertex")
    for v, basis in y.bases.items():
        if basis.rows != r.dims[v]:
            raise IncompatibleSubrepError(f"basis at {v} lives in dimension {basis.rows}, not {r.dims[v]}")
        if rank(basis) != basis.cols:
            raise IncompatibleSubrepError(f"basis at {v} has dependent columns")
    for arrow in r.quiver.arrows:
        image = r.maps[arrow.key] * y.bases[arrow.source]
        if not span_contains(y.bases[arrow.target], image):
            raise IncompatibleSubrepError(f"arrow {arrow.source}->{arrow.target} leaves the subspaces")


def is_small_subrep(r: MatrixRep, y: SubRep) -> bool:
    """Y vanishes at sources and sits inside the incoming image sum elsewhere"""
    check_subrep(r, y)
    sources = r.quiver.sources()
    for v in r.quiver.vertices:
        basis = y.bases[v]
        if v in sources:
            if basis.cols:
                return False
        elif not span_contains(r.incoming_images(v), basis):
            return False
    return True


def is_conical_on_arm(r: MatrixRep, arm: Sequence[VertexId]) -> bool:
    """
    arm = (k, v_1, ..., v_r).  Arrows pointing towards k must be injective,
    the others surjective; either way the rank must equal the dimension at
    the endpoint farther from k.
    """
    q = r.quiver
    if not is_arm(q, arm):
        raise NotAnArmError(f"{tuple(arm)} is not an arm")
    for near, far in zip(arm, arm[1:]):
        arrow = q.arrow_between(near, far)
        if rank(r.maps[arrow.key]) != r.dims[far]:
            return False
    return True


def _require_simply_laced(q: Quiver) -> None:
    if not q.is_trivially_labeled():
        raise NotSimplyLacedError("matrix enumeration needs every arrow label to be (1,1,1)")


def iter_indec_reps(q: Quiver, max_steps: int = TOWER_STEP_CAP) -> Iterator[MatrixRep]:
    """
    Indecomposables S_1^- ... S_t^- F_v in the order of the vector
    enumeration, built lazily so callers may stop at a witness.
    """
    _require_simply_laced(q)
    items = enumerate_indecomposables(q, max_steps)
    tower = CoxeterTower(q)
    for item in items:
        rep = simple_rep(tower.state(item.t).quiver, item.sink)
        for j in range(item.t - 1, -1, -1):
            rep = reflect_rep_source(rep, tower.vertex(j))
        if rep.dims != item.vector:
            raise QuiverError(
                f"functor image {dict(rep.dims)} differs from reflected vector {dict(item.vector)}"
            )
        yield rep


def enumerate_indec_reps(q: Quiver, max_steps: int = TOWER_STEP_CAP) -> List[MatrixRep]:
    reps = list(iter_indec_reps(q, max_steps))
    logger.debug(f"built {len(reps)} indecomposable representations")
    return reps


def find_rep(reps: Sequence[MatrixRep], dims: DimVector) -> Optional[MatrixRep]:
    for rep in reps:
        if rep.dims == dims:
            return rep
    return None
