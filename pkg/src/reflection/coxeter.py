"""
Reflection calculus on dimension vectors of species.

A species state M^(j) is a quiver whose arrow labels remember how many
dualizations they went through.  Reflecting at a sink k reverses the arrows
into k and moves their labels one dualization on; on dimension vectors it
acts by y_k = -x_k + sum c_i x_i over arrows i -> k, c_i being the arrow's
r.dim at its current offset.  The same involution, read in the state where
k is a sink, serves as s_k^+ going up the tower and s_k^- coming back.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from config.settings import TOWER_STEP_CAP
from src.quivers.diagrams import DiagramType, classify
from src.quivers.quiver import Quiver, QuiverMode, VertexId, admissible_sink_sequence
from src.quivers.vectors import DimVector
from src.utils.exceptions import (
    CapExceededError,
    NotASinkError,
    NotHereditaryModeError,
    NotRepresentationFiniteError,
    UnknownVertexError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpeciesState:
    """The species M^(stage), arrow offsets included in the quiver labels"""

    quiver: Quiver
    stage: int = 0


@dataclass(frozen=True)
class EnumeratedIndec:
    """An indecomposable dimension vector with the (stage, sink) that produced it"""

    vector: DimVector
    t: int
    sink: VertexId


@dataclass(frozen=True)
class FinitenessReport:
    finite: bool
    m: Optional[int]
    diagram: DiagramType


def reflect_state(s: SpeciesState, k: VertexId) -> SpeciesState:
    return SpeciesState(s.quiver.reflect_at_sink(k), s.stage + 1)


def reflect_vector_at_sink(s: SpeciesState, k: VertexId, x: DimVector) -> DimVector:
    q = s.quiver
    if set(x) != set(q.vertices):
        raise UnknownVertexError(f"vector over {sorted(x)} does not match quiver vertices {sorted(q.vertices)}")
    if k not in q.sinks():
        raise NotASinkError(f"{k} is not a sink of stage {s.stage}")
    value = -x[k] + sum(a.r_dim * x[a.source] for a in q.incoming(k))
    return x.replace(k, value)


class CoxeterTower:
    """
    States M^(0), M^(1), ... obtained by reflecting along the cyclic extension
    k'_0, k'_1, ... of the admissible sink sequence.  States are built lazily
    and kept, since enumeration walks back down the tower.
    """

    def __init__(self, q: Quiver):
        if q.mode is not QuiverMode.HEREDITARY:
            raise NotHereditaryModeError("the Coxeter tower needs a hereditary quiver")
        self.quiver = q
        self.sequence = admissible_sink_sequence(q)
        self._states = [SpeciesState(q, 0)]

    def vertex(self, j: int) -> VertexId:
        """k'_j, the vertex reflected to pass from M^(j) to M^(j+1)"""
        return self.sequence[j % len(self.sequence)]

    def state(self, j: int) -> SpeciesState:
        while len(self._states) <= j:
            last = self._states[-1]
            self._states.append(reflect_state(last, self.vertex(last.stage)))
        return self._states[j]

    def __iter__(self) -> Iterator[Tuple[SpeciesState, Optional[VertexId]]]:
        j = 0
        while True:
            yield self.state(j), (self.vertex(j - 1) if j > 0 else None)
            j += 1


def coxeter_tower(q: Quiver) -> Iterator[Tuple[SpeciesState, Optional[VertexId]]]:
    """Lazy sequence of (M^(j), k'_{j-1}); the first pair carries None"""
    return iter(CoxeterTower(q))


def reflection_chain(tower: CoxeterTower, t: int, x: DimVector) -> List[DimVector]:
    """x over M^(t) followed by s_t^- x, s_{t-1}^- s_t^- x, ..., s_1^- ... s_t^- x"""
    chain = [x]
    for j in range(t - 1, -1, -1):
        chain.append(reflect_vector_at_sink(tower.state(j), tower.vertex(j), chain[-1]))
    return chain


def _finiteness(tower: CoxeterTower, max_steps: int) -> FinitenessReport:
    q = tower.quiver
    diagram = classify(q)
    if not diagram.is_finite:
        return FinitenessReport(False, None, diagram)

    tracked = [DimVector.unit(q.vertices, i) for i in sorted(q.sources())]
    for j in range(1, max_steps + 1):
        state, k = tower.state(j - 1), tower.vertex(j - 1)
        tracked = [reflect_vector_at_sink(state, k, x) for x in tracked]
        tracked = [x for x in tracked if not x.has_negative()]
        if not tracked:
            logger.debug(f"{diagram}: every source vector turned negative after {j} steps")
            return FinitenessReport(True, j, diagram)
    raise CapExceededError(f"{diagram}: source vectors still nonnegative after {max_steps} tower steps")


def representation_finiteness(q: Quiver, max_steps: int = TOWER_STEP_CAP) -> FinitenessReport:
    return _finiteness(CoxeterTower(q), max_steps)


def _compose_reflection(
    columns: Dict[VertexId, DimVector], state: SpeciesState, k: VertexId
) -> Dict[VertexId, DimVector]:
    """Columns of T o s_k, where s_k is the sink reflection at k in state"""
    coefficients = {a.source: a.r_dim for a in state.quiver.incoming(k)}
    composed = {}
    for j, column in columns.items():
        if j == k:
            composed[j] = -columns[k]
        elif j in coefficients:
            composed[j] = column + columns[k].scaled(coefficients[j])
        else:
            composed[j] = column
    return composed


def enumerate_indecomposables(q: Quiver, max_steps: int = TOWER_STEP_CAP) -> List[EnumeratedIndec]:
    """
    The branch system: s_1^- ... s_t^-(e_v) for t < m and every sink v of
    M^(t), dropping vectors with a negative coordinate and repeats.

    The composite s_1^- ... s_t^- is kept as a column map and extended by one
    reflection per stage instead of refolding every seed from scratch.
    """
    tower = CoxeterTower(q)
    report = _finiteness(tower, max_steps)
    if not report.finite:
        raise NotRepresentationFiniteError(f"diagram {report.diagram} is not representation-finite")

    columns = {v: DimVector.unit(q.vertices, v) for v in q.vertices}
    seen = set()
    found = []
    for t in range(report.m):
        if t > 0:
            columns = _compose_reflection(columns, tower.state(t - 1), tower.vertex(t - 1))
        for v in sorted(tower.state(t).quiver.sinks()):
            vector = columns[v]
            if vector.has_negative() or vector in seen:
                continue
            seen.add(vector)
            found.append(EnumeratedIndec(vector, t, v))

    logger.debug(f"{report.diagram}: {len(found)} indecomposable dimension vectors over {report.m} stages")
    return found


def is_branch_vector(q: Quiver, x: DimVector, max_steps: int = TOWER_STEP_CAP) -> bool:
    return any(item.vector == x for item in enumerate_indecomposables(q, max_steps))
