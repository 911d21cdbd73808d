"""
Köthe decision for basic hereditary rings from their valued quivers.

Each connected component is classified and matched against the finite list
of admissible diagram/orientation/label shapes:

    1  A_n, any orientation
    2  B_n, linear v_1 -> ... -> v_n, d(v_{n-1} -> v_n) = (2,1,2,1)
    3  B_n, chains v_n -> ... -> v_t <- ... <- v_1, d(v_n -> v_{n-1}) = (2,1,2,1)
    4  D_n, out-degree conditions on the branch vertex and the long arm
    5  E6, out-degree conditions on the branch vertex and its neighbours
    6  E7, one orientation
    7  G2, d = (4,1,2,2,2,1)
    8  I2(p), d = (p-2,1,2,...,2,1)

E8, F4, H3 and H4 never qualify; representation-infinite components fail.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, List, Optional, Tuple

from src.combinatorics.dimension_sequences import koethe_shape
from src.quivers.diagrams import DiagramFamily, DiagramType, branch_arms, classify, path_order
from src.quivers.quiver import Quiver, QuiverMode, VertexId, components
from src.utils.exceptions import WrongModeError

logger = logging.getLogger(__name__)

B_LABEL = (2, 1, 2, 1)
FORBIDDEN = {DiagramFamily.E8, DiagramFamily.F4, DiagramFamily.H3, DiagramFamily.H4}


class FailureKind(str, Enum):
    NOT_REPRESENTATION_FINITE = "NotRepresentationFinite"
    FORBIDDEN_TYPE = "ForbiddenType"
    ORIENTATION_MISMATCH = "OrientationMismatch"
    DIMENSION_SEQUENCE_MISMATCH = "DimensionSequenceMismatch"
    CONDITION_VIOLATED = "ConditionViolated"


@dataclass(frozen=True)
class FailureReason:
    """Why a component is not Köthe, pointing at the offending vertex or arrow"""

    kind: FailureKind
    detail: Optional[str] = None
    vertex: Optional[VertexId] = None
    arrow: Optional[Tuple[VertexId, VertexId]] = None
    expected: Optional[Tuple[int, ...]] = None
    found: Optional[Tuple[int, ...]] = None


@dataclass(frozen=True)
class ComponentVerdict:
    vertices: Tuple[VertexId, ...]
    diagram: DiagramType
    rep_finite: bool
    clause: Optional[int] = None
    reason: Optional[FailureReason] = None
    parameter: Optional[int] = None

    @property
    def koethe(self) -> bool:
        return self.clause is not None


@dataclass(frozen=True)
class KoetheVerdict:
    components: Tuple[ComponentVerdict, ...]

    @property
    def overall(self) -> bool:
        return all(c.koethe for c in self.components)


Outcome = Tuple[Optional[int], Optional[FailureReason], Optional[int]]


def _passed(clause: int, parameter: Optional[int] = None) -> Outcome:
    return clause, None, parameter


def _failed(reason: FailureReason) -> Outcome:
    return None, reason, None


def _orientation_matches(q: Quiver, arrows: List[Tuple[VertexId, VertexId]]) -> bool:
    return all(q.arrow(source, target) is not None for source, target in arrows)


def _decide_a(q: Quiver, diagram: DiagramType) -> Outcome:
    return _passed(1)


def _decide_b(q: Quiver, diagram: DiagramType) -> Outcome:
    order = path_order(q)
    n = len(order)
    heavy = [i for i, (u, v) in enumerate(zip(order, order[1:])) if q.arrow_between(u, v).coxeter_label == 4]
    if n == 2:
        labelings = [order, order[::-1]]
    else:
        labelings = [order if heavy[0] == n - 2 else order[::-1]]

    mismatch = None
    for v in labelings:
        linear = [(v[i], v[i + 1]) for i in range(n - 1)]
        if _orientation_matches(q, linear):
            arrow = q.arrow(v[n - 2], v[n - 1])
            if arrow.label.effective() == B_LABEL:
                return _passed(2)
            mismatch = mismatch or arrow

    for v in labelings:
        for t in range(1, n):
            sink = t - 1
            shape = [(v[i + 1], v[i]) for i in range(sink, n - 1)] + [(v[i], v[i + 1]) for i in range(sink)]
            if _orientation_matches(q, shape):
                arrow = q.arrow(v[n - 1], v[n - 2])
                if arrow.label.effective() == B_LABEL:
                    return _passed(3, parameter=t)
                mismatch = mismatch or arrow

    if mismatch is not None:
        return _failed(FailureReason(
            FailureKind.DIMENSION_SEQUENCE_MISMATCH,
            arrow=mismatch.key,
            expected=B_LABEL,
            found=mismatch.label.effective(),
        ))
    return _failed(FailureReason(
        FailureKind.ORIENTATION_MISMATCH,
        detail="v1->...->vn or vn->...->vt<-...<-v1",
        vertex=labelings[0][-1],
    ))


def _decide_d(q: Quiver, diagram: DiagramType) -> Outcome:
    branch, arm_list = branch_arms(q)
    if q.out_degree(branch) > 2:
        return _failed(FailureReason(FailureKind.CONDITION_VIOLATED, detail="Dn-a", vertex=branch))
    if diagram.rank > 4:
        for v in arm_list[2]:
            if q.out_degree(v) > 1:
                return _failed(FailureReason(FailureKind.CONDITION_VIOLATED, detail="Dn-b", vertex=v))
    return _passed(4)


def _decide_e6(q: Quiver, diagram: DiagramType) -> Outcome:
    branch, arm_list = branch_arms(q)
    if not 1 <= q.out_degree(branch) <= 2:
        return _failed(FailureReason(FailureKind.CONDITION_VIOLATED, detail="E6-a", vertex=branch))
    for arm in arm_list[1:]:
        if q.out_degree(arm[0]) > 1:
            return _failed(FailureReason(FailureKind.CONDITION_VIOLATED, detail="E6-a", vertex=arm[0]))
    for y in q.predecessors(branch):
        if q.in_degree(y) == 0:
            return _failed(FailureReason(FailureKind.CONDITION_VIOLATED, detail="E6-b", vertex=y))
    return _passed(5)


def _decide_e7(q: Quiver, diagram: DiagramType) -> Outcome:
    c, (short, middle, long) = branch_arms(q)
    required = [
        (long[2], long[1]), (long[1], long[0]), (long[0], c),
        (c, middle[0]), (middle[0], middle[1]),
        (c, short[0]),
    ]
    for source, target in required:
        if q.arrow(source, target) is None:
            return _failed(FailureReason(
                FailureKind.ORIENTATION_MISMATCH,
                detail="a3->a2->a1->c, c->b1->b2, c->s",
                vertex=target,
                arrow=(source, target),
            ))
    return _passed(6)


def _decide_rank2(clause: int, p: int) -> Callable[[Quiver, DiagramType], Outcome]:
    def decide(q: Quiver, diagram: DiagramType) -> Outcome:
        arrow = q.arrows[0]
        expected = koethe_shape(p or arrow.coxeter_label)
        found = arrow.label.effective()
        if found == expected:
            return _passed(clause)
        return _failed(FailureReason(
            FailureKind.DIMENSION_SEQUENCE_MISMATCH, arrow=arrow.key, expected=expected, found=found,
        ))

    return decide


def _decide_forbidden(q: Quiver, diagram: DiagramType) -> Outcome:
    return _failed(FailureReason(FailureKind.FORBIDDEN_TYPE, detail=str(diagram)))


def _decide_unknown(q: Quiver, diagram: DiagramType) -> Outcome:
    return _failed(FailureReason(FailureKind.NOT_REPRESENTATION_FINITE))


DECIDERS: Dict[DiagramFamily, Callable[[Quiver, DiagramType], Outcome]] = {
    DiagramFamily.A: _decide_a,
    DiagramFamily.B: _decide_b,
    DiagramFamily.D: _decide_d,
    DiagramFamily.E6: _decide_e6,
    DiagramFamily.E7: _decide_e7,
    DiagramFamily.G2: _decide_rank2(7, 6),
    DiagramFamily.I2: _decide_rank2(8, 0),
    DiagramFamily.UNKNOWN: _decide_unknown,
}
DECIDERS.update({family: _decide_forbidden for family in FORBIDDEN})


def decide_component(q: Quiver) -> ComponentVerdict:
    diagram = classify(q)
    clause, reason, parameter = DECIDERS[diagram.family](q, diagram)
    logger.info(f"component {list(q.vertices)}: {diagram}, clause {clause}")
    return ComponentVerdict(
        vertices=tuple(sorted(q.vertices)),
        diagram=diagram,
        rep_finite=diagram.is_finite,
        clause=clause,
        reason=reason,
        parameter=parameter,
    )


def decide_hereditary(q: Quiver) -> KoetheVerdict:
    """Per-component clause matching; Köthe overall when every component matches"""
    if q.mode is not QuiverMode.HEREDITARY:
        raise WrongModeError("decide_hereditary needs a hereditary quiver; use the radical-square-zero decider")
    return KoetheVerdict(tuple(decide_component(part) for part in components(q)))
