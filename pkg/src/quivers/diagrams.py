"""
Recognition of the Coxeter diagram families of connected valued quivers
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

import networkx as nx

from src.quivers.quiver import Quiver, QuiverMode, VertexId
from src.utils.exceptions import NotHereditaryModeError, QuiverConstructionError

logger = logging.getLogger(__name__)


class DiagramFamily(str, Enum):
    A = "A"
    B = "B"
    D = "D"
    E6 = "E6"
    E7 = "E7"
    E8 = "E8"
    F4 = "F4"
    G2 = "G2"
    H3 = "H3"
    H4 = "H4"
    I2 = "I2"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class DiagramType:
    """A Coxeter diagram; rank is set for A, B, D and p for I2(p)"""

    family: DiagramFamily
    rank: Optional[int] = None
    p: Optional[int] = None

    def __str__(self) -> str:
        if self.family in (DiagramFamily.A, DiagramFamily.B, DiagramFamily.D):
            return f"{self.family.value}{self.rank}"
        if self.family is DiagramFamily.I2:
            return f"I2({self.p})"
        return self.family.value

    @property
    def is_finite(self) -> bool:
        return self.family is not DiagramFamily.UNKNOWN

    @property
    def is_simply_laced(self) -> bool:
        return self.family in (
            DiagramFamily.A, DiagramFamily.D,
            DiagramFamily.E6, DiagramFamily.E7, DiagramFamily.E8,
        )


UNKNOWN = DiagramType(DiagramFamily.UNKNOWN)

EXCEPTIONAL_ARMS = {
    (1, 2, 2): DiagramFamily.E6,
    (1, 2, 3): DiagramFamily.E7,
    (1, 2, 4): DiagramFamily.E8,
}


def path_order(q: Quiver) -> List[VertexId]:
    """Vertices of a path-shaped quiver from its smaller-named end"""
    graph = q.underlying_graph()
    if len(q.vertices) == 1:
        return list(q.vertices)
    ends = sorted(v for v, degree in graph.degree() if degree == 1)
    if len(ends) != 2 or not nx.is_tree(graph):
        raise QuiverConstructionError("underlying graph is not a path")
    order = [ends[0]]
    previous = None
    while len(order) < len(q.vertices):
        step = [w for w in graph.neighbors(order[-1]) if w != previous]
        previous = order[-1]
        order.append(step[0])
    return order


def branch_arms(q: Quiver) -> Tuple[VertexId, List[List[VertexId]]]:
    """
    Branch vertex of a tree with exactly one degree-3 vertex, and its three
    arms listed outward from the branch, shortest first (ties by vertex name).
    """
    graph = q.underlying_graph()
    branches = [v for v, degree in graph.degree() if degree == 3]
    if len(branches) != 1 or not nx.is_tree(graph) or max(d for _, d in graph.degree()) > 3:
        raise QuiverConstructionError("quiver is not a tree with a single branch vertex")
    branch = branches[0]
    arm_list = []
    for start in graph.neighbors(branch):
        arm = [start]
        previous = branch
        while True:
            step = [w for w in graph.neighbors(arm[-1]) if w != previous]
            if not step:
                break
            previous = arm[-1]
            arm.append(step[0])
        arm_list.append(arm)
    arm_list.sort(key=lambda arm: (len(arm), arm))
    return branch, arm_list


def _classify_path(q: Quiver) -> DiagramType:
    order = path_order(q)
    n = len(order)
    labels = [q.arrow_between(u, v).coxeter_label for u, v in zip(order, order[1:])]
    heavy = [(i, m) for i, m in enumerate(labels) if m > 3]
    if not heavy:
        return DiagramType(DiagramFamily.A, rank=n)
    if len(heavy) > 1:
        return UNKNOWN

    index, m = heavy[0]
    if n == 2:
        if m == 4:
            return DiagramType(DiagramFamily.B, rank=2)
        if m == 6:
            return DiagramType(DiagramFamily.G2)
        return DiagramType(DiagramFamily.I2, p=m)

    terminal = index in (0, n - 2)
    if m == 4:
        if terminal:
            return DiagramType(DiagramFamily.B, rank=n)
        if n == 4:
            return DiagramType(DiagramFamily.F4)
    if m == 5 and terminal:
        if n == 3:
            return DiagramType(DiagramFamily.H3)
        if n == 4:
            return DiagramType(DiagramFamily.H4)
    return UNKNOWN


def classify(q: Quiver) -> DiagramType:
    """Match the underlying Coxeter valued graph against the finite-type catalog"""
    if q.mode is not QuiverMode.HEREDITARY:
        raise NotHereditaryModeError("classification needs a hereditary quiver")
    if not q.is_connected():
        raise QuiverConstructionError("classification needs a connected quiver")

    n = len(q.vertices)
    if n == 1:
        return DiagramType(DiagramFamily.A, rank=1)
    if any(a.coxeter_label is None for a in q.arrows):
        return UNKNOWN
    graph = q.underlying_graph()
    if not nx.is_tree(graph):
        return UNKNOWN

    degrees = [degree for _, degree in graph.degree()]
    if max(degrees) > 3:
        return UNKNOWN
    branch_count = degrees.count(3)
    if branch_count == 0:
        return _classify_path(q)
    if branch_count > 1 or any(a.coxeter_label > 3 for a in q.arrows):
        return UNKNOWN

    _, arm_list = branch_arms(q)
    lengths = tuple(len(arm) for arm in arm_list)
    if lengths[:2] == (1, 1):
        return DiagramType(DiagramFamily.D, rank=n)
    if lengths in EXCEPTIONAL_ARMS:
        return DiagramType(EXCEPTIONAL_ARMS[lengths])
    return UNKNOWN
