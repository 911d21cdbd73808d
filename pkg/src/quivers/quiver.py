"""
Valued quivers: vertices, arrows labeled by dualization sequences, and the
graph operations every other module builds on (components, sinks and
sources, admissible sink sequences, arms, orientations).
"""

import itertools
import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from src.combinatorics.dimension_sequences import validate_cyclic
from src.utils.exceptions import (
    CyclicQuiverError,
    InvalidSequenceError,
    NotASinkError,
    NotASourceError,
    NotHereditaryModeError,
    QuiverConstructionError,
    UnknownVertexError,
)

logger = logging.getLogger(__name__)

VertexId = str

# Period-2 expansions of valuation pairs inside Table C
VALUATION_SEQUENCES = {
    (1, 1): (1, 1, 1),
    (1, 2): (1, 2, 1, 2),
    (2, 1): (2, 1, 2, 1),
    (1, 3): (1, 3, 1, 3, 1, 3),
    (3, 1): (3, 1, 3, 1, 3, 1),
}


class QuiverMode(str, Enum):
    """Hereditary species or radical-square-zero (general) input"""

    HEREDITARY = "hereditary"
    GENERAL = "general"


def check_vertex_name(name: str) -> VertexId:
    if not isinstance(name, str) or not name or any(ch.isspace() for ch in name):
        raise QuiverConstructionError(f"invalid vertex name {name!r}")
    return name


@dataclass(frozen=True, eq=False)
class DualizationSequence:
    """
    Right dimensions of the iterated left duals M, M^L, M^LL, ... of a bimodule.

    entry(j) reads entries[(j + offset) mod m].  Bounded sequences must be
    cyclically valid dimension sequences; an unbounded sequence keeps the
    valuation pair (d, e) with d*e >= 4 and marks a representation-infinite arrow.
    """

    entries: Tuple[int, ...] = (1, 1, 1)
    offset: int = 0
    bounded: bool = True

    def __post_init__(self):
        entries = tuple(int(a) for a in self.entries)
        object.__setattr__(self, "entries", entries)
        if self.bounded:
            if not validate_cyclic(entries):
                raise InvalidSequenceError(f"{entries} is not a cyclically valid dimension sequence")
        elif len(entries) != 2 or any(a < 1 for a in entries):
            raise InvalidSequenceError(f"unbounded labels carry a positive valuation pair, got {entries}")
        if self.offset < 0:
            raise InvalidSequenceError(f"offset must be nonnegative, got {self.offset}")
        object.__setattr__(self, "offset", self.offset % len(entries))

    @classmethod
    def from_valuation(cls, d: int, e: int) -> "DualizationSequence":
        """Expand a valuation pair (r.dim, l.dim) to its period-2 sequence"""
        if d < 1 or e < 1:
            raise InvalidSequenceError(f"valuation entries must be positive, got ({d},{e})")
        if (d, e) in VALUATION_SEQUENCES:
            return cls(VALUATION_SEQUENCES[(d, e)])
        if d * e >= 4:
            return cls((d, e), bounded=False)
        raise InvalidSequenceError(f"valuation ({d},{e}) has no period-2 dimension sequence")

    @property
    def period(self) -> int:
        return len(self.entries)

    @property
    def coxeter_label(self) -> Optional[int]:
        """Number of rank-2 indecomposables; None for representation-infinite arrows"""
        return self.period if self.bounded else None

    def entry(self, j: int) -> int:
        return self.entries[(j + self.offset) % self.period]

    @property
    def r_dim(self) -> int:
        return self.entry(0)

    @property
    def l_dim(self) -> int:
        return self.entry(1)

    @property
    def valuation(self) -> Tuple[int, int]:
        return (self.r_dim, self.l_dim)

    @property
    def is_trivial(self) -> bool:
        return self.bounded and self.entries == (1, 1, 1)

    def effective(self) -> Tuple[int, ...]:
        """The sequence read from the current offset"""
        return tuple(self.entry(j) for j in range(self.period))

    def shifted(self, step: int = 1) -> "DualizationSequence":
        return replace(self, offset=(self.offset + step) % self.period)

    # Two labels are equal when they read the same from their offsets
    def __eq__(self, other) -> bool:
        if not isinstance(other, DualizationSequence):
            return NotImplemented
        return self.bounded == other.bounded and self.effective() == other.effective()

    def __hash__(self) -> int:
        return hash((self.bounded, self.effective()))


TRIVIAL = DualizationSequence()


@dataclass(frozen=True)
class Arrow:
    """An arrow source -> target carrying the bimodule's dualization sequence"""

    source: VertexId
    target: VertexId
    label: DualizationSequence = TRIVIAL

    @property
    def key(self) -> Tuple[VertexId, VertexId]:
        return (self.source, self.target)

    @property
    def is_loop(self) -> bool:
        return self.source == self.target

    @property
    def coxeter_label(self) -> Optional[int]:
        return self.label.coxeter_label

    @property
    def r_dim(self) -> int:
        return self.label.r_dim

    @property
    def l_dim(self) -> int:
        return self.label.l_dim

    def reversed(self, step: int) -> "Arrow":
        """The opposite arrow with its label moved step dualizations along"""
        return Arrow(self.target, self.source, self.label.shifted(step))


@dataclass(frozen=True)
class Quiver:
    """
    Finite quiver with labeled arrows.

    Hereditary mode forbids directed cycles (loops and 2-cycles included);
    general mode only forbids parallel arrows.  Arrows are stored sorted
    by (source, target) so equal quivers compare equal.
    """

    vertices: Tuple[VertexId, ...]
    arrows: Tuple[Arrow, ...] = ()
    mode: QuiverMode = QuiverMode.HEREDITARY
    _adjacency: Dict[str, Dict[VertexId, Tuple[Arrow, ...]]] = field(
        default=None, init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        vertices = tuple(check_vertex_name(v) for v in self.vertices)
        if len(set(vertices)) != len(vertices):
            raise QuiverConstructionError(f"duplicate vertex in {vertices}")
        mode = QuiverMode(self.mode)
        known = set(vertices)

        seen_ordered = set()
        seen_unordered = set()
        for arrow in self.arrows:
            for endpoint in arrow.key:
                if endpoint not in known:
                    raise UnknownVertexError(f"arrow {arrow.source}->{arrow.target} uses unknown vertex {endpoint}")
            if arrow.key in seen_ordered:
                raise QuiverConstructionError(f"parallel arrow {arrow.source}->{arrow.target}")
            seen_ordered.add(arrow.key)
            if mode is QuiverMode.HEREDITARY:
                if arrow.is_loop:
                    raise QuiverConstructionError(f"loop at {arrow.source} in hereditary mode")
                pair = frozenset(arrow.key)
                if pair in seen_unordered:
                    raise QuiverConstructionError(
                        f"arrows in both directions between {arrow.source} and {arrow.target} in hereditary mode"
                    )
                seen_unordered.add(pair)

        arrows = tuple(sorted(self.arrows, key=lambda a: a.key))
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "arrows", arrows)
        object.__setattr__(self, "mode", mode)

        outgoing = {v: [] for v in vertices}
        incoming = {v: [] for v in vertices}
        for arrow in arrows:
            outgoing[arrow.source].append(arrow)
            incoming[arrow.target].append(arrow)
        object.__setattr__(self, "_adjacency", {
            "out": {v: tuple(a) for v, a in outgoing.items()},
            "in": {v: tuple(a) for v, a in incoming.items()},
        })
        if mode is QuiverMode.HEREDITARY and self.has_directed_cycle():
            raise CyclicQuiverError(f"directed cycle {format_cycle(find_cycle(self))} in hereditary mode")

    @classmethod
    def build(
        cls,
        arrows: Iterable[Arrow],
        vertices: Iterable[VertexId] = (),
        mode: QuiverMode = QuiverMode.HEREDITARY,
    ) -> "Quiver":
        """Quiver from arrows, adding arrow endpoints after the listed vertices"""
        arrows = tuple(arrows)
        ordered = list(dict.fromkeys(vertices))
        for arrow in arrows:
            for endpoint in arrow.key:
                if endpoint not in ordered:
                    ordered.append(endpoint)
        return cls(tuple(ordered), arrows, mode)

    # Adjacency

    def _require(self, v: VertexId) -> None:
        if v not in self._adjacency["out"]:
            raise UnknownVertexError(f"unknown vertex {v!r}")

    def outgoing(self, v: VertexId) -> Tuple[Arrow, ...]:
        self._require(v)
        return self._adjacency["out"][v]

    def incoming(self, v: VertexId) -> Tuple[Arrow, ...]:
        self._require(v)
        return self._adjacency["in"][v]

    def successors(self, v: VertexId) -> List[VertexId]:
        return sorted(a.target for a in self.outgoing(v))

    def predecessors(self, v: VertexId) -> List[VertexId]:
        return sorted(a.source for a in self.incoming(v))

    def out_degree(self, v: VertexId) -> int:
        return len(self.outgoing(v))

    def in_degree(self, v: VertexId) -> int:
        return len(self.incoming(v))

    def neighbors(self, v: VertexId) -> List[VertexId]:
        return sorted(set(self.successors(v)) | set(self.predecessors(v)))

    def arrow(self, source: VertexId, target: VertexId) -> Optional[Arrow]:
        for candidate in self.outgoing(source):
            if candidate.target == target:
                return candidate
        return None

    def arrow_between(self, u: VertexId, v: VertexId) -> Optional[Arrow]:
        return self.arrow(u, v) or self.arrow(v, u)

    def sinks(self) -> FrozenSet[VertexId]:
        return frozenset(v for v in self.vertices if not self._adjacency["out"][v])

    def sources(self) -> FrozenSet[VertexId]:
        return frozenset(v for v in self.vertices if not self._adjacency["in"][v])

    # Graph views

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.vertices)
        for arrow in self.arrows:
            graph.add_edge(arrow.source, arrow.target, arrow=arrow)
        return graph

    def underlying_graph(self) -> nx.Graph:
        """Undirected graph with the Coxeter label stored as edge attribute m"""
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        for arrow in self.arrows:
            graph.add_edge(arrow.source, arrow.target, m=arrow.coxeter_label, arrow=arrow)
        return graph

    def is_connected(self) -> bool:
        return len(self.vertices) > 0 and nx.is_weakly_connected(self.to_networkx())

    def has_directed_cycle(self) -> bool:
        return not nx.is_directed_acyclic_graph(self.to_networkx())

    def is_trivially_labeled(self) -> bool:
        return all(a.label.is_trivial for a in self.arrows)

    def is_bipartite(self) -> bool:
        """Every vertex is a sink or a source"""
        return all(not self.incoming(v) or not self.outgoing(v) for v in self.vertices)

    # Constructions

    def subquiver(self, vertices: Iterable[VertexId]) -> "Quiver":
        keep = set(vertices)
        return Quiver(
            tuple(v for v in self.vertices if v in keep),
            tuple(a for a in self.arrows if a.source in keep and a.target in keep),
            self.mode,
        )

    def with_arrows(self, arrows: Iterable[Arrow]) -> "Quiver":
        return Quiver(self.vertices, tuple(arrows), self.mode)

    def reflect_at_sink(self, k: VertexId) -> "Quiver":
        """Reverse the arrows into sink k, moving their labels one dualization on"""
        if k not in self.sinks():
            raise NotASinkError(f"{k} is not a sink")
        return self.with_arrows(a.reversed(1) if a.target == k else a for a in self.arrows)

    def reflect_at_source(self, k: VertexId) -> "Quiver":
        """Reverse the arrows out of source k, moving their labels one dualization back"""
        if k not in self.sources():
            raise NotASourceError(f"{k} is not a source")
        return self.with_arrows(a.reversed(-1) if a.source == k else a for a in self.arrows)

    def opposite(self) -> "Quiver":
        """Every arrow reversed, labels kept"""
        return self.with_arrows(Arrow(a.target, a.source, a.label) for a in self.arrows)

    def rename(self, mapping: Mapping[VertexId, VertexId]) -> "Quiver":
        def new(v):
            return mapping.get(v, v)

        return Quiver(
            tuple(new(v) for v in self.vertices),
            tuple(Arrow(new(a.source), new(a.target), a.label) for a in self.arrows),
            self.mode,
        )


def sinks(q: Quiver) -> FrozenSet[VertexId]:
    return q.sinks()


def sources(q: Quiver) -> FrozenSet[VertexId]:
    return q.sources()


def components(q: Quiver) -> List[Quiver]:
    """Weakly connected components, ordered by least vertex name"""
    parts = [sorted(part) for part in nx.weakly_connected_components(q.to_networkx())]
    parts.sort(key=lambda part: part[0])
    return [q.subquiver(part) for part in parts]


def find_cycle(q: Quiver) -> List[Arrow]:
    """Arrows of one directed cycle, empty when q is acyclic"""
    graph = q.to_networkx()
    try:
        edges = nx.find_cycle(graph)
    except nx.NetworkXNoCycle:
        return []
    return [graph.edges[u, v]["arrow"] for u, v in edges]


def format_cycle(cycle: Sequence[Arrow]) -> str:
    return " -> ".join([a.source for a in cycle] + [cycle[0].source]) if cycle else ""


def admissible_sink_sequence(q: Quiver) -> List[VertexId]:
    """Reverse topological order, smallest vertex name first among current sinks"""
    graph = q.to_networkx()
    if not nx.is_directed_acyclic_graph(graph):
        raise CyclicQuiverError("quiver has a directed cycle; no admissible sequence of sinks")
    return list(nx.lexicographical_topological_sort(graph.reverse(copy=True), key=str))


def _require_tree(q: Quiver) -> nx.Graph:
    if q.mode is not QuiverMode.HEREDITARY:
        raise NotHereditaryModeError("arms and orientations are defined for hereditary quivers")
    graph = q.underlying_graph()
    if not nx.is_tree(graph):
        raise QuiverConstructionError("underlying graph is not a tree")
    return graph


def is_arm(q: Quiver, arm: Sequence[VertexId]) -> bool:
    """
    True when arm = (k, v_1, ..., v_r) spans a full type-A subquiver along
    consecutive edges and only k touches vertices outside it.
    """
    arm = list(arm)
    if not arm or len(set(arm)) != len(arm):
        return False
    if any(v not in q.vertices for v in arm):
        return False
    members = set(arm)
    path_edges = {frozenset(pair) for pair in zip(arm, arm[1:])}
    if any(q.arrow_between(u, v) is None for u, v in zip(arm, arm[1:])):
        return False
    for arrow in q.arrows:
        inside = [endpoint in members for endpoint in arrow.key]
        if all(inside):
            if arrow.is_loop or frozenset(arrow.key) not in path_edges:
                return False
        elif any(inside):
            attached = arrow.source if inside[0] else arrow.target
            if attached != arm[0]:
                return False
    return True


def arms(q: Quiver) -> List[Tuple[VertexId, ...]]:
    """Every arm (k, v_1, ..., v_r) with r >= 1 of a tree quiver"""
    graph = _require_tree(q)
    found = []
    for k in sorted(q.vertices):
        for u in sorted(graph.neighbors(k)):
            rest = graph.copy()
            rest.remove_edge(k, u)
            side = nx.node_connected_component(rest, u)
            path = [u]
            previous = k
            while True:
                step = [w for w in graph.neighbors(path[-1]) if w != previous and w in side]
                if len(step) != 1:
                    break
                previous = path[-1]
                path.append(step[0])
            if len(path) == len(side) and len(step) == 0:
                found.append(tuple([k] + path))
    return found


def orientations(q: Quiver) -> List[Quiver]:
    """All 2^(edges) orientations of a tree quiver, labels carried along"""
    _require_tree(q)
    result = []
    for flips in itertools.product((False, True), repeat=len(q.arrows)):
        result.append(q.with_arrows(
            Arrow(a.target, a.source, a.label) if flip else a
            for a, flip in zip(q.arrows, flips)
        ))
    return result
