"""
Root systems of symmetrizable valued quivers.

The valuation of an arrow i -> j is (d_ij, d_ji) = (r.dim, l.dim).  A
symmetrizer f solves d_ij f_j = d_ji f_i, and

    B(x, y) = sum_i f_i x_i y_i - 1/2 sum_{i -> j} (d_ij f_j x_i y_j + d_ji f_i x_j y_i)

is then symmetric.  Positive roots are the nonnegative part of the Weyl
orbit of the simple roots.
"""

import logging
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterator, List, Tuple

from config.settings import ROOT_ORBIT_CAP
from src.quivers.diagrams import DiagramFamily, classify
from src.quivers.quiver import Quiver, QuiverMode, VertexId
from src.quivers.vectors import DimVector
from src.utils.exceptions import (
    CapExceededError,
    DegenerateVertexError,
    NotDynkinError,
    NotHereditaryModeError,
    NotSymmetrizableError,
    QuiverConstructionError,
    UnsupportedTypeError,
)

logger = logging.getLogger(__name__)

Symmetrizer = DimVector

DYNKIN_FAMILIES = {
    DiagramFamily.A, DiagramFamily.B, DiagramFamily.D,
    DiagramFamily.E6, DiagramFamily.E7, DiagramFamily.E8,
    DiagramFamily.F4, DiagramFamily.G2,
}

# Valuation product d_ij * d_ji of a positive-definite edge, by Coxeter label
VALUATION_PRODUCTS = {3: 1, 4: 2, 6: 3}


@dataclass(frozen=True)
class RootSet:
    """Positive roots sorted lexicographically in sorted-vertex coordinates"""

    roots: Tuple[DimVector, ...]

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self) -> Iterator[DimVector]:
        return iter(self.roots)

    def __contains__(self, x) -> bool:
        return x in self.roots

    def as_set(self) -> frozenset:
        return frozenset(self.roots)


def _root_set(vectors) -> RootSet:
    return RootSet(tuple(sorted(set(vectors), key=DimVector.sort_key)))


def symmetrizer(q: Quiver) -> Symmetrizer:
    """Least positive integer solution of d_ij f_j = d_ji f_i"""
    if q.mode is not QuiverMode.HEREDITARY:
        raise NotHereditaryModeError("symmetrizers are defined for hereditary quivers")
    if not q.is_connected():
        raise QuiverConstructionError("symmetrizer needs a connected quiver")

    start = sorted(q.vertices)[0]
    values: Dict[VertexId, Fraction] = {start: Fraction(1)}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for arrow in q.outgoing(u) + q.incoming(u):
            d_ij, d_ji = arrow.r_dim, arrow.l_dim
            if arrow.source == u:
                other, value = arrow.target, Fraction(d_ji) * values[u] / d_ij
            else:
                other, value = arrow.source, Fraction(d_ij) * values[u] / d_ji
            if other in values:
                if values[other] != value:
                    raise NotSymmetrizableError(
                        f"valuations around {arrow.source}->{arrow.target} admit no symmetrizer"
                    )
            else:
                values[other] = value
                queue.append(other)

    scale = math.lcm(*(value.denominator for value in values.values()))
    integers = {v: int(value * scale) for v, value in values.items()}
    common = math.gcd(*integers.values())
    return DimVector({v: value // common for v, value in integers.items()})


def bilinear(q: Quiver, f: Symmetrizer, x: DimVector, y: DimVector) -> Fraction:
    total = Fraction(sum(f[v] * x[v] * y[v] for v in q.vertices))
    adjacency = Fraction(0)
    for arrow in q.arrows:
        i, j = arrow.key
        adjacency += arrow.r_dim * f[j] * x[i] * y[j]
        adjacency += arrow.l_dim * f[i] * x[j] * y[i]
    return total - adjacency / 2


def weyl_reflect(q: Quiver, f: Symmetrizer, k: VertexId, x: DimVector) -> DimVector:
    """s_k x = x - (2 B(x, e_k) / B(e_k, e_k)) e_k"""
    e_k = DimVector.unit(q.vertices, k)
    norm = bilinear(q, f, e_k, e_k)
    if norm == 0:
        raise DegenerateVertexError(f"B(e_{k}, e_{k}) = 0")
    coefficient = 2 * bilinear(q, f, x, e_k) / norm
    if coefficient.denominator != 1:
        raise NotSymmetrizableError(f"reflection at {k} is not integral on {dict(x)}")
    return x.replace(k, x[k] - int(coefficient))


def _require_dynkin(q: Quiver) -> None:
    diagram = classify(q)
    if diagram.family not in DYNKIN_FAMILIES:
        raise NotDynkinError(f"diagram {diagram} has no positive-definite form")
    for arrow in q.arrows:
        expected = VALUATION_PRODUCTS.get(arrow.coxeter_label)
        if expected is None or arrow.r_dim * arrow.l_dim != expected:
            raise NotDynkinError(
                f"arrow {arrow.source}->{arrow.target} with valuation {arrow.label.valuation} "
                f"and label {arrow.coxeter_label} is outside the Dynkin valuations"
            )


def positive_roots(q: Quiver, cap: int = ROOT_ORBIT_CAP) -> RootSet:
    """Nonnegative part of the Weyl orbit of the simple roots"""
    _require_dynkin(q)
    f = symmetrizer(q)
    simple = [DimVector.unit(q.vertices, v) for v in q.vertices]
    seen = set(simple)
    frontier = deque(simple)
    while frontier:
        root = frontier.popleft()
        for k in q.vertices:
            image = weyl_reflect(q, f, k, root)
            if image.has_negative() or image.is_zero() or image in seen:
                continue
            seen.add(image)
            if len(seen) > cap:
                raise CapExceededError(f"root orbit exceeded {cap} vectors")
            frontier.append(image)
    logger.debug(f"{len(seen)} positive roots on {len(q.vertices)} vertices")
    return _root_set(seen)


def highest_root(roots: RootSet) -> DimVector:
    return max(roots, key=lambda r: (r.height, r.sort_key()))


def _interval(n: int, start: int, stop: int, weight: int = 1) -> List[int]:
    """weight on coordinates start..stop-1 (1-based), zero elsewhere"""
    return [weight if start <= k < stop else 0 for k in range(1, n + 1)]


def _add(*vectors: List[int]) -> Tuple[int, ...]:
    return tuple(sum(values) for values in zip(*vectors))


def _a_family(n: int) -> List[Tuple[int, ...]]:
    return [_add(_interval(n, i, j)) for i, j in combinations(range(1, n + 2), 2)]


def _b_family(n: int) -> List[Tuple[int, ...]]:
    roots = [_add(_interval(n, i, n + 1)) for i in range(1, n + 1)]
    for i, j in combinations(range(1, n + 1), 2):
        roots.append(_add(_interval(n, i, j)))
        roots.append(_add(_interval(n, i, j), _interval(n, j, n + 1, 2)))
    return roots


def _c_family(n: int) -> List[Tuple[int, ...]]:
    last = _interval(n, n, n + 1)
    roots = [_add(_interval(n, i, j)) for i, j in combinations(range(1, n + 1), 2)]
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            roots.append(_add(_interval(n, i, j), _interval(n, j, n, 2), last))
    return roots


def _d_family(n: int) -> List[Tuple[int, ...]]:
    leaf_a = _interval(n, n - 1, n)
    leaf_b = _interval(n, n, n + 1)
    roots = []
    for i in range(1, n):
        for k in range(i, n):
            roots.append(_add(_interval(n, i, k + 1)))
    for i in range(1, n - 2):
        for k in range(i, n - 2):
            roots.append(_add(_interval(n, i, k + 1), _interval(n, k + 1, n - 1, 2), leaf_a, leaf_b))
    for i in range(1, n):
        roots.append(_add(_interval(n, i, n - 1), leaf_b))
    for i in range(1, n - 1):
        roots.append(_add(_interval(n, i, n - 1), leaf_a, leaf_b))
    return roots


CLOSED_FORMS = {
    "A": (_a_family, 1),
    "B": (_b_family, 2),
    "C": (_c_family, 2),
    "D": (_d_family, 4),
}


def closed_form_roots(family: str, n: int) -> RootSet:
    """
    Explicit positive-root lists for A_n, B_n, C_n and D_n on vertices
    "1".."n", labeled as in src.quivers.catalog.
    """
    family = family.upper()
    if family not in CLOSED_FORMS:
        raise UnsupportedTypeError(f"no closed-form root list for {family}")
    builder, least = CLOSED_FORMS[family]
    if n < least:
        raise UnsupportedTypeError(f"{family}_n needs n >= {least}, got {n}")
    names = [str(i) for i in range(1, n + 1)]
    return _root_set(DimVector.from_sequence(names, values) for values in builder(n))
