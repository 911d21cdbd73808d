"""
Canonical quivers for the finite-type diagram families, on vertices "1".."n".

Valued edges follow the standard valuations: B_n puts (2,1,2,1) on the arrow
n-1 -> n, C_n on n -> n-1, F4 on 2 -> 3, G2 uses (1,3,1,3,1,3) and the H
families carry (3,1,2,2,1) on their terminal edge.
"""

from typing import Optional, Sequence

from src.combinatorics.dimension_sequences import koethe_shape
from src.quivers.quiver import Arrow, DualizationSequence, Quiver
from src.utils.exceptions import UnsupportedTypeError

B_EDGE = DualizationSequence((2, 1, 2, 1))
G2_EDGE = DualizationSequence((1, 3, 1, 3, 1, 3))
H_EDGE = DualizationSequence((3, 1, 2, 2, 1))


def _names(n: int):
    return [str(i) for i in range(1, n + 1)]


def _path(n: int) -> list:
    names = _names(n)
    return [Arrow(u, v) for u, v in zip(names, names[1:])]


def type_a(n: int) -> Quiver:
    if n < 1:
        raise UnsupportedTypeError(f"A_n needs n >= 1, got {n}")
    return Quiver.build(_path(n), vertices=_names(n))


def type_b(n: int) -> Quiver:
    """Linear orientation 1 -> ... -> n with (2,1,2,1) on n-1 -> n"""
    if n < 2:
        raise UnsupportedTypeError(f"B_n needs n >= 2, got {n}")
    arrows = _path(n)
    arrows[-1] = Arrow(str(n - 1), str(n), B_EDGE)
    return Quiver.build(arrows, vertices=_names(n))


def type_c(n: int) -> Quiver:
    if n < 2:
        raise UnsupportedTypeError(f"C_n needs n >= 2, got {n}")
    arrows = _path(n)
    arrows[-1] = Arrow(str(n), str(n - 1), B_EDGE)
    return Quiver.build(arrows, vertices=_names(n))


def type_d(n: int) -> Quiver:
    """Path 1 - ... - n-2 with leaves n-1 and n on the branch vertex n-2"""
    if n < 4:
        raise UnsupportedTypeError(f"D_n needs n >= 4, got {n}")
    arrows = _path(n - 1) + [Arrow(str(n - 2), str(n))]
    return Quiver.build(arrows, vertices=_names(n))


def type_e(n: int) -> Quiver:
    """Path 1 - ... - n-1 with the short leaf n attached to 3"""
    if n not in (6, 7, 8):
        raise UnsupportedTypeError(f"E_n exists for n in 6..8, got {n}")
    arrows = _path(n - 1) + [Arrow("3", str(n))]
    return Quiver.build(arrows, vertices=_names(n))


def type_f4() -> Quiver:
    return Quiver.build(
        [Arrow("1", "2"), Arrow("2", "3", B_EDGE), Arrow("3", "4")],
        vertices=_names(4),
    )


def type_g2(sequence: Optional[Sequence[int]] = None) -> Quiver:
    label = G2_EDGE if sequence is None else DualizationSequence(tuple(sequence))
    return Quiver.build([Arrow("1", "2", label)])


def type_h(n: int) -> Quiver:
    if n not in (3, 4):
        raise UnsupportedTypeError(f"H_n exists for n in 3..4, got {n}")
    arrows = _path(n)
    arrows[-1] = Arrow(str(n - 1), str(n), H_EDGE)
    return Quiver.build(arrows, vertices=_names(n))


def type_i2(p: int, sequence: Optional[Sequence[int]] = None) -> Quiver:
    if p < 5 or p == 6:
        raise UnsupportedTypeError(f"I2(p) needs p = 5 or p >= 7, got {p}")
    label = DualizationSequence(tuple(sequence) if sequence else koethe_shape(p))
    return Quiver.build([Arrow("1", "2", label)])


def koethe_e7() -> Quiver:
    """The single Köthe orientation of E7: 6 -> 5 -> 4 -> 3, 3 -> 2 -> 1, 3 -> 7"""
    return Quiver.build(
        [
            Arrow("6", "5"), Arrow("5", "4"), Arrow("4", "3"),
            Arrow("3", "2"), Arrow("2", "1"), Arrow("3", "7"),
        ],
        vertices=_names(7),
    )


BUILDERS = {
    "A": type_a,
    "B": type_b,
    "C": type_c,
    "D": type_d,
}


def canonical_quiver(family: str, n: Optional[int] = None) -> Quiver:
    """Catalog lookup: 'A'..'D' with n, or E6, E7, E8, F4, G2, H3, H4"""
    family = family.upper()
    if family in BUILDERS:
        return BUILDERS[family](n)
    if family in ("E6", "E7", "E8"):
        return type_e(int(family[1]))
    if family in ("H3", "H4"):
        return type_h(int(family[1]))
    if family == "F4":
        return type_f4()
    if family == "G2":
        return type_g2()
    raise UnsupportedTypeError(f"no canonical quiver for {family}")
