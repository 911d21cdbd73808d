"""
Exact rational linear algebra on sympy matrices, empty shapes included
"""

from typing import Sequence

import sympy as sp
from sympy import ImmutableMatrix


def zero_matrix(rows: int, cols: int) -> ImmutableMatrix:
    return ImmutableMatrix(sp.zeros(rows, cols))


def identity(n: int) -> ImmutableMatrix:
    return ImmutableMatrix(sp.eye(n)) if n else zero_matrix(0, 0)


def to_matrix(rows: int, cols: int, entries) -> ImmutableMatrix:
    """Rational matrix from nested rows; rows or cols may be zero"""
    if rows == 0 or cols == 0:
        return zero_matrix(rows, cols)
    return ImmutableMatrix([[sp.Rational(value) for value in row] for row in entries])


def is_zero(a: ImmutableMatrix) -> bool:
    return all(entry == 0 for entry in a)


def rank(a: ImmutableMatrix) -> int:
    if a.rows == 0 or a.cols == 0 or is_zero(a):
        return 0
    return a.rank()


def hstack(rows: int, blocks: Sequence[ImmutableMatrix]) -> ImmutableMatrix:
    blocks = [b for b in blocks if b.cols]
    if not blocks:
        return zero_matrix(rows, 0)
    return ImmutableMatrix(sp.Matrix.hstack(*blocks))


def vstack(cols: int, blocks: Sequence[ImmutableMatrix]) -> ImmutableMatrix:
    blocks = [b for b in blocks if b.rows]
    if not blocks:
        return zero_matrix(0, cols)
    return ImmutableMatrix(sp.Matrix.vstack(*blocks))


def kernel_basis(a: ImmutableMatrix) -> ImmutableMatrix:
    """Columns form the reduced-echelon basis of the null space of a"""
    if a.cols == 0:
        return zero_matrix(0, 0)
    if a.rows == 0 or is_zero(a):
        return identity(a.cols)
    vectors = a.nullspace()
    return hstack(a.cols, vectors)


def cokernel_projection(a: ImmutableMatrix) -> ImmutableMatrix:
    """Surjection q with kernel exactly the column span of a (q @ a = 0)"""
    return ImmutableMatrix(kernel_basis(a.T).T)


def column_basis(a: ImmutableMatrix) -> ImmutableMatrix:
    """Independent columns spanning the column space of a"""
    if a.cols == 0 or a.rows == 0 or is_zero(a):
        return zero_matrix(a.rows, 0)
    return hstack(a.rows, a.columnspace())


def span_contains(basis: ImmutableMatrix, vectors: ImmutableMatrix) -> bool:
    """True when every column of vectors lies in the column span of basis"""
    if vectors.cols == 0 or is_zero(vectors):
        return True
    return rank(hstack(basis.rows, [basis, vectors])) == rank(basis)
