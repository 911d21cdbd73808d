"""
Arithmetic of dimension sequences of bimodules.

A sequence (a_1, ..., a_m) of positive integers is a dimension sequence when
the two recurrences a_i x_i = x_{i-1} + x_{i+1} and a_i y_i = y_{i-1} + y_{i+1}
started at (x_0, x_1) = (-1, 0) and (y_0, y_1) = (0, 1) stay nonnegative and
end at x_m = 1, y_m = 0.  The literal recurrence never reads a_m, so arrow
labels are required to be cyclically valid: every rotation must pass.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, NamedTuple, Sequence, Tuple

from config.settings import DIMSEQ_DEFAULT_CAP
from src.utils.exceptions import (
    InvalidSequenceError,
    NonPositiveEntryError,
    TooShortError,
)

logger = logging.getLogger(__name__)


class Rank2Pair(NamedTuple):
    """Dimension vector (x, y) of an indecomposable over a rank-2 bimodule ring"""

    x: int
    y: int


@dataclass(frozen=True)
class DimSeqWitness:
    """Recurrence solution for a candidate sequence"""

    seq: Tuple[int, ...]
    x: Tuple[int, ...]
    y: Tuple[int, ...]
    valid: bool


@dataclass(frozen=True)
class SequenceClass:
    """Sequences equal up to rotation and reversal"""

    canonical: Tuple[int, ...]
    members: Tuple[Tuple[int, ...], ...]


def _check_entries(seq: Sequence[int]) -> Tuple[int, ...]:
    entries = tuple(int(a) for a in seq)
    if len(entries) < 3:
        raise TooShortError(f"dimension sequences have length >= 3, got {len(entries)}")
    if any(a < 1 for a in entries):
        raise NonPositiveEntryError(f"entries must be positive integers: {entries}")
    return entries


def validate(seq: Sequence[int]) -> DimSeqWitness:
    """Run both recurrences and report whether seq is a dimension sequence"""
    entries = _check_entries(seq)
    m = len(entries)
    x = [-1, 0]
    y = [0, 1]
    for i in range(1, m):
        a = entries[i - 1]
        x.append(a * x[i] - x[i - 1])
        y.append(a * y[i] - y[i - 1])

    nonnegative = all(v >= 0 for v in x[1:]) and all(v >= 0 for v in y[1:])
    valid = nonnegative and x[m] == 1 and y[m] == 0
    return DimSeqWitness(seq=entries, x=tuple(x), y=tuple(y), valid=valid)


def rotations(seq: Sequence[int]) -> List[Tuple[int, ...]]:
    entries = tuple(seq)
    return [entries[i:] + entries[:i] for i in range(len(entries))]


def validate_cyclic(seq: Sequence[int]) -> bool:
    """True when every rotation of seq is a dimension sequence"""
    _check_entries(seq)
    return all(validate(rotation).valid for rotation in rotations(seq))


def symmetry_orbit(seq: Sequence[int]) -> List[Tuple[int, ...]]:
    """All rotations of seq and of its reversal, without repeats"""
    entries = tuple(seq)
    orbit = rotations(entries) + rotations(entries[::-1])
    return sorted(set(orbit))


def canonical_class(seq: Sequence[int]) -> Tuple[int, ...]:
    """Lexicographically least rotation or reversed rotation"""
    if not seq:
        return ()
    return symmetry_orbit(seq)[0]


def generate(m: int, cap: int = DIMSEQ_DEFAULT_CAP) -> List[SequenceClass]:
    """Every cyclically valid dimension sequence of length m with entries <= cap.

    Cyclically valid sequences are frieze quiddities of triangulated m-gons:
    each entry is at most m - 2 and the entries sum to 3m - 6.  Both facts
    bound the depth-first search together with the sign of x and y.
    """
    if m < 3:
        raise TooShortError(f"dimension sequences have length >= 3, got {m}")
    if cap < 1:
        raise NonPositiveEntryError(f"entry cap must be positive, got {cap}")

    bound = min(cap, m - 2)
    total = 3 * m - 6
    found = set()

    def extend(prefix: Tuple[int, ...], x_prev: int, x_cur: int, y_prev: int, y_cur: int) -> None:
        position = len(prefix) + 1
        partial = sum(prefix)
        if position == m:
            for a in range(1, bound + 1):
                if partial + a > total:
                    break
                candidate = prefix + (a,)
                if validate_cyclic(candidate):
                    found.add(candidate)
            return

        for a in range(1, bound + 1):
            if partial + a + (m - position) > total:
                break
            x_next = a * x_cur - x_prev
            y_next = a * y_cur - y_prev
            if x_next < 0 or y_next < 0:
                continue
            step = position + 1
            if step < m and y_next == 0:
                continue
            if step == m and (x_next != 1 or y_next != 0):
                continue
            extend(prefix + (a,), x_cur, x_next, y_cur, y_next)

    extend((), -1, 0, 0, 1)

    grouped = {}
    for candidate in found:
        grouped.setdefault(canonical_class(candidate), []).append(candidate)

    classes = [
        SequenceClass(canonical=key, members=tuple(sorted(members)))
        for key, members in sorted(grouped.items())
    ]
    logger.debug(f"generate(m={m}, cap={cap}): {len(found)} sequences in {len(classes)} classes")
    return classes


def indec_dimvectors(seq: Sequence[int]) -> List[Rank2Pair]:
    """Dimension vectors P_0, ..., P_{m-1} of the rank-2 indecomposables"""
    witness = validate(seq)
    if not witness.valid:
        raise InvalidSequenceError(f"{witness.seq} is not a dimension sequence")

    entries = witness.seq
    m = len(entries)
    previous, current = (-1, 0), (0, 1)
    pairs = [Rank2Pair(*current)]
    for t in range(m - 1):
        d = entries[t]
        previous, current = current, (d * current[0] - previous[0], d * current[1] - previous[1])
        if current[0] < 0 or current[1] < 0:
            raise InvalidSequenceError(f"{entries}: P_{t + 1} = {current} has a negative coordinate")
        pairs.append(Rank2Pair(*current))

    d = entries[m - 1]
    closing = (d * current[0] - previous[0], d * current[1] - previous[1])
    if closing[0] >= 0 and closing[1] >= 0:
        raise InvalidSequenceError(f"{entries}: enumeration does not close, P_{m} = {closing}")
    return pairs


def koethe_shape(m: int) -> Tuple[int, ...]:
    """The sequence (m-2, 1, 2, ..., 2, 1) of length m"""
    return (m - 2, 1) + (2,) * (m - 3) + (1,)


def is_koethe_rank2(seq: Iterable[int]) -> bool:
    """True when seq is exactly (m-2, 1, 2, ..., 2, 1)"""
    entries = tuple(seq)
    if len(entries) < 3:
        return False
    return entries == koethe_shape(len(entries))
