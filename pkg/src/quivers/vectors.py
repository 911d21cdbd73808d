"""
Integer vectors indexed by quiver vertices
"""

from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

from src.utils.exceptions import UnknownVertexError


class DimVector(Mapping[str, int]):
    """Immutable map vertex -> integer; iteration follows sorted vertex names"""

    __slots__ = ("_values",)

    def __init__(self, values: Mapping[str, int]):
        self._values: Dict[str, int] = {v: int(values[v]) for v in sorted(values)}

    @classmethod
    def zero(cls, vertices: Iterable[str]) -> "DimVector":
        return cls({v: 0 for v in vertices})

    @classmethod
    def unit(cls, vertices: Iterable[str], k: str) -> "DimVector":
        vertices = list(vertices)
        if k not in vertices:
            raise UnknownVertexError(f"unknown vertex {k!r}")
        return cls({v: int(v == k) for v in vertices})

    @classmethod
    def from_sequence(cls, vertices: Sequence[str], values: Sequence[int]) -> "DimVector":
        if len(vertices) != len(values):
            raise ValueError(f"{len(values)} values for {len(vertices)} vertices")
        return cls(dict(zip(vertices, values)))

    def __getitem__(self, v: str) -> int:
        return self._values[v]

    def __iter__(self) -> Iterator[str]:
        return iter(self._values)

    def __len__(self) -> int:
        return len(self._values)

    def __hash__(self) -> int:
        return hash(tuple(self._values.items()))

    def __eq__(self, other) -> bool:
        if isinstance(other, DimVector):
            return self._values == other._values
        return Mapping.__eq__(self, other)

    def __repr__(self) -> str:
        body = ", ".join(f"{v}: {x}" for v, x in self._values.items())
        return f"DimVector({{{body}}})"

    def __add__(self, other: "DimVector") -> "DimVector":
        return DimVector({v: x + other[v] for v, x in self._values.items()})

    def __sub__(self, other: "DimVector") -> "DimVector":
        return DimVector({v: x - other[v] for v, x in self._values.items()})

    def __neg__(self) -> "DimVector":
        return DimVector({v: -x for v, x in self._values.items()})

    def scaled(self, c: int) -> "DimVector":
        return DimVector({v: c * x for v, x in self._values.items()})

    def replace(self, v: str, value: int) -> "DimVector":
        if v not in self._values:
            raise UnknownVertexError(f"unknown vertex {v!r}")
        values = dict(self._values)
        values[v] = value
        return DimVector(values)

    def as_tuple(self, order: Sequence[str] = None) -> Tuple[int, ...]:
        order = self._values if order is None else order
        return tuple(self._values[v] for v in order)

    def sort_key(self) -> Tuple[int, ...]:
        return tuple(self._values.values())

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for x in self._values.values())

    def has_negative(self) -> bool:
        return any(x < 0 for x in self._values.values())

    def is_zero(self) -> bool:
        return not any(self._values.values())

    @property
    def height(self) -> int:
        return sum(self._values.values())

    def support(self) -> Tuple[str, ...]:
        return tuple(v for v, x in self._values.items() if x)
