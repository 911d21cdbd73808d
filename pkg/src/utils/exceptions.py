"""
Error hierarchy for quiver, reflection, root and representation computations
"""

from typing import Optional


class QuiverError(ValueError):
    """Base class for every error raised by the library"""


class QuiverConstructionError(QuiverError):
    """Raised when vertices or arrows violate the quiver invariants"""


class UnknownVertexError(QuiverError):
    """Raised when an operation names a vertex the quiver does not have"""


class CyclicQuiverError(QuiverError):
    """Raised when an acyclic quiver is required but a directed cycle exists"""


class NotHereditaryModeError(QuiverError):
    """Raised when an operation needs a hereditary-mode quiver"""


class WrongModeError(QuiverError):
    """Raised when a decider receives a quiver in the wrong mode"""


class NotASinkError(QuiverError):
    """Raised when a sink reflection is attempted at a non-sink"""


class NotASourceError(QuiverError):
    """Raised when a source reflection is attempted at a non-source"""


class CapExceededError(QuiverError):
    """Raised when an iteration cap is hit before a fixpoint"""


class NotRepresentationFiniteError(QuiverError):
    """Raised when enumeration is asked for a representation-infinite quiver"""


class NotSymmetrizableError(QuiverError):
    """Raised when the valuation constraints admit no symmetrizer"""


class NotDynkinError(QuiverError):
    """Raised when the bilinear form is not positive definite"""


class DegenerateVertexError(QuiverError):
    """Raised when B(e_k, e_k) vanishes"""


class UnsupportedTypeError(QuiverError):
    """Raised for diagram families without a closed-form root list"""


class NotSimplyLacedError(QuiverError):
    """Raised when a matrix representation is requested over non-trivial labels"""


class IncompatibleSubrepError(QuiverError):
    """Raised when subspaces are not closed under the arrow maps"""


class NotAnArmError(QuiverError):
    """Raised when a vertex path is not an arm of the quiver"""


class RepresentationShapeError(QuiverError):
    """Raised when a matrix shape disagrees with the endpoint dimensions"""


class InvalidSequenceError(QuiverError):
    """Raised when an integer sequence is not a dimension sequence"""


class TooShortError(InvalidSequenceError):
    """Raised for sequences of length below 3"""


class NonPositiveEntryError(InvalidSequenceError):
    """Raised for sequences with an entry below 1"""


class ParseError(QuiverError):
    """Raised for malformed quiver descriptions"""

    def __init__(self, line: Optional[int], message: str):
        self.line = line
        self.message = message
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


class InvalidLabelError(ParseError):
    """Raised when an arrow label is not a cyclically valid dimension sequence"""


class UsageError(QuiverError):
    """Raised for malformed command-line arguments"""
