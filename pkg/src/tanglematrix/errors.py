"""Exception types shared across the package."""

__all__ = [
    "TangleError",
    "ParseError",
    "ArityError",
    "GuardExceeded",
    "CoherenceError",
    "NotMonomial",
    "PhaseIncoherent",
]


class TangleError(Exception):
    """Base class for every error raised by tanglematrix."""


class ParseError(TangleError):
    """Malformed expression, matrix or diagram file.

    ``pos`` is the 0-based character offset of the failure when known.
    """

    def __init__(self, message, pos=None):
        self.pos = pos
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)


class ArityError(TangleError):
    """Operands have the wrong number of holes or boundary points."""


class GuardExceeded(TangleError):
    """A size guard (crossings, holes, matrix width) was hit."""


class CoherenceError(TangleError):
    """A result contradicts a structural guarantee of the theory."""


class NotMonomial(CoherenceError):
    """A cyclotomic integer is not of the form p*A^k."""


class PhaseIncoherent(CoherenceError):
    """No single unit makes every closure bracket integral."""
