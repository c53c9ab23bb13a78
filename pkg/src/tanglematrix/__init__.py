"""Exact tangle invariants from the Kauffman bracket at A = exp(i*pi/4)."""

from .bracket import bracket
from .errors import TangleError
from .expr import elaborate, parse_expr
from .invariant import PMatrix, compute_F

__version__ = "0.1.0"

__all__ = ["bracket", "compute_F", "elaborate", "parse_expr", "PMatrix", "TangleError"]
