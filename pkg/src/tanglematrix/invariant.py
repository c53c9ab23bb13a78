"""The matrix invariant F^n of an n-punctured ball tangle.

Column k fills hole j with the vertical-arc tangle when coordinate j of
the k-th tuple of J(n) is 1 and with the horizontal-arc tangle when it
is 2.  Row 1 is the numerator closure, row 2 the denominator closure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bracket import bracket
from .combinatorics import t_sequence, tuples
from .cyclotomic import zphi_mul_power
from .diagram import TangleDiagram, close_filled
from .errors import ArityError, GuardExceeded, PhaseIncoherent

__all__ = ["PMatrix", "canonicalize", "compute_F", "closure_brackets", "MAX_HOLES"]

MAX_HOLES = 5


@dataclass(frozen=True)
class PMatrix:
    """A 2 x 2^n integer matrix up to sign, stored in canonical form.

    The first nonzero entry in row-major order is positive.
    """

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        if len(rows) != 2 or len(rows[0]) != len(rows[1]):
            raise ArityError("a PMatrix has two rows of equal length")
        w = len(rows[0])
        if w == 0 or w & (w - 1):
            raise ArityError(f"width {w} is not a power of two")
        for v in rows[0] + rows[1]:
            if v:
                if v < 0:
                    rows = tuple(tuple(-x for x in r) for r in rows)
                break
        object.__setattr__(self, "rows", rows)

    @property
    def width(self):
        return len(self.rows[0])

    @property
    def holes(self):
        return self.width.bit_length() - 1

    def entries(self):
        return self.rows[0] + self.rows[1]

    def is_zero(self):
        return not any(self.entries())

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def tolist(self):
        return [list(r) for r in self.rows]

    def __str__(self):
        if self.width == 1:
            return f"[{self.rows[0][0]};{self.rows[1][0]}]"
        return "[" + ",".join("[" + ",".join(map(str, r)) + "]" for r in self.rows) + "]"

    @classmethod
    def vector(cls, p, q):
        return cls(((p,), (q,)))

    @classmethod
    def square(cls, alpha, gamma, beta, delta):
        """[[alpha, gamma], [beta, delta]], the layout used for spherical tangles."""
        return cls(((alpha, gamma), (beta, delta)))


def canonicalize(m) -> PMatrix:
    return PMatrix(tuple(tuple(r) for r in m))


def closure_brackets(d: TangleDiagram):
    """Raw brackets <T_{r, alpha_k}> as ZPhi, rows by closure kind."""
    n = len(d.holes)
    out = []
    for kind in ("numerator", "denominator"):
        out.append([bracket(close_filled(d, kind, alpha)) for alpha in tuples((2,) * n)])
    return out


def compute_F(d: TangleDiagram) -> PMatrix:
    n = len(d.holes)
    if n > MAX_HOLES:
        raise GuardExceeded(f"{n} holes exceed the limit of {MAX_HOLES}")
    if d.outer != 4 or any(m != 4 for m in d.holes):
        raise ArityError("F needs 4 outer points and 4-point holes")
    raw = closure_brackets(d)
    ts = t_sequence(n)
    scaled = [
        [zphi_mul_power(z, -2 * t + 2 * r) for z, t in zip(row, ts)]
        for r, row in enumerate(raw)
    ]
    flat = scaled[0] + scaled[1]
    first = next((z for z in flat if z.magnitude), None)
    shift = -first.phase if first is not None else 0
    ints = []
    for z in flat:
        w = zphi_mul_power(z, shift)
        if w.phase != 0:
            raise PhaseIncoherent(f"entry {z} is not a real multiple of the common unit")
        ints.append(w.magnitude)
    w = 1 << n
    return PMatrix((tuple(ints[:w]), tuple(ints[w:])))
