"""Exact arithmetic in Z[A]/(A^4 + 1), with A = exp(i*pi/4).

Elements are stored as four integer coefficients of 1, A, A^2, A^3.
Python integers are unbounded, so nothing can wrap around silently.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotMonomial

__all__ = [
    "CycInt",
    "ZPhi",
    "ZERO",
    "ONE",
    "A",
    "cyc_add",
    "cyc_mul",
    "monomial",
    "to_zphi",
    "zphi_mul_power",
]


@dataclass(frozen=True)
class CycInt:
    """c0 + c1*A + c2*A^2 + c3*A^3 with A^4 = -1."""

    c0: int = 0
    c1: int = 0
    c2: int = 0
    c3: int = 0

    @property
    def coeffs(self):
        return (self.c0, self.c1, self.c2, self.c3)

    def __add__(self, other):
        return cyc_add(self, other)

    def __sub__(self, other):
        return cyc_add(self, -other)

    def __neg__(self):
        return CycInt(-self.c0, -self.c1, -self.c2, -self.c3)

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(*(c * other for c in self.coeffs))
        return cyc_mul(self, other)

    __rmul__ = __mul__

    def is_zero(self):
        return not any(self.coeffs)

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*A^{k}")
        return " + ".join(terms) if terms else "0"


ZERO = CycInt()
ONE = CycInt(1)
A = CycInt(0, 1)


def cyc_add(a: CycInt, b: CycInt) -> CycInt:
    return CycInt(a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2, a.c3 + b.c3)


def cyc_mul(a: CycInt, b: CycInt) -> CycInt:
    out = [0, 0, 0, 0]
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j, y in enumerate(b.coeffs):
            if not y:
                continue
            k = i + j
            if k >= 4:
                out[k - 4] -= x * y
            else:
                out[k] += x * y
    return CycInt(*out)


def monomial(p: int, e: int) -> CycInt:
    """Return p*A^e for any integer exponent e."""
    e %= 8
    if e >= 4:
        p, e = -p, e - 4
    coeffs = [0, 0, 0, 0]
    coeffs[e] = p
    return CycInt(*coeffs)


@dataclass(frozen=True)
class ZPhi:
    """The value ``magnitude * A**phase`` with phase in 0..3.

    Zero is always stored as (0, 0), so equality is structural.
    """

    magnitude: int
    phase: int = 0

    def __post_init__(self):
        if not 0 <= self.phase <= 3:
            raise ValueError(f"phase must be in 0..3, got {self.phase}")
        if self.magnitude == 0 and self.phase != 0:
            raise ValueError("zero must carry phase 0")

    @classmethod
    def of(cls, p: int, e: int) -> "ZPhi":
        """Normalize p*A^e for an arbitrary exponent."""
        if p == 0:
            return cls(0, 0)
        e %= 8
        if e >= 4:
            return cls(-p, e - 4)
        return cls(p, e)

    def __abs__(self):
        return abs(self.magnitude)

    def __mul__(self, other):
        return ZPhi.of(self.magnitude * other.magnitude, self.phase + other.phase)

    def to_cyc(self) -> CycInt:
        return monomial(self.magnitude, self.phase)

    def __str__(self):
        return f"{self.magnitude}*A^{self.phase}"


def to_zphi(a: CycInt) -> ZPhi:
    """Write ``a`` as p*A^k, or raise NotMonomial."""
    nonzero = [k for k, c in enumerate(a.coeffs) if c]
    if not nonzero:
        return ZPhi(0, 0)
    if len(nonzero) > 1:
        raise NotMonomial(f"{a} has {len(nonzero)} nonzero coefficients")
    k = nonzero[0]
    return ZPhi(a.coeffs[k], k)


def zphi_mul_power(z: ZPhi, e: int) -> ZPhi:
    """Multiply by A^e."""
    return ZPhi.of(z.magnitude, z.phase + e)
