"""Algebra of the invariant: composition, connect sums, elementary
operations and the determinant obstructions.

Everything here works on :class:`PMatrix` values only; no diagram is
built.  :func:`evaluate` runs a whole expression through these formulas
and is the second route that the diagram state sum is checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd, isqrt, prod

from .combinatorics import eta, t_sequence, xi
from .errors import ArityError
from .expr import parse_expr
from .invariant import PMatrix

__all__ = [
    "matmul",
    "compose_fill",
    "compose",
    "hsum",
    "vsum",
    "sphere_ball_sums",
    "elementary_op",
    "mirror_n",
    "rot_n",
    "det",
    "Mod4Verdict",
    "det_mod4_class",
    "KrebesVerdict",
    "krebes_check",
    "j_formula",
    "separating_probe",
    "evaluate",
    "IDENTITY",
    "congruence_signs",
]

IDENTITY = PMatrix.square(1, 0, 0, 1)


def matmul(a, b):
    """Plain integer product of nested lists."""
    if len(a[0]) != len(b):
        raise ArityError(f"cannot multiply {len(a)}x{len(a[0])} by {len(b)}x{len(b[0])}")
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def compose_fill(Fh: PMatrix, parts) -> PMatrix:
    """Invariant of a head with its holes filled by tangles with invariants ``parts``."""
    parts = list(parts)
    if len(parts) != Fh.holes:
        raise ArityError(f"head has {Fh.holes} holes but {len(parts)} parts were given")
    return PMatrix(matmul(Fh.tolist(), eta([p.tolist() for p in parts])))


def compose(s2: PMatrix, s1: PMatrix) -> PMatrix:
    """F(s2 o s1) = F(s2) F(s1)."""
    return compose_fill(s2, [s1])


def _connect(a: PMatrix, b: PMatrix, vertical: bool) -> PMatrix:
    top, bottom = [], []
    for i in range(a.width):
        a1, a2 = a[0, i], a[1, i]
        for j in range(b.width):
            b1, b2 = b[0, j], b[1, j]
            if vertical:
                top.append(a1 * b1)
                bottom.append(a2 * b1 + a1 * b2)
            else:
                top.append(a1 * b2 + a2 * b1)
                bottom.append(a2 * b2)
    return PMatrix((top, bottom))


def hsum(a: PMatrix, b: PMatrix) -> PMatrix:
    return _connect(a, b, vertical=False)


def vsum(a: PMatrix, b: PMatrix) -> PMatrix:
    return _connect(a, b, vertical=True)


def _abgd(S: PMatrix):
    if S.width != 2:
        raise ArityError("expected a spherical (2x2) matrix")
    (alpha, gamma), (beta, delta) = S.rows
    return alpha, beta, gamma, delta


def sphere_ball_sums(v: PMatrix, S: PMatrix, kind: str) -> PMatrix:
    """Ball tangle [p;q] summed with a spherical tangle.

    ``kind`` is one of "outer_h", "outer_v", "inner_h", "inner_v".
    """
    if v.width != 1:
        raise ArityError("expected a ball tangle vector")
    p, q = v[0, 0], v[1, 0]
    al, be, ga, de = _abgd(S)
    if kind == "outer_h":
        return PMatrix.square(p * be + q * al, p * de + q * ga, q * be, q * de)
    if kind == "outer_v":
        return PMatrix.square(p * al, p * ga, q * al + p * be, q * ga + p * de)
    if kind == "inner_h":
        return PMatrix.square(q * al, p * al + q * ga, q * be, p * be + q * de)
    if kind == "inner_v":
        return PMatrix.square(q * ga + p * al, p * ga, q * de + p * be, p * de)
    raise ArityError(f"unknown sum kind {kind!r}")


def elementary_op(S: PMatrix, op: str) -> PMatrix:
    """Closed forms for Star, Minus, R1, R2 and R on spherical matrices."""
    al, be, ga, de = _abgd(S)
    key = op.lower()
    if key in ("star", "mirror", "*"):
        return PMatrix.square(al, -ga, -be, de)
    if key in ("minus", "swap", "-"):
        return PMatrix.square(de, ga, be, al)
    if key == "r1":
        return PMatrix.square(-ga, al, -de, be)
    if key == "r2":
        return PMatrix.square(-be, -de, al, ga)
    if key in ("r", "rot"):
        return PMatrix.square(de, -be, -ga, al)
    raise ArityError(f"unknown elementary operation {op!r}")


def mirror_n(F: PMatrix) -> PMatrix:
    """Mirror image for any number of holes: entry (r,k) gets (-1)^(t_k + r)."""
    ts = t_sequence(F.holes)
    return PMatrix(
        [[v * (-1) ** (t + r) for v, t in zip(F.rows[r], ts)] for r in range(2)]
    )


_R = [[0, 1], [-1, 0]]
_R_INV = [[0, -1], [1, 0]]


def rot_n(F: PMatrix) -> PMatrix:
    """Quarter turn for any number of holes: R F (R^-1 tensor ... tensor R^-1)."""
    right = eta([_R_INV] * F.holes)
    return PMatrix(matmul(matmul(_R, F.tolist()), right))


def det(S: PMatrix) -> int:
    al, be, ga, de = _abgd(S)
    return al * de - be * ga


@dataclass(frozen=True)
class Mod4Verdict:
    det: int
    cls: int
    obstructed: bool
    square: bool

    def __str__(self):
        tail = " OBSTRUCTED" if self.obstructed else ""
        return f"det={self.det} mod4={self.cls}{tail}"


def det_mod4_class(S: PMatrix) -> Mod4Verdict:
    """det F mod 4; classes 2 and 3 cannot come from a spherical tangle."""
    d = det(S)
    cls = d % 4
    return Mod4Verdict(d, cls, cls in (2, 3), d >= 0 and isqrt(d) ** 2 == d)


@dataclass(frozen=True)
class KrebesVerdict:
    product: int
    magnitude: int
    ok: bool

    def __bool__(self):
        return self.ok

    def __str__(self):
        word = "PASS" if self.ok else "FAIL"
        return f"prod gcd={self.product} |<L>|={self.magnitude} {word}"


def krebes_check(gcds, magnitude: int) -> KrebesVerdict:
    """Does the product of gcd(p_i, q_i) divide the bracket magnitude?

    gcd(0, 0) is 0, and 0 divides only 0.
    """
    if magnitude < 0:
        raise ValueError("magnitude must be nonnegative")
    g = prod(gcd(p, q) for p, q in gcds)
    ok = magnitude == 0 if g == 0 else magnitude % g == 0
    return KrebesVerdict(g, magnitude, ok)


def j_formula(p1: int, p2: int, p3: int, p4: int) -> PMatrix:
    """Invariant of the twist-box spherical tangle J(p1, p2, p3, p4)."""
    return PMatrix.square(
        p1 * p2 * p3 + p1 * p2 * p4 + p1 * p3 * p4 + p2 * p3 * p4,
        -p1 * p3 - p1 * p4 - p2 * p3 - p2 * p4,
        p1 * p2 + p1 * p4 + p3 * p2 + p3 * p4,
        -p1 - p2 - p3 - p4,
    )


_PROBES = ((1, 0), (0, 1), (1, 1))


def separating_probe(a: PMatrix, b: PMatrix):
    """A tuple of vectors from {e1, e2, (1,1)} on which ``a`` and ``b`` differ.

    Returns None when the two classes are equal.
    """
    if a.width != b.width:
        raise ArityError("matrices differ in width")
    if a == b:
        return None
    for vecs in product(_PROBES, repeat=a.holes):
        x = [[v] for v in xi(vecs)]
        if PMatrix(matmul(a.tolist(), x)) != PMatrix(matmul(b.tolist(), x)):
            return vecs
    raise AssertionError("no probe separates two distinct matrices")


_BALL = {
    "zero": PMatrix.vector(0, 1),
    "inf": PMatrix.vector(1, 0),
}


def evaluate(e) -> PMatrix:
    """Invariant of an expression computed purely from the matrix formulas."""
    if isinstance(e, str):
        e = parse_expr(e)
    h = e.head
    if h == "I":
        return IDENTITY
    if h in _BALL:
        return _BALL[h]
    if h == "htwist":
        return PMatrix.vector(e.value, 1)
    if h == "vtwist":
        return PMatrix.vector(1, e.value)
    if h == "circle":
        raise ArityError("circle has no boundary and no matrix invariant")
    subs = [evaluate(a) for a in e.args]
    if h == "fill":
        return compose_fill(subs[0], subs[1:])
    if h == "compose":
        _need_holes(subs, 1, h)
        return compose(*subs)
    if h == "hsum":
        return hsum(*subs)
    if h == "vsum":
        return vsum(*subs)
    if h in ("ihsum", "ivsum"):
        a, b = subs
        ball, sph = (a, b) if a.holes == 0 else (b, a)
        if ball.holes != 0 or sph.holes != 1:
            raise ArityError(f"{h} needs one ball and one spherical tangle")
        return sphere_ball_sums(ball, sph, "inner_" + h[1])
    (s,) = subs
    if h == "mirror":
        return mirror_n(s)
    if h == "rot":
        return rot_n(s)
    if h in ("hflip", "vflip"):
        return s
    _need_holes(subs, 1, h)
    return elementary_op(s, h)


def _need_holes(mats, n, what):
    if any(m.holes != n for m in mats):
        raise ArityError(f"{what} needs spherical operands")


def congruence_signs(xs, ys) -> set:
    """Signs e in {1, -1} with x = e*y mod 4 for every pair of entries."""
    xs, ys = list(xs), list(ys)
    if len(xs) != len(ys):
        raise ArityError("entry lists differ in length")
    return {e for e in (1, -1) if all((x - e * y) % 4 == 0 for x, y in zip(xs, ys))}
