"""Ball tangles with a prescribed invariant [p; q], by Euclid's algorithm.

For 0 < q <= p write p = k*q + r.  Then [p; q] = [k; 1] +_h [r; q], and
[r; q] is the mirrored quarter turn of [q; r], which is smaller.
"""

from __future__ import annotations

from .errors import GuardExceeded
from .expr import Expr, elaborate
from .invariant import PMatrix, compute_F

__all__ = ["LIMIT", "synthesize", "verify_recipe"]

LIMIT = 10**4

_INF = Expr("inf")


def _twist(kind, n):
    return Expr(kind, (), n)


def _column(r):
    # [r; 0]
    return Expr("hsum", (_twist("vtwist", r), _INF))


def _rec(p: int, q: int) -> Expr:
    if p == 0 and q == 0:
        return Expr("hsum", (_INF, _INF))
    if (p, q) == (1, 0):
        return _INF
    if (p, q) == (0, 1):
        return Expr("zero")
    if q == 1:
        return _twist("htwist", p)
    if p == 1:
        return _twist("vtwist", q)
    if q == 0:
        return _column(p)
    if p == 0:
        return Expr("rot", (_column(q),))
    if p < q:
        return Expr("mirror", (Expr("rot", (_rec(q, p),)),))
    k, r = divmod(p, q)
    if r == 0:
        rest = Expr("rot", (_column(q),))
    else:
        rest = Expr("mirror", (Expr("rot", (_rec(q, r),)),))
    return Expr("hsum", (_twist("htwist", k), rest))


def synthesize(p: int, q: int) -> Expr:
    """An expression over inf, zero, htwist, vtwist, hsum, rot, mirror with f = [p; q]."""
    if abs(p) > LIMIT or abs(q) > LIMIT:
        raise GuardExceeded(f"targets are limited to |p|, |q| <= {LIMIT}")
    e = _rec(abs(p), abs(q))
    if p * q < 0:
        e = Expr("mirror", (e,))
    return e


def verify_recipe(recipe, p: int, q: int) -> bool:
    """Elaborate the recipe and compare its invariant with [p; q]."""
    d = elaborate(recipe)
    if d.holes or d.outer != 4:
        return False
    return compute_F(d) == PMatrix.vector(p, q)
