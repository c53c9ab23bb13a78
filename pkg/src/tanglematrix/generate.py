"""Random tangle expressions for property checks and demos."""

from __future__ import annotations

import random

from .expr import Expr

__all__ = ["random_expr", "crossings_of"]


def crossings_of(e: Expr) -> int:
    """Crossing count of the elaborated diagram."""
    if e.head in ("htwist", "vtwist"):
        return abs(e.value)
    return sum(crossings_of(a) for a in e.args)


def _split(rng, budget):
    # children may overspend; random_expr rejects over-budget draws
    a = rng.randint(budget // 2, budget)
    return a, rng.randint(budget // 2, budget)


def _ball_leaf(rng, budget):
    if budget == 0 or rng.random() < 0.2:
        return Expr(rng.choice(("zero", "inf")))
    kind = rng.choice(("htwist", "vtwist"))
    p = rng.randint(1, min(budget, 5)) * rng.choice((1, -1))
    return Expr(kind, (), p)


def _hole_split(rng, total, parts):
    """Random nonnegative composition of ``total`` into ``parts`` pieces."""
    cuts = sorted(rng.randint(0, total) for _ in range(parts - 1))
    edges = [0] + cuts + [total]
    return [edges[i + 1] - edges[i] for i in range(parts)]


def _gen(rng, holes, budget, depth, max_holes):
    if holes == 0:
        if depth <= 0 or rng.random() < 0.3:
            return _ball_leaf(rng, budget)
        r = rng.random()
        if r < 0.45:
            a, b = _split(rng, budget)
            return Expr(rng.choice(("hsum", "vsum")),
                        (_gen(rng, 0, a, depth - 1, max_holes), _gen(rng, 0, b, depth - 1, max_holes)))
        if r < 0.65:
            return Expr(rng.choice(("mirror", "rot", "hflip", "vflip")),
                        (_gen(rng, 0, budget, depth - 1, max_holes),))
        a, b = _split(rng, budget)
        return Expr("fill", (_gen(rng, 1, a, depth - 1, max_holes), _gen(rng, 0, b, depth - 1, max_holes)))

    if depth <= 0:
        if holes == 1:
            return Expr("I")
        k = rng.randint(1, holes - 1)
        return Expr(rng.choice(("hsum", "vsum")),
                    (_gen(rng, k, budget // 2, 0, max_holes), _gen(rng, holes - k, budget - budget // 2, 0, max_holes)))
    if holes == 1 and rng.random() < 0.15:
        return Expr("I")
    r = rng.random()
    if r < 0.3:
        k = rng.randint(0, holes)
        a, b = _split(rng, budget)
        left = _gen(rng, k, a, depth - 1, max_holes)
        right = _gen(rng, holes - k, b, depth - 1, max_holes)
        return Expr(rng.choice(("hsum", "vsum")), (left, right))
    if r < 0.45:
        ops = ("mirror", "rot", "hflip", "vflip")
        if holes == 1:
            ops += ("swap", "r1", "r2")
        return Expr(rng.choice(ops), (_gen(rng, holes, budget, depth - 1, max_holes),))
    if r < 0.6 and holes == 1:
        a, b = _split(rng, budget)
        ball = _gen(rng, 0, a, depth - 1, max_holes)
        sph = _gen(rng, 1, b, depth - 1, max_holes)
        pair = (ball, sph) if rng.random() < 0.5 else (sph, ball)
        return Expr(rng.choice(("ihsum", "ivsum")), pair)
    if r < 0.7 and holes == 1:
        a, b = _split(rng, budget)
        return Expr("compose", (_gen(rng, 1, a, depth - 1, max_holes), _gen(rng, 1, b, depth - 1, max_holes)))
    m = rng.randint(1, min(max_holes, 3))
    shares = _hole_split(rng, holes, m)
    a, b = _split(rng, budget)
    head = _gen(rng, m, a, depth - 1, max_holes)
    rest = [b] * m
    args = [_gen(rng, s, c, depth - 1, max_holes) for s, c in zip(shares, rest)]
    return Expr("fill", (head, *args))


def random_expr(rng: random.Random, holes: int = 1, max_crossings: int = 14,
                depth: int = 4, max_holes: int = 3) -> Expr:
    """Draw an expression with ``holes`` holes and at most ``max_crossings`` crossings.

    Intermediate sub-expressions never have more than ``max_holes`` holes.
    """
    while True:
        e = _gen(rng, holes, max_crossings, depth, max_holes)
        if crossings_of(e) <= max_crossings:
            return e
