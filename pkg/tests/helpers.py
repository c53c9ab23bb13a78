"""Shared builders for the test suite."""

import random

from tanglematrix.diagram import Port, TangleDiagram, delta_skeleton, fill, hsum, vsum, vtwist
from tanglematrix.expr import elaborate
from tanglematrix.generate import random_expr


def hook_core():
    """One-hole diagram: two strands pass the hole and points 2, 3 of the
    hole are capped, so a twist box in the hole makes a closed component."""
    P = Port.parse
    return TangleDiagram(4, (4,), 0, [
        (P("outer.1"), P("hole1.1")),
        (P("outer.4"), P("hole1.4")),
        (P("hole1.2"), P("hole1.3")),
        (P("outer.2"), P("outer.3")),
    ])


def hooked_ball(twists=2):
    return fill(hook_core(), [vtwist(twists)])


def random_diagram(rng: random.Random, holes, max_crossings=8, depth=3):
    e = random_expr(rng, holes, max_crossings=max_crossings, depth=depth)
    return e, elaborate(e)


def random_delta_template(rng: random.Random, spherical=True, max_crossings=6):
    """A template with one 6-point hole (and one 4-point hole if spherical)
    made by embedding the ball skeleton in random expressions."""
    t = delta_skeleton(shift=rng.randrange(6))
    head = elaborate(random_expr(rng, 1, max_crossings=max_crossings, depth=2))
    t = fill(head, [t])
    if not spherical:
        return t
    other = elaborate(random_expr(rng, 1, max_crossings=max_crossings, depth=2))
    if rng.random() < 0.5:
        return (hsum if rng.random() < 0.5 else vsum)(t, other)
    head2 = elaborate(random_expr(rng, 2, max_crossings=max_crossings, depth=2))
    return fill(head2, [t, other])
