"""
Which matrices come from spherical tangles?
===========================================

The determinant of a spherical invariant is always 0 or 1 mod 4, so
e.g. [[1,0],[0,-1]] is never realised.  A closed component hooked
through the hole forces every entry to be even.  The swap, quarter turn
and mirror generate a group of order 16 acting on these matrices.
"""

import random

import numpy as np

from tanglematrix import PMatrix, compute_F, elaborate
from tanglematrix import algebra as alg
from tanglematrix import coxeter as cx
from tanglematrix.diagram import Port, TangleDiagram, fill, hsum, vtwist
from tanglematrix.generate import random_expr

rng = random.Random(11)
dets = np.array([alg.det(compute_F(elaborate(random_expr(rng, 1, max_crossings=10))))
                 for _ in range(300)])
print("det mod 4 counts:", np.bincount(dets % 4, minlength=4))
print(alg.det_mod4_class(PMatrix.square(1, 0, 0, -1)))

###############################################################################
# A hook: two points of the hole are capped, so a twist box placed in the
# hole closes up into a loop around the strands passing by.

P = Port.parse
core = TangleDiagram(4, (4,), 0, [(P("outer.1"), P("hole1.1")), (P("outer.4"), P("hole1.4")),
                                  (P("hole1.2"), P("hole1.3")), (P("outer.2"), P("outer.3"))])
hooked = fill(core, [vtwist(2)])
print("hooked ball:", compute_F(hooked))
print("with a spherical tangle:", compute_F(hsum(hooked, elaborate("vsum(htwist(1), I)"))))

###############################################################################
# The group action, and the orbit of a probe matrix.

elems, table = cx.enumerate_group()
probe = PMatrix.square(1, 2, 3, 5)
for g in elems:
    print(f"{str(g):6}", cx.act(g, probe))
print(len({cx.act(g, probe) for g in elems}), "distinct images")
