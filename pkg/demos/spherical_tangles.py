"""
Spherical tangles as 2x2 matrices
=================================

A tangle with one hole has a 2x2 invariant, defined up to sign.  Filling
the hole is a matrix product, and the determinant survives the
elementary operations.
"""

import random

import numpy as np

from tanglematrix import PMatrix, compute_F, elaborate
from tanglematrix import algebra as alg

b = elaborate("vsum(htwist(1), I)")
print("F(b)     =", compute_F(b))
print("F(b o b) =", compute_F(elaborate("compose(vsum(htwist(1), I), vsum(htwist(1), I))")))

# powers of b are unipotent: F(b^n) = [[1,0],[n,1]]
B = np.array(compute_F(b).tolist())
for n in range(1, 5):
    print(n, np.linalg.matrix_power(B, n).tolist())

###############################################################################
# Filling: the invariant of a head with a ball tangle inside is F(head) v.

head = compute_F(elaborate("ihsum(htwist(2), I)"))
ball = compute_F(elaborate("vtwist(3)"))
print(head, "*", ball, "=", alg.compose_fill(head, [ball]))
print("diagram:", compute_F(elaborate("fill(ihsum(htwist(2), I), vtwist(3))")))

###############################################################################
# The twist-box family J(p1, p2, p3, p4) has a perfect-square determinant.

rng = random.Random(3)
for _ in range(5):
    ps = [rng.randint(-6, 6) for _ in range(4)]
    m = alg.j_formula(*ps)
    print(ps, m, "det =", alg.det(m))

###############################################################################
# The elementary operations keep the determinant.

m = PMatrix.square(2, -3, 5, 1)
for op in ("star", "minus", "r1", "r2", "r"):
    print(f"{op:6}", alg.elementary_op(m, op), alg.det(alg.elementary_op(m, op)))
