"""
Ball tangles and their two-entry invariant
==========================================

A ball tangle has a column invariant [p; q], read off from the brackets
of its two closures.  For twist boxes and their sums this reproduces
the familiar fraction arithmetic, and every column is realised by some
tangle.
"""

import numpy as np

from tanglematrix import compute_F, elaborate
from tanglematrix.algebra import evaluate
from tanglematrix.bracket import bracket
from tanglematrix.diagram import close
from tanglematrix.synthesis import synthesize, verify_recipe

# twist boxes in both directions
for text in ("htwist(3)", "vtwist(3)", "mirror(htwist(3))", "hsum(htwist(2), vtwist(3))"):
    print(f"{text:30} {compute_F(elaborate(text))}")

# the numerator closure of htwist(p) is a (2, p) torus link, so |<N>| = |p|
mags = np.array([abs(bracket(close(elaborate(f"htwist({p})"), "numerator"))) for p in range(1, 9)])
print("torus link determinants:", mags)

# the state sum and the matrix formulas agree
e = "vsum(hsum(htwist(2), vtwist(-3)), rot(htwist(4)))"
print(compute_F(elaborate(e)), "==", evaluate(e))

###############################################################################
# Synthesis runs Euclid's algorithm backwards.  Consecutive Fibonacci
# numbers give the longest recipe for their size.

recipe = synthesize(13, 8)
print(recipe)
print("verified:", verify_recipe(recipe, 13, 8))

grid = np.array([[verify_recipe(synthesize(p, q), p, q) for q in range(-6, 7)] for p in range(-6, 7)])
print("all", grid.size, "targets verified:", bool(grid.all()))
