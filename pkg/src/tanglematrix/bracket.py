"""Kauffman bracket at A = exp(i*pi/4) by a monocyclic state sum.

At this value the loop weight -A^2 - A^-2 vanishes, so only states
whose smoothing is a single circle contribute.  States are bit masks
in crossing order; bit j set means crossing j gets its A smoothing,
which joins slots (0,1) and (2,3).  The B smoothing joins (0,3), (1,2).

The inner loop is compiled with numba when it is importable.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .cyclotomic import ZERO, CycInt, monomial, to_zphi
from .diagram import TangleDiagram, smooth
from .errors import ArityError, CoherenceError, GuardExceeded

try:
    from numba import njit
except ImportError:  # pragma: no cover - exercised only without numba
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda fn: fn

__all__ = [
    "MAX_CROSSINGS",
    "HARD_LIMIT",
    "crossing_limit",
    "slot_table",
    "loop_count",
    "loop_counts",
    "monocyclic_histogram",
    "bracket",
    "bracket_cyc",
    "SkeinReport",
    "skein_check",
    "state_expansion",
]

MAX_CROSSINGS = 24
HARD_LIMIT = 28


def crossing_limit() -> int:
    """Guard from TANGLE_MAX_CROSSINGS, never above the hard limit."""
    raw = os.environ.get("TANGLE_MAX_CROSSINGS")
    if not raw:
        return MAX_CROSSINGS
    try:
        value = int(raw)
    except ValueError:
        return MAX_CROSSINGS
    return max(0, min(value, HARD_LIMIT))


def slot_table(d: TangleDiagram):
    """Arc id of each crossing slot, as an int32 array of length 4c."""
    if not d.is_closed:
        raise ArityError("open strand: the diagram has boundary points or holes")
    table = np.empty(4 * d.crossings, dtype=np.int32)
    for arc_id, (a, b) in enumerate(d.arcs):
        table[4 * a.index + a.slot] = arc_id
        table[4 * b.index + b.slot] = arc_id
    return table


@njit(cache=True)
def _find(parent, i):
    while parent[i] != i:
        parent[i] = parent[parent[i]]
        i = parent[i]
    return i


@njit(cache=True)
def _count(table, c, n_arcs, mask, parent):
    for i in range(n_arcs):
        parent[i] = i
    comps = n_arcs
    for j in range(c):
        base = 4 * j
        if (mask >> j) & 1:
            u1, v1, u2, v2 = table[base], table[base + 1], table[base + 2], table[base + 3]
        else:
            u1, v1, u2, v2 = table[base], table[base + 3], table[base + 1], table[base + 2]
        r1 = _find(parent, u1)
        r2 = _find(parent, v1)
        if r1 != r2:
            parent[r1] = r2
            comps -= 1
        r1 = _find(parent, u2)
        r2 = _find(parent, v2)
        if r1 != r2:
            parent[r1] = r2
            comps -= 1
    return comps


@njit(cache=True)
def _all_counts(table, c, n_arcs):
    parent = np.empty(max(n_arcs, 1), dtype=np.int32)
    out = np.empty(1 << c, dtype=np.int32)
    for mask in range(1 << c):
        out[mask] = _count(table, c, n_arcs, mask, parent)
    return out


@njit(cache=True)
def _histogram(table, c, n_arcs, target):
    # hist[a] = number of states with a A-smoothings and exactly `target` circles
    parent = np.empty(max(n_arcs, 1), dtype=np.int32)
    hist = np.zeros(c + 1, dtype=np.int64)
    for mask in range(1 << c):
        if _count(table, c, n_arcs, mask, parent) == target:
            a = 0
            m = mask
            while m:
                a += m & 1
                m >>= 1
            hist[a] += 1
    return hist


def _guard(d):
    limit = crossing_limit()
    if d.crossings > limit:
        raise GuardExceeded(f"{d.crossings} crossings exceed the guard of {limit}")


def loop_count(d: TangleDiagram, state) -> int:
    """Circles after smoothing by ``state``.

    ``state`` is a bit mask or a sequence of "A"/"B" in crossing order.
    """
    table = slot_table(d)
    if not isinstance(state, (int, np.integer)):
        state = list(state)
        if len(state) != d.crossings:
            raise ArityError("state must assign every crossing")
        state = sum(1 << j for j, s in enumerate(state) if s == "A")
    parent = np.empty(max(2 * d.crossings, 1), dtype=np.int32)
    return int(_count(table, d.crossings, 2 * d.crossings, int(state), parent)) + d.free_loops


def loop_counts(d: TangleDiagram) -> np.ndarray:
    """Circle counts for all 2^c states, indexed by mask."""
    _guard(d)
    table = slot_table(d)
    return _all_counts(table, d.crossings, 2 * d.crossings) + d.free_loops


def monocyclic_histogram(d: TangleDiagram) -> Counter:
    """Number of monocyclic states by count of A smoothings."""
    _guard(d)
    table = slot_table(d)
    target = 1 - d.free_loops
    if target < 0:
        return Counter()
    if d.crossings == 0:
        return Counter({0: 1}) if target == 0 else Counter()
    if target == 0:
        return Counter()
    hist = _histogram(table, d.crossings, 2 * d.crossings, target)
    return Counter({a: int(n) for a, n in enumerate(hist) if n})


def bracket_cyc(d: TangleDiagram) -> CycInt:
    """The bracket as an element of Z[A]/(A^4+1), without normalizing."""
    c = d.crossings
    total = ZERO
    for a, n in monocyclic_histogram(d).items():
        total = total + monomial(n, 2 * a - c)
    return total


def bracket(d: TangleDiagram):
    """Bracket of a closed diagram as p*A^k.

    The magnitude |p| is the determinant of the link.
    """
    hist = monocyclic_histogram(d)
    parities = {(2 * a - d.crossings) % 4 for a in hist}
    if len(parities) > 1:
        raise CoherenceError("monocyclic exponents disagree mod 4")
    total = ZERO
    for a, n in hist.items():
        total = total + monomial(n, 2 * a - d.crossings)
    return to_zphi(total)


@dataclass(frozen=True)
class SkeinReport:
    crossing: int
    lhs: CycInt
    rhs: CycInt

    @property
    def ok(self):
        return self.lhs == self.rhs

    def __bool__(self):
        return self.ok


def skein_check(d: TangleDiagram, crossing: int) -> SkeinReport:
    """Compare <L> with A<L_A> + A^-1<L_B> at one crossing."""
    lhs = bracket_cyc(d)
    rhs = monomial(1, 1) * bracket_cyc(smooth(d, crossing, "A")) + monomial(
        1, -1
    ) * bracket_cyc(smooth(d, crossing, "B"))
    return SkeinReport(crossing, lhs, rhs)


def state_expansion(d: TangleDiagram) -> dict:
    """Expand a 0-hole tangle over crossingless matchings of its boundary.

    Returns {frozenset of outer-slot pairs: CycInt}.  States leaving any
    closed circle are dropped, because circles weigh zero here.
    """
    if d.holes:
        raise ArityError("state_expansion needs a diagram without holes")
    out = {}
    if d.free_loops:
        return out
    c = d.crossings
    for mask in range(1 << c):
        cur = d
        for j in reversed(range(c)):
            cur = smooth(cur, j, "A" if (mask >> j) & 1 else "B")
        if cur.free_loops:
            continue
        key = frozenset((a.slot, b.slot) for a, b in cur.arcs)
        a = bin(mask).count("1")
        out[key] = out.get(key, ZERO) + monomial(1, 2 * a - c)
    return {k: v for k, v in out.items() if not v.is_zero()}
