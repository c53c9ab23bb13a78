"""The group generated by the inside-out swap (x), the inner quarter
turn (y) and the mirror (z) acting on spherical invariants.

Words are read left to right: the first letter acts first.  The group
is D4 x C2 with sixteen elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .algebra import elementary_op
from .invariant import PMatrix

__all__ = [
    "GENERATORS",
    "GroupElement",
    "IDENTITY",
    "reduce",
    "act",
    "act_word",
    "multiply",
    "enumerate_group",
    "RELATIONS",
]

GENERATORS = {"x": "minus", "y": "r1", "z": "star"}

RELATIONS = ("xx", "yy", "zz", "xyxyyxyx", "xzxz", "yzyz")


@dataclass(frozen=True, order=True)
class GroupElement:
    """Normal form: an alternating x/y word of length at most 4, then z or not.

    The length-4 word is always written "xyxy" (equal to "yxyx").
    """

    dihedral: str = ""
    zbit: int = 0

    @property
    def word(self):
        return self.dihedral + ("z" if self.zbit else "")

    def __str__(self):
        return self.word or "1"


IDENTITY = GroupElement()


def _free_reduce(letters):
    out = []
    for ch in letters:
        if out and out[-1] == ch:
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def reduce(word: str) -> GroupElement:
    """Normal form of a word over {x, y, z}."""
    word = word.replace(" ", "")
    bad = set(word) - set("xyz")
    if bad:
        raise ValueError(f"letters outside x, y, z: {''.join(sorted(bad))}")
    zbit = word.count("z") % 2
    w = _free_reduce(word.replace("z", ""))
    n = len(w) % 8
    if n:
        w = w[:n]
    else:
        w = ""
    if len(w) > 4:
        # (xy)^4 = 1: a long alternating word equals the short one of the other start
        full = (w[0] + ("y" if w[0] == "x" else "x")) * 4
        w = full[len(w):][::-1]
    if len(w) == 4:
        w = "xyxy"
    return GroupElement(w, zbit)


def act_word(word: str, m: PMatrix) -> PMatrix:
    for ch in word:
        if ch == "1":
            continue
        m = elementary_op(m, GENERATORS[ch])
    return m


def act(g, m: PMatrix) -> PMatrix:
    """Apply an element (or raw word) to a spherical invariant."""
    word = g.word if isinstance(g, GroupElement) else str(g)
    return act_word(word, m)


def multiply(g: GroupElement, h: GroupElement) -> GroupElement:
    """g then h."""
    return reduce(g.word + h.word)


def enumerate_group():
    """All elements, found by closing {1} under the generators, with the
    multiplication table as {(g, h): g*h}."""
    elems = {IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for g in frontier:
            for ch in "xyz":
                h = reduce(g.word + ch)
                if h not in elems:
                    elems.add(h)
                    nxt.append(h)
        frontier = nxt
    elems = sorted(elems, key=lambda g: (len(g.word), g.word))
    table = {(g, h): multiply(g, h) for g, h in product(elems, repeat=2)}
    return elems, table
