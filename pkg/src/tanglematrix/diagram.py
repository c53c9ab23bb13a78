"""Combinatorial planar model of n-punctured ball tangle diagrams.

A diagram is a perfect matching ("arcs") on a finite set of ports:

* ``outer.K``  marked point K on the outer boundary (1-based),
* ``hole<i>.K`` marked point K on hole i (both 1-based),
* ``x<j>.S``   slot S in 0..3 of crossing j (crossings are 0-based).

On a 4-point circle the labels are 1=NW, 2=NE, 3=SE, 4=SW.  Crossing
slots run counterclockwise; the over-strand sits on slots 1 and 3.

Every operation works by splicing: selected pairs of ports are glued,
arcs are chained through the glued pairs, and chains that close up
become free loops.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .errors import ArityError, ParseError

__all__ = [
    "Port",
    "TangleDiagram",
    "identity",
    "zero",
    "inf",
    "circle",
    "htwist",
    "vtwist",
    "make_primitive",
    "fill",
    "compose",
    "close",
    "close_filled",
    "elementary",
    "mirror",
    "rot",
    "hflip",
    "vflip",
    "swap",
    "r1",
    "r2",
    "hsum",
    "vsum",
    "ihsum",
    "ivsum",
    "connect_sum",
    "smooth",
    "insert_kink",
    "delta_gadgets",
    "delta_pair",
    "delta_skeleton",
    "diagram_to_dict",
    "diagram_from_dict",
    "load_diagram",
    "dump_diagram",
]

FUNDAMENTAL = {
    # hole filling used by the invariant: 1 = vertical arcs, 2 = horizontal arcs
    1: ((1, 4), (2, 3)),
    2: ((1, 2), (4, 3)),
}
CLOSURES = {
    "numerator": ((1, 2), (4, 3)),
    "denominator": ((1, 4), (2, 3)),
}


class Port(NamedTuple):
    owner: str  # "outer", "hole" or "x"
    index: int  # 0 for outer, 1-based hole number, 0-based crossing number
    slot: int

    def __str__(self):
        if self.owner == "outer":
            return f"outer.{self.slot}"
        if self.owner == "hole":
            return f"hole{self.index}.{self.slot}"
        return f"x{self.index}.{self.slot}"

    @classmethod
    def parse(cls, text: str) -> "Port":
        m = re.fullmatch(r"\s*(outer|hole(\d+)|x(\d+))\.(\d+)\s*", text)
        if not m:
            raise ParseError(f"bad port name {text!r}")
        slot = int(m.group(4))
        if m.group(1) == "outer":
            return cls("outer", 0, slot)
        if m.group(2) is not None:
            return cls("hole", int(m.group(2)), slot)
        return cls("x", int(m.group(3)), slot)


def _outer(k):
    return Port("outer", 0, k)


def _hole(i, k):
    return Port("hole", i, k)


def _x(j, s):
    return Port("x", j, s)


@dataclass(frozen=True)
class TangleDiagram:
    outer: int
    holes: tuple
    crossings: int
    arcs: tuple
    free_loops: int = 0

    def __post_init__(self):
        holes = tuple(self.holes)
        arcs = tuple(sorted(tuple(sorted(a)) for a in self.arcs))
        object.__setattr__(self, "holes", holes)
        object.__setattr__(self, "arcs", arcs)
        self.validate()

    def ports(self):
        for k in range(1, self.outer + 1):
            yield _outer(k)
        for i, m in enumerate(self.holes, 1):
            for k in range(1, m + 1):
                yield _hole(i, k)
        for j in range(self.crossings):
            for s in range(4):
                yield _x(j, s)

    def validate(self):
        if self.outer % 2 or any(m % 2 or m <= 0 for m in self.holes):
            raise ArityError("boundary point counts must be positive and even")
        if self.free_loops < 0:
            raise ArityError("free_loops must be nonnegative")
        expected = set(self.ports())
        seen = set()
        for a, b in self.arcs:
            if a == b:
                raise ArityError(f"arc joins {a} to itself")
            for p in (a, b):
                if p not in expected:
                    raise ArityError(f"unknown port {p}")
                if p in seen:
                    raise ArityError(f"port {p} used twice")
                seen.add(p)
        missing = expected - seen
        if missing:
            raise ArityError(f"unmatched ports: {', '.join(sorted(map(str, missing)))}")

    @cached_property
    def partner(self) -> dict:
        out = {}
        for a, b in self.arcs:
            out[a] = b
            out[b] = a
        return out

    @property
    def is_closed(self):
        return self.outer == 0 and not self.holes

    def __str__(self):
        return f"<diagram outer={self.outer} holes={list(self.holes)} c={self.crossings}>"


# --------------------------------------------------------------------------
# splice engine


def _splice(arcs, glue):
    """Chain ``arcs`` through the ``glue`` pairs.

    Returns the surviving arcs between unglued ports and the number of
    closed cycles made entirely of glued ports.
    """
    mate = {}
    for a, b in arcs:
        mate[a] = b
        mate[b] = a
    link = {}
    for a, b in glue:
        if a in link or b in link:
            raise ArityError(f"port glued twice: {a} / {b}")
        link[a] = b
        link[b] = a
    seen = set()
    out = []
    for start in mate:
        if start in link or start in seen:
            continue
        seen.add(start)
        cur = mate[start]
        while cur in link:
            seen.add(cur)
            nxt = link[cur]
            seen.add(nxt)
            cur = mate[nxt]
        seen.add(cur)
        out.append((start, cur))
    loops = 0
    for p in link:
        if p in seen:
            continue
        loops += 1
        cur = p
        while cur not in seen:
            seen.add(cur)
            q = mate[cur]
            seen.add(q)
            cur = link[q]
    return out, loops


def _tagged(d, tag):
    return [((tag, a), (tag, b)) for a, b in d.arcs]


class _Renamer:
    """Maps tagged ports of several parts onto one numbering."""

    def __init__(self, parts, keep_holes):
        self.xoff = {}
        self.hoff = {}
        x = h = 0
        for tag, (d, keep) in enumerate(zip(parts, keep_holes)):
            self.xoff[tag] = x
            x += d.crossings
            self.hoff[tag] = h
            if keep:
                h += len(d.holes)
        self.crossings = x
        self.outer = {}

    def __call__(self, tp):
        tag, p = tp
        if p.owner == "x":
            return _x(p.index + self.xoff[tag], p.slot)
        if p.owner == "hole":
            return _hole(p.index + self.hoff[tag], p.slot)
        return _outer(self.outer[(tag, p.slot)])


def _combine(parts, keep_holes, glue, outer_map, outer, holes):
    arcs = []
    for tag, d in enumerate(parts):
        arcs += _tagged(d, tag)
    spliced, loops = _splice(arcs, glue)
    ren = _Renamer(parts, keep_holes)
    ren.outer = outer_map
    new_arcs = [(ren(a), ren(b)) for a, b in spliced]
    free = loops + sum(d.free_loops for d in parts)
    return TangleDiagram(outer, tuple(holes), ren.crossings, new_arcs, free)


def _self_glue(d, glue, keep_outer=True):
    spliced, loops = _splice(d.arcs, glue)
    return TangleDiagram(
        d.outer if keep_outer else 0, d.holes, d.crossings, spliced, d.free_loops + loops
    )


def _relabel(d, fn):
    arcs = [(fn(a), fn(b)) for a, b in d.arcs]
    return TangleDiagram(d.outer, d.holes, d.crossings, arcs, d.free_loops)


# --------------------------------------------------------------------------
# primitives


def identity(m: int = 4) -> TangleDiagram:
    """The spherical identity: radial arcs hole1.k -- outer.k."""
    return TangleDiagram(m, (m,), 0, [(_hole(1, k), _outer(k)) for k in range(1, m + 1)])


def zero() -> TangleDiagram:
    """Horizontal arcs NW-NE and SW-SE."""
    return TangleDiagram(4, (), 0, [(_outer(1), _outer(2)), (_outer(4), _outer(3))])


def inf() -> TangleDiagram:
    """Vertical arcs NW-SW and NE-SE."""
    return TangleDiagram(4, (), 0, [(_outer(1), _outer(4)), (_outer(2), _outer(3))])


def circle() -> TangleDiagram:
    """A single crossingless closed loop with no boundary."""
    return TangleDiagram(0, (), 0, [], 1)


def htwist(p: int) -> TangleDiagram:
    """|p| horizontal half twists; the sign picks the chirality."""
    if p == 0:
        return zero()
    if p < 0:
        return mirror(htwist(-p))
    # slots: 0=NW, 1=SW, 2=SE, 3=NE of each crossing box
    arcs = [(_x(0, 0), _outer(1)), (_x(0, 1), _outer(4))]
    for j in range(p - 1):
        arcs.append((_x(j, 3), _x(j + 1, 0)))
        arcs.append((_x(j, 2), _x(j + 1, 1)))
    arcs.append((_x(p - 1, 3), _outer(2)))
    arcs.append((_x(p - 1, 2), _outer(3)))
    return TangleDiagram(4, (), p, arcs)


def vtwist(q: int) -> TangleDiagram:
    """|q| vertical half twists, so that f = [1; q]."""
    return rot(htwist(-q))


def make_primitive(name: str, arg: int | None = None) -> TangleDiagram:
    table = {"I": identity, "zero": zero, "inf": inf, "circle": circle}
    if name in table:
        return table[name]()
    if name == "htwist":
        return htwist(arg)
    if name == "vtwist":
        return vtwist(arg)
    raise ArityError(f"unknown primitive {name!r}")


# --------------------------------------------------------------------------
# filling and closing


def fill(head: TangleDiagram, args) -> TangleDiagram:
    """Insert ``args[i]`` into hole i+1 of ``head``, slot k onto slot k.

    Holes of the result are those of the arguments, in argument order.
    """
    args = list(args)
    if len(args) != len(head.holes):
        raise ArityError(f"head has {len(head.holes)} holes but {len(args)} arguments given")
    glue = []
    for i, (m, a) in enumerate(zip(head.holes, args), 1):
        if a.outer != m:
            raise ArityError(f"hole {i} has {m} points but argument has {a.outer}")
        glue += [((0, _hole(i, k)), (i, _outer(k))) for k in range(1, m + 1)]
    outer_map = {(0, k): k for k in range(1, head.outer + 1)}
    holes = [m for a in args for m in a.holes]
    return _combine([head] + args, [False] + [True] * len(args), glue, outer_map, head.outer, holes)


def compose(s2: TangleDiagram, s1: TangleDiagram) -> TangleDiagram:
    """s2 o s1: put s1 inside the hole of s2."""
    _need_spherical(s2, "compose")
    _need_spherical(s1, "compose")
    return fill(s2, [s1])


def close(d: TangleDiagram, kind: str = "numerator") -> TangleDiagram:
    if d.holes or d.outer != 4:
        raise ArityError("closure needs a ball tangle with 4 outer points")
    glue = [(_outer(a), _outer(b)) for a, b in CLOSURES[kind]]
    return _self_glue(d, glue, keep_outer=False)


def close_filled(d: TangleDiagram, kind: str, alpha) -> TangleDiagram:
    """Fill hole j with fundamental tangle alpha[j], then close.

    Equivalent to ``close(fill(d, [...]), kind)`` in a single splice.
    """
    if d.outer != 4 or any(m != 4 for m in d.holes):
        raise ArityError("all boundaries must have 4 points")
    if len(alpha) != len(d.holes):
        raise ArityError("one fundamental tangle per hole is required")
    glue = [(_outer(a), _outer(b)) for a, b in CLOSURES[kind]]
    for i, a in enumerate(alpha, 1):
        glue += [(_hole(i, u), _hole(i, v)) for u, v in FUNDAMENTAL[a]]
    spliced, loops = _splice(d.arcs, glue)
    return TangleDiagram(0, (), d.crossings, spliced, d.free_loops + loops)


# --------------------------------------------------------------------------
# elementary operations


def _need_spherical(d, what):
    if len(d.holes) != 1 or d.holes[0] != 4 or d.outer != 4:
        raise ArityError(f"{what} needs a spherical tangle (one 4-point hole)")


def _need_four(d, what):
    if d.outer != 4 or any(m != 4 for m in d.holes):
        raise ArityError(f"{what} needs 4-point boundaries")


def _quarter(k):
    return 4 if k == 1 else k - 1


def mirror(d: TangleDiagram) -> TangleDiagram:
    """Exchange over and under at every crossing."""

    def fn(p):
        return _x(p.index, (p.slot + 1) % 4) if p.owner == "x" else p

    return _relabel(d, fn)


def _boundary_map(d, what, outer_fn, hole_fn):
    # holes with other than 4 points keep their labels; that is still planar
    if d.outer != 4:
        raise ArityError(f"{what} needs 4 outer points")

    def fn(p):
        if p.owner == "outer":
            return _outer(outer_fn(p.slot))
        if p.owner == "hole" and d.holes[p.index - 1] == 4:
            return _hole(p.index, hole_fn(p.slot))
        return p

    return _relabel(d, fn)


def rot(d: TangleDiagram) -> TangleDiagram:
    """Quarter turn of the whole picture."""
    return _boundary_map(d, "rot", _quarter, _quarter)


def r1(d: TangleDiagram) -> TangleDiagram:
    """Quarter turn of the hole only."""
    _need_spherical(d, "r1")
    return _boundary_map(d, "r1", lambda k: k, _quarter)


def r2(d: TangleDiagram) -> TangleDiagram:
    """Quarter turn of the outer boundary only."""
    _need_spherical(d, "r2")
    return _boundary_map(d, "r2", _quarter, lambda k: k)


def _flip(d, what, perm):
    _need_four(d, what)

    def fn(p):
        if p.owner == "outer":
            return _outer(perm[p.slot])
        if p.owner == "hole":
            return _hole(p.index, perm[p.slot])
        return _x(p.index, 3 - p.slot)

    return _relabel(d, fn)


def hflip(d: TangleDiagram) -> TangleDiagram:
    """Half turn about the vertical axis (swaps west and east)."""
    return _flip(d, "hflip", {1: 2, 2: 1, 3: 4, 4: 3})


def vflip(d: TangleDiagram) -> TangleDiagram:
    """Half turn about the horizontal axis (swaps north and south)."""
    return _flip(d, "vflip", {1: 4, 4: 1, 2: 3, 3: 2})


_SIGMA = {1: 4, 2: 3, 3: 2, 4: 1}


def swap(d: TangleDiagram) -> TangleDiagram:
    """Turn a spherical tangle inside out (planar inversion z -> c/z)."""
    _need_spherical(d, "swap")

    def fn(p):
        if p.owner == "outer":
            return _hole(1, _SIGMA[p.slot])
        if p.owner == "hole":
            return _outer(_SIGMA[p.slot])
        return p

    return _relabel(d, fn)


_ELEMENTARY = {
    "mirror": mirror,
    "swap": swap,
    "r1": r1,
    "r2": r2,
    "rot": rot,
    "hflip": hflip,
    "vflip": vflip,
}


def elementary(d: TangleDiagram, op: str) -> TangleDiagram:
    try:
        fn = _ELEMENTARY[op.lower()]
    except KeyError:
        raise ArityError(f"unknown elementary operation {op!r}") from None
    return fn(d)


# --------------------------------------------------------------------------
# connect sums


def hsum(a: TangleDiagram, b: TangleDiagram) -> TangleDiagram:
    """a to the left of b: a.NE-b.NW and a.SE-b.SW are joined."""
    if a.outer != 4 or b.outer != 4:
        raise ArityError("hsum needs 4 outer points on both operands")
    glue = [((0, _outer(2)), (1, _outer(1))), ((0, _outer(3)), (1, _outer(4)))]
    outer_map = {(0, 1): 1, (1, 2): 2, (1, 3): 3, (0, 4): 4}
    return _combine([a, b], [True, True], glue, outer_map, 4, a.holes + b.holes)


def _rot_n(d, n):
    for _ in range(n % 4):
        d = rot(d)
    return d


def vsum(a: TangleDiagram, b: TangleDiagram) -> TangleDiagram:
    """a above b, defined as Rot^3(hsum(Rot a, Rot b))."""
    return _rot_n(hsum(rot(a), rot(b)), 3)


def _split_inner(a, b, what):
    if not a.holes and len(b.holes) == 1:
        return a, b, True
    if len(a.holes) == 1 and not b.holes:
        return b, a, False
    raise ArityError(f"{what} needs one ball tangle and one spherical tangle")


def _half(d, kind):
    # the 180 degree rotations B^{h-} and B^{v-}
    return hflip(d) if kind == "h" else vflip(d)


def _inner(a, b, kind):
    ball, sph, ball_first = _split_inner(a, b, "i" + kind + "sum")
    _need_spherical(sph, "inner sum")
    outer = hsum if kind == "h" else vsum
    bm = _half(ball, kind)
    if ball_first:
        return swap(outer(swap(sph), bm))
    return swap(outer(bm, swap(sph)))


def ihsum(a: TangleDiagram, b: TangleDiagram) -> TangleDiagram:
    """Inner horizontal sum: the ball tangle sits beside the hole."""
    return _inner(a, b, "h")


def ivsum(a: TangleDiagram, b: TangleDiagram) -> TangleDiagram:
    """Inner vertical sum."""
    return _inner(a, b, "v")


def connect_sum(a, b, kind: str = "hsum", order: str = "normal") -> TangleDiagram:
    fn = {"hsum": hsum, "vsum": vsum, "ihsum": ihsum, "ivsum": ivsum}[kind.lower()]
    return fn(b, a) if order == "op" else fn(a, b)


# --------------------------------------------------------------------------
# local moves


def smooth(d: TangleDiagram, j: int, which: str) -> TangleDiagram:
    """Remove crossing j by its A or B smoothing."""
    if not 0 <= j < d.crossings:
        raise ArityError(f"no crossing {j}")
    pairs = ((0, 1), (2, 3)) if which == "A" else ((0, 3), (1, 2))
    spliced, loops = _splice(d.arcs, [(_x(j, u), _x(j, v)) for u, v in pairs])

    def fn(p):
        if p.owner == "x" and p.index > j:
            return _x(p.index - 1, p.slot)
        return p

    arcs = [(fn(a), fn(b)) for a, b in spliced]
    return TangleDiagram(d.outer, d.holes, d.crossings - 1, arcs, d.free_loops + loops)


def insert_kink(d: TangleDiagram, arc_index: int, sign: int = 1) -> TangleDiagram:
    """Put a Reidemeister I curl on one arc."""
    p, q = d.arcs[arc_index]
    c = d.crossings
    arcs = [a for i, a in enumerate(d.arcs) if i != arc_index]
    if sign > 0:
        arcs += [(p, _x(c, 0)), (_x(c, 2), _x(c, 1)), (_x(c, 3), q)]
    else:
        arcs += [(p, _x(c, 0)), (_x(c, 2), _x(c, 3)), (_x(c, 1), q)]
    return TangleDiagram(d.outer, d.holes, c + 1, arcs, d.free_loops)


# --------------------------------------------------------------------------
# delta move

# Three strands o1-o4, o2-o5, o3-o6 crossing pairwise; the second gadget
# is the first with the triangle pushed across the opposite crossing.
_GADGETS = (
    [("x0.0", "outer.5"), ("x0.1", "outer.4"), ("x0.2", "x2.3"), ("x0.3", "x1.0"),
     ("x1.1", "x2.2"), ("x1.2", "outer.1"), ("x1.3", "outer.6"), ("x2.0", "outer.3"),
     ("x2.1", "outer.2")],
    [("x0.0", "x2.1"), ("x0.1", "x1.2"), ("x0.2", "outer.2"), ("x0.3", "outer.1"),
     ("x1.0", "outer.4"), ("x1.1", "outer.3"), ("x1.3", "x2.0"), ("x2.2", "outer.6"),
     ("x2.3", "outer.5")],
)


def delta_gadgets():
    """The two 6-point, 3-crossing diagrams related by a delta move."""
    return tuple(
        TangleDiagram(6, (), 3, [(Port.parse(a), Port.parse(b)) for a, b in g])
        for g in _GADGETS
    )


def delta_pair(template: TangleDiagram):
    """Fill the unique 6-point hole of ``template`` with each gadget.

    Any other holes are kept (filled with identities).
    """
    six = [i for i, m in enumerate(template.holes) if m == 6]
    if len(six) != 1:
        raise ArityError("template needs exactly one 6-point hole")
    out = []
    for g in delta_gadgets():
        args = [g if i == six[0] else identity(m) for i, m in enumerate(template.holes)]
        out.append(fill(template, args))
    return tuple(out)


def delta_skeleton(closed: bool = False, shift: int = 0) -> TangleDiagram:
    """A crossingless diagram with one 6-point hole, ready for :func:`delta_pair`.

    The ball version runs hole points 1, 2, 5, 6 out to outer points
    1, 2, 3, 4 and caps 3-4.  The closed version caps 2-3, 4-5, 6-1, so
    either gadget closes into a single circle.  ``shift`` rotates the
    hole labels.
    """

    def h(k):
        return _hole(1, (k - 1 + shift) % 6 + 1)

    if closed:
        return TangleDiagram(0, (6,), 0, [(h(2), h(3)), (h(4), h(5)), (h(6), h(1))])
    arcs = [(_outer(1), h(1)), (_outer(2), h(2)), (h(3), h(4)), (_outer(3), h(5)), (_outer(4), h(6))]
    return TangleDiagram(4, (6,), 0, arcs)


# --------------------------------------------------------------------------
# raw diagram files

_FIELDS = {"outer", "holes", "crossings", "arcs", "free_loops"}


def diagram_to_dict(d: TangleDiagram) -> dict:
    return {
        "outer": d.outer,
        "holes": list(d.holes),
        "crossings": d.crossings,
        "arcs": [[str(a), str(b)] for a, b in d.arcs],
        "free_loops": d.free_loops,
    }


def diagram_from_dict(obj) -> TangleDiagram:
    if not isinstance(obj, dict):
        raise ParseError("diagram must be a JSON object")
    unknown = set(obj) - _FIELDS
    if unknown:
        raise ParseError(f"unknown fields: {', '.join(sorted(unknown))}")
    for key in ("outer", "holes", "crossings", "arcs"):
        if key not in obj:
            raise ParseError(f"missing field {key!r}")
    try:
        arcs = [(Port.parse(a), Port.parse(b)) for a, b in obj["arcs"]]
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad arc list: {exc}") from None
    return TangleDiagram(
        int(obj["outer"]),
        tuple(int(m) for m in obj["holes"]),
        int(obj["crossings"]),
        arcs,
        int(obj.get("free_loops", 0)),
    )


def load_diagram(path) -> TangleDiagram:
    with open(path, encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from None
    return diagram_from_dict(obj)


def dump_diagram(d: TangleDiagram, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(diagram_to_dict(d), fh, indent=1)
        fh.write("\n")
