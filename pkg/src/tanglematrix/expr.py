"""Tangle expressions: AST, parser, printer and elaboration to diagrams.

Grammar (whitespace is ignored)::

    expr := "I" | "zero" | "inf" | "circle" | "htwist(" int ")" | "vtwist(" int ")"
          | "fill(" expr ("," expr)* ")" | "compose(" expr "," expr ")"
          | ("hsum"|"vsum"|"ihsum"|"ivsum") "(" expr "," expr ")"
          | ("mirror"|"swap"|"r1"|"r2"|"rot"|"hflip"|"vflip") "(" expr ")"
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import diagram as dg
from .errors import ArityError, ParseError

__all__ = [
    "Expr",
    "ATOMS",
    "INT_PRIMS",
    "BINARY",
    "UNARY",
    "parse_expr",
    "to_text",
    "elaborate",
    "hole_count",
    "prim",
    "op",
]

ATOMS = ("I", "zero", "inf", "circle")
INT_PRIMS = ("htwist", "vtwist")
BINARY = ("compose", "hsum", "vsum", "ihsum", "ivsum")
UNARY = ("mirror", "swap", "r1", "r2", "rot", "hflip", "vflip")
KEYWORDS = set(ATOMS) | set(INT_PRIMS) | set(BINARY) | set(UNARY) | {"fill"}


@dataclass(frozen=True)
class Expr:
    head: str
    args: tuple = ()
    value: int | None = None

    def __str__(self):
        return to_text(self)


def prim(name, value=None):
    return Expr(name, (), value)


def op(name, *args):
    return Expr(name, tuple(args))


def to_text(e: Expr) -> str:
    if e.head in ATOMS:
        return e.head
    if e.head in INT_PRIMS:
        return f"{e.head}({e.value})"
    return f"{e.head}(" + ", ".join(to_text(a) for a in e.args) + ")"


_TOKEN = re.compile(r"\s*(-?\d+|[A-Za-z_][A-Za-z0-9_]*|\S)")


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = [(m.group(1), m.start(1)) for m in _TOKEN.finditer(text)]
        self.i = 0

    def peek(self):
        if self.i < len(self.toks):
            return self.toks[self.i]
        return ("", len(self.text))

    def take(self, expected=None):
        tok, pos = self.peek()
        if expected is not None and tok != expected:
            shown = repr(tok) if tok else "end of input"
            raise ParseError(f"expected {expected!r}, found {shown}", pos)
        if not tok:
            raise ParseError("unexpected end of input", pos)
        self.i += 1
        return tok, pos

    def integer(self):
        tok, pos = self.take()
        if not re.fullmatch(r"-?\d+", tok):
            raise ParseError(f"expected an integer, found {tok!r}", pos)
        return int(tok)

    def expr(self):
        tok, pos = self.take()
        if tok in ATOMS:
            return Expr(tok)
        if tok not in KEYWORDS:
            raise ParseError(f"unknown name {tok!r}", pos)
        self.take("(")
        if tok in INT_PRIMS:
            value = self.integer()
            self.take(")")
            return Expr(tok, (), value)
        args = [self.expr()]
        while self.peek()[0] == ",":
            self.take(",")
            args.append(self.expr())
        self.take(")")
        want = 1 if tok in UNARY else 2 if tok in BINARY else None
        if want is not None and len(args) != want:
            raise ParseError(f"{tok} takes {want} argument(s), got {len(args)}", pos)
        return Expr(tok, tuple(args))


def parse_expr(text: str) -> Expr:
    p = _Parser(text)
    e = p.expr()
    tok, pos = p.peek()
    if tok:
        raise ParseError(f"trailing input {tok!r}", pos)
    return e


def hole_count(e: Expr) -> int:
    """Number of holes of the elaborated diagram, without building it."""
    h = e.head
    if h == "I":
        return 1
    if h in ATOMS or h in INT_PRIMS:
        return 0
    if h == "fill":
        return sum(hole_count(a) for a in e.args[1:])
    if h == "compose":
        return 1
    if h in ("ihsum", "ivsum"):
        return 1
    if h in ("hsum", "vsum"):
        return hole_count(e.args[0]) + hole_count(e.args[1])
    return hole_count(e.args[0])


_BIN = {
    "compose": dg.compose,
    "hsum": dg.hsum,
    "vsum": dg.vsum,
    "ihsum": dg.ihsum,
    "ivsum": dg.ivsum,
}


def elaborate(e) -> dg.TangleDiagram:
    """Build the diagram of an expression (text or AST)."""
    if isinstance(e, str):
        e = parse_expr(e)
    h = e.head
    if h in ATOMS:
        return dg.make_primitive(h)
    if h in INT_PRIMS:
        return dg.make_primitive(h, e.value)
    subs = [elaborate(a) for a in e.args]
    if h == "fill":
        return dg.fill(subs[0], subs[1:])
    if h in _BIN:
        return _BIN[h](*subs)
    if h in UNARY:
        return dg.elementary(subs[0], h)
    raise ArityError(f"unknown operator {h!r}")
