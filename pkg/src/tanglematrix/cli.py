"""Command-line front end.

Exit status: 0 success, 1 parse or validation error, 2 size guard hit,
3 internal coherence failure.  ``check-*`` commands also exit 0 when
the verdict is negative; the verdict is in the report.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import algebra, coxeter
from .bracket import bracket
from .diagram import close, delta_pair, load_diagram
from .errors import CoherenceError, GuardExceeded, ParseError, TangleError
from .expr import elaborate, parse_expr, to_text
from .invariant import PMatrix, compute_F
from .synthesis import synthesize, verify_recipe

__all__ = ["main", "run", "build_parser", "parse_matrix"]


def parse_matrix(text: str) -> PMatrix:
    """Row-major "a,b;c,d" (or "p;q" for a column)."""
    try:
        rows = [[int(v) for v in row.split(",")] for row in text.split(";")]
    except ValueError:
        raise ParseError(f"bad matrix {text!r}; expected rows like 'a,b;c,d'") from None
    if len(rows) != 2:
        raise ParseError(f"matrix {text!r} must have exactly two rows")
    try:
        return PMatrix(rows)
    except TangleError as exc:
        raise ParseError(str(exc)) from None


def _pair(text: str):
    try:
        p, q = (int(v) for v in text.split(","))
    except ValueError:
        raise ParseError(f"bad pair {text!r}; expected 'p,q'") from None
    return p, q


def _diagram(args):
    if args.file:
        return load_diagram(args.file)
    return elaborate(parse_expr(args.expr))


def _source(p, required=True):
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("-e", "--expr", help="tangle expression")
    g.add_argument("-f", "--file", help="raw diagram file (JSON)")


class _ArgParser(argparse.ArgumentParser):
    # usage errors are input errors: exit 1, leaving 2 for the size guard
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = _ArgParser(prog="tanglematrix", description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bracket", help="bracket of a closed diagram or of a closure")
    _source(p)
    p.add_argument("--closure", choices=("numerator", "denominator"),
                   help="close a ball tangle first")

    p = sub.add_parser("invariant", help="the matrix invariant F")
    _source(p)

    p = sub.add_parser("compose", help="combine matrix invariants")
    p.add_argument("op", choices=("fill", "hsum", "vsum"))
    p.add_argument("matrices", nargs="+", metavar="MATRIX",
                   help="'a,b;c,d' style; for fill the head comes first")

    p = sub.add_parser("synthesize", help="ball tangle with invariant [p;q]")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)

    p = sub.add_parser("check-krebes", help="gcd divisibility for embedded tangles")
    p.add_argument("--pair", action="append", required=True, metavar="P,Q",
                   help="invariant [p;q] of an embedded tangle (repeatable)")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--magnitude", type=int, help="|<L>| of the ambient link")
    g.add_argument("-e", "--expr", help="closed link expression")
    g.add_argument("-f", "--file", help="closed link diagram file")

    p = sub.add_parser("check-mod4", help="determinant mod 4 obstruction")
    p.add_argument("-m", "--matrix", required=True)

    p = sub.add_parser("coxeter", help="reduce a word, optionally act on a matrix")
    p.add_argument("word")
    p.add_argument("-m", "--matrix")

    p = sub.add_parser("delta-test", help="mod 4 congruence across a delta move")
    p.add_argument("-f", "--file", required=True, help="template with one 6-point hole")
    return ap


def _cmd_bracket(args):
    d = _diagram(args)
    if args.closure:
        d = close(d, args.closure)
    z = bracket(d)
    text = f"bracket={z.magnitude}*A^{z.phase} det={abs(z)}"
    return {"magnitude": z.magnitude, "phase": z.phase, "det": abs(z)}, text


def _matrix_report(F: PMatrix):
    data = {"matrix": F.tolist()}
    text = str(F)
    if F.width == 2:
        v = algebra.det_mod4_class(F)
        data.update(det=v.det, mod4=v.cls, obstructed=v.obstructed)
        text += f" det={v.det} mod4={v.cls}"
    return data, text


def _cmd_invariant(args):
    return _matrix_report(compute_F(_diagram(args)))


def _cmd_compose(args):
    mats = [parse_matrix(m) for m in args.matrices]
    if args.op == "fill":
        F = algebra.compose_fill(mats[0], mats[1:])
    else:
        if len(mats) < 2:
            raise ParseError(f"{args.op} needs at least two matrices")
        F = mats[0]
        fn = algebra.hsum if args.op == "hsum" else algebra.vsum
        for m in mats[1:]:
            F = fn(F, m)
    return _matrix_report(F)


def _cmd_synthesize(args):
    r = synthesize(args.p, args.q)
    ok = verify_recipe(r, args.p, args.q)
    word = "verified" if ok else "NOT VERIFIED"
    return {"recipe": to_text(r), "verified": ok}, f"{to_text(r)}\n{word}"


def _cmd_krebes(args):
    pairs = [_pair(t) for t in args.pair]
    if args.magnitude is not None:
        mag = args.magnitude
    else:
        mag = abs(bracket(_diagram(args)))
    v = algebra.krebes_check(pairs, mag)
    return {"product": v.product, "magnitude": v.magnitude, "pass": v.ok}, str(v)


def _cmd_mod4(args):
    v = algebra.det_mod4_class(parse_matrix(args.matrix))
    data = {"det": v.det, "mod4": v.cls, "obstructed": v.obstructed, "square": v.square}
    return data, str(v)


def _cmd_coxeter(args):
    try:
        g = coxeter.reduce(args.word)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    data = {"word": args.word, "normal_form": str(g)}
    text = f"{args.word} = {g}"
    if args.matrix:
        m = coxeter.act(g, parse_matrix(args.matrix))
        data["image"] = m.tolist()
        text += f" -> {m}"
    return data, text


def _cmd_delta(args):
    t = load_diagram(args.file)
    d1, d2 = delta_pair(t)
    if d1.outer == 4 and all(m == 4 for m in d1.holes):
        a, b = compute_F(d1).entries(), compute_F(d2).entries()
    elif d1.is_closed:
        a, b = [bracket(d1).magnitude], [bracket(d2).magnitude]
    else:
        raise ParseError("template must close up or leave only 4-point boundaries")
    signs = algebra.congruence_signs(a, b)
    ok = bool(signs)
    data = {"first": list(a), "second": list(b), "signs": sorted(signs), "congruent": ok}
    word = "congruent" if ok else "NOT CONGRUENT"
    sign_txt = ",".join(f"{s:+d}" for s in sorted(signs)) or "none"
    return data, f"{list(a)} vs {list(b)} mod 4: {word} (sign {sign_txt})"


_COMMANDS = {
    "bracket": _cmd_bracket,
    "invariant": _cmd_invariant,
    "compose": _cmd_compose,
    "synthesize": _cmd_synthesize,
    "check-krebes": _cmd_krebes,
    "check-mod4": _cmd_mod4,
    "coxeter": _cmd_coxeter,
    "delta-test": _cmd_delta,
}


def run(args, out=None, err=None) -> int:
    """Execute parsed arguments; return the exit status."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        data, text = _COMMANDS[args.command](args)
    except GuardExceeded as exc:
        print(f"error: {exc}", file=err)
        return 2
    except CoherenceError as exc:
        print(f"internal error: {exc}", file=err)
        return 3
    except (TangleError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return 1
    if args.json:
        print(json.dumps(data, sort_keys=True), file=out)
    else:
        print(text, file=out)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return run(args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
