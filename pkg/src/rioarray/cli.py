"""Command line: ``rioarray {table,sequence,sheffer,verify}``.

Array specs::

    spec  := "inv(" spec ")" | "mul(" spec "," spec ")" | name ["[" param "]"]
    name  := pascal | catalan | shapiro | identity
    param := integer | integer "/" integer | "r"

``name[p]`` is the one-parameter array ``name * P(p)``, except ``pascal[p]``
which is ``P(p)`` itself. A whole spec of the form ``file:PATH`` loads a
triangle written by ``table --format json``.

Exit status: 0 success, 1 verification failure, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from . import catalog
from .exact import QQ, ZZ, ZZ_R, NotInvertibleError, PolyR, RingMismatchError, ring_of
from .identities import ALIASES, CHECKS, run_all, run_check
from .riordan import MalformedArrayError, RiordanArray, Triangle, group_mul, identity
from .series import NotRevertibleError
from .sheffer import sheffer_of

DEFAULT_MAX_DEPTH = 512


class UsageError(Exception):
    pass


# array-spec grammar

class _Parser:
    NAMES = ("pascal", "catalan", "shapiro", "identity")

    def __init__(self, text: str):
        self.text = text.replace(" ", "")
        self.pos = 0

    def error(self, msg: str):
        raise UsageError(f"bad array spec {self.text!r} at position {self.pos}: {msg}")

    def peek(self, s: str) -> bool:
        return self.text.startswith(s, self.pos)

    def expect(self, s: str):
        if not self.peek(s):
            self.error(f"expected {s!r}")
        self.pos += len(s)

    def word(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] in "_-/"):
            self.pos += 1
        return self.text[start:self.pos]

    def parse(self):
        node = self.spec()
        if self.pos != len(self.text):
            self.error("trailing input")
        return node

    def spec(self):
        if self.peek("inv("):
            self.pos += 4
            inner = self.spec()
            self.expect(")")
            return ("inv", inner)
        if self.peek("mul("):
            self.pos += 4
            a = self.spec()
            self.expect(",")
            b = self.spec()
            self.expect(")")
            return ("mul", a, b)
        name = self.word()
        if name not in self.NAMES:
            self.error(f"unknown array {name!r}")
        param = None
        if self.peek("["):
            self.pos += 1
            param = parse_param(self.word(), self)
            self.expect("]")
        return ("name", name, param)


def parse_param(s: str, parser: Optional[_Parser] = None):
    if s == "r":
        return catalog.R
    try:
        v = Fraction(s)
    except (ValueError, ZeroDivisionError):
        if parser is not None:
            parser.error(f"bad parameter {s!r}")
        raise UsageError(f"bad parameter {s!r}")
    return v.numerator if v.denominator == 1 else v


def parse_spec(text: str):
    return _Parser(text).parse()


def build_array(node, order: int) -> RiordanArray:
    kind = node[0]
    if kind == "inv":
        return build_array(node[1], order).inverse()
    if kind == "mul":
        return group_mul(build_array(node[1], order), build_array(node[2], order))
    _, name, param = node
    if name == "pascal":
        return catalog.pascal(1 if param is None else param, order)
    if name == "identity":
        base = identity(order)
    elif name == "catalan":
        base = catalog.catalan_C(order)
    else:
        base = catalog.shapiro_B(order)
    return base if param is None else catalog.r_riordan(base, param)


def load_triangle(path: str) -> Triangle:
    with open(path) as fh:
        doc = json.load(fh)
    rows = doc["rows"] if isinstance(doc, dict) else doc
    parsed = [[decode_value(c) for c in row] for row in rows]
    ring = ZZ
    kinds = {ring_of(c) for row in parsed for c in row}
    if ZZ_R in kinds:
        ring = ZZ_R
    elif QQ in kinds:
        ring = QQ
    return Triangle.from_rows(parsed, ring, doc.get("array", path) if isinstance(doc, dict) else path)


def resolve_triangle(spec: str, depth: int) -> Triangle:
    if spec.startswith("file:"):
        T = load_triangle(spec[5:])
        if depth > T.depth:
            raise UsageError(f"{spec} only has depth {T.depth}")
        return T.truncate(depth)
    node = parse_spec(spec)
    try:
        A = build_array(node, depth)
    except (NotInvertibleError, NotRevertibleError, MalformedArrayError) as exc:
        raise UsageError(f"cannot build {spec!r}: {exc} "
                         "(over ZZ[r] only constants +1 and -1 are invertible)")
    except RingMismatchError as exc:
        raise UsageError(f"cannot build {spec!r}: {exc}")
    T = A.to_triangle(depth)
    return Triangle(T.rows, T.ring, spec)


# value encoding

def fmt(c) -> str:
    if isinstance(c, Fraction) and c.denominator == 1:
        return str(c.numerator)
    return str(c)


def encode_value(c):
    if isinstance(c, PolyR):
        return [str(x) for x in c.coeffs]
    return fmt(c)


def decode_value(v):
    if isinstance(v, list):
        return PolyR(int(x) for x in v)
    if isinstance(v, int) and not isinstance(v, bool):
        return v
    f = Fraction(str(v))
    return f.numerator if f.denominator == 1 else f


# output

def render_table(T: Triangle, fmt_name: str, offset: int, spec: str) -> str:
    if fmt_name == "json":
        doc = {"array": spec, "depth": T.depth, "ring": T.ring.name,
               "rows": [[encode_value(c) for c in row] for row in T.rows]}
        return json.dumps(doc) + "\n"
    if fmt_name == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n"] + [str(k) for k in range(T.depth + 1)])
        for n, row in enumerate(T.rows):
            w.writerow([n] + [fmt(c) for c in row] + [""] * (T.depth - n))
        return buf.getvalue()
    if fmt_name == "bfile":
        flat = [c for row in T.rows for c in row]
        return render_bfile(flat, offset)
    cells = [[fmt(c) for c in row] for row in T.rows]
    widths = [max(len(cells[n][k]) for n in range(k, len(cells))) for k in range(len(cells))]
    return "".join(" ".join(c.rjust(widths[k]) for k, c in enumerate(row)) + "\n" for row in cells)


def render_bfile(values: Sequence, offset: int) -> str:
    lines = []
    for i, v in enumerate(values):
        if isinstance(v, PolyR) or (isinstance(v, Fraction) and v.denominator != 1):
            raise UsageError("b-file output needs integer values")
        lines.append(f"{i + offset} {fmt(v)}\n")
    return "".join(lines)


def render_sequence(values: Sequence, fmt_name: str, offset: int, meta: dict) -> str:
    if fmt_name == "json":
        return json.dumps(dict(meta, values=[encode_value(v) for v in values])) + "\n"
    if fmt_name == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "value"])
        for i, v in enumerate(values):
            w.writerow([i + offset, fmt(v)])
        return buf.getvalue()
    if fmt_name == "bfile":
        return render_bfile(values, offset)
    return " ".join(fmt(v) for v in values) + "\n"


def read_vector(path: str) -> List:
    with open(path) as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError:
        # b-file: "n a(n)" per line, '#' comments
        out = []
        for line in text.splitlines():
            line = line.strip()
            if line and not line.startswith("#"):
                out.append(decode_value(line.split()[1]))
        return out
    if isinstance(doc, dict):
        doc = doc["values"]
    return [decode_value(v) for v in doc]


def parse_vector(text: str) -> List:
    return [decode_value(t.strip()) for t in text.split(",") if t.strip()]


# commands

def _check_depth(args) -> int:
    if args.depth < 0:
        raise UsageError("depth must be non-negative")
    if args.depth > args.max_depth:
        raise UsageError(f"depth {args.depth} exceeds the cap {args.max_depth} (use --max-depth)")
    return args.depth


def cmd_table(args) -> int:
    depth = _check_depth(args)
    T = resolve_triangle(args.array, depth)
    sys.stdout.write(render_table(T, args.format, args.offset, args.array))
    return 0


def cmd_sequence(args) -> int:
    depth = _check_depth(args)
    T = resolve_triangle(args.array, depth)
    if args.column is not None:
        if not 0 <= args.column <= depth:
            raise UsageError(f"column {args.column} outside 0..{depth}")
        values, transform = T.column(args.column), f"column {args.column}"
    elif args.row_sums:
        values, transform = T.row_sums(), "row-sums"
    elif args.diagonal:
        values, transform = T.diagonal(), "diagonal"
    else:
        v = parse_vector(args.apply) if args.apply is not None else read_vector(args.apply_file)
        if len(v) < depth + 1:
            raise UsageError(f"vector has {len(v)} entries, need {depth + 1}")
        values, transform = T.apply_vector(v), "apply"
    meta = {"array": args.array, "transform": transform, "depth": depth}
    sys.stdout.write(render_sequence(values, args.format, args.offset, meta))
    return 0


def cmd_sheffer(args) -> int:
    depth = _check_depth(args)
    T = resolve_triangle(args.array, depth)
    x = parse_param(args.x)
    if isinstance(x, PolyR):
        raise UsageError("--x must be a number")
    if T.ring is ZZ_R and isinstance(x, Fraction):
        raise UsageError("symbolic arrays can only be evaluated at integer x")
    values = sheffer_of(T).values(x, signed_flip=args.signed_flip)
    meta = {"array": args.array, "x": fmt(x), "signed_flip": args.signed_flip, "depth": depth}
    sys.stdout.write(render_sequence(values, args.format, args.offset, meta))
    return 0


def cmd_verify(args) -> int:
    depth = _check_depth(args)
    params = {}
    if args.r is not None:
        params["r"] = int(args.r)
    if args.x is not None:
        x = parse_param(args.x)
        if isinstance(x, PolyR):
            raise UsageError("--x must be a number")
        params["x"] = x
    if args.name == "all":
        if params:
            raise UsageError("verify all takes no parameters")
        reports = run_all(depth)
    else:
        name = ALIASES.get(args.name, args.name)
        if name not in CHECKS:
            raise UsageError(f"unknown check {args.name!r}; choose from all, "
                             + ", ".join(list(CHECKS) + list(ALIASES)))
        try:
            reports = run_check(name, depth, **params)
        except TypeError as exc:
            raise UsageError(str(exc))
    if args.format == "json":
        sys.stdout.write(json.dumps([r.as_dict() for r in reports], indent=2) + "\n")
    else:
        for r in reports:
            sys.stdout.write(r.line() + "\n")
        failed = sum(not r.passed for r in reports)
        sys.stdout.write(f"{len(reports) - failed}/{len(reports)} passed\n")
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rioarray", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, default_depth, formats=("text", "csv", "json", "bfile")):
        sp.add_argument("--depth", type=int, default=default_depth, help="last row index")
        sp.add_argument("--max-depth", type=int, default=DEFAULT_MAX_DEPTH,
                        help="safety cap on --depth (default %(default)s)")
        sp.add_argument("--format", choices=formats, default="text")
        sp.add_argument("--offset", type=int, default=0, help="first index for b-file/CSV output")

    t = sub.add_parser("table", help="print a triangle")
    t.add_argument("array")
    common(t, 6)
    t.set_defaults(func=cmd_table)

    s = sub.add_parser("sequence", help="column, row sums, diagonal, or matrix-vector product")
    s.add_argument("array")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--column", type=int)
    g.add_argument("--row-sums", action="store_true")
    g.add_argument("--diagonal", action="store_true")
    g.add_argument("--apply", help="comma-separated vector")
    g.add_argument("--apply-file", help="JSON list, sequence JSON, or b-file")
    common(s, 10)
    s.set_defaults(func=cmd_sequence)

    h = sub.add_parser("sheffer", help="values p_n(x) of the row polynomials")
    h.add_argument("array")
    h.add_argument("--x", required=True, help="integer or p/q")
    h.add_argument("--signed-flip", action="store_true", help="multiply p_n by (-1)^n")
    common(h, 10)
    h.set_defaults(func=cmd_sheffer)

    v = sub.add_parser("verify", help="run identity checks")
    v.add_argument("name", help="check name, alias, or 'all'")
    v.add_argument("--r", type=int)
    v.add_argument("--x")
    common(v, 30, formats=("text", "json"))
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, OSError, ValueError, KeyError) as exc:
        msg = exc.args[0] if exc.args else exc
        print(f"rioarray: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
