"""Command-line front end.

stdout carries data, stderr carries diagnostics of the form
``error[CODE]: message``. Exit status is 0 on success, 1 on usage errors and
2 when a computation cannot be carried out.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Sequence

from .claims import render_report, run_claims
from .composed import (
    CertificationError,
    Orientation,
    RationalMap,
    certify_monotone_bijection,
    composed_gram,
    cubic_map,
    exact_diagonal,
    identity_map,
    mobius_map,
)
from .extremal import solve_extremal
from .families import FamilyKind, family, min_index
from .kernels import KernelSpec, SpanError, christoffel_darboux, kernel_in_x
from .numeric import format_rational, parse_rational
from .poly import Interval, NotDivisible, Polynomial, isolate_roots
from .quadrature import QuadratureError, tanh_sinh_rule
from .weighted import FAMILY_WEIGHT, NotReducible, WeightKind, gram_matrix

FAMILY_SYMBOL = {FamilyKind.LEGENDRE: "L", FamilyKind.PIPCIR: "Q", FamilyKind.POLAR: "P"}


class UsageError(Exception):
    pass


class ComputationError(Exception):
    def __init__(self, code: str, message: str):
        self.code = code
        super().__init__(message)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def emit_plot_data(poly: Polynomial, grid: int) -> str:
    """Two whitespace-separated columns x y on an even grid over [-1, 1]."""
    if grid < 2:
        raise UsageError("--grid must be >= 2")
    lines = []
    for i in range(grid):
        x = Fraction(-1) + Fraction(2 * i, grid - 1)
        lines.append(f"{float(x)!r} {float(poly(x))!r}")
    return "\n".join(lines) + "\n"


def _plot_blocks(blocks: list[tuple[str, Polynomial]], grid: int) -> str:
    # blank-line separated blocks, one per curve (gnuplot "index")
    return "\n\n".join(f"# {label}\n" + emit_plot_data(p, grid) for label, p in blocks)


def _indices(text: str | None) -> list[int] | None:
    """Comma list of indices; ``a-b`` expands to an inclusive range."""
    if text is None:
        return None
    out = []
    try:
        for part in filter(None, (t.strip() for t in text.split(","))):
            lo, _, hi = part.partition("-")
            out.extend(range(int(lo), int(hi or lo) + 1))
    except ValueError:
        raise UsageError(f"bad --indices {text!r}") from None
    if not out:
        raise UsageError("--indices is empty")
    return out


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}") from None


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv(rows: list[list], header: list[str]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


# subcommands


def cmd_table(args) -> str:
    kind = FamilyKind(args.family)
    lo = max(min_index(kind), args.min if args.min is not None else min_index(kind))
    polys = [(n, family(kind, n)) for n in range(lo, args.max + 1)]
    sym = FAMILY_SYMBOL[kind]
    if args.grid is not None:
        return _plot_blocks([(f"{sym}_{n}", p) for n, p in polys], args.grid)
    if args.format == "csv":
        rows = [[n, k, c.numerator, c.denominator] for n, p in polys for k, c in enumerate(p.coeffs)]
        return _csv(rows, ["n", "k", "num", "den"])
    if args.format == "json":
        return _dump_json({
            "family": kind.value,
            "polynomials": {str(n): [format_rational(c) for c in p.coeffs] for n, p in polys},
        })
    return "".join(f"{sym}_{n} = {p}\n" for n, p in polys)


def cmd_gram(args) -> str:
    kind = FamilyKind(args.family)
    if kind not in FAMILY_WEIGHT and args.weight is None:
        raise UsageError(f"--weight is required for the {kind.value} family")
    weight = WeightKind(args.weight) if args.weight else FAMILY_WEIGHT[kind]
    indices = _indices(args.indices) or list(range(max(min_index(kind), 1), args.max + 1))
    if min(indices) < min_index(kind):
        raise UsageError(f"{kind.value} indices start at {min_index(kind)}")
    matrix = gram_matrix(kind, weight, indices)
    bad = [(indices[i], indices[j]) for i in range(len(indices)) for j in range(i, len(indices))
           if matrix[i][j] is None]
    if bad:
        pairs = ", ".join(f"({a}, {b})" for a, b in bad)
        raise ComputationError("NOT_REDUCIBLE", f"weight {weight.value} is singular for pairs {pairs}")
    cells = [[format_rational(v) for v in row] for row in matrix]
    if args.format == "json":
        return _dump_json({"family": kind.value, "weight": weight.value, "indices": indices, "matrix": cells})
    if args.format == "csv":
        rows = [[indices[i], indices[j], cells[i][j]] for i in range(len(indices)) for j in range(len(indices))]
        return _csv(rows, ["n", "m", "value"])
    width = max(len(c) for row in cells for c in row)
    return "".join(" ".join(c.rjust(width) for c in row) + "\n" for row in cells)


def cmd_kernel(args) -> str:
    indices = _indices(args.indices) or list(range(1, args.max + 1))
    spec = KernelSpec(tuple(indices))
    y = _rational(args.y)
    slice_ = kernel_in_x(spec, y)
    if args.grid is not None:
        return _plot_blocks([(f"K(x, {format_rational(y)})", slice_)], args.grid)
    out = {"indices": list(spec.indices), "y": format_rational(y), "slice": [format_rational(c) for c in slice_.coeffs]}
    if args.x is not None:
        x = _rational(args.x)
        out["x"] = format_rational(x)
        out["value"] = format_rational(slice_(x))
        if spec.is_contiguous() and spec.indices[0] == 1:
            out["christoffel_darboux"] = format_rational(christoffel_darboux(spec, x, y))
    if args.format == "json":
        return _dump_json(out)
    if args.format == "csv":
        return _csv([[k, c] for k, c in enumerate(out["slice"])], ["k", "coefficient"])
    lines = [f"K(x, {out['y']}) = {slice_}"]
    if "value" in out:
        lines.append(f"K({out['x']}, {out['y']}) = {out['value']}")
    if "christoffel_darboux" in out:
        lines.append(f"closed form = {out['christoffel_darboux']}")
    return "\n".join(lines) + "\n"


def cmd_extremal(args) -> str:
    indices = _indices(args.indices) or list(range(2, args.max + 1))
    try:
        sol = solve_extremal(indices)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.grid is not None:
        return _plot_blocks([("minimizer", sol.minimizer)], args.grid)
    coeffs = {str(k): format_rational(a) for k, a in sorted(sol.coefficients.items())}
    if args.format == "json":
        return _dump_json({"M": format_rational(sol.minimum), "coefficients": coeffs})
    if args.format == "csv":
        return _csv([[k, a] for k, a in coeffs.items()], ["k", "coefficient"])
    lines = [f"M = {format_rational(sol.minimum)}"]
    lines += [f"a_{k} = {a}" for k, a in coeffs.items()]
    lines.append(f"f(x) = {sol.minimizer}")
    return "\n".join(lines) + "\n"


def _map_from_args(args) -> RationalMap:
    if args.map == "identity":
        return identity_map()
    if args.map == "cubic":
        return cubic_map()
    try:
        a, b, c, d = (_rational(t) for t in args.mobius.split(","))
    except ValueError:
        raise UsageError("--mobius expects a,b,c,d") from None
    try:
        return mobius_map(a, b, c, d)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_composed(args) -> str:
    f = _map_from_args(args)
    orientation = Orientation(args.orientation)
    try:
        certify_monotone_bijection(f)
    except CertificationError as exc:
        raise ComputationError("NOT_MONOTONE", str(exc)) from None
    rule = tanh_sinh_rule(args.level, args.precision)
    try:
        gram = composed_gram(f, orientation, args.max, rule=rule)
    except QuadratureError as exc:
        raise ComputationError("QUADRATURE", str(exc)) from None
    indices = list(range(1, args.max + 1))
    exact = [float(v) for v in exact_diagonal(indices)]
    off = max((abs(gram[i][j]) for i in range(len(indices)) for j in range(len(indices)) if i != j), default=0.0)
    diag = max(abs(gram[i][i] - exact[i]) for i in range(len(indices)))
    if args.format == "json":
        return _dump_json({"map": args.map, "orientation": orientation.value, "indices": indices,
                           "matrix": gram, "max_offdiagonal": off, "max_diagonal_error": diag})
    if args.format == "csv":
        rows = [[indices[i], indices[j], repr(gram[i][j])] for i in range(len(indices)) for j in range(len(indices))]
        return _csv(rows, ["n", "m", "value"])
    lines = [" ".join(f"{v: .6e}" for v in row) for row in gram]
    lines.append(f"max |off-diagonal| = {off:.3e}")
    lines.append(f"max |diagonal - exact norm| = {diag:.3e}")
    return "\n".join(lines) + "\n"


def cmd_roots(args) -> str:
    kind = FamilyKind(args.family)
    n = args.n if args.n is not None else args.max
    if n < max(min_index(kind), 1):
        raise UsageError(f"no roots to isolate for {kind.value} n = {n}")
    p = family(kind, n)
    width = Fraction(1, 10 ** args.precision)
    # (lo, hi] convention: start just left of -1 so a root at -1 is kept
    boxes = isolate_roots(p, Interval(Fraction(-3, 2), 1), width)
    boxes = [iv for iv in boxes if iv.hi >= -1]
    rows = [(format_rational(iv.lo), format_rational(iv.hi), float(iv.mid)) for iv in boxes]
    if args.format == "json":
        return _dump_json({"family": kind.value, "n": n,
                           "roots": [{"lo": lo, "hi": hi, "approx": m} for lo, hi, m in rows]})
    if args.format == "csv":
        return _csv([list(r) for r in rows], ["lo", "hi", "approx"])
    return "".join(f"({lo}, {hi}]  ~ {m!r}\n" for lo, hi, m in rows)


def cmd_claims(args) -> str:
    return render_report(run_claims(args.max_n), args.format)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"], default="text")
    common.add_argument("--precision", type=int, default=50, help="decimal digits")
    common.add_argument("--grid", type=int, help="emit (x, y) plot columns with this many points")

    parser = _Parser(prog="polar-legendre", description="Exact polar Legendre toolkit")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    families = [k.value for k in FamilyKind]

    p = sub.add_parser("table", parents=[common], help="coefficient tables")
    p.add_argument("--family", choices=families, default="pipcir")
    p.add_argument("--max", type=int, default=6)
    p.add_argument("--min", type=int)
    p.set_defaults(run=cmd_table)

    p = sub.add_parser("gram", parents=[common], help="exact Gram matrices")
    p.add_argument("--family", choices=families, default="polar")
    p.add_argument("--weight", choices=[w.value for w in WeightKind])
    p.add_argument("--max", type=int, default=6)
    p.add_argument("--indices")
    p.set_defaults(run=cmd_gram)

    p = sub.add_parser("kernel", parents=[common], help="reproducing kernel values")
    p.add_argument("--max", type=int, default=4)
    p.add_argument("--indices")
    p.add_argument("--x")
    p.add_argument("--y", default="0")
    p.set_defaults(run=cmd_kernel)

    p = sub.add_parser("extremal", parents=[common], help="constrained minimum")
    p.add_argument("--max", type=int, default=4)
    p.add_argument("--indices")
    p.set_defaults(run=cmd_extremal)

    p = sub.add_parser("composed", parents=[common], help="Gram matrix of P_n o f")
    p.add_argument("--map", choices=["identity", "cubic", "mobius"], default="cubic")
    p.add_argument("--mobius", default="3,1,1,3")
    p.add_argument("--orientation", choices=[o.value for o in Orientation], default="as-orthogonality")
    p.add_argument("--max", type=int, default=8)
    p.add_argument("--level", type=int, default=7)
    p.set_defaults(run=cmd_composed)

    p = sub.add_parser("roots", parents=[common], help="isolate real roots in [-1, 1]")
    p.add_argument("--family", choices=families, default="pipcir")
    p.add_argument("--n", type=int)
    p.add_argument("--max", type=int, default=6)
    p.set_defaults(run=cmd_roots)

    p = sub.add_parser("claims", parents=[common], help="audit report")
    p.add_argument("--max-n", "--max", dest="max_n", type=int, default=12)
    p.set_defaults(run=cmd_claims)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        if args.precision < 1 or (hasattr(args, "max") and args.max is not None and args.max < 0):
            raise UsageError("numeric flags must be positive")
        if args.command == "claims" and args.max_n < 4:
            raise UsageError("--max-n must be >= 4")
        out = args.run(args)
    except UsageError as exc:
        print(f"error[USAGE]: {exc}", file=sys.stderr)
        return 1
    except ComputationError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 2
    except NotReducible as exc:
        print(f"error[NOT_REDUCIBLE]: {exc}", file=sys.stderr)
        return 2
    except (SpanError, NotDivisible, ArithmeticError) as exc:
        print(f"error[ARITHMETIC]: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error[DOMAIN]: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return 0
