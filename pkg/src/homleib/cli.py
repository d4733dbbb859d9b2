"""Command-line front end.

Exit codes: 0 success (documented divergences included), 1 axiom or identity
failure, 2 input error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import AxiomError, format_vector
from .audit import audit_worked_example
from .complexes import DEFAULT_CAP, ResourceCapError, TensorBasis, cohomology, homology_dims
from .cup import CupContext, cup, square_zero_signature
from .io import AlgebraFile, InputError, load_algebra
from .shuffles import enumerate_shuffles, rho, sign
from .suite import run_identity_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3
SHUFFLE_TABLE_LIMIT = 8

LEIBNIZ_KINDS = ("hom_leibniz", "hom_lie")


class Failure(Exception):
    """An axiom check failed; the message carries the witness."""


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


class Output:
    def __init__(self, command: list[str], as_json: bool):
        self.as_json = as_json
        self.data: dict = {"command": command}
        self.text: list[str] = []

    def line(self, s: str = "") -> None:
        self.text.append(s)

    def emit(self, status: int) -> int:
        if self.as_json:
            self.data["exit_status"] = status
            print(json.dumps(_jsonable(self.data), indent=2, sort_keys=False))
        else:
            print("\n".join(self.text))
        return status


# -- loading -------------------------------------------------------------------------

def _load_pair(path_l: str, path_a: str, out: Output) -> tuple[AlgebraFile, AlgebraFile]:
    fl, fa = load_algebra(path_l), load_algebra(path_a)
    if fl.kind not in LEIBNIZ_KINDS:
        raise InputError(f"{path_l}: declared kind {fl.kind!r}, expected hom_leibniz")
    if fa.kind != "hom_associative":
        raise InputError(f"{path_a}: declared kind {fa.kind!r}, expected hom_associative")
    out.data["fixtures"] = [fl.name, fa.name]
    return fl, fa


def _require_valid(f: AlgebraFile, role: str, out: Output, kind: str | None = None) -> None:
    """Verify the axioms a computation needs; a failure ends the run with exit 1."""
    target = AlgebraFile(f.name, kind or f.kind, f.spec)
    for rep in target.verify():
        if not rep.passed:
            out.line(f"[FAIL] {role} {f.name}: {rep.describe()}")
            out.data.setdefault("failures", []).append(rep.describe())
            raise Failure(rep.describe())


def _cochain_text(f, symbol: str = "a") -> str:
    basis = TensorBasis(f.base_dim, f.degree)
    parts = []
    for k, tup in enumerate(basis.tuples()):
        v = f.matrix.column(k)
        if any(v):
            parts.append(f"({','.join(f'e{i + 1}' for i in tup)}) -> {format_vector(v, symbol)}")
    return "; ".join(parts) if parts else "0"


def _cochain_json(f) -> dict:
    basis = TensorBasis(f.base_dim, f.degree)
    out = {}
    for k, tup in enumerate(basis.tuples()):
        v = f.matrix.column(k)
        if any(v):
            out[",".join(str(i + 1) for i in tup)] = [str(c) for c in v]
    return out


# -- commands ------------------------------------------------------------------------

def cmd_verify(args, out: Output) -> int:
    f = load_algebra(args.path)
    out.data["fixtures"] = [f.name]
    out.line(f"{f.name}: kind {f.kind}, dim {f.spec.dim}")
    reports = f.verify()
    out.data["checks"] = [{"name": r.name, "passed": r.passed, "report": r.describe()} for r in reports]
    for r in reports:
        out.line(("[PASS] " if r.passed else "[FAIL] ") + r.describe())
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_homology(args, out: Output) -> int:
    f = load_algebra(args.path)
    out.data["fixtures"] = [f.name]
    if f.kind not in LEIBNIZ_KINDS:
        raise InputError(f"{args.path}: declared kind {f.kind!r}, expected hom_leibniz")
    _require_valid(f, "L", out, "hom_leibniz")
    rep = homology_dims(f.spec, args.max_degree, args.cap)
    out.data["homology"] = rep.as_dict()
    out.line(f"homology of {f.name} up to degree {args.max_degree}")
    out.line(f"{'n':>3} {'dim C_n':>8} {'rank d_n':>9} {'ker d_n':>8} {'im d_n+1':>9} {'HL_n':>5}")
    for r in rep.rows:
        out.line(f"{r.degree:>3} {r.dim:>8} {r.rank:>9} {r.kernel_dim:>8} {r.image_dim:>9} {r.homology_dim:>5}")
    return EXIT_OK


def cmd_cohomology(args, out: Output) -> int:
    fl, fa = _load_pair(args.path_l, args.path_a, out)
    _require_valid(fl, "L", out, "hom_leibniz")
    _require_valid(fa, "A", out)
    if args.max_degree < 1:
        out.data["cohomology"] = {"kind": "cohomology", "degrees": []}
        out.line(f"cohomology of {fl.name} with coefficients in {fa.name}: empty table")
        return EXIT_OK
    rep = cohomology(fl.spec, fa.spec, args.max_degree, args.cap).report
    out.data["cohomology"] = rep.as_dict()
    out.line(f"cohomology of {fl.name} with coefficients in {fa.name} up to degree {args.max_degree}")
    out.line(f"{'n':>3} {'dim CL^n':>9} {'rank':>5} {'Z^n':>5} {'B^n':>5} {'HL^n':>5}")
    for r in rep.rows:
        out.line(f"{r.degree:>3} {r.dim:>9} {r.rank:>5} {r.kernel_dim:>5} {r.image_dim:>5} {r.homology_dim:>5}")
    return EXIT_OK


def cmd_cup(args, out: Output) -> int:
    fl, fa = _load_pair(args.path_l, args.path_a, out)
    _require_valid(fl, "L", out, "hom_leibniz")
    _require_valid(fa, "A", out)
    n, m = args.deg
    if n < 1 or m < 1:
        raise InputError("--deg needs two degrees >= 1")
    top = 2 * max(n, m)
    ctx = CupContext(fl.spec, fa.spec, cap=args.cap)
    coh = cohomology(fl.spec, fa.spec, top, args.cap)
    reps = {d: coh.representative_cochains(d) for d in sorted({n, m})}
    out.line(f"cup products HL^{n} x HL^{m} -> HL^{n + m} for {fl.name} with coefficients in {fa.name}")
    out.data["representatives"] = {}
    for d, rs in reps.items():
        out.line(f"HL^{d}: dimension {len(rs)}")
        out.data["representatives"][str(d)] = [_cochain_json(r) for r in rs]
        for i, r in enumerate(rs, start=1):
            out.line(f"  [{d}.{i}] {_cochain_text(r)}")
    target = coh.representative_cochains(n + m)
    out.line(f"HL^{n + m}: dimension {len(target)}")
    for i, r in enumerate(target, start=1):
        out.line(f"  [{n + m}.{i}] {_cochain_text(r)}")
    out.line(f"products, as coordinates in the HL^{n + m} representatives:")
    table = []
    for i, f in enumerate(reps[n], start=1):
        for j, g in enumerate(reps[m], start=1):
            coords = coh.class_coordinates(cup(ctx, f, g))
            table.append({"left": f"{n}.{i}", "right": f"{m}.{j}", "class": [str(c) for c in coords]})
            out.line(f"  [{n}.{i}] u [{m}.{j}] = ({', '.join(str(c) for c in coords)})")
    if not table:
        out.line("  (empty product table)")
    out.data["products"] = table
    sig = square_zero_signature(ctx, max(n, m), coh)
    out.data["square_zero_signature"] = [s.as_dict() for s in sig]
    out.line("square-zero signature:")
    for s in sig:
        out.line(f"  degree {s.degree}: {s.class_count_checked} classes, all squares zero: {s.all_squares_zero}")
    return EXIT_OK


def cmd_check_identities(args, out: Output) -> int:
    fl, fa = _load_pair(args.path_l, args.path_a, out)
    k = args.max_total_degree
    report = run_identity_suite(fl.spec, fa.spec, k, args.seed, args.cap)
    out.data.update(report.as_dict())
    out.line(f"identity suite for {fl.name} with coefficients in {fa.name}, total degree <= {k}, seed {args.seed}")
    out.text.extend(report.render())
    return EXIT_FAIL if report.failed else EXIT_OK


def cmd_paper_fixtures(args, out: Output) -> int:
    report = audit_worked_example()
    out.data["fixtures"] = ["paper_L", "paper_A"]
    out.data["audit"] = report.as_dict()
    out.line("worked example: paper_L with coefficients in paper_A, f(e1) = 0, f(e2) = a2 - a1")
    out.text.extend(report.render())
    return EXIT_OK


def cmd_shuffle_table(args, out: Output) -> int:
    n, m = args.n, args.m
    if n < 0 or m < 0 or n + m < 1:
        raise InputError("need n, m >= 0 and n + m >= 1")
    if n + m > SHUFFLE_TABLE_LIMIT:
        raise ResourceCapError(f"shuffle tables are limited to n + m <= {SHUFFLE_TABLE_LIMIT}")
    rows = [{"shuffle": list(s.images), "sign": int(sign(s))} for s in enumerate_shuffles(n, m)]
    out.data["shuffles"] = rows
    out.line(f"({n},{m})-shuffles: {len(rows)}")
    for r in rows:
        out.line(f"  {' '.join(map(str, r['shuffle']))}   sign {r['sign']:+d}")
    if n >= 1:
        terms = rho(n, m).terms
        out.data["rho"] = [{"coefficient": str(c), "permutation": list(p.images)} for c, p in terms]
        out.line(f"rho_({n},{m}): {len(terms)} terms (one-line images, acting by inverse image on slots)")
        for c, p in terms:
            out.line(f"  {'+' if c > 0 else '-'}{'' if abs(c) == 1 else abs(c)} [{' '.join(map(str, p.images))}]")
    else:
        out.line("rho_(0,m) is not defined: rho needs n >= 1")
    return EXIT_OK


# -- parser --------------------------------------------------------------------------

def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    def d(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
    parser.add_argument("--max-degree", type=int, default=d(3), help="top degree (default 3)")
    parser.add_argument("--seed", type=int, default=d(0), help="seed for random cochains (default 0)")
    parser.add_argument("--cap", type=int, default=d(DEFAULT_CAP),
                        help=f"largest number of coordinates allowed (default {DEFAULT_CAP})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="homleib",
                                     description="Exact (co)homology and cup products of Hom-Leibniz algebras")
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check the axioms of the declared kind")
    p.add_argument("path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("homology", parents=[common], help="dimensions of HL_n")
    p.add_argument("path")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("cohomology", parents=[common], help="dimensions of CL^n and HL^n")
    p.add_argument("path_l")
    p.add_argument("path_a")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("cup", parents=[common], help="cup products of cohomology representatives")
    p.add_argument("path_l")
    p.add_argument("path_a")
    p.add_argument("--deg", type=int, nargs=2, metavar=("N", "M"), default=[1, 1])
    p.set_defaults(func=cmd_cup)

    p = sub.add_parser("check-identities", parents=[common], help="run the identity suite")
    p.add_argument("path_l")
    p.add_argument("path_a")
    p.add_argument("--max-total-degree", type=int, default=4)
    p.set_defaults(func=cmd_check_identities)

    p = sub.add_parser("paper-fixtures", parents=[common], help="audit the worked example")
    p.set_defaults(func=cmd_paper_fixtures)

    p = sub.add_parser("shuffle-table", parents=[common], help="list (n,m)-shuffles and rho_(n,m)")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_shuffle_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    args = build_parser().parse_args(argv)
    if args.cap < 1:
        print("error: --cap must be positive", file=sys.stderr)
        return EXIT_INPUT
    out = Output(["homleib", *argv], args.json)
    try:
        status = args.func(args, out)
    except InputError as exc:
        out.data["error"] = str(exc)
        print(f"error: {exc}", file=sys.stderr)
        return out.emit(EXIT_INPUT) if args.json else EXIT_INPUT
    except ResourceCapError as exc:
        out.data["error"] = str(exc)
        print(f"resource cap: {exc}", file=sys.stderr)
        return out.emit(EXIT_CAP) if args.json else EXIT_CAP
    except (Failure, AxiomError) as exc:
        if isinstance(exc, AxiomError):
            out.line(f"[FAIL] {exc}")
            out.data.setdefault("failures", []).append(str(exc))
        status = EXIT_FAIL
    return out.emit(status)


if __name__ == "__main__":
    sys.exit(main())
