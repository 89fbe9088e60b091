"""Command-line front end.

JSON is the default output; ``--pretty`` switches to a human-readable table
where one exists.  Exit codes: 0 success, 1 domain failure (a ``--verify``
mismatch or ``--require-rational`` on a non-rational tree), 2 usage or input
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence, TextIO

from . import arquiver, contraction, families, fundcycle, lattice, oracle, quotalg
from .dualgraph import Cycle, LabelledTree, TreeError, degree_census, parse_tree, serialize_tree


class UsageError(Exception):
    pass


class VerifyError(Exception):
    pass


def _dump(payload, out: TextIO) -> None:
    out.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")


def _read_tree(path: str) -> LabelledTree:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_tree(text)
    except TreeError as exc:
        raise UsageError(f"{path}: {exc.kind}: {exc}") from None


def _curves(tree: LabelledTree, spec: str | None) -> list[str]:
    if spec is None or spec == "":
        return []
    names = [c.strip() for c in spec.split(",") if c.strip()]
    unknown = [c for c in names if c not in tree]
    if unknown:
        raise UsageError(f"unknown curves: {', '.join(unknown)}")
    return names


def _frac(x: Fraction) -> str:
    return str(x)


def _write_file(path: str, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def _verify_fundcycle(tree: LabelledTree, zf: Cycle | None) -> None:
    form = lattice.intersection_matrix(tree)
    negdef = lattice.is_negative_definite(form)
    if not oracle.sample_definiteness(form) and negdef:
        raise VerifyError("definiteness: sampling found a non-negative vector but minors say definite")
    if zf is None:
        return
    cfg = oracle.OracleConfig()
    if len(tree) > cfg.max_vertices:
        # too large for enumeration: re-check the defining conditions instead
        if not fundcycle.in_ztop(tree, zf):
            raise VerifyError("fundamental cycle is not in Z_top")
        for i, v in enumerate(tree.vertices):
            if zf.coeffs[i] > 1 and fundcycle.in_ztop(tree, zf - Cycle.curve(tree, v)):
                raise VerifyError(f"fundamental cycle is not minimal at {v}")
        print(f"verify: {len(tree)} vertices, checked Z_top membership and local minimality",
              file=sys.stderr)
        return
    expected = oracle.brute_force_zmin(tree, cfg)
    if expected != zf:
        got = zf.as_dict()
        want = expected.as_dict() if expected is not None else None
        raise VerifyError(f"laufer {got} != brute force {want}")


def cmd_check(args, out: TextIO) -> int:
    tree = _read_tree(args.file)
    report = fundcycle.artin_check(tree)
    if args.verify:
        _verify_fundcycle(tree, report.fundamental_cycle)
    if args.pretty:
        for key, value in report.to_json().items():
            out.write(f"{key:18} {value}\n")
    else:
        _dump(report.to_json(), out)
    if args.require_rational and not report.is_rational:
        return 1
    return 0


def cmd_fundcycle(args, out: TextIO) -> int:
    tree = _read_tree(args.file)
    try:
        zf = fundcycle.laufer(tree)
    except lattice.NotNegativeDefiniteError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.verify:
        _verify_fundcycle(tree, zf)
    form = lattice.intersection_matrix(tree)
    dots = lattice.pairing_vector(form, zf)
    if args.pretty:
        width = max(len(v) for v in tree.vertices)
        out.write(f"{'curve':{width}}  w_i  a_i  Z.E_i\n")
        for v, w, a, d in zip(tree.vertices, tree.weights, zf.coeffs, dots):
            out.write(f"{v:{width}}  {w:3d}  {a:3d}  {d:5d}\n")
        out.write(f"Z.Z = {lattice.pair(form, zf, zf)}\n")
    else:
        _dump({"fundamental_cycle": zf.as_dict(), "pairings": dict(zip(tree.vertices, dots)),
               "self_pairing": lattice.pair(form, zf, zf)}, out)
    return 0


def cmd_discrepancy(args, out: TextIO) -> int:
    tree = _read_tree(args.file)
    curves = _curves(tree, args.curves)
    try:
        if args.curves is None:
            values = lattice.discrepancies(tree).as_dict()
        else:
            values = contraction.contraction_discrepancy(tree, curves)
    except lattice.NotNegativeDefiniteError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.verify:
        form = lattice.intersection_matrix(tree)
        sub = form.restrict(list(values))
        rhs = lattice.canonical_rhs([tree.weight(v) for v in values])
        x = list(values.values())
        if any(sum(m * xi for m, xi in zip(row, x)) != r for row, r in zip(sub.matrix, rhs)):
            raise VerifyError("discrepancy vector does not solve the adjunction system")
    if args.pretty:
        for v, d in values.items():
            out.write(f"{v}\t{_frac(d)}\n")
    else:
        _dump({v: _frac(d) for v, d in values.items()}, out)
    return 0


def _verify_contraction(tree: LabelledTree, result: contraction.ContractionResult) -> None:
    if len(result.quotient_vertices) != len(tree) - len(result.contracted):
        raise VerifyError("quotient vertex count is wrong")
    if result.s_subset_of_c:
        q = arquiver.ar_quiver(tree, result.contracted)
        if sorted(q.components()) != sorted(c.curves for c in result.components):
            raise VerifyError("AR quiver components differ from contracted components")
        for comp in result.components:
            sub = tree.induced(comp.curves)
            if comp.ade is not None and not oracle.sample_definiteness(sub):
                raise VerifyError(f"component {comp.curves} classified ADE but not definite")


def cmd_contract(args, out: TextIO) -> int:
    tree = _read_tree(args.file)
    curves = _curves(tree, args.curves)
    try:
        result = contraction.contract(tree, curves, place_points=len(curves) < len(tree))
    except contraction.ContractionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.verify:
        _verify_contraction(tree, result)
    if args.dot:
        dot = arquiver.emit_dot(arquiver.ar_quiver(tree, result.contracted))
        _write_file(args.dot, dot)
    if args.pretty:
        for comp in result.components:
            label = str(comp.ade) if comp.ade else "-"
            out.write(f"{','.join(comp.curves)}\t{label}\n")
        out.write(f"{result.n_module_label}\ninj.dim {result.inj_dim_prediction}\n")
    else:
        _dump(result.to_json(), out)
    return 0


def cmd_arquiver(args, out: TextIO) -> int:
    tree = _read_tree(args.file)
    curves = tree.vertices if args.curves is None else _curves(tree, args.curves)
    q = arquiver.ar_quiver(tree, curves)
    if args.verify:
        sub = tree.induced(curves)
        if len(q.arrows) != 2 * len(sub.edges):
            raise VerifyError("arrow count is not twice the edge count")
    if args.format == "dot":
        out.write(arquiver.emit_dot(q))
    else:
        _dump(q.to_json(), out)
    return 0


def _family_spec(args) -> families.FamilySpec:
    try:
        return families.FamilySpec(args.kind, n=args.n, series=args.series, rank=args.rank,
                                   m=args.m, q=args.q)
    except families.FamilyError as exc:
        raise UsageError(str(exc)) from None


def cmd_family(args, out: TextIO) -> int:
    tree = families.generate(_family_spec(args))
    if args.verify:
        report = fundcycle.artin_check(tree)
        if args.kind != "ADE" and not report.is_rational:
            raise VerifyError(f"generated {args.kind} tree is not rational")
        _verify_fundcycle(tree, report.fundamental_cycle)
    text = serialize_tree(tree)
    if args.output:
        _write_file(args.output, text)
    else:
        out.write(text)
    return 0


def cmd_hj(args, out: TextIO) -> int:
    try:
        chain = families.hj_chain(args.m, args.q)
    except families.FamilyError as exc:
        raise UsageError(str(exc)) from None
    if args.verify and oracle.continued_fraction_value(chain) != Fraction(args.m, args.q):
        raise VerifyError("continued fraction does not reproduce m/q")
    out.write(" ".join(str(w) for w in chain) + "\n")
    return 0


def cmd_lambda(args, out: TextIO) -> int:
    try:
        pres = quotalg.lambda_presentation(args.n, minimal=not args.non_minimal)
    except quotalg.PresentationError as exc:
        raise UsageError(str(exc)) from None
    if args.verify:
        if not quotalg.verify_minor_relations(args.n).all_zero:
            raise VerifyError("a 2x2 minor does not vanish")
        if not quotalg.relations_hold(args.n, minimal=not args.non_minimal):
            raise VerifyError("a relation fails in the monomial realisation")
    if args.pretty:
        for rel in pres.relations:
            out.write(f"{rel}\n")
    else:
        _dump(pres.to_json(), out)
    return 0


def cmd_census(args, out: TextIO) -> int:
    tree = _read_tree(args.file)
    report = families.taut_census(tree)
    if args.verify:
        if report.deg3_count != degree_census(tree).get(3, 0):
            raise VerifyError("degree-3 count disagrees with the degree census")
    if args.pretty:
        for key, value in report.to_json().items():
            out.write(f"{key:18} {value}\n")
    else:
        _dump(report.to_json(), out)
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verify", action="store_true",
                        help="re-run independent oracles and fail on mismatch")
    common.add_argument("--pretty", action="store_true", help="human-readable output")

    parser = _Parser(prog="ratsing", description=__doc__.splitlines()[0])
    # accepted before the subcommand as well; merged in run()
    parser.add_argument("--verify", dest="global_verify", action="store_true", help=argparse.SUPPRESS)
    parser.add_argument("--pretty", dest="global_pretty", action="store_true", help=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", parents=[common], help="rationality report for a tree file")
    p.add_argument("file")
    p.add_argument("--require-rational", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("fundcycle", parents=[common], help="fundamental cycle by Laufer's algorithm")
    p.add_argument("file")
    p.set_defaults(func=cmd_fundcycle)

    p = sub.add_parser("discrepancy", parents=[common], help="exact discrepancies")
    p.add_argument("file")
    p.add_argument("--curves", help="comma-separated curves of a partial contraction")
    p.set_defaults(func=cmd_discrepancy)

    p = sub.add_parser("contract", parents=[common], help="contract a set of curves")
    p.add_argument("file")
    p.add_argument("--curves", required=True, help="comma-separated curve names")
    p.add_argument("--dot", help="also write the AR quiver as DOT to this path")
    p.set_defaults(func=cmd_contract)

    p = sub.add_parser("arquiver", parents=[common], help="doubled dual graph of a contraction")
    p.add_argument("file")
    p.add_argument("--curves", help="comma-separated curve names (default: all)")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.set_defaults(func=cmd_arquiver)

    p = sub.add_parser("family", parents=[common], help="generate a named tree")
    p.add_argument("kind", choices=families.KINDS)
    p.add_argument("--n", type=int)
    p.add_argument("--series", choices=("A", "D", "E"))
    p.add_argument("--rank", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("hj", parents=[common], help="Hirzebruch-Jung chain of 1/m(1,q)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_hj)

    p = sub.add_parser("lambda", parents=[common], help="quiver presentation of Lambda_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--non-minimal", action="store_true",
                   help="emit the longer relation list instead of the minimal one")
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("census", parents=[common], help="tautness obstruction census")
    p.add_argument("file")
    p.set_defaults(func=cmd_census)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        args.verify = args.verify or args.global_verify
        args.pretty = args.pretty or args.global_pretty
        return args.func(args, out)
    except UsageError as exc:
        print(f"ratsing: {exc}", file=sys.stderr)
        return 2
    except VerifyError as exc:
        print(f"ratsing: verify failed: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
