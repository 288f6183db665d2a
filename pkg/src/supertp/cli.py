"""Command-line entry point: ``supertp verify|search|eval|catalog``.

Exit codes: 0 all checks passed, 1 violation or witness found, 2 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .brackets import TPStructure
from .dsl import parse_spec
from .errors import SuperAlgebraError
from .identities import (
    SamplerConfig,
    builtin_catalog,
    get_template,
    search_counterexample,
    verify,
)
from .identities.verify import describe_context

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="supertp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def context_args(p):
        p.add_argument("identity", help="template name (see 'catalog')")
        p.add_argument("--spec", required=True, type=Path, help="spec file")
        p.add_argument("--structure", help="bracket derivation, optionally ',ternary derivation'")
        p.add_argument("--delta", help="odd derivation generating the vector fields")
        p.add_argument("--json", action="store_true", help="emit the JSON report")

    v = sub.add_parser("verify", help="check an identity on seeded random samples")
    context_args(v)
    v.add_argument("--samples", type=int, default=100)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--max-degree", type=int, default=2, help="max even degree per monomial")
    v.add_argument("--max-monomials", type=int, default=3)
    v.add_argument("--coeff-bound", type=int, default=3)

    s = sub.add_parser("search", help="exhaustive counterexample search")
    context_args(s)
    s.add_argument("--degree-bound", type=int, default=2)
    s.add_argument("--max-terms", type=int, default=2,
                   help="terms per candidate for slots the identity is nonlinear in")

    e = sub.add_parser("eval", help="print an expression in canonical form")
    e.add_argument("--spec", required=True, type=Path)
    e.add_argument("--expr", required=True)
    e.add_argument("--algebra", help="algebra to evaluate in (default: last declared)")

    c = sub.add_parser("catalog", help="list built-in identities")
    c.add_argument("--json", action="store_true")
    return parser


def _load_context(args):
    model = parse_spec(args.spec.read_text(encoding="utf-8"))
    structure = delta = None
    if args.structure:
        names = [n.strip() for n in args.structure.split(",")]
        if not 1 <= len(names) <= 2 or not all(names):
            raise SuperAlgebraError("--structure takes 'bracketDer' or 'bracketDer,ternaryDer'")
        bracket = model.derivation(names[0])
        ternary = model.derivation(names[1]) if len(names) == 2 else None
        structure = TPStructure(bracket.signature, bracket, ternary)
    if args.delta:
        delta = model.derivation(args.delta)
    return structure, delta


def _emit(report, as_json: bool, out):
    if as_json:
        json.dump(report.to_json(), out, indent=2)
        out.write("\n")
        return
    out.write(f"identity:  {report.identity}\n")
    out.write(f"structure: {report.structure}\n")
    if report.holds:
        out.write(f"status:    holds on {report.samples} samples "
                  f"(seed {report.seed}, {report.parity_sweeps} parity assignments)\n")
    else:
        out.write(f"status:    violated on {len(report.violations)} of {report.samples}\n")
        for v in sorted(report.violations, key=lambda v: v.index)[:5]:
            args = ", ".join(str(x) for x in v.inputs)
            out.write(f"  #{v.index}: ({args}) -> {v.residual}\n")
    for note in report.notes:
        out.write(f"note:      {note}\n")


def _cmd_verify(args, out) -> int:
    structure, delta = _load_context(args)
    template = get_template(args.identity)
    config = SamplerConfig(
        max_monomials=args.max_monomials,
        max_even_degree=args.max_degree,
        coefficient_bound=args.coeff_bound,
        seed=args.seed,
    )
    if args.samples < 0:
        raise SuperAlgebraError("--samples must be >= 0")
    report = verify(template, structure, config, samples=args.samples, delta=delta)
    _emit(report, args.json, out)
    return EXIT_OK if report.holds else EXIT_VIOLATION


def _cmd_search(args, out) -> int:
    structure, delta = _load_context(args)
    template = get_template(args.identity)
    if args.degree_bound < 0:
        raise SuperAlgebraError("--degree-bound must be >= 0")
    result = search_counterexample(template, structure, args.degree_bound, delta=delta,
                                   max_terms=args.max_terms)
    report = result.to_report(describe_context(structure, delta))
    report.notes.append(f"exhaustive search, total degree <= {args.degree_bound}, "
                        f"{result.examined} tuples examined")
    if args.json:
        _emit(report, True, out)
    else:
        out.write(str(result) + "\n")
        for note in report.notes:
            out.write(f"note: {note}\n")
    return EXIT_VIOLATION if result.found else EXIT_OK


def _cmd_eval(args, out) -> int:
    model = parse_spec(args.spec.read_text(encoding="utf-8"))
    out.write(str(model.parse_expr(args.expr, args.algebra)) + "\n")
    return EXIT_OK


def _cmd_catalog(args, out) -> int:
    catalog = builtin_catalog()
    if args.json:
        rows = [{
            "name": t.name,
            "arity": t.arity,
            "slots": [{"name": s.name, "kind": s.kind, "parity": s.parity} for s in t.slots],
            "kind": t.kind,
            "anchor": t.anchor,
            "formula": t.formula(),
        } for t in catalog]
        json.dump(rows, out, indent=2)
        out.write("\n")
        return EXIT_OK
    for t in catalog:
        slots = " ".join(f"{s.name}:{'vf' if s.kind == 'vector-field' else 'el'}"
                         + ("" if s.parity is None else f"/{'odd' if s.parity else 'even'}")
                         for s in t.slots)
        out.write(f"{t.name:26s} {t.kind:10s} [{slots}]  {t.anchor}\n")
    return EXIT_OK


COMMANDS = {"verify": _cmd_verify, "search": _cmd_search, "eval": _cmd_eval,
            "catalog": _cmd_catalog}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except (SuperAlgebraError, KeyError, OSError) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        err.write(f"error: {message}\n")
        return EXIT_INPUT


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
