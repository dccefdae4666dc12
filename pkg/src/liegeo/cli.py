"""Command-line surface.

Exit codes: 0 success / verdict pass, 1 verdict fail or property violation,
2 input error, 3 internal invariant violation (a bug, not bad input).
``-`` reads the algebra file from stdin.  LIEGEO_SEED overrides the default
search seed.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from fractions import Fraction

from .algebra import (
    InternalInvariantError,
    Subalgebra,
    center,
    derived_algebra,
    is_nilpotent,
    lower_central_series,
)
from .catalog import CATALOG_NAMES, catalog_entry
from .fileio import (
    AlgebraFile,
    ParseError,
    Report,
    emit,
    emit_algebra,
    format_vector,
    parse,
    serialize_algebra,
)
from .geometry import (
    Metric,
    MetricLieAlgebra,
    is_geodesic,
    is_invariant_complement,
    is_totally_geodesic,
)
from .filiform import is_filiform, regularity_verdict, vergne_basis
from .search import SearchBudget, find_geodesic_numeric, search_tg_subalgebras

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


def default_seed() -> int:
    env = os.environ.get("LIEGEO_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ParseError("LIEGEO_SEED must be an integer", "LIEGEO_SEED") from None
    return 12345


def _read_file(path: str) -> AlgebraFile:
    if path == "-":
        return parse(sys.stdin.read())
    try:
        with open(path, "rb") as fh:
            return parse(fh.read())
    except OSError as e:
        raise ParseError(str(e), path) from None


def _metric_for(doc: AlgebraFile) -> MetricLieAlgebra:
    metric = doc.metric or Metric.standard(doc.dim)
    return MetricLieAlgebra(doc.algebra, metric)


def _parse_vector(text: str, dim: int):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != dim:
        raise ParseError("expected %d comma-separated rationals" % dim, "--vector")
    try:
        return tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError):
        raise ParseError("entries must be rationals like -3/7", "--vector") from None


def _resolve_subalgebra(doc: AlgebraFile, spec: str):
    if spec in doc.subalgebras:
        return doc.subalgebras[spec]
    if "," in spec or ";" in spec:
        rows = []
        for chunk in spec.split(";"):
            rows.append(_parse_vector(chunk, doc.dim))
        from .algebra import Subspace

        return Subspace(doc.dim, rows)
    raise ParseError(
        "unknown subalgebra %r (named: %s); inline syntax is 'v1;v2' with "
        "comma-separated coordinates" % (spec, ", ".join(sorted(doc.subalgebras)) or "none"),
        "--subalgebra",
    )


def _finish(report: Report, started: float, as_json: bool, code: int) -> int:
    report.elapsed = "%.6f" % (time.perf_counter() - started)
    sys.stdout.write(emit(report, "json" if as_json else "text"))
    return code


def _cmd_check(args) -> int:
    t0 = time.perf_counter()
    doc = _read_file(args.file)
    g = doc.algebra  # parse already enforced the Jacobi identity
    rep = g.verify_jacobi()
    nilp, cls = is_nilpotent(g)
    series = lower_central_series(g)
    report = Report("check")
    report.verdicts["jacobi"] = "pass" if rep.ok else "fail"
    report.verdicts["nilpotent"] = "yes (class %d)" % cls if nilp else "no"
    report.witnesses["lower_central_series_dims"] = [s.dim for s in series]
    report.witnesses["center_dim"] = center(g).dim
    report.witnesses["derived_dim"] = derived_algebra(g).dim
    return _finish(report, t0, args.json, EXIT_PASS if rep.ok else EXIT_FAIL)


def _cmd_tg(args) -> int:
    t0 = time.perf_counter()
    doc = _read_file(args.file)
    mg = _metric_for(doc)
    space = _resolve_subalgebra(doc, args.subalgebra)
    report = Report("tg")
    try:
        h = Subalgebra(doc.algebra, space.rows, space.pivots)
    except ValueError as e:
        report.verdicts["subalgebra"] = "fail"
        report.notes.append(str(e))
        return _finish(report, t0, args.json, EXIT_FAIL)
    tg = is_totally_geodesic(mg, h)
    report.verdicts["totally_geodesic"] = "pass" if tg.ok else "fail"
    if tg.witness is not None:
        x, y, z, val = tg.witness
        report.witnesses["violating_triple"] = {
            "x": format_vector(x),
            "y": format_vector(y),
            "z": format_vector(z),
            "value": str(val),
        }
    if args.invariance:
        report.verdicts["complement_invariant"] = (
            "pass" if tg.complement_invariant else "fail"
        )
    return _finish(report, t0, args.json, EXIT_PASS if tg.ok else EXIT_FAIL)


def _cmd_geodesics(args) -> int:
    t0 = time.perf_counter()
    doc = _read_file(args.file)
    mg = _metric_for(doc)
    report = Report("geodesics")
    if args.vector is not None:
        v = _parse_vector(args.vector, doc.dim)
        gr = is_geodesic(mg, v)
        report.verdicts["geodesic"] = "pass" if gr.ok else "fail"
        report.witnesses["defect"] = format_vector(gr.defect)
        report.residuals["residual_sq"] = str(gr.residual_sq)
        return _finish(report, t0, args.json, EXIT_PASS if gr.ok else EXIT_FAIL)
    if not args.numeric:
        raise ParseError("pass --vector or --numeric", "geodesics")
    budget = SearchBudget(seed=args.seed, tol=args.tol)
    ng = find_geodesic_numeric(mg, budget)
    report.verdicts["converged"] = "pass" if ng.converged else "fail"
    report.residuals["residual"] = "%.3e" % ng.residual
    report.witnesses["vector_float"] = ["%.12g" % c for c in ng.vector]
    if ng.exact_confirmed:
        report.verdicts["exact_confirmation"] = "pass"
        report.witnesses["vector_exact"] = format_vector(ng.exact_vector)
    else:
        report.notes.append("no rational reconstruction within denominator 10^6")
    return _finish(report, t0, args.json, EXIT_PASS if ng.converged else EXIT_FAIL)


def _cmd_vergne(args) -> int:
    t0 = time.perf_counter()
    doc = _read_file(args.file)
    g = doc.algebra
    report = Report("vergne")
    try:
        rep = is_filiform(g)
    except ValueError as e:
        report.verdicts["filiform"] = "fail"
        report.notes.append(str(e))
        return _finish(report, t0, args.json, EXIT_FAIL)
    if not rep.ok:
        report.verdicts["filiform"] = "fail"
        return _finish(report, t0, args.json, EXIT_FAIL)
    vb = vergne_basis(g)
    report.verdicts["filiform"] = "pass"
    report.witnesses["basis"] = [format_vector(v) for v in vb.vectors]
    report.witnesses["alpha"] = str(vb.alpha)
    report.verdicts["regular_for_this_basis"] = (
        "yes" if vb.regular_for_this_basis else "no"
    )
    if not vb.regular_for_this_basis:
        verdict, alpha, tries = regularity_verdict(g, seed=args.seed)
        report.verdicts["regularity"] = verdict
        report.notes.append(
            "bounded seeded basis-change retry (%d attempts); absence of an "
            "adapted basis with zero antidiagonal constant is not decided" % tries
        )
    return _finish(report, t0, args.json, EXIT_PASS)


def _cmd_catalog(args) -> int:
    g, metric, subs = catalog_entry(args.name, args.params)
    doc = emit_algebra(serialize_algebra(g, metric, subs))
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(doc)
    else:
        sys.stdout.write(doc)
    return EXIT_PASS


def _cmd_search_tg(args) -> int:
    t0 = time.perf_counter()
    doc = _read_file(args.file)
    mg = _metric_for(doc)
    budget = SearchBudget(seed=args.seed, max_candidates=args.budget)
    found = search_tg_subalgebras(mg, args.dim, budget)
    report = Report("search-tg")
    report.verdicts["found"] = str(len(found))
    report.witnesses["subalgebras"] = [
        [format_vector(r) for r in h.rows] for h in found
    ]
    for idx, h in enumerate(found):
        inv = is_invariant_complement(mg, h)
        report.verdicts["candidate_%d_invariant_complement" % idx] = (
            "pass" if inv else "fail"
        )
    report.notes.append(
        "search evidence only, not a proof: an empty list is consistent with "
        "nonexistence, never verification of it"
    )
    return _finish(report, t0, args.json, EXIT_PASS)


def _cmd_verify_paper(args) -> int:
    from .verification import run_suite

    results = run_suite(level=args.level, seed=args.seed)
    all_pass = all(r.passed for r in results)
    if args.json:
        import json as _json

        payload = [r.to_dict() for r in results]
        sys.stdout.write(_json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        for r in results:
            sys.stdout.write(r.line() + "\n")
        sys.stdout.write("overall: %s\n" % ("PASS" if all_pass else "FAIL"))
    return EXIT_PASS if all_pass else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liegeo",
        description="Exact computations with metric Lie algebras: geodesic "
        "vectors, totally geodesic subalgebras, filiform normal forms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("check", help="Jacobi, nilpotency and series report")
    p.add_argument("file")
    add_common(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("tg", help="exact totally-geodesic verdict")
    p.add_argument("file")
    p.add_argument("--subalgebra", required=True, help="named subalgebra or inline 'v1;v2'")
    p.add_argument("--invariance", action="store_true", help="also check complement invariance")
    add_common(p)
    p.set_defaults(func=_cmd_tg)

    p = sub.add_parser("geodesics", help="exact verdict for a vector, or numeric search")
    p.add_argument("file")
    p.add_argument("--vector", help="comma-separated rational coordinates")
    p.add_argument("--numeric", action="store_true", help="multi-start numeric search")
    p.add_argument("--seed", type=int, default=default_seed())
    p.add_argument("--tol", type=float, default=1e-10)
    add_common(p)
    p.set_defaults(func=_cmd_geodesics)

    p = sub.add_parser("vergne", help="adapted filiform basis, antidiagonal constant, regularity")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=default_seed())
    add_common(p)
    p.set_defaults(func=_cmd_vergne)

    p = sub.add_parser("catalog", help="write a catalog fixture file")
    p.add_argument("name", help="one of: %s" % ", ".join(CATALOG_NAMES))
    p.add_argument("params", nargs="*", help="Ln: dimension; LC: coefficients")
    p.add_argument("-o", "--output", help="output path (default stdout)")
    add_common(p)
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("search-tg", help="search totally geodesic subalgebras of a given dimension")
    p.add_argument("file")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--seed", type=int, default=default_seed())
    p.add_argument("--budget", type=int, default=2000, help="random candidate budget")
    add_common(p)
    p.set_defaults(func=_cmd_search_tg)

    p = sub.add_parser("verify-paper", help="run the built-in verification suite")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.add_argument("--seed", type=int, default=default_seed())
    add_common(p)
    p.set_defaults(func=_cmd_verify_paper)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code not in (0, None) else EXIT_PASS
    try:
        return args.func(args)
    except ParseError as e:
        sys.stderr.write("input error: %s\n" % e)
        return EXIT_INPUT
    except InternalInvariantError as e:
        sys.stderr.write("internal invariant violation: %s\n" % e)
        return EXIT_INTERNAL
    except ValueError as e:
        sys.stderr.write("input error: %s\n" % e)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
