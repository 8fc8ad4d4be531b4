"""alphaspec: alpha-spectral radii of uniform hypergraphs and supertree ordering checks.

Exit codes: 0 success or true verdict, 1 false verdict (a mathematical
claim failed), 2 usage or input errors, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Sequence

from . import families
from .hypergraph import HypergraphError, Hypergraph, read_text, write_text
from .labeling import (
    CHECKERS,
    LEMMA_CASES,
    LEMMA_SUM_TOL,
    NONE,
    SUM_TOL,
    CertificateReport,
    LabelingError,
    build_lemma_certificate,
    read_certificate,
    write_certificate,
)
from .ordering import CSV_HEADER, OrderingReport, SweepRow, format_entries, sweep, verify_chain, verify_maximizer_bound
from .spectral import NoConvergence, PowerOptions, SpectralError, SpectralResult, alpha_spectral_radius


class UsageError(Exception):
    pass


def fmt(x: float | None) -> str:
    """Measured quantities: 12 significant digits, trailing zeros kept."""
    if x is None:
        return ""
    return f"{x:#.12g}"


def fmt_param(x: float) -> str:
    return f"{x:.12g}"


def _report_row(rep: OrderingReport, runtime_ms: float | None = None) -> SweepRow:
    return SweepRow(rep.m, rep.k, rep.alpha, rep.check, "true" if rep.verdict else "false",
                    rep.min_margin, format_entries(rep), runtime_ms)


def _csv_text(rows: list[SweepRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER.split(","))
    for r in rows:
        w.writerow([
            r.m, r.k, fmt_param(r.alpha), r.check, r.verdict,
            fmt(r.min_margin) if r.min_margin not in (None, float("inf")) else "",
            r.entries,
            "" if r.runtime_ms is None else f"{r.runtime_ms:.1f}",
        ])
    return buf.getvalue()


def _json_text(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def emit(report, format: str = "table") -> str:
    """Render a report deterministically as a table, CSV or JSON."""
    if isinstance(report, list):
        rows = report
        if format == "csv":
            return _csv_text(rows)
        if format == "json":
            return _json_text({"rows": [r.__dict__ for r in rows]})
        return "".join(f"{r.m:>4} {r.k:>3} {fmt_param(r.alpha):>6} {r.check:<11} {r.verdict:<6} "
                       f"{fmt(r.min_margin) if r.min_margin not in (None, float('inf')) else '-'}\n"
                       for r in rows)

    if isinstance(report, OrderingReport):
        if format == "csv":
            return _csv_text([_report_row(report)])
        if format == "json":
            return _json_text({
                "check": report.check,
                "m": report.m,
                "k": report.k,
                "alpha": report.alpha,
                "tol": report.tol,
                "verdict": report.verdict,
                "min_margin": None if report.min_margin == float("inf") else report.min_margin,
                "entries": [e.__dict__ for e in report.entries],
                "comparisons": [c.__dict__ for c in report.comparisons],
                "failures": report.failures,
                "details": report.details,
            })
        lines = [f"# {report.check}: m={report.m} k={report.k} alpha={fmt_param(report.alpha)}"]
        for e in report.entries:
            extra = f"  solver={fmt(e.solver_rho)}" if e.solver_rho is not None else ""
            lines.append(f"{e.name:<16} {fmt(e.rho)}  [{e.method}]{extra}")
        for key, val in report.details.items():
            lines.append(f"{key}: {val}")
        lines += report.failures
        margin = "-" if report.min_margin == float("inf") else fmt(report.min_margin)
        lines.append(f"verdict: {'true' if report.verdict else 'false'}  min_margin: {margin}")
        return "\n".join(lines) + "\n"

    if isinstance(report, CertificateReport):
        if format == "json":
            return _json_text(report.as_dict())
        lines = [
            f"classification: {report.classification}",
            f"target_rho: {fmt(report.target_rho)}",
            f"consistent: {'true' if report.consistent else 'false'}",
            f"max_sum_violation: {report.max_sum_violation:.3e}",
            f"max_product_violation: {report.max_product_violation:.3e}",
        ]
        return "\n".join(lines) + "\n"

    if isinstance(report, SpectralResult):
        if format == "json":
            return _json_text({
                "rho": report.rho,
                "lower_bound": report.lower_bound,
                "upper_bound": report.upper_bound,
                "residual": report.residual,
                "iterations": report.iterations,
                "eigenvector": [float(v) for v in report.eigenvector],
            })
        return (f"rho = {report.rho:.12f}\n"
                f"enclosure = [{report.lower_bound:.15f}, {report.upper_bound:.15f}]\n"
                f"residual = {report.residual:.3e}\n"
                f"iterations = {report.iterations}\n")

    raise TypeError(f"cannot emit {type(report).__name__}")


def _load_graph(path: str) -> Hypergraph:
    try:
        return read_text(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _write_out(text: str, target: str | None) -> None:
    if target in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(target).write_text(text)


def _options(args) -> PowerOptions:
    return PowerOptions(tolerance=args.power_tol, max_iterations=args.max_iter)


def _cmd_radius(args) -> int:
    H = _load_graph(args.graph)
    res = alpha_spectral_radius(H, args.alpha, _options(args))
    sys.stdout.write(emit(res, "json" if args.json else "table"))
    return 0


def _cmd_family(args) -> int:
    p = args.params
    name = args.name
    try:
        if name == "star":
            (m,) = p
            H = families.star(m, args.k)
        elif name == "dstar":
            a, b = p
            H = families.double_star(a, b, args.k)
        elif name == "tstar":
            s1, s2, s3 = p
            H = families.triple_star(s1, s2, s3, args.k)[0]
        elif name == "tsup":
            t1, t2, t3 = p
            H = families.t_supertree(t1, t2, t3, args.k)[0]
        elif name == "bfs":
            H = families.bfs_supertree(p, args.k)
        else:  # power: flattened tree edge list u v u v ...
            if len(p) % 2:
                raise UsageError("power needs an even number of vertex ids")
            H = families.power_of_tree(list(zip(p[::2], p[1::2])), args.k)
    except ValueError as exc:
        if isinstance(exc, families.FamilyError):
            raise
        raise UsageError(f"wrong number of parameters for {name}: {p}") from None
    _write_out(write_text(H), args.out)
    return 0


def _cmd_certify(args) -> int:
    H = _load_graph(args.graph)
    try:
        rho_file, B = read_certificate(Path(args.cert).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {args.cert}: {exc}") from None
    rho = args.rho if args.rho is not None else rho_file
    rep = CHECKERS[args.mode](H, args.alpha, rho, B, args.tol if args.tol is not None else SUM_TOL)
    sys.stdout.write(emit(rep, "json" if args.json else "table"))
    return 0 if rep.classification != NONE else 1


def _cmd_lemma_cert(args) -> int:
    cert = build_lemma_certificate(args.case, args.m, args.k, args.alpha)
    rep = cert.check(args.tol if args.tol is not None else LEMMA_SUM_TOL)
    if args.cert:
        Path(args.cert).write_text(write_certificate(cert.rho_ref, cert.B))
    if args.json:
        payload = rep.as_dict()
        payload.update({
            "case": cert.case,
            "expected": cert.expected,
            "designated_vertex": cert.designated_vertex,
            "weights": [[v, e, w] for (v, e), w in sorted(cert.B.weights.items(), key=lambda t: (t[0][1], t[0][0]))],
        })
        sys.stdout.write(_json_text(payload))
    else:
        out = [f"# {cert.case}: m={args.m} k={args.k} alpha={fmt_param(args.alpha)}",
               f"rho_ref = {fmt(cert.rho_ref)}",
               f"{'vertex':>6} {'edge':>5} weight"]
        for (v, e), w in sorted(cert.B.weights.items(), key=lambda t: (t[0][1], t[0][0])):
            out.append(f"{v:>6} {e:>5} {fmt(w)}")
        out.append(f"designated vertex: {cert.designated_vertex} "
                   f"(sum - rho_ref = {fmt(rep.vertex_sums[cert.designated_vertex] - cert.rho_ref)})")
        out.append(f"expected: {cert.expected}")
        sys.stdout.write("\n".join(out) + "\n" + emit(rep))
    if cert.expected == NONE:
        return 0
    return 0 if rep.classification == cert.expected else 1


def _emit_report(rep: OrderingReport, args) -> int:
    if args.csv:
        _write_out(emit(rep, "csv"), args.csv)
    if args.json:
        sys.stdout.write(emit(rep, "json"))
    elif args.csv not in ("-",):
        sys.stdout.write(emit(rep))
    return 0 if rep.verdict else 1


def _cmd_order(args) -> int:
    rep = verify_chain(args.m, args.k, args.alpha, args.tol if args.tol is not None else 1e-9,
                       include_double_stars=args.double_stars, opts=_options(args))
    return _emit_report(rep, args)


def _cmd_bound(args) -> int:
    rep = verify_maximizer_bound(args.m, args.k, args.alpha, args.tol if args.tol is not None else 1e-9,
                                 opts=_options(args))
    return _emit_report(rep, args)


def _split(text: str, kind):
    if not text:
        return []
    try:
        return [kind(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"cannot parse list {text!r}") from None


def _cmd_sweep(args) -> int:
    rows = sweep(_split(args.m, int), _split(args.k, int), _split(args.alpha, float),
                 _split(args.checks, str), args.tol if args.tol is not None else 1e-9,
                 opts=_options(args), timing=args.timing)
    if args.csv:
        _write_out(emit(rows, "csv"), args.csv)
    if args.json:
        sys.stdout.write(emit(rows, "json"))
    elif args.csv != "-":
        sys.stdout.write(emit(rows))
    return 0 if all(r.verdict == "true" for r in rows) else 1


def _cmd_enum(args) -> int:
    if args.what == "classes":
        classes = families.enumerate_degree_classes(args.m)
        for pi in classes:
            sys.stdout.write(" ".join(map(str, pi.degrees)) + "\n")
        return 0
    if args.k is None:
        raise UsageError("enum supertrees needs --k")
    trees = families.enumerate_supertrees(args.m, args.k)
    sys.stdout.write("\n".join(write_text(H) for H in trees))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="alphaspec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    def numeric(p, alpha=True):
        if alpha:
            p.add_argument("--alpha", type=float, required=True)
        p.add_argument("--tol", type=float, default=None, help="verdict or certificate tolerance")
        p.add_argument("--power-tol", type=float, default=1e-10, help="power-iteration enclosure width")
        p.add_argument("--max-iter", type=int, default=100_000)
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("radius", help="alpha-spectral radius of a hypergraph file")
    p.add_argument("--graph", required=True)
    numeric(p)
    p.set_defaults(func=_cmd_radius)

    p = sub.add_parser("family", help="write a named supertree in text format")
    p.add_argument("name", choices=["star", "dstar", "tstar", "tsup", "bfs", "power"])
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("certify", help="classify a weighted incidence certificate")
    p.add_argument("--graph", required=True)
    p.add_argument("--cert", required=True)
    p.add_argument("--mode", choices=sorted(CHECKERS), required=True)
    p.add_argument("--rho", type=float, default=None)
    numeric(p)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("lemma-cert", help="print an explicit separation labeling")
    p.add_argument("--case", choices=sorted(LEMMA_CASES), required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cert", default=None, help="also write the certificate to this file")
    numeric(p)
    p.set_defaults(func=_cmd_lemma_cert)

    for verb, func, help_ in [("order", _cmd_order, "verify the chain of the eight largest"),
                              ("bound", _cmd_bound, "bound every other degree class")]:
        p = sub.add_parser(verb, help=help_)
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--csv", default=None, metavar="PATH|-")
        if verb == "order":
            p.add_argument("--double-stars", action="store_true")
        numeric(p)
        p.set_defaults(func=func)

    p = sub.add_parser("sweep", help="run checks over a grid (comma-separated lists)")
    p.add_argument("--m", required=True)
    p.add_argument("--k", required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--checks", default="chain")
    p.add_argument("--csv", default=None, metavar="PATH|-")
    p.add_argument("--timing", action="store_true", help="fill runtime_ms (breaks byte-identical output)")
    numeric(p, alpha=False)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("enum", help="list degree classes or supertrees")
    p.add_argument("what", choices=["classes", "supertrees"])
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.set_defaults(func=_cmd_enum)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (UsageError, HypergraphError, families.FamilyError, LabelingError, SpectralError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NoConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
