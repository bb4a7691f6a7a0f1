"""Command-line interface.

Exit status: 0 success, 1 usage error, 2 verification failure, 3 internal
consistency error.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import sys

from . import asymptotics, cache
from .bivariate_rational import fit_pg, validate_pg
from .errors import ConsistencyError, RootedMapsError, VerificationFailure
from .genus_series import default_genus_series
from .oracle import MAX_BIPARTITE_EDGES, MAX_ROTATION_EDGES, verify_all
from .recurrences import default_engine

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cache-dir", default=argparse.SUPPRESS,
                        help="directory holding the persistent table cache")
    common.add_argument("--threads", type=_positive, default=argparse.SUPPRESS,
                        help="worker processes for brute-force scans (default 1)")

    parser = _Parser(prog="rootedmaps", parents=[common],
                     description="Exact enumeration of rooted maps on orientable surfaces.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("q", parents=[common], help="Q_g^n: rooted maps by genus and edges")
    p.add_argument("--genus", type=_nonneg, default=0)
    p.add_argument("--edges", type=_nonneg, required=True)
    p.add_argument("--all-genera", action="store_true", help="every genus 0..edges/2")
    p.add_argument("--all-edges", action="store_true", help="every edge count 0..edges")
    p.add_argument("--format", choices=("plain", "csv", "json"), default="plain")

    p = sub.add_parser("poly", parents=[common], help="coefficients of Q_g^n(x), ascending")
    p.add_argument("--genus", type=_nonneg, required=True)
    p.add_argument("--edges", type=_nonneg, required=True)

    p = sub.add_parser("m", parents=[common], help="M_g^{i,j}: maps by genus, vertices, faces")
    p.add_argument("--genus", type=_nonneg, required=True)
    p.add_argument("--vertices", type=_positive, required=True)
    p.add_argument("--faces", type=_positive, required=True)

    p = sub.add_parser("hz", parents=[common], help="Harer-Zagier numbers eps_g(0..N)")
    p.add_argument("--genus", type=_nonneg, required=True)
    p.add_argument("--edges-max", type=_nonneg, required=True)

    p = sub.add_parser("genus-poly", parents=[common], help="H_n(x, s); one line per genus")
    p.add_argument("--edges", type=_nonneg, required=True)

    p = sub.add_parser("series", parents=[common], help="coefficients of Q_g(t) via R_g(T)")
    p.add_argument("--genus", type=_nonneg, required=True)
    p.add_argument("--order", type=_nonneg, required=True)

    p = sub.add_parser("rg", parents=[common], help="partial-fraction data of R_g")
    p.add_argument("--genus", type=_nonneg, required=True)
    p.add_argument("--format", choices=("plain", "json"), default="plain")

    p = sub.add_parser("asymptotics", parents=[common], help="tau_g and t_g")
    p.add_argument("--genus-max", type=_positive, required=True)
    p.add_argument("--digits", type=_positive, default=20)

    p = sub.add_parser("bivariate", parents=[common], help="P_g(p, q) monomials")
    p.add_argument("--genus", type=_positive, required=True)
    p.add_argument("--validate", type=_nonneg, default=2, metavar="EXTRA",
                   help="check the closed form EXTRA degrees past the fit range (default 2)")

    p = sub.add_parser("verify", parents=[common], help="compare every table with brute force")
    p.add_argument("--edges-max", type=_positive, required=True)
    p.add_argument("--bipartite-max-edges", type=_positive, default=6)
    return parser


def _count_rows(args, engine):
    edges = range(args.edges + 1) if args.all_edges else [args.edges]
    rows = []
    for n in edges:
        genera = range(n // 2 + 1) if args.all_genera else [args.genus]
        for g in genera:
            rows.append((g, n, engine.q_count(g, n)))
    return rows


def cmd_q(args, engine, series, out):
    rows = _count_rows(args, engine)
    if args.format == "plain":
        for g, n, v in rows:
            out.write(f"{v}\n")
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["genus", "edges", "count"])
        for row in rows:
            w.writerow(row)
        out.write(buf.getvalue())
    else:
        doc = [{"genus": g, "edges": n, "count": str(v)} for g, n, v in rows]
        out.write(json.dumps(doc, separators=(",", ":")) + "\n")


def cmd_poly(args, engine, series, out):
    coeffs = engine.q_poly_coeffs(args.genus, args.edges)
    out.write(",".join(str(c) for c in coeffs) if coeffs else "0")
    out.write("\n")


def cmd_m(args, engine, series, out):
    out.write(f"{engine.m_count(args.genus, args.vertices, args.faces)}\n")


def cmd_hz(args, engine, series, out):
    for v in engine.hz_row(args.genus, args.edges_max):
        out.write(f"{v}\n")


def cmd_genus_poly(args, engine, series, out):
    for row in engine.genus_poly_coeffs(args.edges):
        out.write(",".join(str(c) for c in row) + "\n")


def cmd_series(args, engine, series, out):
    for c in series.rg(args.genus).expand(args.order):
        out.write(f"{c}\n")


def cmd_rg(args, engine, series, out):
    report = series.report(args.genus)
    if args.format == "json":
        out.write(json.dumps(report.as_dict(), separators=(",", ":")) + "\n")
        return
    out.write(f"c0 = {report.c0}\n")
    for i, a in enumerate(report.alpha, start=1):
        out.write(f"alpha_{i} = {a}\n")
    for i, b in enumerate(report.beta, start=1):
        out.write(f"beta_{i} = {b}\n")


def cmd_asymptotics(args, engine, series, out):
    for g in range(1, args.genus_max + 1):
        tg = asymptotics.tg(g)
        out.write(f"g={g} tau={asymptotics.tau(g)} t={tg} t~{tg.decimal(args.digits)}\n")


def cmd_bivariate(args, engine, series, out):
    record = fit_pg(args.genus, engine)
    if args.validate:
        validate_pg(record, args.validate, engine)
    for a, b, c in record.monomials():
        out.write(f"{a} {b} {c}\n")


def cmd_verify(args, engine, series, out):
    if args.edges_max > MAX_ROTATION_EDGES:
        raise UsageError(f"--edges-max is capped at {MAX_ROTATION_EDGES}")
    if args.bipartite_max_edges > MAX_BIPARTITE_EDGES:
        raise UsageError(f"--bipartite-max-edges is capped at {MAX_BIPARTITE_EDGES}")
    report = verify_all(args.edges_max, engine, workers=getattr(args, "threads", 1),
                        bipartite_max_edges=args.bipartite_max_edges)
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        line = f"{status} {check.name}"
        if not check.passed:
            line += f": {check.detail}"
        out.write(line + "\n")
    if not report.passed:
        raise VerificationFailure(f"first failure: {report.first_failure.name}")
    out.write(f"all {len(report.checks)} checks passed\n")


COMMANDS = {
    "q": cmd_q,
    "poly": cmd_poly,
    "m": cmd_m,
    "hz": cmd_hz,
    "genus-poly": cmd_genus_poly,
    "series": cmd_series,
    "rg": cmd_rg,
    "asymptotics": cmd_asymptotics,
    "bivariate": cmd_bivariate,
    "verify": cmd_verify,
}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    engine = default_engine()
    series = default_genus_series()
    cache_dir = getattr(args, "cache_dir", None)
    try:
        if cache_dir:
            cache.load(cache_dir, engine, series)
        COMMANDS[args.command](args, engine, series, out)
        if cache_dir:
            cache.save(cache_dir, engine, series)
    except UsageError as exc:
        err.write(f"rootedmaps: error: {exc}\n")
        return EXIT_USAGE
    except cache.CacheError as exc:
        err.write(f"rootedmaps: cache error: {exc}\n")
        return EXIT_USAGE
    except VerificationFailure as exc:
        err.write(f"rootedmaps: verification failed: {exc}\n")
        return EXIT_VERIFY
    except ConsistencyError as exc:
        err.write(f"rootedmaps: internal consistency error in {type(exc).__module__}: "
                  f"{type(exc).__name__}: {exc}\n")
        return EXIT_INTERNAL
    except (RootedMapsError, ValueError) as exc:
        err.write(f"rootedmaps: error: {exc}\n")
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
