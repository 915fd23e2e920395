"""jordanlab command line: dims, chars, closed, oracle, verify."""

from __future__ import annotations

import argparse
import logging
import os
import sys

from . import closed, report
from .characters import EnvelopeExceeded
from .dims import CACHE_ENV, SolutionCache, solve_weak, solve_weakest

FORMATS = ("json", "csv", "md")


def _positive(name):
    def conv(s):
        try:
            v = int(s)
        except ValueError:
            raise argparse.ArgumentTypeError("%s must be an integer, got %r" % (name, s))
        if v < 1:
            raise argparse.ArgumentTypeError("%s must be >= 1, got %d" % (name, v))
        return v
    return conv


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="jordanlab", description=__doc__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="cmd", required=True)

    def common(sp, D=2, N=10):
        sp.add_argument("--D", type=_positive("--D"), default=D, help="number of generators")
        sp.add_argument("--N", type=_positive("--N"), default=N, help="top degree")
        sp.add_argument("--format", choices=FORMATS, default="md")

    sp = sub.add_parser("dims", help="predicted dimensions a_n(D), b_n(D)")
    common(sp)
    sp.add_argument("--form", choices=("weak", "weakest"), default="weak")
    sp.add_argument("--cache-dir", default=None,
                    help="solution cache directory (also $%s)" % CACHE_ENV)

    sp = sub.add_parser("chars", help="Schur decompositions of A(D), B(D)")
    common(sp, D=3, N=4)
    sp.add_argument("--basis", choices=("schur", "monomial"), default="schur")
    sp.add_argument("--force-envelope", action="store_true",
                    help="run outside the tested (D, N) range")

    sp = sub.add_parser("closed", help="closed formulas s_n, c_n, r_n")
    common(sp)

    sp = sub.add_parser("oracle", help="brute-force dimensions of SJ, CJ and inner derivations")
    common(sp, D=2, N=6)
    sp.add_argument("--multilinear", action="store_true",
                    help="only the multidegree (1,...,1) component with n = D")

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--suite", default="all",
                    help="one of %s" % ", ".join(report.SUITES))
    sp.add_argument("--D-max", dest="D_max", type=_positive("--D-max"), default=4)
    sp.add_argument("--n-max", dest="n_max", type=_positive("--n-max"), default=8)
    sp.add_argument("--multilinear-max", dest="ml_max", type=_positive("--multilinear-max"), default=7)
    sp.add_argument("--threads", type=_positive("--threads"), default=1)
    sp.add_argument("--format", choices=FORMATS, default="md")
    return p


def cmd_dims(args) -> str:
    root = args.cache_dir or os.environ.get(CACHE_ENV)
    cache = SolutionCache(root) if root else None
    if args.form == "weak":
        tbl = solve_weak(args.D, args.N, cache)
        rows = [{"n": n, "a_n": a, "b_n": b} for n, (a, b) in enumerate(zip(tbl.a, tbl.b), 1)]
        cols = ["n", "a_n", "b_n"]
    else:
        a = solve_weakest(args.D, args.N, cache)
        rows = [{"n": n, "a_n": v} for n, v in enumerate(a, 1)]
        cols = ["n", "a_n"]
    return report.render(rows, cols, args.format)


def cmd_chars(args) -> str:
    from .charsolve import solve_characters

    tbl = solve_characters(args.D, args.N, args.force_envelope)
    a_dims, b_dims = tbl.dims()
    if args.basis == "schur":
        A = {n: {Y.key(): v for Y, v in row.items()} for n, row in tbl.A.items()}
        B = {n: {Y.key(): v for Y, v in row.items()} for n, row in tbl.B.items()}
    else:
        A = _monomial_rows(tbl.a_class())
        B = _monomial_rows(tbl.b_class())
    rows = [{"degree": n, "A": A.get(n, {}), "B": B.get(n, {}), "dim_A": a_dims[n - 1], "dim_B": b_dims[n - 1]}
            for n in range(1, args.N + 1)]
    return report.render(rows, ["degree", "A", "B", "dim_A", "dim_B"], args.format)


def _monomial_rows(c) -> dict[int, dict[str, int]]:
    out: dict[int, dict[str, int]] = {}
    for (Y, _j), v in sorted(c.terms.items(), reverse=True):
        out.setdefault(Y.size, {})[Y.key()] = v
    return out


def cmd_closed(args) -> str:
    D = args.D
    rows = [{"n": n, "s_n": closed.s(n, D), "c_n": closed.c(n, D), "r_n": closed.r(n, D)}
            for n in range(1, args.N + 1)]
    return report.render(rows, ["n", "s_n", "c_n", "r_n"], args.format)


def cmd_oracle(args) -> str:
    from . import oracle

    cols = ["n", "SJ", "CJ", "InnerCJ", "InnerSJ", "M", "MD"]
    if args.multilinear:
        d = oracle.multilinear_dims(args.D)
        rows = [dict(n=args.D, **d)]
    else:
        rows = [dict(n=n, **oracle.oracle_for(args.D).dims(n)) for n in range(1, args.N + 1)]
    return report.render(rows, cols, args.format)


def cmd_verify(args) -> tuple[str, int]:
    results = report.run_suite(args.suite, args.D_max, args.n_max, args.ml_max, args.threads)
    cols = ["suite", "case", "status", "provenance", "expected", "computed"]
    text = report.render(report.results_as_rows(results), cols, args.format)
    tally = report.summarize(results)
    print("pass %(pass)d, fail %(fail)d, report-only %(report)d" % tally, file=sys.stderr)
    return text, 1 if tally["fail"] else 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.cmd == "verify" and args.suite not in report.SUITES:
        parser.error("unknown suite %r; choose from %s" % (args.suite, ", ".join(report.SUITES)))
    status = 0
    try:
        if args.cmd == "dims":
            out = cmd_dims(args)
        elif args.cmd == "chars":
            out = cmd_chars(args)
        elif args.cmd == "closed":
            out = cmd_closed(args)
        elif args.cmd == "oracle":
            out = cmd_oracle(args)
        else:
            out, status = cmd_verify(args)
    except EnvelopeExceeded as e:
        print("jordanlab: %s" % e, file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
