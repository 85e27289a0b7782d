"""Command-line interface.

Exit status: 0 success, 1 verification failure, 2 usage or I/O error,
3 algorithm convergence failure.
"""

import argparse
import logging
import sys

import numpy as np

from . import dense
from .algorithms import ALGORITHM_NAMES, PinvAlgorithm
from .bench import DEFAULT_SEED, BenchSpec, emit_report, run_bench
from .benchgen import MatrixFamilySpec, random_rank_deficient
from .exceptions import ConvergenceError
from .geninv import geninv
from .verify import DEFAULT_BOUND, is_valid_pinv, penrose_residuals

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_CONVERGENCE = 3


def _int_list(text):
    try:
        return [int(v) for v in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}")


def _name_list(text):
    names = [v.strip() for v in text.split(",") if v.strip()]
    for name in names:
        if name not in ALGORITHM_NAMES:
            raise argparse.ArgumentTypeError(
                f"unknown algorithm {name!r}; choose from {', '.join(ALGORITHM_NAMES)}"
            )
    return names


def _write_text(text, path):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_pinv(args):
    g = dense.read_matrix(args.infile)
    alg = PinvAlgorithm.parse(args.algorithm)
    if alg is PinvAlgorithm.GENINV:
        res = geninv(g)
        x = res.pinv
        if args.verbose:
            print(f"detected rank: {res.rank}", file=sys.stderr)
            print(f"pivot tolerance: {res.tol:.6e}", file=sys.stderr)
            print(f"cond_1(L'L) estimate: {res.ltl_condition:.6e}", file=sys.stderr)
    else:
        x = alg(g)
    if args.verbose:
        rep = penrose_residuals(g, x)
        print(f"max|G|: {dense.max_abs(g):.6e}", file=sys.stderr)
        print("penrose residuals: r1={:.3e} r2={:.3e} r3={:.3e} r4={:.3e}".format(*rep.as_tuple()),
              file=sys.stderr)
    _write_text(dense.format_matrix(x), args.out)
    return EXIT_OK


def cmd_gen(args):
    fam = MatrixFamilySpec(n=args.n, m=args.m, rank=args.rank, seed=args.seed)
    g, _, _ = random_rank_deficient(fam)
    _write_text(dense.format_matrix(g), args.out)
    return EXIT_OK


def cmd_bench(args):
    spec = BenchSpec(
        sizes=args.sizes,
        algorithms=args.algorithms,
        seeds=args.seeds,
        repetitions=args.reps,
        bound=args.bound,
    )
    report = run_bench(spec)
    _write_text(emit_report(report, args.format), args.out)
    if args.verbose:
        for row in report.rows:
            if row.detected_rank is not None:
                print(f"geninv n={row.n} seed={row.seed}: detected rank {row.detected_rank} "
                      f"(constructed {row.rank}), cond_1(L'L) {row.ltl_condition:.3e}",
                      file=sys.stderr)
    if any(row.error for row in report.rows):
        return EXIT_CONVERGENCE
    return EXIT_OK if report.all_passed else EXIT_VERIFY_FAILED


def cmd_verify(args):
    g = dense.read_matrix(args.g_file)
    x = dense.read_matrix(args.x_file)
    rep = penrose_residuals(g, x)
    ok = is_valid_pinv(rep, args.bound)
    print("r1={!r} r2={!r} r3={!r} r4={!r}".format(*rep.as_tuple()))
    print(f"max|G|={dense.max_abs(g)!r}")
    print(("PASS" if ok else "FAIL") + f" (bound {args.bound:g})")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fastpinv",
        description="Moore-Penrose pseudoinverses via full-rank Cholesky factorization.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pinv", help="pseudoinverse of a matrix file")
    p.add_argument("infile")
    p.add_argument("--algorithm", default="geninv", choices=ALGORITHM_NAMES)
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_pinv)

    p = sub.add_parser("gen", help="write a random rank-deficient test matrix")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, help="rows (default 2n)")
    p.add_argument("--rank", type=int, help="rank (default 7n/8)")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time and verify all algorithms")
    p.add_argument("--sizes", type=_int_list, default=[32, 64, 128, 256])
    p.add_argument("--algorithms", type=_name_list, default=list(ALGORITHM_NAMES))
    p.add_argument("--seeds", type=_int_list, default=[DEFAULT_SEED])
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--format", choices=("csv", "markdown"), default="csv")
    p.add_argument("--bound", type=float, default=DEFAULT_BOUND)
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("verify", help="check the Penrose conditions for a candidate")
    p.add_argument("g_file")
    p.add_argument("x_file")
    p.add_argument("--bound", type=float, default=DEFAULT_BOUND)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if getattr(args, "verbose", False) else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except (OSError, ValueError, np.linalg.LinAlgError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
