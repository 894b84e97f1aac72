"""Command-line front door.

Exit codes: 0 success, 1 validation error (single-line diagnostic on stderr),
2 internal numerical failure.  Output files are deterministic: same flags and
seed give byte-identical bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

import numpy as np

from . import __version__, combinatorics, experiments, linalg, metrics, products, serialize, words


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _add_matrix_flags(parser):
    parser.add_argument("--a", metavar="FILE", help="first matrix JSON file")
    parser.add_argument("--b", metavar="FILE", help="second matrix JSON file")
    parser.add_argument(
        "--matrix",
        metavar="FILE",
        action="append",
        help="matrix JSON file; repeat for alphabets larger than two",
    )


def _load_matrix_file(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            body = json.load(fh)
    except json.JSONDecodeError as exc:
        raise _UsageError(f"malformed matrix JSON in {path}: {exc}") from exc
    except OSError as exc:
        raise _UsageError(f"cannot read matrix file {path}: {exc}") from exc
    try:
        return linalg.matrix_from_json(body)
    except ValueError as exc:
        raise _UsageError(f"invalid matrix in {path}: {exc}") from exc


def _load_matrices(args):
    if args.matrix and (args.a or args.b):
        raise _UsageError("use either --a/--b or repeated --matrix, not both")
    paths = args.matrix if args.matrix else [args.a, args.b]
    if not paths or any(p is None for p in paths) or len(paths) < 2:
        raise _UsageError("need at least two matrices (--a and --b, or --matrix twice)")
    ms = [_load_matrix_file(p) for p in paths]
    if len({m.shape[0] for m in ms}) != 1:
        raise _UsageError("all matrices must share one dimension")
    return tuple(ms)


def _emit(text, output):
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _frac(value: Fraction) -> str:
    return f"{value} ({float(value)})"


def _parse_word(text, flag):
    try:
        return words.Word.from_text(text)
    except ValueError as exc:
        raise _UsageError(f"invalid word for {flag}: {exc}") from exc


def _cmd_enumerate(args):
    lines = [
        w.to_text() + "\n"
        for w in words.enumerate_words(args.n, args.alphabet, cap=args.cap)
    ]
    _emit("".join(lines), args.output)
    return 0


def _cmd_metrics(args):
    w = _parse_word(args.word1, "--word1")
    v = _parse_word(args.word2, "--word2")
    out = [
        f"dsw={metrics.swap_distance(w, v)}",
        f"rho1={_frac(metrics.area_distance(w, v))}",
        f"rho_inf={_frac(metrics.max_gap_distance(w, v))}",
        f"tau_word1={_frac(metrics.span(w))}",
        f"tau_word2={_frac(metrics.span(v))}",
    ]
    _emit("\n".join(out) + "\n", args.output)
    return 0


def _cmd_bounds(args):
    n, m = args.n, args.m
    if not 1 <= m <= n:
        raise _UsageError(f"--m must lie in 1..{n}")
    if args.alphabet == 2:
        threshold = Fraction(m, n)
    else:
        threshold = Fraction(2 * m + 2, n)
    result = combinatorics.count_words_far(n, threshold, args.alphabet, cap=args.cap)
    out = [
        f"threshold={_frac(threshold)}",
        f"count_far={result.count_far}",
        f"total={result.total}",
        f"bound={result.bound}",
        f"ratio={_frac(Fraction(result.count_far, result.total))}",
        f"holds={str(result.count_far <= result.bound).lower()}",
    ]
    _emit("\n".join(out) + "\n", args.output)
    return 0


def _cmd_trotter(args):
    a, b = _load_matrices(args)[:2]
    check = products.check_trotter_bound(a, b, args.n)
    out = [
        f"n={args.n}",
        f"error={check.lhs!r}",
        f"bound={check.rhs!r}",
        f"holds={str(check.holds).lower()}",
    ]
    _emit("\n".join(out) + "\n", args.output)
    return 0


def _cmd_bound_sweep(args):
    a, b = _load_matrices(args)[:2]
    onsets = products.bound_onsets(a, b, max_n=args.max_n)
    out = [
        f"{name}_n0={'none' if n0 is None else n0}" for name, n0 in onsets.items()
    ]
    _emit("\n".join(out) + "\n", args.output)
    return 0


def _experiment_kwargs(args):
    return dict(
        mode=args.mode,
        count=args.count,
        seed=args.seed,
        cap=args.cap,
        threads=args.threads,
    )


def _cmd_concentrate(args):
    report = experiments.concentration_experiment(
        _load_matrices(args), args.n, threshold=args.threshold, **_experiment_kwargs(args)
    )
    _emit(serialize.dumps(serialize.report_to_dict(report)), args.output)
    return 0


def _cmd_cloud(args):
    cloud = experiments.generate_point_cloud(
        _load_matrices(args), args.n, **_experiment_kwargs(args)
    )
    if args.format == "csv":
        _emit(serialize.cloud_to_csv(cloud), args.output)
    else:
        _emit(serialize.dumps(serialize.cloud_to_dict(cloud)), args.output)
    return 0


def _cmd_as_run(args):
    try:
        n_values = [int(part) for part in args.n_values.split(",") if part]
    except ValueError as exc:
        raise _UsageError(f"--n-values must be comma-separated integers: {exc}") from exc
    run = experiments.almost_sure_run(_load_matrices(args), n_values, seed=args.seed)
    _emit(serialize.dumps(serialize.run_to_dict(run)), args.output)
    return 0


def _cmd_appendix_check(args):
    pair = (linalg.matrix_unit(2, 0, 1), linalg.matrix_unit(2, 0, 0))
    worst = 0.0
    for w in words.enumerate_words(args.n, 2, cap=args.cap):
        gap = np.abs(products.closed_form_product(w) - products.word_product(w, pair)).max()
        worst = max(worst, float(gap))
    passed = worst <= args.tolerance
    _emit(
        f"n={args.n}\nmax_abs_error={worst!r}\ntolerance={args.tolerance!r}\n"
        f"pass={str(passed).lower()}\n",
        args.output,
    )
    return 0 if passed else 2


def _cmd_serve(args):
    import uvicorn

    from .service import create_app

    port = args.port if args.port is not None else int(os.environ.get("TROTTER_PORT", "8080"))
    uvicorn.run(create_app(), host=args.host, port=port)
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="trotterlab", description=__doc__)
    parser.add_argument("--version", action="version", version=f"trotterlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, matrices=True, modes=True):
        if matrices:
            _add_matrix_flags(p)
        if modes:
            p.add_argument("--mode", choices=["exhaustive", "sample"], default="exhaustive")
            p.add_argument("--count", type=int, default=None, help="sample size in sample mode")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--cap", type=int, default=words.DEFAULT_ENUMERATION_CAP,
                       help="enumeration cap on alphabet_size*n")
        p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
        p.add_argument("--output", metavar="FILE", default=None)

    p = sub.add_parser("enumerate", help="list every word in lexicographic order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alphabet", type=int, default=2)
    p.add_argument("--cap", type=int, default=words.DEFAULT_ENUMERATION_CAP)
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("metrics", help="distances and span of a word pair")
    p.add_argument("--word1", required=True)
    p.add_argument("--word2", required=True)
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_metrics)

    p = sub.add_parser("bounds", help="count far words against the counting bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--alphabet", type=int, default=2)
    p.add_argument("--cap", type=int, default=words.DEFAULT_ENUMERATION_CAP)
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("trotter", help="alternating-product error and its bound")
    _add_matrix_flags(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_trotter)

    p = sub.add_parser("bound-sweep", help="first n from which each inequality holds")
    _add_matrix_flags(p)
    p.add_argument("--max-n", type=int, default=64)
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_bound_sweep)

    p = sub.add_parser("concentrate", help="distance-to-target statistics over words")
    common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--threshold", type=float, default=None)
    p.set_defaults(func=_cmd_concentrate)

    p = sub.add_parser("cloud", help="point cloud of all products")
    common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=_cmd_cloud)

    p = sub.add_parser("as-run", help="one sampled word per n, errors vs the target")
    common(p, modes=False)
    p.add_argument("--n-values", required=True, help="comma-separated increasing n list")
    p.set_defaults(func=_cmd_as_run)

    p = sub.add_parser("appendix-check", help="closed form vs multiplied products")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tolerance", type=float, default=1e-12)
    p.add_argument("--cap", type=int, default=words.DEFAULT_ENUMERATION_CAP)
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_appendix_check)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=None, help="default: $TROTTER_PORT or 8080")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (np.linalg.LinAlgError, ArithmeticError, RuntimeError) as exc:
        print(f"internal numerical failure: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
