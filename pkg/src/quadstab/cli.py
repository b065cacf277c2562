"""Command-line front end.

Subcommands mirror the service endpoints and run the same core calls
in-process: solve, check, experiment, counterexample, plus serve to start
the HTTP service.

Exit codes: 0 success (and acceptance predicate met where one applies),
1 usage or domain error, 2 acceptance predicate failed, 3 numeric range
failure (overflowing intermediate, undefined relative error).

The solve subcommand prints values at 15 significant digits for readability;
check and the experiment CSV print full-fidelity repr values.
"""

from __future__ import annotations

import argparse
import sys

from .experiments import ALL_SETS, ExperimentConfig, run_experiment
from .fp import U
from .oracle import InfiniteRelativeError
from .solver import (
    DegenerateLeadingCoefficient,
    Quadratic,
    ScaledFormReal,
    ScalingRangeError,
    solve_full,
)
from .stability import assess, ebs_impossibility_search

__all__ = ["main", "parse_complex"]


def parse_complex(text: str) -> complex:
    """Parse RE, RE+IMi, RE-IMi (also bare IMi, i, -i) into a complex value.

    The split point is the last +/- that is not an exponent sign, so
    literals like 1e-3+2.5e+4i parse correctly.
    """
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty coefficient")
    if s[-1] in "iIjJ":
        body = s[:-1]
        re_part, im_part = "", body
        for k in range(len(body) - 1, 0, -1):
            if body[k] in "+-" and body[k - 1] not in "eE":
                re_part, im_part = body[:k], body[k:]
                break
        if im_part in ("", "+"):
            im = 1.0
        elif im_part == "-":
            im = -1.0
        else:
            im = float(im_part)
        re = float(re_part) if re_part else 0.0
        return complex(re, im)
    return complex(float(s), 0.0)


def _fmt_real(x: float, precision: int) -> str:
    # -0.0 would render as "-0"; the readable view folds both zeros together
    # (the full-fidelity repr output keeps the sign).
    return f"{0.0 if x == 0.0 else x:.{precision}g}"


def _fmt_value(z: complex, precision: int = 15) -> str:
    """RE or RE+IMi at the given display precision."""
    if z.imag == 0.0:
        return _fmt_real(z.real, precision)
    sign = "+" if z.imag >= 0 or z.imag != z.imag else "-"
    return f"{_fmt_real(z.real, precision)}{sign}{_fmt_real(abs(z.imag), precision)}i"


def _fmt_value_full(z: complex) -> str:
    if z.imag == 0.0:
        return repr(z.real)
    sign = "+" if z.imag >= 0 else "-"
    return f"{repr(z.real)}{sign}{repr(abs(z.imag))}i"


def _cmd_solve(args: argparse.Namespace) -> int:
    q = Quadratic(parse_complex(args.a), parse_complex(args.b), parse_complex(args.c))
    outcome = solve_full(q)
    print(f"x1={_fmt_value(outcome.roots.x1)} x2={_fmt_value(outcome.roots.x2)}")
    if args.diagnostics:
        print(f"case={outcome.case}")
        s = outcome.scaled
        if isinstance(s, ScaledFormReal):
            print(f"alpha={s.alpha!r}")
            print(f"beta={s.beta!r}")
            print(f"e={s.e!r}")
        elif s is not None:
            print(f"alpha={_fmt_value_full(complex(s.alpha))}")
            print(f"beta={s.beta!r}")
            print(f"f={_fmt_value_full(s.f)}")
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    q = Quadratic(parse_complex(args.a), parse_complex(args.b), parse_complex(args.c))
    delta = args.delta_ulps * U
    outcome = solve_full(q)
    report = assess(q, outcome.roots, delta)
    print(f"case={outcome.case}")
    for name, root in (("x1", outcome.roots.x1), ("x2", outcome.roots.x2)):
        print(f"{name}_re={root.real!r}")
        print(f"{name}_im={root.imag!r}")
    for name in (
        "fwd_err_1",
        "fwd_err_2",
        "sum_backward_err",
        "prod_backward_err",
        "ems_fwd_err_1",
        "ems_fwd_err_2",
        "nbs_ratio",
        "delta",
    ):
        print(f"{name}={getattr(report, name)!r}")
    for name in ("ebs_pass", "ems_pass", "nbs_pass"):
        print(f"{name}={getattr(report, name)}")
    return 0 if report.ebs_pass else 2


def _cmd_experiment(args: argparse.Namespace) -> int:
    cfg = ExperimentConfig(
        set=args.set,
        n_trials=args.n,
        seed=args.seed,
        delta_threshold=args.delta_ulps * U,
        output_path=args.out,
    )
    result = run_experiment(cfg)
    print(f"set={cfg.set}")
    print(f"n_trials={cfg.n_trials}")
    print(f"seed={cfg.seed}")
    print(f"delta={cfg.delta_threshold!r}")
    for key, value in result.summary.items():
        if key.startswith(("n_", "elapsed")):
            print(f"{key}={value:g}")
        else:
            print(f"{key}={value!r}")
    if args.out:
        print(f"csv={args.out}")
    print(f"passed={result.passed}")
    return 0 if result.passed else 2


def _cmd_counterexample(args: argparse.Namespace) -> int:
    res = ebs_impossibility_search(t=args.t, radius=args.radius)
    print(f"t={res.t}")
    print(f"beta={res.beta!r}")
    print(f"search_radius={res.search_radius}")
    print(f"min_sum_err={res.min_sum_err!r}")
    print(f"min_sum_err_ulps={res.min_sum_err / U!r}")
    print(f"min_prod_err={res.min_prod_err!r}")
    print(f"min_prod_err_ulps={res.min_prod_err / U!r}")
    print(f"argmin_i={res.argmin_offsets[0]}")
    print(f"argmin_j={res.argmin_offsets[1]}")
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .api import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadstab",
        description="Scalar quadratic roots with element-wise stability reporting",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve a*x^2 + b*x + c = 0")
    p_solve.add_argument("a", help="coefficient, e.g. 2 or 1.5-2i")
    p_solve.add_argument("b")
    p_solve.add_argument("c")
    p_solve.add_argument(
        "--diagnostics",
        action="store_true",
        help="also print the case tag and the scaled form (alpha, beta, e or f)",
    )
    p_solve.set_defaults(func=_cmd_solve)

    p_check = sub.add_parser(
        "check", help="solve and report stability measurements as key=value lines"
    )
    p_check.add_argument("a")
    p_check.add_argument("b")
    p_check.add_argument("c")
    p_check.add_argument(
        "--delta-ulps",
        type=float,
        default=64.0,
        help="stability threshold in units of u (default 64)",
    )
    p_check.set_defaults(func=_cmd_check)

    p_exp = sub.add_parser("experiment", help="run a randomized corpus")
    p_exp.add_argument("--set", required=True, choices=ALL_SETS)
    p_exp.add_argument("--n", type=int, default=1000, help="number of trials")
    p_exp.add_argument("--seed", type=int, default=0)
    p_exp.add_argument("--delta-ulps", type=float, default=64.0)
    p_exp.add_argument("--out", default=None, help="write per-trial CSV here")
    p_exp.set_defaults(func=_cmd_experiment)

    p_ce = sub.add_parser(
        "counterexample",
        help="search rounded-root perturbations for an element-wise backward"
        " stable pair",
    )
    p_ce.add_argument("--t", type=int, default=27, help="beta = 2^-t + 2^-2t, t >= 27")
    p_ce.add_argument("--radius", type=int, default=100, help="grid radius in ulps")
    p_ce.set_defaults(func=_cmd_counterexample)

    p_serve = sub.add_parser("serve", help="start the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.set_defaults(func=_cmd_serve)

    return parser


def _protect_operands(argv: list[str]) -> list[str]:
    """Let coefficients like -3i or -1.5-2i survive argparse.

    For solve/check, pull the known flags to the front and put "--" before
    the positional operands, so leading minus signs are never mistaken for
    options.
    """
    if not argv or argv[0] not in ("solve", "check"):
        return argv
    sub, rest = argv[0], argv[1:]
    flags: list[str] = []
    operands: list[str] = []
    i = 0
    while i < len(rest):
        tok = rest[i]
        if tok == "--":
            operands.extend(rest[i + 1 :])
            break
        if tok in ("--diagnostics", "-h", "--help"):
            flags.append(tok)
            i += 1
        elif tok == "--delta-ulps":
            flags.extend(rest[i : i + 2])
            i += 2
        elif tok.startswith("--delta-ulps="):
            flags.append(tok)
            i += 1
        else:
            operands.append(tok)
            i += 1
    return [sub] + flags + ["--"] + operands


def main(argv: list[str] | None = None) -> int:
    args_in = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(_protect_operands(args_in))
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; fold usage into 1.
        return 1 if exc.code else 0
    try:
        return args.func(args)
    except DegenerateLeadingCoefficient as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ScalingRangeError, InfiniteRelativeError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
