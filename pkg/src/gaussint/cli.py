"""Command-line verification runner.

    gaussint list   [--filter STR]
    gaussint eval   IDENTITY_ID [--param name=value ...] [--tol F] [--seed N]
    gaussint verify [--filter STR] [--tol F] [--seed N] [--budget N]
                    [--json PATH] [--csv PATH] [--random-draws N]

Exit codes: 0 = no FAIL verdicts, 1 = at least one FAIL, 2 = infrastructure
error. The default seed comes from GAUSSINT_SEED when set.
"""

from __future__ import annotations

import argparse
import os
import sys

from .catalog import (
    DEFAULT_TOL,
    FAIL,
    build_catalog,
    export_csv,
    export_json,
    list_identities,
    run_identity,
    run_suite,
)
from .oracle import OracleBudget

SEED_ENV_VAR = "GAUSSINT_SEED"


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV_VAR)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"{SEED_ENV_VAR} must be an integer, got {raw!r}")


def _parse_value(text: str):
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        pass
    try:
        return complex(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse parameter value {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gaussint",
        description="verify closed-form Gaussian-integral identities against numerical oracles",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="list catalog identities")
    p_list.add_argument("--filter", default=None, help="substring filter on identity ids")

    p_eval = sub.add_parser("eval", help="evaluate a single identity")
    p_eval.add_argument("identity_id")
    p_eval.add_argument(
        "--param",
        action="append",
        default=[],
        metavar="name=value",
        help="override one parameter (repeatable)",
    )
    p_eval.add_argument("--tol", type=float, default=None)
    p_eval.add_argument("--seed", type=int, default=None)

    p_verify = sub.add_parser("verify", help="run the identity suite")
    p_verify.add_argument("--filter", default=None)
    p_verify.add_argument("--tol", type=float, default=None)
    p_verify.add_argument("--seed", type=int, default=None)
    p_verify.add_argument(
        "--budget",
        type=int,
        default=None,
        help="evaluation budget (controls both quadrature evaluations and MC samples)",
    )
    p_verify.add_argument("--json", default=None, metavar="PATH")
    p_verify.add_argument("--csv", default=None, metavar="PATH")
    p_verify.add_argument(
        "--random-draws",
        type=int,
        default=0,
        help="extra seeded random draws per identity on top of the fixed grid",
    )
    return parser


def _cmd_list(args) -> int:
    records = list_identities(args.filter)
    if not records and args.filter is not None:
        print(f"warning: no identities match filter {args.filter!r}", file=sys.stderr)
    for rec in records:
        params = ",".join(rec.params) if rec.params else "-"
        flag = "" if rec.expected_verdict == "PASS" else "  [FAIL-tolerated]"
        print(f"{rec.id:45s} params: {params:30s} anchor: {rec.paper_anchor}{flag}")
    print(f"{len(records)} identities")
    return 0


def _format_complex(z: complex) -> str:
    z = complex(z)
    if z.imag == 0:
        return f"{z.real:.12g}"
    return f"{z.real:.12g}{z.imag:+.12g}j"


def _cmd_eval(args) -> int:
    catalog = build_catalog()
    if args.identity_id not in catalog:
        print(f"unknown identity {args.identity_id!r}", file=sys.stderr)
        return 2
    record = catalog[args.identity_id]
    overrides = {}
    for item in args.param:
        if "=" not in item:
            print(f"bad --param {item!r}, expected name=value", file=sys.stderr)
            return 2
        name, _, value = item.partition("=")
        overrides[name.strip()] = _parse_value(value.strip())
    params = None
    if overrides:
        params = dict(record.draws[0])
        params.update(overrides)
    seed = args.seed if args.seed is not None else _default_seed()
    report = run_identity(record, params=params, tol=args.tol, seed=seed)
    print(f"id:          {report.id}")
    print(f"params:      {list(report.params_used)}")
    print(f"closed:      {_format_complex(report.closed_value)}")
    print(f"oracle:      {_format_complex(report.oracle_value)}")
    print(f"error bar:   {report.oracle_error_bar:.3e}")
    print(f"abs err:     {report.abs_err:.3e}")
    print(f"rel err:     {report.rel_err:.3e}")
    print(f"verdict:     {report.verdict}")
    if report.skip_reason:
        print(f"skip reason: {report.skip_reason}")
    return 0 if report.verdict != FAIL else 1


def _cmd_verify(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    budget = None
    if args.budget is not None:
        budget = OracleBudget(
            max_evaluations=max(args.budget, 1000),
            target_tol=1e-10,
            mc_samples=max(args.budget, 1000),
            seed=0,
        )
    suite = run_suite(
        filter=args.filter,
        budget=budget,
        seed=seed,
        tol=args.tol,
        random_draws=args.random_draws,
    )
    width = max((len(r.id) for r in suite.records), default=10)
    for rec in suite.records:
        print(
            f"{rec.id:{width}s}  {rec.verdict:16s} abs_err={rec.abs_err:<12.3e} "
            f"rel_err={rec.rel_err:<12.3e} t={rec.wall_time_ms}ms"
        )
    counts = suite.counts
    total = len(suite.records)
    print(
        f"\n{total} identities: {counts['PASS']} PASS, {counts['FAIL']} FAIL, "
        f"{counts['ERRATUM-SUSPECT']} ERRATUM-SUSPECT, {counts['SKIPPED']} SKIPPED "
        f"(seed={seed}, tol={args.tol if args.tol is not None else DEFAULT_TOL})"
    )
    if args.json:
        export_json(suite, args.json)
        print(f"JSON report written to {args.json}")
    if args.csv:
        export_csv(suite, args.csv)
        print(f"CSV report written to {args.csv}")
    return 1 if counts[FAIL] else 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "list":
            return _cmd_list(args)
        if args.command == "eval":
            return _cmd_eval(args)
        return _cmd_verify(args)
    except BrokenPipeError:
        return 0
    except SystemExit:
        raise
    except Exception as exc:  # infrastructure failure, not an identity verdict
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
