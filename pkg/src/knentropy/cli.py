"""Command-line frontend.

Subcommands: entropy (reports per parameter), sweep (CSV over a q grid),
verify (JSON-lines verification suites), maxent (constrained grid argmax).

Exit codes: 0 ok, 2 usage error or malformed input, 3 invalid distribution,
4 verification failure, 5 infeasible constraint. The default seed is 0 so
default runs are reproducible.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .entropy import entropy_report
from .errors import (
    DistributionError,
    DomainError,
    FormatError,
    InfeasibleConstraintError,
    ParameterError,
)
from .pmf import load
from .reports import all_satisfied, format_float, render_json
from .theoremlab import SUITE_NAMES, maxent_search, run_suite

__all__ = ["build_parser", "main"]

_ENTROPY_CSV_HEADER = "pmf_id,q,shannon,renyi,tsallis,phi_q_residual"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knentropy",
        description="Generalized entropies on quasilinear means, with "
                    "verification suites for their characterizing identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("entropy", help="entropy report for a distribution")
    _add_input_arguments(pe)
    pe.add_argument("--q", "--alpha", dest="q_values", action="append", type=float,
                    metavar="Q", help="entropy parameter, repeatable (default: 1)")
    pe.add_argument("--output-format", choices=("json", "csv"), default="json")
    _add_output_argument(pe)

    ps = sub.add_parser("sweep", help="CSV sweep of the entropies over a q grid")
    _add_input_arguments(ps)
    ps.add_argument("--q-min", type=float, required=True)
    ps.add_argument("--q-max", type=float, required=True)
    ps.add_argument("--steps", type=int, default=33)
    _add_output_argument(ps)

    pv = sub.add_parser("verify", help="run verification suites (JSON lines)")
    pv.add_argument("--suite", choices=("all",) + SUITE_NAMES, default="all")
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--budget", type=int, default=1000)
    pv.add_argument("--alpha", dest="alphas", action="append", type=float,
                    help="orders for the concavity search, repeatable")
    _add_output_argument(pv)

    pm = sub.add_parser("maxent", help="constrained entropy argmax on a 3-point support")
    pm.add_argument("--objective", choices=("shannon", "renyi", "tsallis"),
                    default="shannon")
    pm.add_argument("--q", "--alpha", dest="q", type=float, default=None)
    pm.add_argument("--support", required=True,
                    help="comma-separated support values, e.g. 0,1,2")
    pm.add_argument("--mean", dest="mean_target", type=float, required=True)
    pm.add_argument("--grid", type=int, default=400)
    pm.add_argument("--compare", metavar="OBJ1,OBJ2",
                    help="compare two objectives, e.g. tsallis,renyi")
    _add_output_argument(pm)
    return parser


def _add_input_arguments(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--input", required=True, help="CSV or JSON distribution file")
    sub.add_argument("--format", choices=("auto", "csv", "json"), default="auto")
    sub.add_argument("--normalize", action="store_true",
                     help="renormalize inputs that do not sum to 1")


def _add_output_argument(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--output", default=None, help="write here instead of stdout")


def _cmd_entropy(args, out) -> int:
    dist = load(args.input, args.format, renormalize=args.normalize)
    pmf_id = Path(args.input).name
    q_values = args.q_values if args.q_values else [1.0]
    reports = [entropy_report(dist, q, pmf_id=pmf_id) for q in q_values]
    if args.output_format == "csv":
        lines = [_ENTROPY_CSV_HEADER]
        for r in reports:
            lines.append(",".join([
                r.pmf_id,
                format_float(r.parameter.value),
                format_float(r.shannon),
                format_float(r.renyi),
                format_float(r.tsallis),
                format_float(r.phi_q_residual),
            ]))
        out.write("\n".join(lines) + "\n")
    else:
        out.write("[" + ",".join(r.to_json() for r in reports) + "]\n")
    return 0


def _cmd_sweep(args, out) -> int:
    if not 0.0 < args.q_min < args.q_max:
        raise ParameterError(f"need 0 < q-min < q-max, got {args.q_min!r}, {args.q_max!r}")
    if args.steps < 2:
        raise ParameterError("steps must be >= 2")
    dist = load(args.input, args.format, renormalize=args.normalize)
    pmf_id = Path(args.input).name
    step = (args.q_max - args.q_min) / (args.steps - 1)
    lines = ["q,shannon,renyi,tsallis,phi_q_residual"]
    for k in range(args.steps):
        q = args.q_max if k == args.steps - 1 else args.q_min + k * step
        r = entropy_report(dist, q, pmf_id=pmf_id)
        lines.append(",".join(format_float(v) for v in (
            q, r.shannon, r.renyi, r.tsallis, r.phi_q_residual)))
    out.write("\n".join(lines) + "\n")
    return 0


def _cmd_verify(args, out) -> int:
    names = list(SUITE_NAMES) if args.suite == "all" else [args.suite]
    reports = []
    for name in names:
        for report in run_suite(name, args.budget, args.seed, alphas=args.alphas):
            out.write(report.to_json() + "\n")
            reports.append(report)
        out.flush()
    return 0 if all_satisfied(reports) else 4


def _cmd_maxent(args, out) -> int:
    try:
        support = [float(s) for s in args.support.split(",")]
    except ValueError:
        raise ParameterError(f"cannot parse support values from {args.support!r}") from None
    if args.compare:
        names = [s.strip() for s in args.compare.split(",")]
        if len(names) != 2:
            raise ParameterError("--compare needs exactly two objectives")
        results = [
            maxent_search(name, support, args.mean_target, args.grid, parameter=args.q)
            for name in names
        ]
        cell_distance = max(
            abs(results[0].cell[0] - results[1].cell[0]),
            abs(results[0].cell[1] - results[1].cell[1]),
        )
        doc = {
            "compare": [r.to_json_dict() for r in results],
            "cell_distance": cell_distance,
        }
    else:
        doc = maxent_search(args.objective, support, args.mean_target,
                            args.grid, parameter=args.q).to_json_dict()
    out.write(render_json(doc) + "\n")
    return 0


_DISPATCH = {
    "entropy": _cmd_entropy,
    "sweep": _cmd_sweep,
    "verify": _cmd_verify,
    "maxent": _cmd_maxent,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    close_out = False
    if args.output:
        out = open(args.output, "w", encoding="utf-8")
        close_out = True
    try:
        return _DISPATCH[args.command](args, out)
    except (FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DistributionError as exc:
        print(f"error: invalid distribution: {exc}", file=sys.stderr)
        return 3
    except InfeasibleConstraintError as exc:
        print(f"error: infeasible constraint: {exc}", file=sys.stderr)
        return 5
    except (ParameterError, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        if close_out:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
