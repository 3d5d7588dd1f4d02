"""Command-line interface: ``liegamma <command> [options]``.

Commands
--------
exp       group exponential ``exp(xi^)``
adjoint   adjoint matrix ``Ad(exp(xi^))``
jacobian  left Jacobian (quadrature for Sim3)
gamma     ``Gamma_l`` of the algebra element (``--adjoint`` for the adjoint one)
check     run a property suite, or ``all`` of them
table1    every summary-table row against its oracle

Exit status is 0 on success, 1 when a check fails and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

import numpy as np

from .checks import SUITES, run_suite
from .errors import LieGammaError
from .groups import adjoint_of, exp_group, gamma_group, jacobian_any, random_tangent
from .linalg import BASE_GROUPS, GroupId, TangentVector, layout_string
from .table import ROWS, row_residual

DEFAULT_SEED = 42
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def default_seed() -> int:
    env = os.environ.get("LIEGAMMA_SEED")
    if env is None or env.strip() == "":
        return DEFAULT_SEED
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"LIEGAMMA_SEED must be an integer, got {env!r}") from None


def parse_group(text: str) -> GroupId:
    try:
        return GroupId.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def parse_xi(group: GroupId, text: str | None) -> TangentVector:
    """Parse a comma-separated coordinate list in the group's layout order."""
    base = group.base
    expected = f"{base.value} expects {base.tangent_dim} values: {layout_string(base)}"
    if text is None:
        raise UsageError(f"--xi is required; {expected}")
    try:
        vals = [float(v) for v in text.replace(" ", "").split(",") if v != ""]
    except ValueError:
        raise UsageError(f"could not parse --xi {text!r}; {expected}") from None
    if len(vals) != base.tangent_dim:
        raise UsageError(f"got {len(vals)} values for --xi; {expected}")
    try:
        return TangentVector(base, np.array(vals))
    except ValueError as exc:
        raise UsageError(f"{exc}; {expected}") from None


def parse_tol(items) -> dict:
    out = {}
    for item in items or ():
        name, sep, value = item.rpartition("=")
        if not sep or not name:
            raise UsageError(f"--tol expects name=value, got {item!r}")
        try:
            out[name] = float(value)
        except ValueError:
            raise UsageError(f"--tol value must be a number, got {value!r}") from None
    return out


# ---------------------------------------------------------------------------
# Output


def format_matrix(group: str, quantity: str, m: np.ndarray, fmt: str) -> str:
    m = np.atleast_2d(np.asarray(m, dtype=float))
    rows = [[float(v) for v in row] for row in m]
    if fmt == "json":
        # json uses repr for floats, which round-trips exactly.
        return json.dumps({"group": group, "quantity": quantity, "rows": rows})
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for row in rows:
            w.writerow([repr(v) for v in row])
        return buf.getvalue().rstrip("\n")
    body = np.array2string(m, precision=10, suppress_small=True, max_line_width=160)
    return f"{quantity} [{group}]\n{body}"


def _table_csv(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["group", "quantity", "max_abs_residual", "tolerance", "status"])
    for r in records:
        w.writerow([r["group"], r["quantity"], repr(r["max_abs_residual"]), repr(r["tolerance"]),
                    r["status"]])
    return buf.getvalue().rstrip("\n")


def _report_csv(report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["suite", "check", "value", "tolerance", "status"])
    for c in report.checks:
        w.writerow([report.suite, c.name, repr(c.value), repr(c.tolerance),
                    "pass" if c.passed else "fail"])
    return buf.getvalue().rstrip("\n")


# ---------------------------------------------------------------------------
# Commands


def _cmd_map(args, out) -> int:
    group = parse_group(args.group)
    xi = parse_xi(group, args.xi)
    if args.command == "exp":
        if group.is_adjoint:
            m, name = adjoint_of(xi).matrix, group.value
        else:
            m, name = exp_group(xi).matrix, group.value
        quantity = "exp"
    elif args.command == "adjoint":
        m, name, quantity = adjoint_of(xi).matrix, group.base.value, "adjoint"
    else:
        if xi.group is GroupId.Sim3:
            print("note: Sim3 Jacobian evaluated by quadrature", file=sys.stderr)
        m, name, quantity = jacobian_any(xi), group.base.value, "jacobian"
    print(format_matrix(name, quantity, m, args.format), file=out)
    return EXIT_OK


def _cmd_gamma(args, out) -> int:
    group = parse_group(args.group)
    xi = parse_xi(group, args.xi)
    if args.ell is None or args.ell < 0:
        raise UsageError("gamma needs --ell with a non-negative integer")
    adjoint = args.adjoint or group.is_adjoint
    m = gamma_group(args.ell, xi, adjoint=adjoint)
    quantity = f"gamma{args.ell}" + ("-adjoint" if adjoint else "")
    print(format_matrix(group.base.value, quantity, m, args.format), file=out)
    return EXIT_OK


def _cmd_check(args, out) -> int:
    if args.suite is None:
        raise UsageError("check needs --suite; one of: all, " + ", ".join(SUITES))
    names = list(SUITES) if args.suite == "all" else [args.suite]
    for name in names:
        if name not in SUITES:
            raise UsageError(f"unknown suite {name!r}; one of: all, " + ", ".join(SUITES))
    if args.samples < 1:
        raise UsageError("--samples must be at least 1")
    seed = args.seed if args.seed is not None else default_seed()
    tol = parse_tol(args.tol)
    reports = [run_suite(n, args.samples, seed, tol) for n in names]
    if args.format == "json":
        payload = [r.to_dict() for r in reports]
        print(json.dumps(payload[0] if len(payload) == 1 else payload), file=out)
    elif args.format == "csv":
        print("\n".join(_report_csv(r) if i == 0 else _report_csv(r).split("\n", 1)[1]
                        for i, r in enumerate(reports)), file=out)
    else:
        print("\n\n".join(r.format_pretty() for r in reports), file=out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def table1_records(samples: int, seed: int, xi: TangentVector | None = None) -> list:
    """Worst residual of every summary-table row over seeded samples.

    With ``xi`` given only the rows of its group are evaluated, at that
    point alone.
    """
    rng = np.random.default_rng(seed)
    points = {}
    for g in BASE_GROUPS:
        if xi is not None:
            if g is xi.group:
                points[g] = [xi]
            continue
        points[g] = [random_tangent(g, rng) for _ in range(samples)]
    records = []
    for row in ROWS:
        if row.group not in points:
            continue
        worst = max(row_residual(row, p) for p in points[row.group])
        records.append({"group": row.group.value, "quantity": row.label,
                        "max_abs_residual": worst, "tolerance": row.tolerance,
                        "status": "pass" if worst <= row.tolerance else "fail"})
    return records


def _cmd_table1(args, out) -> int:
    if args.samples < 1:
        raise UsageError("--samples must be at least 1")
    seed = args.seed if args.seed is not None else default_seed()
    xi = None
    if args.xi is not None:
        if args.group is None:
            raise UsageError("--xi needs --group for table1")
        xi = parse_xi(parse_group(args.group), args.xi)
    elif args.group is not None:
        raise UsageError("--group for table1 needs --xi")
    records = table1_records(args.samples, seed, xi)
    if args.format == "json":
        print(json.dumps({"seed": seed, "samples": 1 if xi is not None else args.samples,
                          "rows": records}), file=out)
    elif args.format == "csv":
        print(_table_csv(records), file=out)
    else:
        width = max(len(r["quantity"]) for r in records)
        for r in records:
            print(f"{r['status'].upper():4s}  {r['quantity']:<{width}}  "
                  f"{r['max_abs_residual']:.3e} <= {r['tolerance']:.0e}", file=out)
    return EXIT_OK if all(r["status"] == "pass" for r in records) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liegamma",
        description="Closed-form Lie group maps and their verification suites.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_group=True):
        p.add_argument("--group", required=need_group,
                       help="representation id, e.g. so3, se3, adse3, sgal3, sim3")
        p.add_argument("--xi", help="comma-separated tangent coordinates in layout order")
        p.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")

    for name, text in (("exp", "group exponential"), ("adjoint", "adjoint matrix"),
                       ("jacobian", "left Jacobian")):
        common(sub.add_parser(name, help=text))
    p = sub.add_parser("gamma", help="Gamma_l of the algebra element")
    common(p)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--adjoint", action="store_true", help="use the adjoint algebra element")

    p = sub.add_parser("check", help="run a property suite")
    p.add_argument("--suite", help="suite id or 'all'")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--tol", action="append", metavar="NAME=VALUE",
                   help="override the tolerance of one named check")
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")

    p = sub.add_parser("table1", help="summary-table rows against their oracles")
    common(p, need_group=False)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=None)
    return parser


_COMMANDS = {"exp": _cmd_map, "adjoint": _cmd_map, "jacobian": _cmd_map,
             "gamma": _cmd_gamma, "check": _cmd_check, "table1": _cmd_table1}


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"liegamma {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LieGammaError as exc:
        print(f"liegamma {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
