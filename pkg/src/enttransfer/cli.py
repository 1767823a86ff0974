"""Command-line front end.

Single-point queries (feasible, fslacks, beta-c, region, pmax, asymptotic)
and grid sweeps behind the four standard figures, emitted as deterministic
CSV or JSON: fixed column order, 12 significant digits, newline-terminated
rows. Angles are radians; with --pi-fraction every angle value is read as a
multiple of pi, so e.g. ``--beta 1/5 --pi-fraction`` means pi/5.

Exit codes: 0 success (grid-point failures only warn), 1 infeasible or
numerical failure on a single-point query, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

from .asymptotic import asymptotic_ledger
from .catalysis import ROOT_TOL, f3_roots, solve_beta_c
from .errors import (
    BracketError,
    DegenerateDilutionError,
    DomainError,
    HeadroomError,
    SingularPointError,
)
from .majorization import majorizes
from .probabilistic import p_max, pmax_sweep
from .transfer import TransferProblem, alpha_star, f_slacks, max_acceptor_angle

FIG1_DBETA = 0.01
FIG1_BETAS = (math.pi / 10, 0.5, math.pi / 5)
FIG2_DBETA_MIN = 0.001
FIG2_DBETA_MAX = 0.2
FIG3_DBETAS = (0.2, 0.1, 0.01, 0.001)
FIG4_BETA = math.pi / 10
FIG4_DBETA = 0.01

PRESETS = ("fig1", "fig2", "fig3", "fig4")

DEFAULT_GRID_POINTS = 200

CONFIG_KEYS = (
    "alpha",
    "beta",
    "dbeta",
    "n",
    "tol",
    "grid_points",
    "format",
    "output",
    "preset",
    "pi_fraction",
)


class UsageError(Exception):
    """Bad flags or config values; maps to exit code 2."""


def _parse_angle(text: str, pi_fraction: bool, name: str) -> float:
    """Angle flag value: a float or an a/b fraction, times pi when asked."""
    t = text.strip()
    try:
        if "/" in t:
            num, den = t.split("/", 1)
            value = float(num) / float(den)
        else:
            value = float(t)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"--{name}: cannot parse angle {text!r}") from exc
    return value * math.pi if pi_fraction else value


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".12g")
    if value is None:
        return ""
    return str(value)


def _json_value(value):
    if isinstance(value, float):
        return float(format(value, ".12g"))
    return value


def _render(header: list[str], rows: list[tuple], fmt: str) -> str:
    if fmt == "json":
        payload = [
            {key: _json_value(value) for key, value in zip(header, row)}
            for row in rows
        ]
        return json.dumps(payload, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(value) for value in row])
    return buf.getvalue()


def _emit(args, header: list[str], rows: list[tuple]) -> None:
    text = _render(header, rows, args.format)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        print(f"wrote {args.output} ({len(rows)} rows)")
    else:
        sys.stdout.write(text)


def load_config(path: str) -> dict:
    """Read a ``key = value`` config file; '#' starts a comment."""
    values: dict[str, str] = {}
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config file {path!r}: {exc}") from exc
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected 'key = value'")
        key, _, value = line.partition("=")
        key = key.strip().replace("-", "_")
        if key not in CONFIG_KEYS:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        values[key] = value.strip()
    return values


def _merge_config(args) -> None:
    """Fill unset flags from the config file; flags always win."""
    if not args.config:
        return
    values = load_config(args.config)
    converters = {
        "n": int,
        "grid_points": int,
        "tol": float,
        "pi_fraction": lambda s: s.lower() in ("1", "true", "yes", "on"),
    }
    for key, raw in values.items():
        if getattr(args, key, None) is not None:
            continue
        if not hasattr(args, key):
            continue  # key not applicable to this command
        try:
            value = converters.get(key, str)(raw)
        except ValueError as exc:
            raise UsageError(f"config key {key!r}: bad value {raw!r}") from exc
        setattr(args, key, value)


def _require(args, *names: str) -> None:
    for name in names:
        if getattr(args, name, None) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required")


def _angles(args, *names: str) -> list[float]:
    pi_fraction = bool(args.pi_fraction)
    return [_parse_angle(getattr(args, n), pi_fraction, n) for n in names]


def _cmd_feasible(args) -> int:
    _require(args, "alpha", "beta", "dbeta")
    alpha, beta, dbeta = _angles(args, "alpha", "beta", "dbeta")
    problem = TransferProblem.solve(alpha, beta, dbeta)
    report = majorizes(problem.before_vector(), problem.after_vector())
    header = ["alpha", "beta", "dbeta", "dalpha", "feasible", "slack1", "slack2", "slack3"]
    row = (alpha, beta, dbeta, problem.dalpha, report.feasible, *report.slacks)
    _emit(args, header, [row])
    return 0


def _cmd_fslacks(args) -> int:
    _require(args, "alpha", "beta", "dbeta")
    alpha, beta, dbeta = _angles(args, "alpha", "beta", "dbeta")
    problem = TransferProblem.solve(alpha, beta, dbeta)
    s = f_slacks(problem)
    header = ["alpha", "beta", "dbeta", "dalpha", "f1", "f2", "f3", "regime_of_f2"]
    row = (alpha, beta, dbeta, problem.dalpha, s.f1, s.f2, s.f3, s.regime_of_f2)
    _emit(args, header, [row])
    return 0


def _cmd_beta_c(args) -> int:
    _require(args, "dbeta")
    (dbeta,) = _angles(args, "dbeta")
    value = solve_beta_c(dbeta, args.tol)
    _emit(args, ["dbeta", "beta_c"], [(dbeta, value)])
    return 0


def _cmd_region(args) -> int:
    _require(args, "beta", "dbeta")
    beta, dbeta = _angles(args, "beta", "dbeta")
    beta_c = solve_beta_c(dbeta, args.tol)
    region = f3_roots(beta, dbeta, tol=args.tol, beta_c=beta_c)
    header = ["beta", "dbeta", "beta_c", "nonempty", "lower_root", "upper_root"]
    row = (beta, dbeta, beta_c, region.nonempty, region.lower_root, region.upper_root)
    _emit(args, header, [row])
    return 0


def _cmd_pmax(args) -> int:
    _require(args, "alpha", "beta", "dbeta")
    alpha, beta, dbeta = _angles(args, "alpha", "beta", "dbeta")
    problem = TransferProblem.solve(alpha, beta, dbeta)
    result = p_max(problem)
    header = ["alpha", "beta", "dbeta", "dalpha", "p_max", "binding_term"]
    row = (alpha, beta, dbeta, problem.dalpha, result.p_max, result.binding_term)
    _emit(args, header, [row])
    return 0


def _cmd_asymptotic(args) -> int:
    _require(args, "alpha", "beta", "dbeta", "n")
    alpha, beta, dbeta = _angles(args, "alpha", "beta", "dbeta")
    ledger = asymptotic_ledger(alpha, beta, dbeta, args.n)
    header = [
        "alpha",
        "beta",
        "dbeta",
        "n",
        "singlets_from_donor",
        "donor_copies_needed",
        "surplus_donor_copies",
        "acceptor_intermediate_copies",
        "final_acceptor_copies",
    ]
    row = (
        alpha,
        beta,
        dbeta,
        ledger.n,
        ledger.singlets_from_donor,
        ledger.donor_copies_needed,
        ledger.surplus_donor_copies,
        ledger.acceptor_intermediate_copies,
        ledger.final_acceptor_copies,
    )
    _emit(args, header, [row])
    return 0


def _linspace(lo: float, hi: float, n: int) -> list[float]:
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


def _sweep_fig1(grid_points: int, tol: float):
    header = ["beta", "alpha", "f1", "f2", "f3", "f3_x10"]
    rows, failures = [], 0
    for beta in FIG1_BETAS:
        top = max_acceptor_angle(beta, FIG1_DBETA)
        grid = set(_linspace(0.0, top, grid_points))
        grid.add(alpha_star(beta, FIG1_DBETA))
        for alpha in sorted(grid):
            try:
                s = f_slacks(TransferProblem.solve(alpha, beta, FIG1_DBETA))
            except (BracketError, HeadroomError, DomainError):
                rows.append((beta, alpha, None, None, None, None))
                failures += 1
                continue
            rows.append((beta, alpha, s.f1, s.f2, s.f3, 10.0 * s.f3))
    return header, rows, failures


def _sweep_fig2(grid_points: int, tol: float):
    header = ["dbeta", "beta_c"]
    rows, failures = [], 0
    for dbeta in _linspace(FIG2_DBETA_MIN, FIG2_DBETA_MAX, grid_points):
        try:
            rows.append((dbeta, solve_beta_c(dbeta, tol)))
        except (BracketError, DomainError):
            rows.append((dbeta, None))
            failures += 1
    return header, rows, failures


def _sweep_fig3(grid_points: int, tol: float):
    header = ["dbeta", "beta", "lower_root", "upper_root"]
    rows, failures = [], 0
    for dbeta in FIG3_DBETAS:
        beta_c = solve_beta_c(dbeta, tol)
        for beta in _linspace(beta_c, math.pi / 4, grid_points):
            try:
                region = f3_roots(beta, dbeta, tol=tol, beta_c=beta_c)
            except (BracketError, HeadroomError, DomainError):
                rows.append((dbeta, beta, None, None))
                failures += 1
                continue
            rows.append((dbeta, beta, region.lower_root, region.upper_root))
    return header, rows, failures


def _sweep_fig4(grid_points: int, tol: float):
    header = ["alpha", "dalpha", "p_max", "binding_term"]
    rows = pmax_sweep(FIG4_BETA, FIG4_DBETA, grid_points)
    return header, rows, 0


def _cmd_sweep(args) -> int:
    _require(args, "preset")
    if args.preset not in PRESETS:
        raise UsageError(f"--preset must be one of {', '.join(PRESETS)}")
    grid_points = args.grid_points if args.grid_points else DEFAULT_GRID_POINTS
    if grid_points < 2:
        raise UsageError("--grid-points must be at least 2")
    sweeps = {
        "fig1": _sweep_fig1,
        "fig2": _sweep_fig2,
        "fig3": _sweep_fig3,
        "fig4": _sweep_fig4,
    }
    header, rows, failures = sweeps[args.preset](grid_points, args.tol)
    if not args.output:
        extension = "json" if args.format == "json" else "csv"
        args.output = f"{args.preset}.{extension}"
    _emit(args, header, rows)
    if failures:
        print(f"warning: {failures} grid points failed", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="enttransfer",
        description=(
            "Decide feasibility of reliable entanglement transfer between "
            "two-qubit pure states, locate the catalytic window and its "
            "critical donor angle, and emit the figure-data sweeps."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key = value config file; flags override it")
    common.add_argument(
        "--pi-fraction",
        action="store_true",
        default=None,
        help="interpret every angle value as a multiple of pi (e.g. 1/5 means pi/5)",
    )
    common.add_argument("--tol", type=float, help="angle tolerance for root solves")
    common.add_argument("--format", choices=("csv", "json"), help="output format")
    common.add_argument("--output", help="write to this path instead of stdout")

    sub = parser.add_subparsers(dest="command")

    def add(name: str, help_text: str, *, angles=(), needs_n=False, sweep=False):
        p = sub.add_parser(name, parents=[common], help=help_text)
        for angle in angles:
            p.add_argument(f"--{angle}", help=f"{angle} in radians")
        if needs_n:
            p.add_argument("--n", type=int, help="number of copies")
        if sweep:
            p.add_argument("--preset", help="one of " + ", ".join(PRESETS))
            p.add_argument("--grid-points", type=int, dest="grid_points")
        return p

    add("feasible", "reliable-transfer verdict and prefix-sum slacks",
        angles=("alpha", "beta", "dbeta"))
    add("fslacks", "the three slack functionals and the f2 regime",
        angles=("alpha", "beta", "dbeta"))
    add("beta-c", "critical donor angle for a given decrement",
        angles=("dbeta",))
    add("region", "catalytic window roots for fixed donor angle and decrement",
        angles=("beta", "dbeta"))
    add("pmax", "maximum success probability of a single-copy conversion",
        angles=("alpha", "beta", "dbeta"))
    add("asymptotic", "copy ledger in the many-copy limit",
        angles=("alpha", "beta", "dbeta"), needs_n=True)
    add("sweep", "figure-data grid sweeps (fig1..fig4 presets)", sweep=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help(sys.stderr)
        return 2
    handlers = {
        "feasible": _cmd_feasible,
        "fslacks": _cmd_fslacks,
        "beta-c": _cmd_beta_c,
        "region": _cmd_region,
        "pmax": _cmd_pmax,
        "asymptotic": _cmd_asymptotic,
        "sweep": _cmd_sweep,
    }
    try:
        _merge_config(args)
        if args.tol is None:
            args.tol = ROOT_TOL
        elif args.tol <= 0:
            raise UsageError("--tol must be positive")
        if args.format is None:
            args.format = "csv"
        return handlers[args.command](args)
    except (UsageError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HeadroomError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 1
    except (BracketError, DegenerateDilutionError, SingularPointError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
