"""Command surface binding the model operations to scenario files and tables.

Subcommands:

* ``table1``     -- the reference calibration grid of wage ceilings
* ``bound``      -- one ceiling from --lambda/--k/--rc (and policy levers)
* ``ces``        -- unit cost and conditional demands at given factor prices
* ``solve``      -- solve a scenario file (capped or coupled mode)
* ``sweep``      -- re-solve across a one-parameter grid
* ``trajectory`` -- ceiling path over time under improvement rate g
* ``statics``    -- pass-through identity: direct formula vs finite difference
* ``shares``     -- factor shares at the solved equilibrium

All commands emit one table as CSV on stdout by default; ``--format json``
switches to the structured format and ``--out FILE`` writes to a file.
Exit codes: 0 success, 2 validation/input errors, 3 solver non-convergence.
Diagnostics go to stderr; setting ``CAW_NO_COLOR`` disables styling.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

import numpy as np

from .bound import caw_ceiling
from .calibration import factor_shares, table1
from .ces import conditional_demands, unit_cost
from .errors import InvalidInput, ParseError, SolverError, ValidationError
from .markets import solve_compute_market, solve_scenario
from .model import CesParams, PolicyLevers, Scenario, Technology
from .scenario_io import (
    OutputTable,
    emit_table,
    inputs_sha256,
    parse_scenario,
    scenario_sha256,
    standard_metadata,
)
from .statics import SWEEPABLE_PARAMS, StaticsSetup, caw_trajectory, semi_elasticity, sweep

_RESULT_HEADERS = (
    "regime",
    "w_h_star",
    "r_c_star",
    "ceiling",
    "l_h_star",
    "l_a_star",
    "k_c_star",
    "ceiling_binds",
    "labor_supply_at_wage",
    "labor_demand_at_wage",
)


def _result_row(res) -> tuple:
    return (
        res.regime.value,
        res.w_h_star,
        res.r_c_star,
        res.ceiling,
        res.l_h_star,
        res.l_a_star,
        res.k_c_star,
        res.ceiling_binds,
        res.labor_supply_at_wage,
        res.labor_demand_at_wage,
    )


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None, metavar="FILE")


def _add_scenario_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--scenario", required=True, metavar="FILE")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="caw", description="Compute-anchored wage model: ceilings, markets, statics."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table1", help="reference ceiling calibration grid")
    _add_output_flags(p)

    p = sub.add_parser("bound", help="wage ceiling for one technology/price point")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--rc", type=float, required=True)
    p.add_argument("--tau", type=float, default=0.0)
    p.add_argument("--mu", type=float, default=1.0)
    _add_output_flags(p)

    p = sub.add_parser("ces", help="unit cost and conditional demands")
    p.add_argument("--A", type=float, default=1.0)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--wh", type=float, required=True)
    p.add_argument("--wa", type=float, required=True)
    _add_output_flags(p)

    p = sub.add_parser("solve", help="solve one scenario file")
    _add_scenario_flag(p)
    p.add_argument("--mode", choices=("capped", "coupled"), default="capped")
    _add_output_flags(p)

    p = sub.add_parser("sweep", help="solve across a one-parameter grid")
    _add_scenario_flag(p)
    p.add_argument("--param", required=True, choices=SWEEPABLE_PARAMS, metavar="PATH")
    p.add_argument("--from", dest="start", type=float, required=True)
    p.add_argument("--to", dest="stop", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--log", action="store_true", help="geometric instead of linear grid")
    p.add_argument("--mode", choices=("capped", "coupled"), default="capped")
    _add_output_flags(p)

    p = sub.add_parser("trajectory", help="ceiling over time at improvement rate g")
    _add_scenario_flag(p)
    p.add_argument("--t-max", dest="t_max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--rc", type=float, default=None, help="override the compute-market rental rate")
    _add_output_flags(p)

    p = sub.add_parser("statics", help="wage pass-through: direct formula vs finite difference")
    _add_scenario_flag(p)
    p.add_argument("--demand", type=float, default=1.0, help="fixed effective-labor demand level")
    p.add_argument("--rel-step", dest="rel_step", type=float, default=1e-4)
    p.add_argument("--rc", type=float, default=None, help="override the compute-market rental rate")
    _add_output_flags(p)

    p = sub.add_parser("shares", help="factor shares at the solved equilibrium")
    _add_scenario_flag(p)
    p.add_argument("--mode", choices=("capped", "coupled"), default="capped")
    _add_output_flags(p)

    return parser


def _load_scenario(path: str) -> Scenario:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidInput(f"cannot read scenario file {path!r}: {exc}") from exc
    return parse_scenario(text)


def _rental_rate(s: Scenario, override: float | None) -> float:
    if override is not None:
        if override < 0.0:
            raise InvalidInput(f"--rc must be nonnegative, got {override!r}")
        return override
    return solve_compute_market(s).price


def _cmd_table1(args) -> OutputTable:
    rows = [
        (cell.lam, cell.k, cell.r_c, cell.ceiling) for band in table1() for cell in band
    ]
    meta = standard_metadata(inputs_sha256({"command": "table1"}))
    meta["command"] = "table1"
    return OutputTable(headers=("lambda", "k", "r_c", "ceiling"), rows=tuple(rows), metadata=meta)


def _cmd_bound(args) -> OutputTable:
    tech = Technology(lam=args.lam, k=args.k)
    policy = PolicyLevers(tau_c=args.tau, mu=args.mu)
    if args.tau < 0.0:
        raise InvalidInput("tau_c must be >= 0")
    if args.mu < 1.0:
        raise InvalidInput("mu must be >= 1")
    ceiling = caw_ceiling(tech, args.rc, policy)
    meta = standard_metadata(
        inputs_sha256(
            {"command": "bound", "lambda": args.lam, "k": args.k, "rc": args.rc, "tau": args.tau, "mu": args.mu}
        )
    )
    meta["command"] = "bound"
    return OutputTable(
        headers=("lambda", "k", "r_c", "tau_c", "mu", "ceiling"),
        rows=((args.lam, args.k, args.rc, args.tau, args.mu, ceiling),),
        metadata=meta,
    )


def _cmd_ces(args) -> OutputTable:
    ces = CesParams(A=args.A, alpha=args.alpha, beta=args.beta, sigma=args.sigma)
    cost = unit_cost(ces, args.wh, args.wa)
    pair = conditional_demands(ces, args.wh, args.wa)
    meta = standard_metadata(
        inputs_sha256(
            {
                "command": "ces",
                "A": args.A,
                "alpha": args.alpha,
                "beta": args.beta,
                "sigma": args.sigma,
                "wh": args.wh,
                "wa": args.wa,
            }
        )
    )
    meta["command"] = "ces"
    return OutputTable(
        headers=("unit_cost", "l_h", "l_a"),
        rows=((cost, pair.l_h, pair.l_a),),
        metadata=meta,
    )


def _cmd_solve(args) -> OutputTable:
    s = _load_scenario(args.scenario)
    res = solve_scenario(s, args.mode)
    meta = standard_metadata(scenario_sha256(s))
    meta["command"] = "solve"
    meta["mode"] = args.mode
    return OutputTable(headers=_RESULT_HEADERS, rows=(_result_row(res),), metadata=meta)


def _cmd_sweep(args) -> OutputTable:
    s = _load_scenario(args.scenario)
    if args.steps < 1:
        raise InvalidInput("--steps must be >= 1")
    if args.log:
        if args.start <= 0.0 or args.stop <= 0.0:
            raise InvalidInput("--log grids need positive endpoints")
        grid = np.geomspace(args.start, args.stop, args.steps)
    else:
        grid = np.linspace(args.start, args.stop, args.steps)
    rows = []
    for row in sweep(s, args.param, [float(v) for v in grid], solver=args.mode):
        if row.result is not None:
            rows.append((row.value, *_result_row(row.result), None))
        else:
            rows.append((row.value, *(None,) * len(_RESULT_HEADERS), row.error))
    meta = standard_metadata(scenario_sha256(s))
    meta["command"] = "sweep"
    meta["mode"] = args.mode
    meta["param"] = args.param
    return OutputTable(
        headers=("value", *_RESULT_HEADERS, "error"), rows=tuple(rows), metadata=meta
    )


def _cmd_trajectory(args) -> OutputTable:
    s = _load_scenario(args.scenario)
    if args.steps < 1:
        raise InvalidInput("--steps must be >= 1")
    if args.t_max < 0.0:
        raise InvalidInput("--t-max must be >= 0")
    r_c = _rental_rate(s, args.rc)
    grid = [float(t) for t in np.linspace(0.0, args.t_max, args.steps)]
    points = caw_trajectory(s.technology, r_c, grid)
    meta = standard_metadata(scenario_sha256(s))
    meta["command"] = "trajectory"
    meta["r_c"] = r_c
    return OutputTable(headers=("t", "ceiling"), rows=tuple(points), metadata=meta)


def _cmd_statics(args) -> OutputTable:
    s = _load_scenario(args.scenario)
    r_c = _rental_rate(s, args.rc)
    setup = StaticsSetup(
        ces=s.ces,
        l_eff_demand=args.demand,
        labor_supply=s.labor_supply_ts,
        w_a_eff=s.technology.k * r_c,
    )
    se = semi_elasticity(setup, rel_step=args.rel_step)
    meta = standard_metadata(scenario_sha256(s))
    meta["command"] = "statics"
    meta["r_c"] = r_c
    return OutputTable(
        headers=("w_h", "l_h", "l_a", "direct", "fd", "fd_forward", "fd_backward"),
        rows=(
            (se.base.w_h, se.base.l_h, se.base.l_a, se.direct, se.fd, se.fd_forward, se.fd_backward),
        ),
        metadata=meta,
    )


def _cmd_shares(args) -> OutputTable:
    s = _load_scenario(args.scenario)
    res = solve_scenario(s, args.mode)
    y = res.w_h_star * res.l_h_star + res.r_c_star * res.k_c_star
    shares = factor_shares(res.w_h_star, res.l_h_star, res.r_c_star, res.k_c_star, y)
    meta = standard_metadata(scenario_sha256(s))
    meta["command"] = "shares"
    meta["mode"] = args.mode
    return OutputTable(
        headers=("s_labor", "s_compute", "y"),
        rows=((shares.s_labor, shares.s_compute, y),),
        metadata=meta,
    )


_HANDLERS = {
    "table1": _cmd_table1,
    "bound": _cmd_bound,
    "ces": _cmd_ces,
    "solve": _cmd_solve,
    "sweep": _cmd_sweep,
    "trajectory": _cmd_trajectory,
    "statics": _cmd_statics,
    "shares": _cmd_shares,
}


def _diagnostic(stream, message: str) -> None:
    styled = (
        hasattr(stream, "isatty")
        and stream.isatty()
        and not os.environ.get("CAW_NO_COLOR")
    )
    prefix = "\x1b[31merror:\x1b[0m" if styled else "error:"
    print(f"{prefix} {message}", file=stream)


def run_command(argv, stdout=None, stderr=None) -> int:
    """Execute one CLI invocation; returns the process exit code."""
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if exc.code is not None else 0
        return int(code) if not isinstance(code, str) else 2
    try:
        table = _HANDLERS[args.command](args)
        text = emit_table(table, "json" if args.format == "json" else "csv")
    except (ParseError, ValidationError, InvalidInput) as exc:
        _diagnostic(stderr, str(exc))
        return 2
    except SolverError as exc:
        _diagnostic(stderr, str(exc))
        return 3
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))
