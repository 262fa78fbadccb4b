"""Command-line interface: one subcommand per solver, CSV/JSON artifacts.

Every run writes its outputs plus a ``run_manifest.json`` recording the
resolved parameters; ``contestlab replay <manifest> --out <dir>`` re-runs
the same command and must reproduce the CSV/JSON outputs byte for byte.

Exit codes: 0 success, 1 input error, 2 usage error, 3 numerical
non-convergence.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from . import __version__
from ._tables import read_csv_columns, write_csv
from .baseline import baseline_grid, baseline_thresholds
from .costmin import allocate_grid
from .equilibrium import profile_allocations, solve_equilibrium
from .errors import (
    ContestLabError,
    DomainError,
    IntegrationError,
    SolverError,
    UnconvergedProfileError,
)
from .golden import golden_suite
from .hacking import hacking_threshold, hacking_verdicts, skewness_sweep
from .model import PrizeVector, load_scenario, validate_assumptions
from .presets import EXAMPLE_CONFIGS, example_scenario
from .simulate import (
    PanelCell,
    PanelSpec,
    contests_to_columns,
    fe_ols,
    mann_kendall,
    resolve_threads,
    run_contests,
    synthetic_panel,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_USAGE = 2
EXIT_NO_CONVERGENCE = 3

MANIFEST_NAME = "run_manifest.json"


# ---------------------------------------------------------------------------
# Manifest plumbing


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (np.bool_, bool)):   # before int: bool is an int subclass
        return bool(obj)
    if isinstance(obj, (np.integer, int)):
        return int(obj)
    if isinstance(obj, (np.floating, float)):
        x = float(obj)
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        if math.isnan(x):
            return "nan"
        return x
    if isinstance(obj, np.ndarray):
        return [_jsonable(v) for v in obj.tolist()]
    return obj


def _write_json(path: Path, payload) -> None:
    with open(path, "w") as fh:
        json.dump(_jsonable(payload), fh, indent=2, sort_keys=True, allow_nan=False)
        fh.write("\n")


class _Run:
    """Collects a command's outputs and writes the manifest at the end."""

    def __init__(self, command: str, out_dir: str, params: dict, replay_argv: list[str]):
        self.command = command
        self.out = Path(out_dir)
        self.out.mkdir(parents=True, exist_ok=True)
        self.params = params
        self.replay_argv = replay_argv
        self.outputs: list[str] = []
        self.started = time.monotonic()

    def path(self, name: str) -> Path:
        self.outputs.append(name)
        return self.out / name

    def finish(self) -> None:
        manifest = {
            "tool": "contestlab",
            "version": __version__,
            "command": self.command,
            "parameters": self.params,
            "replay_argv": self.replay_argv,
            "outputs": sorted(self.outputs),
            "duration_seconds": round(time.monotonic() - self.started, 6),
            "created_utc": datetime.now(timezone.utc).isoformat(),
        }
        _write_json(self.out / MANIFEST_NAME, manifest)


def _load_scenario_arg(value: str):
    """A scenario is a JSON file path or the name of a shipped example."""
    path = Path(value)
    if path.exists():
        return load_scenario(path), str(path.resolve())
    if value in EXAMPLE_CONFIGS:
        return example_scenario(value), value
    raise DomainError(f"scenario {value!r}: no such file or example name")


def _parse_prize_list(text: str) -> list[PrizeVector]:
    """Parse '1,0;2,0;4,0' into prize vectors (semicolons split vectors)."""
    vectors = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            values = tuple(float(v) for v in chunk.split(","))
        except ValueError:
            raise DomainError(f"bad prize vector {chunk!r}") from None
        vectors.append(PrizeVector(values))
    if not vectors:
        raise DomainError("no prize vectors given")
    return vectors


def _case_column(grid) -> np.ndarray:
    return np.asarray(grid.case_names(), dtype=object)


def _solver_params(args) -> dict:
    return {
        "grid": args.grid,
        "tol": args.tol,
        "damping": args.damping,
    }


def _solver_argv(args) -> list[str]:
    return ["--grid", str(args.grid), "--tol", repr(args.tol),
            "--damping", repr(args.damping)]


def _solve(args, scenario):
    return solve_equilibrium(scenario, grid_size=args.grid, tol=args.tol,
                             damping=args.damping)


# ---------------------------------------------------------------------------
# Subcommand handlers


def _cmd_validate(args) -> int:
    scenario, spath = _load_scenario_arg(args.scenario)
    report = validate_assumptions(scenario)
    run = _Run("validate", args.out, {"scenario": spath},
               ["validate", "--scenario", spath])
    _write_json(run.path("validation.json"), report.to_dict())
    run.finish()
    print(report.summary())
    if not report.ok:
        print("validation failed", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


def _cmd_cost(args) -> int:
    scenario, spath = _load_scenario_arg(args.scenario)
    scenario.check_theta(args.theta)
    if args.mu_max <= 0:
        raise DomainError(f"--mu-max must be positive, got {args.mu_max}")
    mus = np.linspace(0.0, args.mu_max, args.points)
    grid = allocate_grid(scenario, mus, np.full(mus.shape, args.theta))
    params = {"scenario": spath, "theta": args.theta,
              "mu_max": args.mu_max, "points": args.points}
    run = _Run("cost", args.out, params,
               ["cost", "--scenario", spath, "--theta", repr(args.theta),
                "--mu-max", repr(args.mu_max), "--points", str(args.points)])
    write_csv(run.path("cost.csv"), {
        "mu": grid.mu, "theta": grid.theta, "a": grid.a, "b": grid.b,
        "case": _case_column(grid), "cost": grid.cost,
        "shadow_price": grid.shadow_price, "marginal_cost": grid.marginal_cost,
    }, order=["mu", "theta", "a", "b", "case", "cost", "shadow_price", "marginal_cost"])
    run.finish()
    print(f"wrote cost curve for theta={args.theta} ({args.points} points)")
    return EXIT_OK


def _cmd_baseline(args) -> int:
    scenario, spath = _load_scenario_arg(args.scenario)
    lo, hi = scenario.support
    thetas = np.linspace(lo, hi, args.grid) if hi > lo else np.array([lo])
    grid = baseline_grid(scenario, thetas)
    params = {"scenario": spath, "grid": args.grid}
    run = _Run("baseline", args.out, params,
               ["baseline", "--scenario", spath, "--grid", str(args.grid)])
    write_csv(run.path("baseline.csv"), {
        "theta": grid.theta, "a": grid.a, "b": grid.b, "mu": grid.mu,
        "region": np.asarray(grid.region, dtype=object), "payoff": grid.payoff,
    }, order=["theta", "a", "b", "mu", "region", "payoff"])
    th = grid.thresholds
    _write_json(run.path("baseline.json"), {
        "mech_upper": th.mech_upper, "create_lower": th.create_lower,
        "grid": args.grid, "scenario_id": scenario.scenario_id,
    })
    run.finish()
    print(f"thresholds: mech_upper={th.mech_upper:.6g} create_lower={th.create_lower:.6g}")
    return EXIT_OK


def _cmd_equilibrium(args) -> int:
    scenario, spath = _load_scenario_arg(args.scenario)
    profile = _solve(args, scenario)
    alloc = profile_allocations(profile)
    base = baseline_grid(scenario, profile.theta_grid)
    params = {"scenario": spath, **_solver_params(args)}
    run = _Run("equilibrium", args.out, params,
               ["equilibrium", "--scenario", spath, *_solver_argv(args)])
    write_csv(run.path("equilibrium.csv"), {
        "theta": profile.theta_grid, "mu_star": profile.mu_star,
        "a": alloc.a, "b": alloc.b, "case": _case_column(alloc),
        "mu_baseline": base.mu,
    }, order=["theta", "mu_star", "a", "b", "case", "mu_baseline"])
    _write_json(run.path("equilibrium.json"), {
        "converged": profile.converged, "iterations": profile.iterations,
        "residual": profile.residual, "grid": args.grid, "tol": args.tol,
        "damping": args.damping, "scenario_id": scenario.scenario_id,
    })
    run.finish()
    if not profile.converged:
        print(f"equilibrium did not converge: residual {profile.residual:.3e}",
              file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    print(f"converged in {profile.iterations} iterations "
          f"(residual {profile.residual:.3e})")
    return EXIT_OK


def _cmd_hacking(args) -> int:
    scenario, spath = _load_scenario_arg(args.scenario)
    profile = _solve(args, scenario)
    if not profile.converged:
        print(f"equilibrium did not converge: residual {profile.residual:.3e}",
              file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    verdicts = hacking_verdicts(profile)
    params = {"scenario": spath, **_solver_params(args)}
    run = _Run("hacking", args.out, params,
               ["hacking", "--scenario", spath, *_solver_argv(args)])
    write_csv(run.path("hacking.csv"), {
        "theta": verdicts.theta, "hacks": verdicts.hacks.astype(int),
        "band": np.asarray(verdicts.region, dtype=object),
        "a_star": verdicts.a_star, "b_star": verdicts.b_star,
        "a_baseline": verdicts.a_base, "b_baseline": verdicts.b_base,
        "mu_star": verdicts.mu_star, "mu_baseline": verdicts.mu_base,
    }, order=["theta", "hacks", "band", "a_star", "b_star",
              "a_baseline", "b_baseline", "mu_star", "mu_baseline"])
    _write_json(run.path("hacking.json"), {
        "theta_star": verdicts.theta_star,
        "mech_upper": verdicts.thresholds.mech_upper,
        "create_lower": verdicts.thresholds.create_lower,
        "hacking_measure": verdicts.measure(scenario),
        "scenario_id": scenario.scenario_id,
    })
    run.finish()
    print(f"theta_star={verdicts.theta_star:.6g} "
          f"measure={verdicts.measure(scenario):.6g}")
    return EXIT_OK


def _cmd_sweep(args) -> int:
    scenario, spath = _load_scenario_arg(args.scenario)
    vectors = _parse_prize_list(args.prizes)
    result = skewness_sweep(scenario, vectors, grid_size=args.grid,
                            tol=args.tol, damping=args.damping)
    unconverged = [i for i, p in enumerate(result.profiles) if not p.converged]
    if unconverged:
        residuals = ", ".join(f"{result.profiles[i].residual:.3e}" for i in unconverged)
        print(f"sweep equilibria {unconverged} did not converge "
              f"(residuals {residuals})", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    params = {"scenario": spath, "prizes": args.prizes, **_solver_params(args)}
    run = _Run("sweep", args.out, params,
               ["sweep", "--scenario", spath, "--prizes", args.prizes,
                *_solver_argv(args)])
    rows = result.rows()
    write_csv(run.path("sweep.csv"),
              {key: np.asarray([r[key] for r in rows],
                               dtype=object if key == "region" else None)
               for key in ("prizes", "theta", "mu_star", "a_star", "b_star",
                           "hacks", "region")},
              order=["prizes", "theta", "mu_star", "a_star", "b_star", "hacks", "region"])
    _write_json(run.path("sweep.json"), {
        "prize_vectors": [list(pv.values) for pv in result.prize_vectors],
        "relations": [list(r) for r in result.relations],
        "hack_measures": list(result.hack_measures),
        "theta_stars": [v.theta_star for v in result.verdicts],
        "dominance_violations": result.dominance_violations(),
        "measure_violations": result.measure_violations(),
    })
    run.finish()
    measures = ", ".join(f"{m:.4f}" for m in result.hack_measures)
    print(f"swept {len(vectors)} prize vectors; hacking measures: {measures}")
    return EXIT_OK


def _cmd_simulate(args) -> int:
    scenario, spath = _load_scenario_arg(args.scenario)
    threads = resolve_threads(args.threads)
    profile = _solve(args, scenario)
    if not profile.converged:
        print(f"equilibrium did not converge: residual {profile.residual:.3e}",
              file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    outcomes = run_contests(scenario, profile, args.contests, args.seed,
                            threads=threads)
    contest_cols = contests_to_columns(outcomes)

    panel = synthetic_panel(
        scenario,
        n_contests=args.contests,
        players=scenario.players,
        seed=args.seed,
        cells=None if args.panel_cells else _single_cell(scenario, profile),
        traj_length=args.traj_length,
        drift_scale=args.drift_scale,
        noise_scale=args.noise_scale,
        grid_size=args.grid,
        tol=args.tol,
        damping=args.damping,
    )
    params = {
        "scenario": spath, "seed": args.seed, "contests": args.contests,
        "traj_length": args.traj_length, "drift_scale": args.drift_scale,
        "noise_scale": args.noise_scale, "threads": threads,
        "panel_cells": bool(args.panel_cells), **_solver_params(args),
    }
    run = _Run("simulate", args.out, params, [
        "simulate", "--scenario", spath, "--seed", str(args.seed),
        "--contests", str(args.contests),
        "--traj-length", str(args.traj_length),
        "--drift-scale", repr(args.drift_scale),
        "--noise-scale", repr(args.noise_scale),
        *(["--panel-cells"] if args.panel_cells else []),
        *_solver_argv(args), "--threads", str(threads),
    ])
    write_csv(run.path("contests.csv"), contest_cols)
    panel.to_csv(run.path("panel.csv"))
    run.finish()
    print(f"simulated {args.contests} contests x {scenario.players} players "
          f"(panel rows: {panel.n_rows})")
    return EXIT_OK


def _single_cell(scenario, profile):
    # reuse the already-solved profile as the one panel cell
    skew = 1 if len(scenario.prizes) <= 3 else 0
    return (PanelCell(prize_value=scenario.prizes.total, prize_skew=skew,
                      scenario=scenario, profile=profile),)


def _cmd_mk(args) -> int:
    columns = read_csv_columns(args.input)
    if args.column not in columns:
        raise DomainError(
            f"{args.input}: no column {args.column!r} (have {sorted(columns)})")
    series = np.asarray(columns[args.column], dtype=float)
    result = mann_kendall(series)
    in_path = str(Path(args.input).resolve())
    run = _Run("mk", args.out, {"input": in_path, "column": args.column},
               ["mk", "--input", in_path, "--column", args.column])
    _write_json(run.path("mk.json"), {
        "column": args.column, "n": result.n, "S": result.s,
        "var_S": result.var_s, "Z": result.z,
    })
    run.finish()
    print(f"S={result.s} Z={result.z:.6g} (n={result.n})")
    return EXIT_OK


def _cmd_regress(args) -> int:
    columns = read_csv_columns(args.input)
    dummies = tuple(s for s in args.dummies.split(",") if s)
    interactions = tuple(s for s in args.interactions.split(",") if s)
    spec = PanelSpec(outcome=args.outcome, dummies=dummies,
                     interactions=interactions, group=args.group)
    result = fe_ols(columns, spec)
    in_path = str(Path(args.input).resolve())
    params = {"input": in_path, "outcome": args.outcome,
              "dummies": args.dummies, "interactions": args.interactions,
              "group": args.group}
    run = _Run("regress", args.out, params, [
        "regress", "--input", in_path, "--outcome", args.outcome,
        "--dummies", args.dummies, "--interactions", args.interactions,
        "--group", args.group,
    ])
    _write_json(run.path("regress.json"), result.to_dict())
    run.finish()
    for name, coef, se in zip(result.names, result.coef, result.se):
        print(f"{name:16s} {coef: .6g} (se {se:.6g})")
    print(f"R2 {result.r_squared:.6g}, {result.nobs} rows, "
          f"{result.n_groups} groups")
    return EXIT_OK


def _cmd_examples(args) -> int:
    checks = golden_suite()
    failed = [c for c in checks if not c.passed]
    run = _Run("examples", args.out, {}, ["examples"])
    _write_json(run.path("examples.json"), [
        {"example": c.example, "check": c.name, "passed": c.passed,
         "detail": c.detail} for c in checks
    ])
    run.finish()
    for c in checks:
        print(f"[{'PASS' if c.passed else 'FAIL'}] {c.example}: {c.name} ({c.detail})")
    print(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    return EXIT_OK if not failed else EXIT_INPUT


def _cmd_replay(args) -> int:
    manifest_path = Path(args.manifest)
    try:
        with open(manifest_path) as fh:
            manifest = json.load(fh)
    except FileNotFoundError:
        raise DomainError(f"no manifest at {manifest_path}") from None
    except json.JSONDecodeError as exc:
        raise DomainError(f"{manifest_path}: not valid JSON ({exc})") from None
    argv = manifest.get("replay_argv")
    if not isinstance(argv, list) or not argv:
        raise DomainError(f"{manifest_path}: missing replay_argv")
    return dispatch([str(v) for v in argv] + ["--out", args.out])


# ---------------------------------------------------------------------------
# Parser


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="contestlab",
        description="Contest-design lab: effort allocation, equilibria, "
                    "benchmark hacking, simulation.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, scenario=True, solver=False):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        if scenario:
            p.add_argument("--scenario", required=True,
                           help="scenario JSON file or shipped example name")
        p.add_argument("--out", default=".", help="output directory")
        if solver:
            p.add_argument("--grid", type=int, default=201, help="type grid size")
            p.add_argument("--tol", type=float, default=1e-5,
                           help="fixed-point tolerance")
            p.add_argument("--damping", type=float, default=0.5,
                           help="best-response damping in (0, 1]")
        return p

    add("validate", _cmd_validate, "check model assumptions on a scenario")

    p = add("cost", _cmd_cost, "tabulate the least-cost allocation curve")
    p.add_argument("--theta", type=float, required=True, help="type to profile")
    p.add_argument("--mu-max", type=float, default=4.0, help="top fitness target")
    p.add_argument("--points", type=int, default=201, help="curve resolution")

    p = add("baseline", _cmd_baseline, "solve the no-contest baseline")
    p.add_argument("--grid", type=int, default=201, help="type grid size")

    add("equilibrium", _cmd_equilibrium, "solve the symmetric equilibrium",
        solver=True)
    add("hacking", _cmd_hacking, "classify benchmark hacking types", solver=True)

    p = add("sweep", _cmd_sweep, "compare equilibria across prize vectors",
            solver=True)
    p.add_argument("--prizes", required=True,
                   help="semicolon-separated prize vectors, e.g. '1,0;2,0;4,0'")

    p = add("simulate", _cmd_simulate, "Monte Carlo contests and panel export",
            solver=True)
    p.add_argument("--seed", type=int, default=0, help="base RNG seed")
    p.add_argument("--contests", type=int, default=100, help="replication count")
    p.add_argument("--traj-length", type=int, default=10,
                   help="submissions per trajectory")
    p.add_argument("--drift-scale", type=float, default=0.3,
                   help="trend points per submission at full creative share")
    p.add_argument("--noise-scale", type=float, default=2.0,
                   help="score noise at full mechanistic share")
    p.add_argument("--threads", type=int, default=None,
                   help="worker threads (default: CONTESTLAB_THREADS or cores)")
    p.add_argument("--panel-cells", action="store_true",
                   help="vary prize value and skew across built-in cells "
                        "instead of using the scenario's own prizes")

    p = add("mk", _cmd_mk, "Mann-Kendall trend test on a CSV column",
            scenario=False)
    p.add_argument("--input", required=True, help="CSV file")
    p.add_argument("--column", required=True, help="column to test")

    p = add("regress", _cmd_regress, "fixed-effects OLS on a panel CSV",
            scenario=False)
    p.add_argument("--input", required=True, help="panel CSV file")
    p.add_argument("--outcome", required=True, help="outcome column")
    p.add_argument("--dummies", required=True, help="comma-separated dummy columns")
    p.add_argument("--interactions", default="",
                   help="comma-separated interaction columns")
    p.add_argument("--group", default="contest_id", help="fixed-effect column")

    add("examples", _cmd_examples, "verify the shipped canonical examples",
        scenario=False)

    p = add("replay", _cmd_replay, "re-run a command from its manifest",
            scenario=False)
    p.add_argument("manifest", help="path to a run_manifest.json")

    return parser


def dispatch(argv) -> int:
    """Parse and run one command, mapping failures to exit codes."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:   # argparse already printed the message
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UnconvergedProfileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except (SolverError, IntegrationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except ContestLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main(argv=None) -> int:
    return dispatch(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
