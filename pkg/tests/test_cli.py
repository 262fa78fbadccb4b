"""Tests for the command-line interface: artifacts, replay, exit codes."""

from __future__ import annotations

import json
import subprocess
import sys

import numpy as np
import pytest
from helpers import assert_replay_identical

from contestlab._tables import read_csv_columns, write_csv
from contestlab.cli import (
    EXIT_INPUT,
    EXIT_NO_CONVERGENCE,
    EXIT_OK,
    EXIT_USAGE,
    MANIFEST_NAME,
    main,
)


def run_cli(*argv) -> int:
    return main([str(a) for a in argv])


class TestArtifactsAndReplay:
    def test_validate_writes_report_and_manifest(self, tmp_path):
        out = tmp_path / "v"
        assert run_cli("validate", "--scenario", "example1", "--out", out) == EXIT_OK
        report = json.loads((out / "validation.json").read_text())
        assert report["ok"] is True
        manifest = json.loads((out / MANIFEST_NAME).read_text())
        assert manifest["command"] == "validate"
        assert manifest["outputs"] == ["validation.json"]
        assert "--out" not in manifest["replay_argv"]
        assert_replay_identical(out, tmp_path)

    def test_cost_curve_artifact(self, tmp_path):
        out = tmp_path / "c"
        assert run_cli("cost", "--scenario", "example3", "--theta", "1.0",
                       "--mu-max", "2.0", "--points", "41", "--out", out) == EXIT_OK
        cols = read_csv_columns(out / "cost.csv")
        assert cols["mu"].size == 41
        assert np.all(np.diff(cols["cost"]) >= -1e-12)
        assert_replay_identical(out, tmp_path)

    def test_baseline_artifacts(self, tmp_path):
        out = tmp_path / "b"
        assert run_cli("baseline", "--scenario", "example4", "--grid", "41",
                       "--out", out) == EXIT_OK
        cols = read_csv_columns(out / "baseline.csv")
        assert set(cols) >= {"theta", "a", "b", "mu", "payoff"}
        meta = json.loads((out / "baseline.json").read_text())
        assert meta["mech_upper"] == pytest.approx(1.0, abs=1e-4)
        assert_replay_identical(out, tmp_path)

    def test_mk_artifact(self, tmp_path):
        out = tmp_path / "m"
        assert run_cli("mk", "--input", "fixtures/trend.csv",
                       "--column", "score", "--out", out) == EXIT_OK
        result = json.loads((out / "mk.json").read_text())
        assert result["S"] == 6
        assert_replay_identical(out, tmp_path)

    def test_regress_artifact(self, tmp_path, rng):
        panel = tmp_path / "panel.csv"
        g = np.repeat(np.arange(12), 25)
        x = rng.normal(size=g.size)
        y = 1.5 * x + g.astype(float) + 0.1 * rng.normal(size=g.size)
        write_csv(panel, {"g": g, "x": x, "y": y})
        out = tmp_path / "r"
        assert run_cli("regress", "--input", panel, "--outcome", "y",
                       "--dummies", "x", "--group", "g", "--out", out) == EXIT_OK
        result = json.loads((out / "regress.json").read_text())
        assert result["coefficients"]["x"] == pytest.approx(1.5, abs=0.05)
        assert_replay_identical(out, tmp_path)

    def test_simulate_artifacts(self, tmp_path):
        out = tmp_path / "s"
        assert run_cli("simulate", "--scenario", "example1", "--seed", "7",
                       "--contests", "4", "--traj-length", "5",
                       "--grid", "41", "--out", out) == EXIT_OK
        contests = read_csv_columns(out / "contests.csv")
        assert contests["contest_id"].size == 4 * 2
        panel = read_csv_columns(out / "panel.csv")
        assert set(panel) >= {"mk_Z", "prize_value", "prize_skew"}
        assert_replay_identical(out, tmp_path)

    def test_examples_checks_artifact(self, tmp_path):
        out = tmp_path / "e"
        assert run_cli("examples", "--out", out) == EXIT_OK
        checks = json.loads((out / "examples.json").read_text())
        assert all(c["passed"] for c in checks)
        assert len(checks) >= 12

    def test_one_manifest_per_run(self, tmp_path):
        out = tmp_path / "v2"
        run_cli("validate", "--scenario", "example2", "--out", out)
        manifests = [p for p in out.iterdir() if p.name == MANIFEST_NAME]
        assert len(manifests) == 1
        listed = json.loads(manifests[0].read_text())["outputs"]
        for name in listed:
            assert (out / name).exists()


class TestExitCodes:
    def test_success_is_zero(self, tmp_path):
        assert run_cli("validate", "--scenario", "example1",
                       "--out", tmp_path / "ok") == EXIT_OK

    def test_unknown_scenario_is_input_error(self, tmp_path):
        assert run_cli("validate", "--scenario", "nonesuch",
                       "--out", tmp_path / "x") == EXIT_INPUT

    def test_malformed_scenario_file_is_input_error(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        assert run_cli("baseline", "--scenario", bad,
                       "--out", tmp_path / "y") == EXIT_INPUT

    def test_missing_column_is_input_error(self, tmp_path):
        assert run_cli("mk", "--input", "fixtures/trend.csv",
                       "--column", "nope", "--out", tmp_path / "z") == EXIT_INPUT

    def test_unknown_command_is_usage_error(self, capsys):
        assert run_cli("frobnicate") == EXIT_USAGE
        capsys.readouterr()

    def test_missing_required_flag_is_usage_error(self, capsys):
        assert run_cli("cost", "--scenario", "example1") == EXIT_USAGE
        capsys.readouterr()

    def test_exhausted_iteration_budget_is_exit_three(self, tmp_path):
        # tol 0 can never be met, so the solver must stop at max_iter
        code = run_cli("equilibrium", "--scenario", "example1",
                       "--grid", "21", "--tol", "0",
                       "--out", tmp_path / "nc")
        assert code == EXIT_NO_CONVERGENCE

    def test_replay_of_missing_manifest_is_input_error(self, tmp_path):
        assert run_cli("replay", tmp_path / "nope.json",
                       "--out", tmp_path / "r") == EXIT_INPUT


def test_console_script_entry_point(tmp_path):
    # one end-to-end check through the installed executable
    proc = subprocess.run(
        [sys.executable, "-m", "contestlab.cli", "validate",
         "--scenario", "example1", "--out", str(tmp_path / "sub")],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert (tmp_path / "sub" / "validation.json").exists()
