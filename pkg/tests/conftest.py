"""Shared fixtures and the acceptance-criteria summary report.

The acceptance tests are named ``test_criterion_<n>``; a terminal hook
collects their outcomes and prints one PASS/FAIL line per criterion at
the end of the run, whatever subset was selected.
"""

from __future__ import annotations

import numpy as np
import pytest

from contestlab import example_scenario, solve_equilibrium

# nodeid -> {"title": str, "outcome": str, "duration": float}
_ACCEPTANCE: dict[str, dict] = {}


def _criterion_number(nodeid: str) -> int | None:
    name = nodeid.rpartition("::")[2]
    if not name.startswith("test_criterion_"):
        return None
    digits = "".join(ch for ch in name if ch.isdigit())
    return int(digits) if digits else None


def pytest_collection_modifyitems(items) -> None:
    for item in items:
        if _criterion_number(item.nodeid) is None:
            continue
        doc = (item.function.__doc__ or "").strip()
        title = doc.splitlines()[0] if doc else item.name
        _ACCEPTANCE.setdefault(item.nodeid, {})["title"] = title


def pytest_runtest_logreport(report) -> None:
    if _criterion_number(report.nodeid) is None:
        return
    entry = _ACCEPTANCE.setdefault(report.nodeid, {})
    if report.when == "call":
        entry["outcome"] = report.outcome
        entry["duration"] = entry.get("duration", 0.0) + report.duration
    elif report.when == "setup":
        entry["duration"] = report.duration
        if report.outcome != "passed":
            entry["outcome"] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config) -> None:
    rows = [(n, e) for n, e in _ACCEPTANCE.items() if "outcome" in e]
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, entry in sorted(rows, key=lambda r: _criterion_number(r[0])):
        word = "PASS" if entry["outcome"] == "passed" else "FAIL"
        terminalreporter.write_line(
            f"[{word}] criterion {_criterion_number(nodeid)}: "
            f"{entry.get('title', nodeid)} ({entry.get('duration', 0.0):.1f}s)"
        )


@pytest.fixture(scope="session")
def equilibria():
    """Memoised equilibrium solves shared across test modules."""
    cache: dict[tuple, object] = {}

    def solve(name: str, players: int = 2, prizes: tuple = (1.0, 0.0),
              grid_size: int = 201, tol: float = 1e-5):
        key = (name, players, tuple(float(v) for v in prizes), grid_size, tol)
        if key not in cache:
            scn = example_scenario(name, players=players, prizes=list(prizes))
            cache[key] = solve_equilibrium(scn, grid_size=grid_size, tol=tol)
        return cache[key]

    return solve


@pytest.fixture()
def rng():
    return np.random.default_rng(20240817)
