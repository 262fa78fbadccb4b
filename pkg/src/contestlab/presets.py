"""Canonical example scenarios with known closed-form solutions.

These four configurations exercise every branch of the allocation and
baseline solvers and anchor the golden tests; the same dictionaries are
shipped as JSON files under ``scenarios/``.

- example1: linear creation, linear mechanization, quadratic cost.
  Hard type cutoff at theta = 1; corner allocations on both sides.
- example2: power creation and mechanization, linear cost.  Interior
  allocations everywhere with the exact ratio a/b = theta**2.
- example3: linear creation, power mechanization, quadratic cost.
  Mechanistic floor b = 1/(4 theta^2) independent of the target.
- example4: saturating creation, linear mechanization, quadratic cost.
  All three allocation cases appear as the target grows.
"""

from __future__ import annotations

import copy
from typing import Any

from .model import Scenario, scenario_from_dict

EXAMPLE_CONFIGS: dict[str, dict[str, Any]] = {
    "example1": {
        "nu": {"kind": "linear"},
        "xi": {"kind": "linear"},
        "cost": {"kind": "quadratic", "kappa": 0.5},
        "types": {"kind": "uniform", "support": [0.0, 3.0]},
        "noise": {"kind": "normal", "dispersion": 1.0},
        "players": 2,
        "prizes": [1.0, 0.0],
    },
    "example2": {
        "nu": {"kind": "power", "alpha": 0.5},
        "xi": {"kind": "power", "alpha": 0.5},
        "cost": {"kind": "linear", "kappa": 1.0},
        "types": {"kind": "uniform", "support": [0.0, 10.0]},
        "noise": {"kind": "normal", "dispersion": 1.0},
        "players": 2,
        "prizes": [1.0, 0.0],
    },
    "example3": {
        "nu": {"kind": "linear"},
        "xi": {"kind": "power", "alpha": 0.5},
        "cost": {"kind": "quadratic", "kappa": 0.5},
        "types": {"kind": "uniform", "support": [0.0, 3.0]},
        "noise": {"kind": "normal", "dispersion": 1.0},
        "players": 2,
        "prizes": [1.0, 0.0],
    },
    "example4": {
        "nu": {"kind": "saturating"},
        "xi": {"kind": "linear"},
        "cost": {"kind": "quadratic", "kappa": 0.25},
        "types": {"kind": "uniform", "support": [0.0, 9.0]},
        "noise": {"kind": "normal", "dispersion": 1.0},
        "players": 2,
        "prizes": [1.0, 0.0],
    },
}


def example_scenario(name: str, **overrides: Any) -> Scenario:
    """Build one of the canonical scenarios, optionally overriding keys.

    ``overrides`` are shallow top-level replacements of the config dict,
    e.g. ``example_scenario("example1", players=5, prizes=[2, 1, 0])``.
    """
    if name not in EXAMPLE_CONFIGS:
        raise KeyError(f"unknown example {name!r}; have {sorted(EXAMPLE_CONFIGS)}")
    config = copy.deepcopy(EXAMPLE_CONFIGS[name])
    config.update(overrides)
    return scenario_from_dict(config)
