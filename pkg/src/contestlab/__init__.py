"""contestlab: effort allocation, equilibria, and benchmark hacking in contests.

A numerical laboratory for rank-order contests where participants split
effort between genuine improvement and score-chasing.  The core objects:

- :mod:`contestlab.model`: scenario primitives (production, mechanization,
  cost, types, noise, prizes) and assumption validation.
- :mod:`contestlab.costmin`: least-cost effort allocation for a fitness
  target, with its three-case structure.
- :mod:`contestlab.baseline`: the no-contest benchmark and its type
  thresholds.
- :mod:`contestlab.equilibrium`: symmetric monotone equilibrium schedules
  via damped best-response iteration.
- :mod:`contestlab.hacking`: contest-vs-baseline effort comparisons, the
  mechanization cutoff, and prize-skewness sweeps.
- :mod:`contestlab.simulate`: Monte Carlo contests, submission
  trajectories, Mann-Kendall statistics, fixed-effects panels.
- :mod:`contestlab.cli`: command-line entry point with replayable runs.
"""

from .baseline import (
    BaselineGrid,
    BaselinePoint,
    BaselineThresholds,
    baseline_grid,
    baseline_thresholds,
    solve_baseline,
)
from .costmin import (
    CASE_NAMES,
    CREATE_ONLY,
    INTERIOR,
    MECH_ONLY,
    AllocationGrid,
    CostPoint,
    EffortAllocation,
    allocate_grid,
    cost_curve,
    invert_production,
    optimal_allocation,
)
from .equilibrium import (
    GainTable,
    OpponentMixture,
    StrategyProfile,
    best_response,
    best_response_grid,
    contest_gain,
    opponent_mixture,
    profile_allocations,
    rank_probabilities,
    solve_equilibrium,
    zero_prize_profile,
)
from .errors import (
    ContestLabError,
    DomainError,
    IntegrationError,
    SolverError,
    UnconvergedProfileError,
    UnreachableFitnessError,
)
from .golden import GoldenCheck, golden_suite
from .hacking import (
    HackingProfile,
    HackingVerdict,
    SweepResult,
    classify_hacking,
    compare_prize_vectors,
    hacking_threshold,
    hacking_verdicts,
    skewness_sweep,
)
from .model import (
    AssumptionCheck,
    CostForm,
    MechanizationForm,
    NoiseFamily,
    PrizeVector,
    ProductionForm,
    Scenario,
    TypeDistribution,
    ValidationReport,
    evaluate_primitive,
    load_scenario,
    scenario_from_dict,
    validate_assumptions,
)
from .presets import EXAMPLE_CONFIGS, example_scenario
from .simulate import (
    ContestOutcome,
    MannKendall,
    PanelCell,
    PanelSpec,
    RegressionResult,
    SubmissionTrajectory,
    SyntheticPanel,
    add_interactions,
    add_type_bins,
    contests_to_columns,
    fe_ols,
    gen_trajectory,
    mann_kendall,
    panel_cells,
    panel_regressions,
    resolve_threads,
    run_contest,
    run_contests,
    synthetic_panel,
    type_bin_edges,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # model
    "AssumptionCheck", "CostForm", "MechanizationForm", "NoiseFamily",
    "PrizeVector", "ProductionForm", "Scenario", "TypeDistribution",
    "ValidationReport", "evaluate_primitive", "load_scenario",
    "scenario_from_dict", "validate_assumptions",
    # presets and golden checks
    "EXAMPLE_CONFIGS", "example_scenario", "GoldenCheck", "golden_suite",
    # cost minimisation
    "CASE_NAMES", "CREATE_ONLY", "INTERIOR", "MECH_ONLY", "AllocationGrid",
    "CostPoint", "EffortAllocation", "allocate_grid", "cost_curve",
    "invert_production", "optimal_allocation",
    # baseline
    "BaselineGrid", "BaselinePoint", "BaselineThresholds", "baseline_grid",
    "baseline_thresholds", "solve_baseline",
    # equilibrium
    "GainTable", "OpponentMixture", "StrategyProfile", "best_response",
    "best_response_grid", "contest_gain", "opponent_mixture", "profile_allocations",
    "rank_probabilities", "solve_equilibrium", "zero_prize_profile",
    # hacking
    "HackingProfile", "HackingVerdict", "SweepResult", "classify_hacking",
    "compare_prize_vectors", "hacking_threshold", "hacking_verdicts",
    "skewness_sweep",
    # simulation and panels
    "ContestOutcome", "MannKendall", "PanelCell", "PanelSpec",
    "RegressionResult", "SubmissionTrajectory", "SyntheticPanel",
    "add_interactions", "add_type_bins", "contests_to_columns", "fe_ols",
    "gen_trajectory", "mann_kendall", "panel_cells", "panel_regressions",
    "resolve_threads", "run_contest", "run_contests", "synthetic_panel",
    "type_bin_edges",
    # errors
    "ContestLabError", "DomainError", "IntegrationError", "SolverError",
    "UnconvergedProfileError", "UnreachableFitnessError",
]
