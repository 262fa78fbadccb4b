"""Monte Carlo contest execution and synthetic panel analysis.

The pieces chain into a pipeline: solve an equilibrium, replay contests
under it, expand each player's run into a submission trajectory, score
the trajectory with the Mann-Kendall trend statistic, and fit
fixed-effects regressions on the resulting panel.

Randomness uses counter-based Philox streams keyed by ``(seed,
stream_index)``: replications are independent, reproducible, and safe to
farm out to workers because the merge order is the replication index,
never the scheduling order.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np
import scipy.linalg

from ._tables import write_csv
from .costmin import allocate_grid
from .equilibrium import StrategyProfile, solve_equilibrium
from .errors import DomainError, SolverError, UnconvergedProfileError
from .model import Array, PrizeVector, Scenario

__all__ = [
    "ContestOutcome",
    "MannKendall",
    "PanelCell",
    "PanelSpec",
    "RegressionResult",
    "SubmissionTrajectory",
    "SyntheticPanel",
    "add_interactions",
    "add_type_bins",
    "fe_ols",
    "gen_trajectory",
    "mann_kendall",
    "panel_cells",
    "panel_regressions",
    "resolve_threads",
    "run_contest",
    "run_contests",
    "synthetic_panel",
    "type_bin_edges",
]

PANEL_COLUMNS = (
    "contest_id",
    "player_id",
    "type",
    "a",
    "b",
    "mu",
    "score_final",
    "mk_S",
    "mk_Z",
    "prize_value",
    "prize_skew",
)

CONTEST_COLUMNS = (
    "contest_id",
    "player_id",
    "type",
    "a",
    "b",
    "mu",
    "score",
    "rank",
    "prize",
    "payoff",
)


def _stream(seed: int, stream: int) -> np.random.Generator:
    """One independent Philox stream per (seed, stream) pair."""
    if seed < 0 or stream < 0:
        raise DomainError("seed and stream index must be non-negative")
    return np.random.Generator(np.random.Philox(key=[int(seed), int(stream)]))


def resolve_threads(value: int | None = None) -> int:
    """Worker count: explicit value, else CONTESTLAB_THREADS, else all cores."""
    if value is None:
        env = os.environ.get("CONTESTLAB_THREADS", "").strip()
        if env:
            try:
                value = int(env)
            except ValueError:
                raise DomainError(f"CONTESTLAB_THREADS={env!r} is not an integer") from None
        else:
            value = os.cpu_count() or 1
    value = int(value)
    if value < 1:
        raise DomainError("thread count must be >= 1")
    return value


# ---------------------------------------------------------------------------
# Mann-Kendall trend statistic


@dataclass(frozen=True)
class MannKendall:
    """Trend statistic of one series: S, tie-corrected variance, and Z."""

    s: int
    var_s: float
    z: float
    n: int


def _tie_correction(sorted_row: Array) -> float:
    # sum of t(t-1)(2t+5) over tie groups of size t
    _, counts = np.unique(sorted_row, return_counts=True)
    ties = counts[counts > 1].astype(float)
    return float(np.sum(ties * (ties - 1.0) * (2.0 * ties + 5.0)))


def mann_kendall(series) -> MannKendall:
    """Mann-Kendall S = sum of sign(x_j - x_i) over i < j, with normal Z.

    The variance uses the tie correction
    ``[n(n-1)(2n+5) - sum_t t(t-1)(2t+5)] / 18`` and Z applies the usual
    continuity shift: (S-1)/sd for S > 0, (S+1)/sd for S < 0, else 0.
    An all-tied series has zero variance and Z = 0 by convention.
    """
    x = np.asarray(series, dtype=float).ravel()
    n = x.size
    if n < 2:
        raise DomainError(f"Mann-Kendall needs at least 2 observations, got {n}")
    if not np.all(np.isfinite(x)):
        raise DomainError("Mann-Kendall series must be finite")
    i, j = np.triu_indices(n, k=1)
    s = int(np.sign(x[j] - x[i]).sum())
    var_s = (n * (n - 1) * (2 * n + 5) - _tie_correction(np.sort(x))) / 18.0
    if var_s <= 0.0 or s == 0:
        z = 0.0
    elif s > 0:
        z = (s - 1) / math.sqrt(var_s)
    else:
        z = (s + 1) / math.sqrt(var_s)
    return MannKendall(s=s, var_s=float(var_s), z=float(z), n=n)


def _mk_batch(scores: Array) -> tuple[Array, Array, Array]:
    """Row-wise Mann-Kendall for a (rows, length) matrix of series."""
    rows, n = scores.shape
    i, j = np.triu_indices(n, k=1)
    s = np.sign(scores[:, j] - scores[:, i]).sum(axis=1)

    # per-row tie correction via run lengths of the sorted rows
    srt = np.sort(scores, axis=1)
    run = np.ones(rows)
    corr = np.zeros(rows)
    for col in range(1, n):
        same = srt[:, col] == srt[:, col - 1]
        ended = ~same & (run > 1)
        t = run[ended]
        corr[ended] += t * (t - 1.0) * (2.0 * t + 5.0)
        run = np.where(same, run + 1.0, 1.0)
    tail = run > 1
    t = run[tail]
    corr[tail] += t * (t - 1.0) * (2.0 * t + 5.0)

    var_s = (n * (n - 1) * (2 * n + 5) - corr) / 18.0
    z = np.zeros(rows)
    ok = var_s > 0.0
    pos = ok & (s > 0)
    neg = ok & (s < 0)
    z[pos] = (s[pos] - 1.0) / np.sqrt(var_s[pos])
    z[neg] = (s[neg] + 1.0) / np.sqrt(var_s[neg])
    return s.astype(np.int64), var_s, z


# ---------------------------------------------------------------------------
# Contest execution


@dataclass(frozen=True)
class ContestOutcome:
    """One simulated contest: per-player arrays plus its reproduction key.

    ``rank`` is 1 for the best realised score; ranks are a permutation of
    1..I and the rank-k player receives the k-th prize.  Every record
    satisfies payoff = prize + score - c(a + b) exactly.
    """

    scenario_id: str
    seed: int
    replication: int
    theta: Array
    a: Array
    b: Array
    mu: Array
    score: Array
    rank: Array
    prize: Array
    payoff: Array

    @property
    def players(self) -> int:
        return int(self.theta.size)


def _require_profile(profile: StrategyProfile, force: bool) -> None:
    if not profile.converged and not force:
        raise UnconvergedProfileError(
            "strategy profile did not converge "
            f"(residual {profile.residual:.3e}); pass force=True to simulate anyway"
        )


def run_contest(
    scenario: Scenario,
    profile: StrategyProfile,
    seed: int,
    replication: int = 0,
    force: bool = False,
) -> ContestOutcome:
    """Simulate one contest under a symmetric strategy profile.

    Types are drawn i.i.d. from the scenario's type distribution, efforts
    follow the least-cost allocation at the profile's fitness target,
    each player gets one performance draw, and ranks (best first) are
    paid from the prize vector.  Deterministic in (seed, replication).
    """
    if scenario.scenario_id != profile.scenario.scenario_id:
        raise DomainError(
            f"profile was solved for scenario {profile.scenario.scenario_id}, "
            f"got scenario {scenario.scenario_id}"
        )
    _require_profile(profile, force)
    rng = _stream(seed, replication)
    count = scenario.players
    theta = np.asarray(scenario.types.sample(rng, count), dtype=float)
    mu = np.asarray(profile.mu_at(theta), dtype=float)
    grid = allocate_grid(scenario, mu, theta)
    score = np.asarray(scenario.noise.sample(rng, mu), dtype=float)

    order = np.argsort(-score, kind="stable")
    rank = np.empty(count, dtype=np.int64)
    rank[order] = np.arange(1, count + 1)
    prize = scenario.prizes.padded(count)[rank - 1]
    payoff = prize + score - scenario.cost.value(grid.a + grid.b)
    return ContestOutcome(
        scenario_id=scenario.scenario_id,
        seed=int(seed),
        replication=int(replication),
        theta=theta,
        a=grid.a,
        b=grid.b,
        mu=mu,
        score=score,
        rank=rank,
        prize=prize,
        payoff=payoff,
    )


def run_contests(
    scenario: Scenario,
    profile: StrategyProfile,
    count: int,
    seed: int,
    threads: int | None = None,
    force: bool = False,
) -> list[ContestOutcome]:
    """Replications 0..count-1; results are merged in replication order."""
    if count < 1:
        raise DomainError(f"contest count must be >= 1, got {count}")
    _require_profile(profile, force)

    def one(replication: int) -> ContestOutcome:
        return run_contest(scenario, profile, seed, replication, force=True)

    workers = 1 if threads is None else resolve_threads(threads)
    if workers <= 1:
        return [one(r) for r in range(count)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(one, range(count)))


def contests_to_columns(outcomes: Sequence[ContestOutcome]) -> dict[str, Array]:
    """Stack per-player records of many contests into flat columns."""
    if not outcomes:
        raise DomainError("no contest outcomes to tabulate")
    parts: dict[str, list[Array]] = {name: [] for name in CONTEST_COLUMNS}
    for out in outcomes:
        n = out.players
        parts["contest_id"].append(np.full(n, out.replication, dtype=np.int64))
        parts["player_id"].append(np.arange(n, dtype=np.int64))
        parts["type"].append(out.theta)
        parts["a"].append(out.a)
        parts["b"].append(out.b)
        parts["mu"].append(out.mu)
        parts["score"].append(out.score)
        parts["rank"].append(out.rank)
        parts["prize"].append(out.prize)
        parts["payoff"].append(out.payoff)
    return {name: np.concatenate(chunks) for name, chunks in parts.items()}


# ---------------------------------------------------------------------------
# Submission trajectories


@dataclass(frozen=True)
class SubmissionTrajectory:
    """Time-ordered scores of one player with their trend statistics."""

    player_id: int
    scores: Array
    mk_s: int
    mk_z: float


def _trajectory_matrix(
    a: Array,
    b: Array,
    length: int,
    drift_scale: float,
    noise_scale: float,
    base: Array,
    eps: Array,
) -> Array:
    """score_t = base + drift*(a/(a+b))*t + noise*(b/(a+b))*eps_t, clamped.

    Creative effort buys a deterministic upward trend, mechanistic effort
    buys noisy level jitter; a = b = 0 yields a flat series at base.
    """
    total = a + b
    with np.errstate(invalid="ignore", divide="ignore"):
        creative = np.where(total > 0, a / total, 0.0)
        mech = np.where(total > 0, b / total, 0.0)
    t = np.arange(length, dtype=float)
    raw = (
        np.asarray(base, dtype=float)[:, None]
        + drift_scale * creative[:, None] * t[None, :]
        + noise_scale * mech[:, None] * eps
    )
    return np.clip(raw, 0.0, 100.0)


def gen_trajectory(
    a: float,
    b: float,
    length: int,
    drift_scale: float = 0.3,
    noise_scale: float = 2.0,
    seed: int = 0,
    *,
    base: float = 75.0,
    stream: int = 0,
    player_id: int = 0,
) -> SubmissionTrajectory:
    """Synthesize one submission trajectory from an effort mix.

    The creative share a/(a+b) sets the drift weight and the mechanistic
    share the noise weight; scores are clamped to [0, 100].  Deterministic
    in (seed, stream).
    """
    if length < 2:
        raise DomainError(f"trajectory length must be >= 2, got {length}")
    if a < 0 or b < 0:
        raise DomainError("efforts must be non-negative")
    rng = _stream(seed, stream)
    eps = rng.standard_normal((1, length))
    scores = _trajectory_matrix(
        np.asarray([a], dtype=float),
        np.asarray([b], dtype=float),
        length,
        float(drift_scale),
        float(noise_scale),
        np.asarray([base], dtype=float),
        eps,
    )[0]
    mk = mann_kendall(scores)
    return SubmissionTrajectory(player_id=int(player_id), scores=scores, mk_s=mk.s, mk_z=mk.z)


# ---------------------------------------------------------------------------
# Fixed-effects OLS


@dataclass(frozen=True)
class PanelSpec:
    """Which panel columns enter the within regression.

    ``dummies`` are the type-bin indicators, ``interactions`` the
    type-by-prize products; the ``group`` column indexes the fixed
    effect (one per contest).
    """

    outcome: str
    dummies: tuple[str, ...]
    interactions: tuple[str, ...] = ()
    group: str = "contest_id"

    @property
    def regressors(self) -> tuple[str, ...]:
        return tuple(self.dummies) + tuple(self.interactions)


@dataclass(frozen=True)
class RegressionResult:
    """Within-estimator fit: coefficients, homoskedastic errors, fit stats."""

    names: tuple[str, ...]
    coef: Array
    se: Array
    r_squared: float
    residuals: Array
    nobs: int
    n_groups: int
    df_resid: int
    group_labels: Array
    group_effects: Array

    def __getitem__(self, name: str) -> float:
        return float(self.coef[self.names.index(name)])

    def se_of(self, name: str) -> float:
        return float(self.se[self.names.index(name)])

    def to_dict(self) -> dict:
        return {
            "coefficients": {n: float(c) for n, c in zip(self.names, self.coef)},
            "standard_errors": {n: float(s) for n, s in zip(self.names, self.se)},
            "r_squared": float(self.r_squared),
            "nobs": int(self.nobs),
            "n_groups": int(self.n_groups),
            "df_resid": int(self.df_resid),
        }


def _group_demean(values: Array, inverse: Array, counts: Array) -> Array:
    sums = np.bincount(inverse, weights=values, minlength=counts.size)
    return values - (sums / counts)[inverse]


def fe_ols(panel: Mapping[str, Array], spec: PanelSpec) -> RegressionResult:
    """Within (fixed-effects) OLS: demean by group, then least squares.

    Standard errors are homoskedastic with dof = N - G - k.  Raises
    SolverError naming the collinear columns when the demeaned design is
    rank deficient, and DomainError for missing columns.
    """
    missing = [c for c in (spec.outcome, spec.group, *spec.regressors) if c not in panel]
    if missing:
        raise DomainError(f"panel is missing columns {missing}")
    if not spec.regressors:
        raise DomainError("regression needs at least one regressor")

    y = np.asarray(panel[spec.outcome], dtype=float)
    nobs = y.size
    labels, inverse = np.unique(np.asarray(panel[spec.group]), return_inverse=True)
    counts = np.bincount(inverse)
    n_groups = labels.size

    design = np.column_stack([np.asarray(panel[c], dtype=float) for c in spec.regressors])
    y_dm = _group_demean(y, inverse, counts)
    x_dm = np.column_stack([_group_demean(design[:, k], inverse, counts) for k in range(design.shape[1])])

    k = x_dm.shape[1]
    _, r_mat, pivots = scipy.linalg.qr(x_dm, mode="economic", pivoting=True)
    diag = np.abs(np.diag(r_mat))
    tol = max(x_dm.shape) * np.finfo(float).eps * (diag[0] if diag.size else 0.0)
    rank = int(np.sum(diag > tol))
    if rank < k:
        bad = sorted(spec.regressors[p] for p in pivots[rank:])
        raise SolverError(
            f"design is rank deficient after demeaning; collinear columns: {bad}"
        )

    df_resid = nobs - n_groups - k
    if df_resid < 1:
        raise SolverError(
            f"not enough observations: {nobs} rows, {n_groups} groups, {k} regressors"
        )

    beta, _, _, _ = np.linalg.lstsq(x_dm, y_dm, rcond=None)
    residuals = y_dm - x_dm @ beta
    rss = float(residuals @ residuals)
    tss = float(y_dm @ y_dm)
    r_squared = 1.0 if tss == 0.0 else 1.0 - rss / tss

    sigma2 = rss / df_resid
    xtx_inv = np.linalg.inv(x_dm.T @ x_dm)
    se = np.sqrt(np.clip(sigma2 * np.diag(xtx_inv), 0.0, None))

    # group effects: group means of the outcome net of the slope part
    raw_resid = y - design @ beta
    effects = np.bincount(inverse, weights=raw_resid, minlength=n_groups) / counts

    return RegressionResult(
        names=spec.regressors,
        coef=beta,
        se=se,
        r_squared=float(r_squared),
        residuals=residuals,
        nobs=int(nobs),
        n_groups=int(n_groups),
        df_resid=int(df_resid),
        group_labels=labels,
        group_effects=effects,
    )


# ---------------------------------------------------------------------------
# Panel construction helpers


def type_bin_edges(scenario: Scenario, bins: int = 5) -> Array:
    """Interior population quantiles splitting types into equal-mass bins."""
    if bins < 2:
        raise DomainError(f"need at least 2 bins, got {bins}")
    qs = np.linspace(0.0, 1.0, bins + 1)[1:-1]
    return np.asarray(scenario.types.ppf(qs), dtype=float)


def add_type_bins(panel: Mapping[str, Array], edges: Array) -> dict[str, Array]:
    """Add a 1-based ``type_bin`` column and dummies T2..Tn (bin 1 is base)."""
    if "type" not in panel:
        raise DomainError("panel has no 'type' column")
    out = dict(panel)
    edges = np.asarray(edges, dtype=float)
    bins = np.digitize(np.asarray(panel["type"], dtype=float), edges) + 1
    out["type_bin"] = bins.astype(np.int64)
    for b in range(2, edges.size + 2):
        out[f"T{b}"] = (bins == b).astype(float)
    return out


def add_interactions(
    panel: Mapping[str, Array],
    dummies: Sequence[str],
    columns: Mapping[str, str],
) -> dict[str, Array]:
    """Add products dummy x column, named like T2xPV for alias PV."""
    out = dict(panel)
    for alias, col in columns.items():
        if col not in panel:
            raise DomainError(f"panel has no '{col}' column for interaction {alias}")
        vals = np.asarray(panel[col], dtype=float)
        for d in dummies:
            if d not in panel:
                raise DomainError(f"panel has no dummy column '{d}'")
            out[f"{d}x{alias}"] = np.asarray(panel[d], dtype=float) * vals
    return out


# ---------------------------------------------------------------------------
# Synthetic panel pipeline


@dataclass(frozen=True)
class PanelCell:
    """One contest design: a prize budget, its split, and the equilibrium."""

    prize_value: float
    prize_skew: int
    scenario: Scenario
    profile: StrategyProfile


@dataclass(frozen=True)
class SyntheticPanel:
    """Flat per-player panel over many simulated contests."""

    columns: dict[str, Array]
    cells: tuple[PanelCell, ...]
    scenario: Scenario
    seed: int
    traj_length: int

    @property
    def n_rows(self) -> int:
        return int(self.columns["contest_id"].size)

    def to_csv(self, path) -> None:
        write_csv(path, self.columns, order=PANEL_COLUMNS)


def panel_cells(
    scenario: Scenario,
    *,
    players: int = 200,
    prize_values: Sequence[float] = (1.0, 4.0, 16.0),
    skew_weights: Sequence[float] = (0.5, 0.3, 0.2),
    grid_size: int = 201,
    tol: float = 1e-5,
    damping: float = 0.5,
    max_iter: int = 500,
    force: bool = False,
) -> tuple[PanelCell, ...]:
    """Solve the equilibrium for each prize-value x skew cell.

    Skewed cells (prize_skew = 1) split the budget over the top three
    ranks with ``skew_weights``; diffuse cells (prize_skew = 0) pay the
    budget evenly across all ranks, which matches the few-prizes proxy
    for skewness: at most three prizes means skewed.
    """
    weights = tuple(float(w) for w in skew_weights)
    if len(weights) > 3 or abs(sum(weights) - 1.0) > 1e-12:
        raise DomainError("skew weights must sum to 1 over at most three ranks")
    if players < max(len(weights), 2):
        raise DomainError(f"need at least {max(len(weights), 2)} players, got {players}")
    base = scenario.with_players(players)
    cells = []
    for value in prize_values:
        value = float(value)
        if value <= 0:
            raise DomainError(f"prize budget must be positive, got {value}")
        for skew in (1, 0):
            if skew:
                prizes = PrizeVector(tuple(w * value for w in weights))
            else:
                prizes = PrizeVector((value / players,) * players)
            cell_scn = base.with_prizes(prizes)
            profile = solve_equilibrium(
                cell_scn,
                grid_size=grid_size,
                tol=tol,
                damping=damping,
                max_iter=max_iter,
            )
            if not profile.converged and not force:
                raise UnconvergedProfileError(
                    f"equilibrium for prize value {value}, skew {skew} did not "
                    f"converge (residual {profile.residual:.3e})"
                )
            cells.append(
                PanelCell(prize_value=value, prize_skew=skew, scenario=cell_scn, profile=profile)
            )
    return tuple(cells)


def synthetic_panel(
    scenario: Scenario,
    *,
    n_contests: int = 500,
    players: int = 200,
    seed: int = 0,
    cells: Sequence[PanelCell] | None = None,
    prize_values: Sequence[float] = (1.0, 4.0, 16.0),
    skew_weights: Sequence[float] = (0.5, 0.3, 0.2),
    traj_length: int = 10,
    drift_scale: float = 0.3,
    noise_scale: float = 2.0,
    score_base: float = 50.0,
    score_gain: float = 5.0,
    grid_size: int = 201,
    tol: float = 1e-5,
    damping: float = 0.5,
    max_iter: int = 500,
    force: bool = False,
) -> SyntheticPanel:
    """Simulate a full contest panel across prize-value x skew cells.

    Contest j runs under cell j mod n_cells with Philox stream j; its
    trajectories use stream n_contests + j, so every draw in the build is
    pinned to (seed, a stream index).  Each player's trajectory starts at
    an affine transform of their realised score (score_base +
    score_gain * s) and trends with their creative share; the final
    trajectory value is the ``score_final`` column.
    """
    if n_contests < 1:
        raise DomainError(f"need at least one contest, got {n_contests}")
    if traj_length < 2:
        raise DomainError(f"trajectory length must be >= 2, got {traj_length}")
    if cells is None:
        cells = panel_cells(
            scenario,
            players=players,
            prize_values=prize_values,
            skew_weights=skew_weights,
            grid_size=grid_size,
            tol=tol,
            damping=damping,
            max_iter=max_iter,
            force=force,
        )
    cells = tuple(cells)
    if not cells:
        raise DomainError("no panel cells")
    count = cells[0].scenario.players
    total = n_contests * count

    cols: dict[str, Array] = {
        "contest_id": np.empty(total, dtype=np.int64),
        "player_id": np.empty(total, dtype=np.int64),
        "type": np.empty(total),
        "a": np.empty(total),
        "b": np.empty(total),
        "mu": np.empty(total),
        "score_final": np.empty(total),
        "mk_S": np.empty(total, dtype=np.int64),
        "mk_Z": np.empty(total),
        "prize_value": np.empty(total),
        "prize_skew": np.empty(total, dtype=np.int64),
    }

    for j in range(n_contests):
        cell = cells[j % len(cells)]
        out = run_contest(cell.scenario, cell.profile, seed, replication=j, force=True)
        eps = _stream(seed, n_contests + j).standard_normal((count, traj_length))
        scores = _trajectory_matrix(
            out.a,
            out.b,
            traj_length,
            float(drift_scale),
            float(noise_scale),
            score_base + score_gain * out.score,
            eps,
        )
        mk_s, _, mk_z = _mk_batch(scores)

        rows = slice(j * count, (j + 1) * count)
        cols["contest_id"][rows] = j
        cols["player_id"][rows] = np.arange(count)
        cols["type"][rows] = out.theta
        cols["a"][rows] = out.a
        cols["b"][rows] = out.b
        cols["mu"][rows] = out.mu
        cols["score_final"][rows] = scores[:, -1]
        cols["mk_S"][rows] = mk_s
        cols["mk_Z"][rows] = mk_z
        cols["prize_value"][rows] = cell.prize_value
        cols["prize_skew"][rows] = cell.prize_skew

    return SyntheticPanel(
        columns=cols,
        cells=cells,
        scenario=scenario,
        seed=int(seed),
        traj_length=int(traj_length),
    )


def panel_regressions(
    panel: Mapping[str, Array],
    edges: Array,
    *,
    group: str = "contest_id",
) -> dict[str, RegressionResult]:
    """The four within regressions used to audit a synthetic panel.

    Outcomes are the achieved fitness and the Mann-Kendall Z; each is
    regressed on type-bin dummies alone and again with type x prize
    value and type x skew interactions, always with contest fixed
    effects.
    """
    edges = np.asarray(edges, dtype=float)
    data = add_type_bins(panel, edges)
    dummies = tuple(f"T{b}" for b in range(2, edges.size + 2))
    data = add_interactions(data, dummies, {"PV": "prize_value", "PS": "prize_skew"})
    interactions = tuple(f"{d}x{alias}" for alias in ("PV", "PS") for d in dummies)

    out: dict[str, RegressionResult] = {}
    for label, outcome in (("fitness", "mu"), ("mk", "mk_Z")):
        out[f"{label}_type"] = fe_ols(data, PanelSpec(outcome, dummies, group=group))
        out[f"{label}_interactions"] = fe_ols(
            data, PanelSpec(outcome, dummies, interactions, group=group)
        )
    return out
