"""Symmetric monotone equilibrium of the rank-order contest.

Strategies are summarised by the mean-fitness schedule ``mu*(theta)``:
facing opponents who play the schedule, a player of type theta picks the
fitness target maximising

    expected prizes + mu - C(mu, theta),

where the expected prize at target mu integrates the rank weights against
the player's own performance distribution H_mu and the opponents'
performance mixture G (their noise mixed over types and the schedule).

``solve_equilibrium`` runs a damped best-response iteration on a type
grid, projecting onto non-decreasing schedules each step (the monotone
envelope is where the fixed point lives; projection also keeps the
iteration stable).  Starting from the no-contest schedule keeps every
iterate above it, which downstream dominance checks rely on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import stats

from ._isotonic import isotonic_projection
from ._quadrature import adaptive_simpson, gauss_legendre
from ._rootfind import bisect_scalar
from .baseline import BaselineGrid, baseline_grid
from .costmin import allocate_grid
from .errors import DomainError, SolverError
from .model import NoiseFamily, PrizeVector, Scenario

Array = np.ndarray

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
_THETA_NODES = 64
_GAIN_NODES = 96
_WEIGHT_GRID = 4097


@dataclass(frozen=True)
class StrategyProfile:
    """A symmetric strategy: mean-fitness targets on a type grid.

    Off-grid types interpolate linearly; the schedule is non-decreasing
    by construction.  ``converged`` reports whether the solver met its
    tolerance, ``residual`` is the final sup-norm best-response gap.
    """

    scenario: Scenario
    theta_grid: Array
    mu_star: Array
    converged: bool
    iterations: int
    residual: float

    def __post_init__(self) -> None:
        self.theta_grid.setflags(write=False)
        self.mu_star.setflags(write=False)

    def mu_at(self, theta) -> Array | float:
        theta = np.asarray(theta, dtype=float)
        out = np.interp(theta, self.theta_grid, self.mu_star)
        return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class OpponentMixture:
    """Performance distribution of one opponent: noise mixed over types."""

    weights: Array
    mus: Array
    noise: NoiseFamily

    def cdf(self, s) -> Array:
        s = np.asarray(s, dtype=float)
        flat = np.atleast_1d(s)
        out = self.noise.cdf(flat[:, None], self.mus[None, :]) @ self.weights
        return out.reshape(s.shape) if s.shape else out[0]


def opponent_mixture(profile: StrategyProfile, nodes: int = _THETA_NODES) -> OpponentMixture:
    """Discretise the opponents' performance mixture over types."""
    types = profile.scenario.types
    if types.degenerate:
        return OpponentMixture(np.ones(1), np.atleast_1d(profile.mu_at(types.lo)),
                               profile.scenario.noise)
    th, w = gauss_legendre(nodes, types.lo, types.hi)
    wf = w * types.pdf(th)
    wf = wf / wf.sum()  # keep the mixture an exact probability
    return OpponentMixture(wf, np.interp(th, profile.theta_grid, profile.mu_star),
                           profile.scenario.noise)


def opponent_performance_cdf(profile: StrategyProfile, s) -> Array | float:
    """CDF of one opponent's performance under the profile."""
    return opponent_mixture(profile).cdf(s)


def _rank_pmf(g: Array, players: int, ranks: Array) -> Array:
    """P(exactly rank k) weights: binomial in the opponents beaten."""
    # ranks are 1-based; k-1 opponents perform better
    return stats.binom.pmf(ranks[None, :] - 1, players - 1, (1.0 - g)[:, None])


def rank_probabilities(mu: float, profile: StrategyProfile,
                       players: int | None = None, *,
                       mixture: OpponentMixture | None = None,
                       tol: float = 1e-9) -> Array:
    """Distribution of the final rank for a player targeting ``mu``.

    Integrates the binomial rank weights against the player's own
    performance density by adaptive Simpson quadrature; the total error
    across all rank entries is controlled by ``tol``, so the vector sums
    to one at that accuracy.
    """
    if mu < 0:
        raise DomainError(f"fitness target must be non-negative, got {mu!r}")
    players = profile.scenario.players if players is None else players
    if players < 1:
        raise DomainError("players must be at least 1")
    if players == 1:
        return np.ones(1)
    mix = opponent_mixture(profile) if mixture is None else mixture
    noise = profile.scenario.noise
    ranks = np.arange(1, players + 1)

    def integrand(s: Array) -> Array:
        dens = noise.pdf(s, mu)
        return _rank_pmf(mix.cdf(s), players, ranks) * dens[:, None]

    lo = float(noise.ppf(1e-12, mu))
    hi = float(noise.ppf(1.0 - 1e-12, mu))
    return adaptive_simpson(integrand, lo, hi, tol=tol)


def contest_gain(mu: float, profile: StrategyProfile,
                 prizes: PrizeVector | None = None, *,
                 players: int | None = None) -> float:
    """Expected prize money for a player targeting ``mu``."""
    players = profile.scenario.players if players is None else players
    prizes = profile.scenario.prizes if prizes is None else prizes
    if prizes.is_zero:
        return 0.0
    p = rank_probabilities(mu, profile, players)
    return float(p @ prizes.padded(players))


class GainTable:
    """Fast expected-prize evaluator for a fixed opponent mixture.

    Precomputes the conditional prize weight W(s) = E[prize | own score s]
    on a dense grid, then evaluates the expectation over own noise with a
    fixed Gauss-Legendre rule in quantile space.  Shared by the solver and
    the public best response so both optimise the identical payoff.
    """

    def __init__(self, mixture: OpponentMixture, noise: NoiseFamily,
                 players: int, prizes: PrizeVector, mu_max: float):
        self.noise = noise
        self.zero = prizes.is_zero or players == 1
        if self.zero:
            return
        paid = prizes.padded(players)
        ranks = np.nonzero(paid > 0)[0] + 1
        lo0, sc0 = noise.loc_scale(np.array(0.0))
        lo1, sc1 = noise.loc_scale(np.array(mu_max))
        z_lo, z_hi = float(noise.z_ppf(1e-9)), float(noise.z_ppf(1.0 - 1e-9))
        mus = np.concatenate([np.atleast_1d(mixture.mus), [0.0, mu_max]])
        s_lo = min(float(lo0 + sc0 * z_lo),
                   float(np.min(noise.loc_scale(mus)[0])))
        s_hi = float(lo1 + sc1 * z_hi)
        self.s_grid = np.linspace(s_lo, s_hi, _WEIGHT_GRID)
        g = mixture.cdf(self.s_grid)
        self.w_grid = _rank_pmf(g, players, ranks) @ paid[ranks - 1]
        self.w_lo = float(paid[players - 1])   # everyone ahead
        self.w_hi = float(paid[0])             # nobody ahead
        u, wu = gauss_legendre(_GAIN_NODES, 0.0, 1.0)
        self.z_nodes = noise.z_ppf(u)
        self.z_weights = wu

    def gain(self, mu) -> Array:
        mu = np.atleast_1d(np.asarray(mu, dtype=float))
        if self.zero:
            return np.zeros_like(mu)
        loc, scale = self.noise.loc_scale(mu)
        s = loc[:, None] + scale[:, None] * self.z_nodes[None, :]
        w = np.interp(s, self.s_grid, self.w_grid, left=self.w_lo, right=self.w_hi)
        return w @ self.z_weights


def _mu_upper_bound(scenario: Scenario, prizes: PrizeVector,
                    base: BaselineGrid) -> float:
    """Bracket above every best response, doubled for slack."""
    lo, hi = scenario.support
    top = prizes.top
    base_cap = float(np.max(base.mu)) if base.mu.size else 1.0
    if scenario.nu.kind == "saturating":
        cap = float(scenario.nu.sup(hi)) + float(scenario.xi.invert(top)) + 1.0
        return max(cap, 2.0 * base_cap + 1.0)
    h_max = scenario.noise.max_density(max(base_cap, 1e-2))
    target = 1.0 + top * h_max

    def mc_gap(mu: float) -> float:
        grid = allocate_grid(scenario, np.array([mu]), np.array([hi]))
        return float(grid.marginal_cost[0]) - target

    probe = max(base_cap, 1.0)
    for _ in range(60):
        if mc_gap(probe) >= 0:
            break
        probe *= 2.0
    else:
        raise SolverError(
            "marginal cost never reaches the contest-gain bound; "
            "the best response is unbounded for this configuration")
    root = bisect_scalar(mc_gap, 0.0, probe, tol=1e-6 * probe)
    return max(2.0 * root, 2.0 * base_cap + 1.0, 1e-6)


def _golden_max(payoff, lo: Array, hi: Array, xtol: float,
                best_x: Array, best_f: Array) -> tuple[Array, Array]:
    """Lockstep golden-section ascent on per-element brackets."""
    width = float(np.max(hi - lo))
    if width <= 0:
        return best_x, best_f
    steps = max(1, int(math.ceil(math.log(max(width / xtol, 1.0))
                                 / math.log(1.0 / _INV_PHI))))
    for _ in range(steps):
        d = hi - lo
        x1 = hi - _INV_PHI * d
        x2 = lo + _INV_PHI * d
        f1 = payoff(x1)
        f2 = payoff(x2)
        upd = f1 > best_f
        best_x = np.where(upd, x1, best_x)
        best_f = np.where(upd, f1, best_f)
        upd = f2 > best_f
        best_x = np.where(upd, x2, best_x)
        best_f = np.where(upd, f2, best_f)
        keep_left = f1 >= f2
        hi = np.where(keep_left, x2, hi)
        lo = np.where(keep_left, lo, x1)
    return best_x, best_f


def _best_response_grid(scenario: Scenario, table: GainTable, thetas: Array,
                        mu_grid: Array, cost_matrix: Array,
                        xtol: float) -> tuple[Array, Array]:
    """Best responses for every type against a fixed gain table.

    ``cost_matrix`` holds C(mu_grid[i], thetas[j]); the coarse sweep picks
    the best cell, a golden-section pass refines inside the bracket, and
    the best payoff ever evaluated is returned (so the result dominates
    every coarse grid point by construction).
    """
    gains = table.gain(mu_grid)
    payoff_matrix = gains[:, None] + mu_grid[:, None] - cost_matrix
    idx = np.argmax(payoff_matrix, axis=0)
    best_x = mu_grid[idx]
    best_f = payoff_matrix[idx, np.arange(thetas.size)]
    lo = mu_grid[np.maximum(idx - 1, 0)]
    hi = mu_grid[np.minimum(idx + 1, mu_grid.size - 1)]

    def payoff(mu: Array) -> Array:
        cost = allocate_grid(scenario, mu, thetas).cost
        return table.gain(mu) + mu - cost

    return _golden_max(payoff, lo, hi, xtol, best_x.copy(), best_f.copy())


def best_response(theta: float, profile: StrategyProfile,
                  prizes: PrizeVector | None = None, *,
                  coarse: int = 200, xtol: float = 1e-6,
                  mu_max: float | None = None) -> float:
    """Payoff-maximising fitness target of one type against a profile."""
    scenario = profile.scenario
    scenario.check_theta(theta)
    prizes = scenario.prizes if prizes is None else prizes
    base = baseline_grid(scenario, np.array([theta]))
    if mu_max is None:
        mu_max = _mu_upper_bound(scenario, prizes, base)
    table = GainTable(opponent_mixture(profile), scenario.noise,
                      scenario.players, prizes, mu_max)
    thetas = np.array([theta])
    mu_grid = np.linspace(0.0, mu_max, coarse)
    cost_matrix = allocate_grid(scenario, mu_grid[:, None], thetas[None, :]).cost
    br, _ = _best_response_grid(scenario, table, thetas, mu_grid, cost_matrix, xtol)
    return float(br[0])


def best_response_grid(profile: StrategyProfile, thetas,
                       prizes: PrizeVector | None = None, *,
                       coarse: int = 200, xtol: float = 1e-6,
                       mu_max: float | None = None) -> Array:
    """Vectorised :func:`best_response` sharing one gain table."""
    scenario = profile.scenario
    thetas = np.asarray(thetas, dtype=float)
    prizes = scenario.prizes if prizes is None else prizes
    base = baseline_grid(scenario, thetas)
    if mu_max is None:
        mu_max = _mu_upper_bound(scenario, prizes, base)
    table = GainTable(opponent_mixture(profile), scenario.noise,
                      scenario.players, prizes, mu_max)
    mu_grid = np.linspace(0.0, mu_max, coarse)
    cost_matrix = allocate_grid(scenario, mu_grid[:, None], thetas[None, :]).cost
    br, _ = _best_response_grid(scenario, table, thetas, mu_grid, cost_matrix, xtol)
    return br


def solve_equilibrium(scenario: Scenario, *, grid_size: int = 201,
                      tol: float = 1e-5, damping: float = 0.5,
                      max_iter: int = 500, coarse: int = 200,
                      xtol: float = 1e-6) -> StrategyProfile:
    """Damped fixed-point iteration for the symmetric equilibrium schedule.

    Starts from the no-contest schedule, damps each best-response sweep by
    ``damping`` and projects onto non-decreasing schedules.  Stops when
    the sup-norm best-response residual or the iterate change falls below
    ``tol``; ``converged`` is False (never raised here) when the budget
    runs out first.
    """
    if not 0.0 < damping <= 1.0:
        raise DomainError("damping must lie in (0, 1]")
    lo, hi = scenario.support
    if scenario.types.degenerate:
        thetas = np.array([lo])
    else:
        thetas = np.linspace(lo, hi, grid_size)
    base = baseline_grid(scenario, thetas)
    mu = isotonic_projection(base.mu)
    prizes = scenario.prizes
    mu_max = _mu_upper_bound(scenario, prizes, base)

    mu_grid = np.linspace(0.0, mu_max, coarse)
    cost_matrix = allocate_grid(scenario, mu_grid[:, None], thetas[None, :]).cost

    converged = False
    residual = math.inf
    iterations = 0
    extensions = 0
    step = mu_max / (coarse - 1)
    while iterations < max_iter:
        iterations += 1
        profile = StrategyProfile(scenario, thetas, mu.copy(), False, iterations,
                                  math.inf)
        table = GainTable(opponent_mixture(profile), scenario.noise,
                          scenario.players, prizes, mu_max)
        br, _ = _best_response_grid(scenario, table, thetas, mu_grid,
                                    cost_matrix, xtol)
        if float(np.max(br)) > mu_max - 2.0 * step:
            if extensions >= 12:
                raise SolverError(
                    f"best responses keep escaping the bracket (mu_max={mu_max:.4g})")
            extensions += 1
            mu_max *= 1.6
            step = mu_max / (coarse - 1)
            mu_grid = np.linspace(0.0, mu_max, coarse)
            cost_matrix = allocate_grid(scenario, mu_grid[:, None],
                                        thetas[None, :]).cost
            continue
        residual = float(np.max(np.abs(br - mu)))
        nxt = isotonic_projection((1.0 - damping) * mu + damping * br)
        change = float(np.max(np.abs(nxt - mu)))
        mu = nxt
        # the sup best-response gap is the real fixed-point criterion; the
        # iterate change only proxies it (change ~ damping * residual)
        if residual < tol or change < tol:
            converged = True
            break
    return StrategyProfile(scenario, thetas, mu, converged, iterations, residual)


def profile_allocations(profile: StrategyProfile):
    """Efforts along the equilibrium schedule (for export and verdicts)."""
    return allocate_grid(profile.scenario, profile.mu_star, profile.theta_grid)


def zero_prize_profile(scenario: Scenario, *, grid_size: int = 201) -> StrategyProfile:
    """The no-contest schedule packaged as a (trivially converged) profile."""
    return solve_equilibrium(scenario.with_prizes(PrizeVector(())),
                             grid_size=grid_size)
