"""Benchmark-hacking verdicts and prize-structure comparative statics.

A type "hacks" when the contest pushes it to raise mechanistic effort
above its no-contest level without raising creative effort.  The type
space splits into four bands: below ``theta_star`` players mechanise
only; between ``theta_star`` and the no-contest mech threshold they
create only because of the contest while still over-mechanising; in the
middle band both efforts rise; at the top the contest only adds creative
effort.

Prize vectors are ordered by adjacent gaps: R dominates R' when every
gap R_k - R_{k+1} is at least the corresponding gap of R'.  Under that
partial order equilibrium schedules move up pointwise and the mass of
hacking types shrinks; :func:`skewness_sweep` measures both and flags
violations instead of hiding them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._rootfind import bisect_scalar
from .baseline import BaselineGrid, BaselineThresholds, baseline_grid, baseline_thresholds
from .costmin import allocate_grid
from .equilibrium import StrategyProfile, profile_allocations, solve_equilibrium
from .errors import DomainError, UnconvergedProfileError
from .model import PrizeVector, Scenario

Array = np.ndarray

# strictness margin: efforts this close count as unchanged
EFFORT_TOL = 1e-6

PURE_MECHANIZER = "pure-mechanizer"
CONTEST_CREATOR = "contest-creator"
DUAL_CHANNEL = "dual-channel"
PURE_CREATOR = "pure-creator"


def _require_converged(profile: StrategyProfile, force: bool) -> None:
    if not profile.converged and not force:
        raise UnconvergedProfileError(
            f"profile did not converge (residual {profile.residual:.3g}); "
            "pass force=True to use it anyway")


def compare_prize_vectors(r1: PrizeVector, r2: PrizeVector,
                          players: int | None = None) -> str:
    """Order two prize vectors by their adjacent gaps.

    Returns ``"geq"``, ``"leq"``, ``"equal"`` or ``"incomparable"``.  The
    vectors are compared over ranks 1..n-1 where n is ``players`` when
    given, else the longer length: vectors are treated as spanning the
    whole contest, so two pure win-bonuses of different size compare
    equal only in the degenerate one-rank reading.
    """
    n = max(len(r1), len(r2), 1) if players is None else players
    g1 = r1.gaps(n)
    g2 = r2.gaps(n)
    eps = 1e-12 * max(1.0, float(np.max(np.abs(g1), initial=0.0)),
                      float(np.max(np.abs(g2), initial=0.0)))
    ge = bool(np.all(g1 >= g2 - eps))
    le = bool(np.all(g2 >= g1 - eps))
    if ge and le:
        return "equal"
    if ge:
        return "geq"
    if le:
        return "leq"
    return "incomparable"


@dataclass(frozen=True)
class HackingVerdict:
    """Contest-vs-baseline effort comparison for one type."""

    theta: float
    hacks: bool
    region: str
    a_star: float
    b_star: float
    a_base: float
    b_base: float
    mu_star: float
    mu_base: float


@dataclass(frozen=True)
class HackingProfile:
    """Verdicts along a type grid plus the band cutoffs."""

    theta: Array
    hacks: np.ndarray
    region: tuple[str, ...]
    theta_star: float
    thresholds: BaselineThresholds
    a_star: Array
    b_star: Array
    a_base: Array
    b_base: Array
    mu_star: Array
    mu_base: Array

    def measure(self, scenario: Scenario) -> float:
        """Probability mass of hacking types under the type distribution."""
        types = scenario.types
        if self.theta.size == 1:
            return float(self.hacks[0])
        edges = np.concatenate([[types.lo],
                                0.5 * (self.theta[1:] + self.theta[:-1]),
                                [types.hi]])
        masses = np.diff(types.cdf(edges))
        return float(np.sum(masses[self.hacks]))


def hacking_threshold(profile: StrategyProfile, *, force: bool = False) -> float:
    """Largest type that fully mechanises its equilibrium target.

    Solves xi'(xi^{-1}(mu*(theta))) = nu_a(0, theta); -inf when even the
    lowest type prefers some creation, +inf when every type mechanises.
    """
    _require_converged(profile, force)
    scenario = profile.scenario
    lo, hi = scenario.support
    xi, nu = scenario.xi, scenario.nu

    def gap(theta: float) -> float:
        mu = float(profile.mu_at(theta))
        mech_margin = float(xi.deriv(xi.invert(mu)))
        return float(nu.deriv_a(0.0, theta)) - mech_margin

    if gap(lo) > 0:
        return -np.inf
    if gap(hi) <= 0:
        return np.inf
    return float(bisect_scalar(gap, lo, hi, tol=1e-11))


def _bands(thetas: Array, theta_star: float, thr: BaselineThresholds) -> np.ndarray:
    out = np.where(thetas < theta_star, PURE_MECHANIZER,
                   np.where(thetas < thr.mech_upper, CONTEST_CREATOR,
                            np.where(thetas <= thr.create_lower, DUAL_CHANNEL,
                                     PURE_CREATOR)))
    return out


def hacking_verdicts(profile: StrategyProfile, *, force: bool = False,
                     base: BaselineGrid | None = None) -> HackingProfile:
    """Classify every grid type of an equilibrium profile."""
    _require_converged(profile, force)
    scenario = profile.scenario
    alloc = profile_allocations(profile)
    if base is None:
        base = baseline_grid(scenario, profile.theta_grid)
    theta_star = hacking_threshold(profile, force=force)
    hacks = (alloc.a <= base.a + EFFORT_TOL) & (alloc.b > base.b + EFFORT_TOL)
    bands = _bands(profile.theta_grid, theta_star, base.thresholds)
    return HackingProfile(profile.theta_grid, hacks, tuple(bands.tolist()),
                          theta_star, base.thresholds, alloc.a, alloc.b,
                          base.a, base.b, profile.mu_star, base.mu)


def classify_hacking(theta: float, profile: StrategyProfile, *,
                     force: bool = False) -> HackingVerdict:
    """Contest-vs-baseline verdict for one type."""
    _require_converged(profile, force)
    scenario = profile.scenario
    scenario.check_theta(theta)
    mu = float(profile.mu_at(theta))
    alloc = allocate_grid(scenario, np.array([mu]), np.array([theta]))
    base = baseline_grid(scenario, np.array([theta]))
    theta_star = hacking_threshold(profile, force=force)
    hacks = bool(alloc.a[0] <= base.a[0] + EFFORT_TOL
                 and alloc.b[0] > base.b[0] + EFFORT_TOL)
    region = str(_bands(np.array([theta]), theta_star, base.thresholds)[0])
    return HackingVerdict(float(theta), hacks, region,
                          float(alloc.a[0]), float(alloc.b[0]),
                          float(base.a[0]), float(base.b[0]),
                          mu, float(base.mu[0]))


@dataclass(frozen=True)
class SweepResult:
    """Equilibria and hacking measures across ordered prize vectors."""

    scenario: Scenario
    prize_vectors: tuple[PrizeVector, ...]
    relations: tuple[tuple[int, int, str], ...]
    profiles: tuple[StrategyProfile, ...]
    verdicts: tuple[HackingProfile, ...]

    @property
    def hack_measures(self) -> tuple[float, ...]:
        return tuple(v.measure(self.scenario) for v in self.verdicts)

    def dominance_violations(self, tol: float = 1e-4) -> list[dict]:
        """Pointwise schedule drops where the prize order demands a rise."""
        out = []
        for i, j, rel in self.relations:
            if rel == "geq":
                hi_idx, lo_idx = i, j
            elif rel == "leq":
                hi_idx, lo_idx = j, i
            else:
                continue
            gap = self.profiles[lo_idx].mu_star - self.profiles[hi_idx].mu_star
            worst = int(np.argmax(gap))
            if gap[worst] > tol:
                out.append({
                    "dominant": hi_idx, "dominated": lo_idx,
                    "theta": float(self.profiles[hi_idx].theta_grid[worst]),
                    "shortfall": float(gap[worst]),
                })
        return out

    def measure_violations(self, tol: float = 1e-12) -> list[dict]:
        """Hacking-mass increases where the prize order demands a drop."""
        out = []
        measures = self.hack_measures
        for i, j, rel in self.relations:
            if rel == "geq":
                hi_idx, lo_idx = i, j
            elif rel == "leq":
                hi_idx, lo_idx = j, i
            else:
                continue
            if measures[hi_idx] > measures[lo_idx] + tol:
                out.append({"dominant": hi_idx, "dominated": lo_idx,
                            "excess": measures[hi_idx] - measures[lo_idx]})
        return out

    def rows(self) -> list[dict]:
        """Flat per-(prize vector, type) records for tabular export."""
        out = []
        for idx, (prof, verd) in enumerate(zip(self.profiles, self.verdicts)):
            for k in range(prof.theta_grid.size):
                out.append({
                    "prizes": idx,
                    "theta": float(prof.theta_grid[k]),
                    "mu_star": float(prof.mu_star[k]),
                    "a_star": float(verd.a_star[k]),
                    "b_star": float(verd.b_star[k]),
                    "hacks": int(verd.hacks[k]),
                    "region": verd.region[k],
                })
        return out


def skewness_sweep(scenario: Scenario, prize_vectors, *, grid_size: int = 201,
                   tol: float = 1e-5, damping: float = 0.5,
                   max_iter: int = 500) -> SweepResult:
    """Solve the contest under each prize vector and compare outcomes.

    All vectors must be pairwise comparable under the gap order; the
    offending pair is named otherwise.  Violations of the expected
    monotone comparative statics are recorded on the result, never
    silently repaired.
    """
    pvs = [pv if isinstance(pv, PrizeVector) else PrizeVector(tuple(pv))
           for pv in prize_vectors]
    if not pvs:
        raise DomainError("need at least one prize vector")
    relations = []
    for i in range(len(pvs)):
        for j in range(i + 1, len(pvs)):
            rel = compare_prize_vectors(pvs[i], pvs[j], scenario.players)
            if rel == "incomparable":
                raise DomainError(
                    f"prize vectors {i} and {j} are incomparable: "
                    f"{pvs[i].values} vs {pvs[j].values}")
            relations.append((i, j, rel))
    profiles = []
    verdicts = []
    for pv in pvs:
        prof = solve_equilibrium(scenario.with_prizes(pv), grid_size=grid_size,
                                 tol=tol, damping=damping, max_iter=max_iter)
        profiles.append(prof)
        verdicts.append(hacking_verdicts(prof))
    return SweepResult(scenario, tuple(pvs), tuple(relations),
                       tuple(profiles), tuple(verdicts))
