"""Least-cost split of a fitness target across the two effort channels.

For a target mean fitness ``mu`` and type ``theta`` the problem is

    C(mu, theta) = min c(a + b)  s.t.  nu(a, theta) + xi(b) = mu,  a, b >= 0.

Since the cost depends on efforts only through their sum, the optimum
equalises marginal products where it can.  Writing

    psi(y) = xi'(xi^{-1}(mu - nu(y, theta)))

for the mechanistic margin left after committing creative effort ``y``,
psi is increasing in y while the creative margin nu_a(y, theta) is
decreasing, so exactly one of three regimes applies:

- mech-only:    psi(0)  >= nu_a(0, theta)        (a = 0)
- create-only:  xi'(0)  <= nu_a(a_bar, theta)    (b = 0, nu alone reaches mu)
- interior:     the single crossing psi(y) = nu_a(y, theta)

Ties at the boundary tests resolve to the corner regimes.  The crossing
is bracketed by construction and solved by bisection to 1e-10 in y; the
produced split satisfies the fitness constraint to 1e-8 because the
mechanistic effort is recovered by exact inversion.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._rootfind import bisect_vec, expand_upper
from .errors import DomainError, UnreachableFitnessError
from .model import Scenario

Array = np.ndarray

MECH_ONLY, INTERIOR, CREATE_ONLY = 1, 2, 3
CASE_NAMES = {MECH_ONLY: "mech-only", INTERIOR: "interior", CREATE_ONLY: "create-only"}


@dataclass(frozen=True)
class EffortAllocation:
    """A feasible effort split and the regime that produced it."""

    a: float
    b: float
    case: str


@dataclass(frozen=True)
class CostPoint:
    """Value and sensitivities of the cost function at one (mu, theta)."""

    mu: float
    theta: float
    allocation: EffortAllocation
    cost: float
    shadow_price: float      # d(total effort)/d(mu) along the optimal path
    marginal_cost: float     # dC/dmu = c'(e) * shadow_price

    @property
    def effort(self) -> float:
        return self.allocation.a + self.allocation.b


@dataclass(frozen=True)
class AllocationGrid:
    """Vectorised allocations on a broadcast (mu, theta) grid."""

    mu: Array
    theta: Array
    a: Array
    b: Array
    case: Array            # int8 codes, see CASE_NAMES
    cost: Array
    shadow_price: Array
    marginal_cost: Array

    def case_names(self) -> np.ndarray:
        return np.vectorize(CASE_NAMES.get)(self.case)


def invert_production(scenario: Scenario, target: float, theta: float,
                      strict: bool = False) -> tuple[float, float]:
    """Efforts reaching ``target`` through one channel alone.

    Returns ``(a_bar, b_bar)``: the creative effort solving
    nu(a, theta) = target (``math.inf`` when the channel saturates below
    the target; raised as :class:`UnreachableFitnessError` iff ``strict``)
    and the mechanistic effort solving xi(b) = target.
    """
    if target < 0:
        raise DomainError(f"fitness target must be non-negative, got {target!r}")
    scenario.check_theta(theta)
    a_bar = float(scenario.nu.invert(target, theta))
    b_bar = float(scenario.xi.invert(target))
    if strict and not np.isfinite(a_bar):
        raise UnreachableFitnessError(
            f"creation alone cannot reach {target!r} for type {theta!r} "
            f"(supremum {float(scenario.nu.sup(theta)):.6g})")
    return a_bar, b_bar


def allocate_grid(scenario: Scenario, mu, theta) -> AllocationGrid:
    """Solve the allocation problem elementwise on broadcast arrays."""
    mu_in = np.asarray(mu, dtype=float)
    th_in = np.asarray(theta, dtype=float)
    if np.any(mu_in < 0):
        raise DomainError("fitness targets must be non-negative")
    mu_b, th_b = np.broadcast_arrays(mu_in, th_in)
    mu_f = np.ascontiguousarray(mu_b, dtype=float).ravel()
    th_f = np.ascontiguousarray(th_b, dtype=float).ravel()

    nu_form, xi, cost = scenario.nu, scenario.xi, scenario.cost
    xi0 = float(xi.deriv(0.0))

    b_bar = xi.invert(mu_f)
    a_bar = nu_form.invert(mu_f, th_f)
    psi0 = xi.deriv(b_bar)
    nua0 = nu_form.deriv_a(np.zeros_like(mu_f), th_f)

    mech = psi0 >= nua0
    a_bar_safe = np.where(np.isfinite(a_bar), a_bar, 0.0)
    nua_full = np.where(np.isfinite(a_bar),
                        nu_form.deriv_a(a_bar_safe, th_f), -np.inf)
    create = ~mech & np.isfinite(a_bar) & (xi0 <= nua_full)
    interior = ~mech & ~create

    a = np.where(mech, 0.0, np.where(create, a_bar_safe, np.nan))
    b = np.where(mech, b_bar, np.where(create, 0.0, np.nan))

    if np.any(interior):
        idx = np.nonzero(interior)[0]
        mu_i, th_i = mu_f[idx], th_f[idx]

        def margin_gap(y: Array) -> Array:
            remainder = np.maximum(mu_i - nu_form.value(y, th_i), 0.0)
            psi = xi.deriv(xi.invert(remainder))
            return psi - nu_form.deriv_a(y, th_i)

        hi = a_bar[idx]
        unbounded = ~np.isfinite(hi)
        if np.any(unbounded):
            start = np.where(unbounded, 1.0, hi)
            hi = np.where(unbounded,
                          expand_upper(lambda y: np.where(unbounded, margin_gap(y), 0.0),
                                       start, what="interior allocation"),
                          hi)
        y_star = bisect_vec(margin_gap, np.zeros_like(hi), hi, tol=1e-10)
        a[idx] = y_star
        b[idx] = xi.invert(np.maximum(mu_i - nu_form.value(y_star, th_i), 0.0))

    with np.errstate(divide="ignore"):
        lam_mech = 1.0 / xi.deriv(b)
        lam_create = 1.0 / nu_form.deriv_a(np.where(create, a, 0.0), th_f)
    lam = np.where(create, lam_create, lam_mech)

    effort = a + b
    case = np.where(mech, MECH_ONLY,
                    np.where(create, CREATE_ONLY, INTERIOR)).astype(np.int8)
    grid = AllocationGrid(
        mu=mu_f.reshape(mu_b.shape),
        theta=th_f.reshape(mu_b.shape),
        a=a.reshape(mu_b.shape),
        b=b.reshape(mu_b.shape),
        case=case.reshape(mu_b.shape),
        cost=cost.value(effort).reshape(mu_b.shape),
        shadow_price=lam.reshape(mu_b.shape),
        marginal_cost=(cost.deriv(effort) * lam).reshape(mu_b.shape),
    )
    return grid


def optimal_allocation(scenario: Scenario, mu: float, theta: float) -> CostPoint:
    """Least-cost allocation for one fitness target.

    Raises :class:`UnreachableFitnessError` when both channels together
    cannot reach ``mu`` and :class:`DomainError` on arguments outside the
    model's domain.
    """
    if mu < 0 or not np.isfinite(mu):
        raise DomainError(f"fitness target must be a finite non-negative, got {mu!r}")
    scenario.check_theta(theta)
    reach = float(scenario.nu.sup(theta))
    if not np.isfinite(float(scenario.xi.invert(1.0))):  # pragma: no cover
        raise UnreachableFitnessError("mechanistic channel cannot produce fitness")
    if not np.isfinite(reach) and mu == np.inf:
        raise UnreachableFitnessError(f"target {mu!r} is not reachable")
    grid = allocate_grid(scenario, np.array([mu]), np.array([theta]))
    alloc = EffortAllocation(float(grid.a[0]), float(grid.b[0]),
                             CASE_NAMES[int(grid.case[0])])
    return CostPoint(float(mu), float(theta), alloc, float(grid.cost[0]),
                     float(grid.shadow_price[0]), float(grid.marginal_cost[0]))


def cost_curve(scenario: Scenario, mu_grid, theta: float) -> list[CostPoint]:
    """Vectorised :func:`optimal_allocation` along a grid of targets."""
    mu_grid = np.asarray(mu_grid, dtype=float)
    scenario.check_theta(theta)
    if np.any(mu_grid < 0):
        raise DomainError("fitness targets must be non-negative")
    grid = allocate_grid(scenario, mu_grid, np.full_like(mu_grid, theta))
    points = []
    for i in range(mu_grid.size):
        alloc = EffortAllocation(float(grid.a[i]), float(grid.b[i]),
                                 CASE_NAMES[int(grid.case[i])])
        points.append(CostPoint(float(grid.mu[i]), float(theta), alloc,
                                float(grid.cost[i]), float(grid.shadow_price[i]),
                                float(grid.marginal_cost[i])))
    return points
