"""Model primitives: effort technologies, type and noise distributions.

A :class:`Scenario` bundles everything a solver needs: the creative
production function ``nu(a, theta)``, the mechanistic channel ``xi(b)``,
the effort cost ``c(e)`` on total effort ``e = a + b``, the distribution
of private types, the performance noise family indexed by mean fitness,
the number of players and the prize vector.

All form methods broadcast over numpy arrays.  Derivatives may be
``math.inf`` at domain corners (power forms at zero effort); callers are
expected to treat infinities as ordinary extended reals.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np
from scipy import special, stats

from .errors import DomainError

Array = np.ndarray

_NU_KINDS = ("linear", "power", "saturating")
_XI_KINDS = ("linear", "power")
_COST_KINDS = ("linear", "quadratic")
_TYPE_KINDS = ("uniform", "truncated-normal")
_NOISE_KINDS = ("normal", "gumbel", "exponential")

# fitness this close to a saturating supremum counts as unreachable
SATURATION_MARGIN = 1e-6


def _check_nonneg(name: str, x: Array | float) -> Array:
    arr = np.asarray(x, dtype=float)
    if np.any(arr < 0):
        raise DomainError(f"{name} must be non-negative, got {np.min(arr)!r}")
    return arr


@dataclass(frozen=True)
class ProductionForm:
    """Creative technology ``nu(a, theta)``: concave in effort, supermodular.

    Kinds:

    - ``linear``:      nu = theta * a
    - ``power``:       nu = theta * a**alpha   (0 < alpha <= 1)
    - ``saturating``:  nu = theta * (1 - exp(-a))
    """

    kind: str
    alpha: float | None = None

    def __post_init__(self) -> None:
        if self.kind not in _NU_KINDS:
            raise DomainError(f"unknown production kind {self.kind!r}")
        if self.kind == "power":
            if self.alpha is None or not 0.0 < self.alpha <= 1.0:
                raise DomainError("power production needs alpha in (0, 1]")
        elif self.alpha is not None:
            raise DomainError(f"{self.kind} production takes no alpha")

    def value(self, a: Array | float, theta: Array | float) -> Array:
        a = _check_nonneg("creative effort", a)
        theta = np.asarray(theta, dtype=float)
        if self.kind == "linear":
            return theta * a
        if self.kind == "power":
            return theta * np.power(a, self.alpha)
        return theta * (-np.expm1(-a))

    def deriv_a(self, a: Array | float, theta: Array | float) -> Array:
        """Marginal product of creative effort; +inf at a=0 for power forms."""
        a = _check_nonneg("creative effort", a)
        theta = np.asarray(theta, dtype=float)
        if self.kind == "linear":
            return theta * np.ones_like(a)
        if self.kind == "power":
            if self.alpha == 1.0:
                return theta * np.ones_like(a)
            with np.errstate(divide="ignore", invalid="ignore"):
                raw = self.alpha * np.power(a, self.alpha - 1.0)  # inf at a=0
                return np.where(theta > 0, theta * raw, 0.0)
        return theta * np.exp(-a)

    def sup(self, theta: Array | float) -> Array:
        """Least upper bound of nu(., theta)."""
        theta = np.asarray(theta, dtype=float)
        if self.kind == "saturating":
            return theta.copy()
        return np.where(theta > 0, np.inf, 0.0)

    def invert(self, target: Array | float, theta: Array | float) -> Array:
        """Creative effort reaching ``target`` alone; inf when unreachable."""
        target = _check_nonneg("fitness target", target)
        theta = np.asarray(theta, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            if self.kind == "linear":
                raw = target / theta
            elif self.kind == "power":
                raw = np.power(target / theta, 1.0 / self.alpha)
            else:
                ratio = target / theta
                raw = np.where(ratio < 1.0, -np.log1p(-np.minimum(ratio, 1.0 - 1e-300)), np.inf)
        out = np.where(target <= 0, 0.0, np.where(theta > 0, raw, np.inf))
        if self.kind == "saturating":
            out = np.where(target >= self.sup(theta) - SATURATION_MARGIN,
                           np.where(target <= 0, 0.0, np.inf), out)
        return out


@dataclass(frozen=True)
class MechanizationForm:
    """Mechanistic channel ``xi(b)``: concave, type independent.

    Kinds:

    - ``linear``:  xi = b            (marginal product never decays)
    - ``power``:   xi = b**alpha     (0 < alpha < 1)
    """

    kind: str
    alpha: float | None = None

    def __post_init__(self) -> None:
        if self.kind not in _XI_KINDS:
            raise DomainError(f"unknown mechanization kind {self.kind!r}")
        if self.kind == "power":
            if self.alpha is None or not 0.0 < self.alpha < 1.0:
                raise DomainError("power mechanization needs alpha in (0, 1)")
        elif self.alpha is not None:
            raise DomainError("linear mechanization takes no alpha")

    def value(self, b: Array | float) -> Array:
        b = _check_nonneg("mechanistic effort", b)
        if self.kind == "linear":
            return b.copy() if isinstance(b, np.ndarray) else np.asarray(b)
        return np.power(b, self.alpha)

    def deriv(self, b: Array | float) -> Array:
        """Marginal product of mechanistic effort; +inf at b=0 for power."""
        b = _check_nonneg("mechanistic effort", b)
        if self.kind == "linear":
            return np.ones_like(b)
        with np.errstate(divide="ignore"):
            raw = self.alpha * np.power(b, self.alpha - 1.0)
        return np.where(b > 0, raw, np.inf)

    def invert(self, target: Array | float) -> Array:
        """Mechanistic effort producing exactly ``target``."""
        target = _check_nonneg("fitness target", target)
        if self.kind == "linear":
            return np.asarray(target, dtype=float).copy()
        return np.power(target, 1.0 / self.alpha)


@dataclass(frozen=True)
class CostForm:
    """Effort cost ``c(e)``: convex, c(0)=0.

    Kinds: ``linear`` c = kappa*e, ``quadratic`` c = kappa*e**2 (kappa > 0).
    """

    kind: str
    kappa: float = 1.0

    def __post_init__(self) -> None:
        if self.kind not in _COST_KINDS:
            raise DomainError(f"unknown cost kind {self.kind!r}")
        if not self.kappa > 0:
            raise DomainError("cost scale kappa must be positive")

    def value(self, e: Array | float) -> Array:
        e = _check_nonneg("total effort", e)
        if self.kind == "linear":
            return self.kappa * e
        return self.kappa * e * e

    def deriv(self, e: Array | float) -> Array:
        e = _check_nonneg("total effort", e)
        if self.kind == "linear":
            return self.kappa * np.ones_like(e)
        return 2.0 * self.kappa * e


@dataclass(frozen=True)
class TypeDistribution:
    """Distribution of private types on a bounded support [lo, hi].

    ``uniform`` admits the degenerate case lo == hi (a point mass), used by
    diagnostic oracles; ``truncated-normal`` requires a proper interval.
    """

    kind: str
    lo: float
    hi: float
    loc: float | None = None
    scale: float | None = None

    def __post_init__(self) -> None:
        if self.kind not in _TYPE_KINDS:
            raise DomainError(f"unknown type distribution {self.kind!r}")
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise DomainError("type support must be finite")
        if self.hi < self.lo:
            raise DomainError("type support upper bound below lower bound")
        if self.kind == "truncated-normal":
            if self.hi == self.lo:
                raise DomainError("truncated-normal needs a proper interval")
            if self.scale is None or self.scale <= 0:
                raise DomainError("truncated-normal needs a positive scale")
            if self.loc is None:
                raise DomainError("truncated-normal needs a loc")

    @property
    def degenerate(self) -> bool:
        return self.hi == self.lo

    def _frozen(self):
        a = (self.lo - self.loc) / self.scale
        b = (self.hi - self.loc) / self.scale
        return stats.truncnorm(a, b, loc=self.loc, scale=self.scale)

    def pdf(self, theta: Array | float) -> Array:
        theta = np.asarray(theta, dtype=float)
        if self.degenerate:
            raise DomainError("degenerate type distribution has no density")
        if self.kind == "uniform":
            inside = (theta >= self.lo) & (theta <= self.hi)
            return np.where(inside, 1.0 / (self.hi - self.lo), 0.0)
        return self._frozen().pdf(theta)

    def cdf(self, theta: Array | float) -> Array:
        theta = np.asarray(theta, dtype=float)
        if self.degenerate:
            return np.where(theta >= self.lo, 1.0, 0.0)
        if self.kind == "uniform":
            return np.clip((theta - self.lo) / (self.hi - self.lo), 0.0, 1.0)
        return self._frozen().cdf(theta)

    def ppf(self, q: Array | float) -> Array:
        q = np.asarray(q, dtype=float)
        if np.any((q < 0) | (q > 1)):
            raise DomainError("quantile level outside [0, 1]")
        if self.degenerate:
            return np.full_like(q, self.lo)
        if self.kind == "uniform":
            return self.lo + q * (self.hi - self.lo)
        return self._frozen().ppf(q)

    def sample(self, rng: np.random.Generator, size: int) -> Array:
        # inverse-transform keeps sampling tied to the caller's stream
        return self.ppf(rng.random(size))


_EULER = float(np.euler_gamma)


@dataclass(frozen=True)
class NoiseFamily:
    """Performance distributions indexed by their mean fitness.

    Kinds: ``normal`` (sd = dispersion), ``gumbel`` (scale = dispersion,
    location shifted so the mean is exactly mu) and ``exponential`` (mean
    mu; the dispersion field is ignored since the mean fixes everything).
    All three are ordered by first-order stochastic dominance in mu.
    """

    kind: str
    dispersion: float = 1.0

    def __post_init__(self) -> None:
        if self.kind not in _NOISE_KINDS:
            raise DomainError(f"unknown noise kind {self.kind!r}")
        if self.kind != "exponential" and not self.dispersion > 0:
            raise DomainError("noise dispersion must be positive")

    def loc_scale(self, mu: Array | float) -> tuple[Array, Array]:
        """Decompose H_mu as loc + scale * Z with Z a fixed base variate."""
        mu = np.asarray(mu, dtype=float)
        if self.kind == "normal":
            return mu, np.full_like(mu, self.dispersion)
        if self.kind == "gumbel":
            return mu - _EULER * self.dispersion, np.full_like(mu, self.dispersion)
        if np.any(mu < 0):
            raise DomainError("exponential noise needs non-negative mean")
        return np.zeros_like(mu), mu

    def z_ppf(self, q: Array | float) -> Array:
        """Quantile of the standardized base variate Z."""
        q = np.asarray(q, dtype=float)
        if self.kind == "normal":
            return special.ndtri(q)
        if self.kind == "gumbel":
            return -np.log(-np.log(q))
        return -np.log1p(-q)

    def cdf(self, s: Array | float, mu: Array | float) -> Array:
        s = np.asarray(s, dtype=float)
        loc, scale = self.loc_scale(mu)
        if self.kind == "exponential":
            with np.errstate(divide="ignore", invalid="ignore"):
                z = np.where(scale > 0, s / np.where(scale > 0, scale, 1.0), np.inf)
            out = -np.expm1(-np.maximum(z, 0.0))
            return np.where(s < 0, 0.0, np.where(scale > 0, out, (s >= 0) * 1.0))
        z = (s - loc) / scale
        if self.kind == "normal":
            return special.ndtr(z)
        return np.exp(-np.exp(-z))

    def pdf(self, s: Array | float, mu: Array | float) -> Array:
        s = np.asarray(s, dtype=float)
        loc, scale = self.loc_scale(mu)
        if self.kind == "exponential":
            with np.errstate(divide="ignore", invalid="ignore"):
                lam = np.where(scale > 0, 1.0 / np.where(scale > 0, scale, 1.0), np.inf)
            out = lam * np.exp(-lam * np.maximum(s, 0.0))
            return np.where((s < 0) | (scale <= 0), 0.0, out)
        z = (s - loc) / scale
        if self.kind == "normal":
            return np.exp(-0.5 * z * z) / (scale * math.sqrt(2.0 * math.pi))
        return np.exp(-z - np.exp(-z)) / scale

    def ppf(self, q: Array | float, mu: Array | float) -> Array:
        q = np.asarray(q, dtype=float)
        if np.any((q <= 0) | (q >= 1)):
            raise DomainError("noise quantile level must lie in (0, 1)")
        loc, scale = self.loc_scale(mu)
        return loc + scale * self.z_ppf(q)

    def sample(self, rng: np.random.Generator, mu: Array | float) -> Array:
        mu = np.asarray(mu, dtype=float)
        loc, scale = self.loc_scale(mu)
        if self.kind == "normal":
            z = rng.standard_normal(mu.shape)
        elif self.kind == "gumbel":
            z = rng.gumbel(0.0, 1.0, mu.shape)
        else:
            z = rng.standard_exponential(mu.shape)
        return loc + scale * z

    def max_density(self, mu: float) -> float:
        """Peak of the density of H_mu; used for search-bracket heuristics."""
        if self.kind == "normal":
            return 1.0 / (self.dispersion * math.sqrt(2.0 * math.pi))
        if self.kind == "gumbel":
            return math.exp(-1.0) / self.dispersion
        return 1.0 / max(float(mu), 1e-2)


@dataclass(frozen=True)
class PrizeVector:
    """Rank-ordered awards, non-negative and non-increasing."""

    values: tuple[float, ...]

    def __post_init__(self) -> None:
        vals = tuple(float(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if any(v < 0 for v in vals):
            raise DomainError("prizes must be non-negative")
        if any(a < b for a, b in zip(vals, vals[1:])):
            raise DomainError("prizes must be non-increasing in rank")

    def __len__(self) -> int:
        return len(self.values)

    @property
    def total(self) -> float:
        return float(sum(self.values))

    @property
    def top(self) -> float:
        return self.values[0] if self.values else 0.0

    @property
    def is_zero(self) -> bool:
        return self.total == 0.0

    def padded(self, n: int) -> np.ndarray:
        """Prizes as a length-n array, zero beyond the listed ranks."""
        if len(self.values) > n:
            raise DomainError(f"{len(self.values)} prizes for {n} ranks")
        out = np.zeros(n)
        out[: len(self.values)] = self.values
        return out

    def gaps(self, n: int | None = None) -> np.ndarray:
        """Adjacent prize gaps R_k - R_{k+1} for k = 1..n-1."""
        m = len(self.values) if n is None else n
        padded = self.padded(max(m, len(self.values)))
        return padded[:-1] - padded[1:] if m > 1 else np.zeros(0)


@dataclass(frozen=True)
class Scenario:
    """Immutable bundle of primitives defining one contest environment."""

    nu: ProductionForm
    xi: MechanizationForm
    cost: CostForm
    types: TypeDistribution
    noise: NoiseFamily = field(default_factory=lambda: NoiseFamily("normal", 1.0))
    players: int = 2
    prizes: PrizeVector = field(default_factory=lambda: PrizeVector((1.0,)))

    def __post_init__(self) -> None:
        if not isinstance(self.players, int) or self.players < 1:
            raise DomainError("players must be a positive integer")
        if len(self.prizes) > self.players:
            raise DomainError("more prizes than players")

    @property
    def support(self) -> tuple[float, float]:
        return (self.types.lo, self.types.hi)

    def check_theta(self, theta: float) -> float:
        lo, hi = self.support
        if not lo <= theta <= hi:
            raise DomainError(f"type {theta!r} outside support [{lo}, {hi}]")
        return float(theta)

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {
            "nu": {"kind": self.nu.kind},
            "xi": {"kind": self.xi.kind},
            "cost": {"kind": self.cost.kind, "kappa": self.cost.kappa},
            "types": {"kind": self.types.kind, "support": [self.types.lo, self.types.hi]},
            "noise": {"kind": self.noise.kind, "dispersion": self.noise.dispersion},
            "players": self.players,
            "prizes": list(self.prizes.values),
        }
        if self.nu.alpha is not None:
            d["nu"]["alpha"] = self.nu.alpha
        if self.xi.alpha is not None:
            d["xi"]["alpha"] = self.xi.alpha
        if self.types.kind == "truncated-normal":
            d["types"]["loc"] = self.types.loc
            d["types"]["scale"] = self.types.scale
        return d

    @property
    def scenario_id(self) -> str:
        blob = json.dumps(self.to_dict(), sort_keys=True).encode()
        return hashlib.sha1(blob).hexdigest()[:12]

    def with_prizes(self, prizes) -> "Scenario":
        pv = prizes if isinstance(prizes, PrizeVector) else PrizeVector(tuple(prizes))
        return Scenario(self.nu, self.xi, self.cost, self.types, self.noise,
                        self.players, pv)

    def with_players(self, players: int, prizes=None) -> "Scenario":
        pv = self.prizes if prizes is None else (
            prizes if isinstance(prizes, PrizeVector) else PrizeVector(tuple(prizes)))
        return Scenario(self.nu, self.xi, self.cost, self.types, self.noise,
                        players, pv)


def evaluate_primitive(form, x: float, theta: float | None = None,
                       support: tuple[float, float] | None = None) -> tuple[float, float]:
    """Evaluate a form and its derivative at ``x`` (and ``theta``).

    Returns ``(value, derivative)``; the derivative is ``math.inf`` where
    the form has an unbounded corner slope.  ``theta`` must be supplied
    exactly for production forms, and is checked against ``support`` when
    one is given.
    """
    if x < 0:
        raise DomainError(f"effort must be non-negative, got {x!r}")
    if isinstance(form, ProductionForm):
        if theta is None:
            raise DomainError("production form needs a type theta")
        if support is not None and not support[0] <= theta <= support[1]:
            raise DomainError(f"type {theta!r} outside support {support}")
        return float(form.value(x, theta)), float(form.deriv_a(x, theta))
    if theta is not None:
        raise DomainError(f"{type(form).__name__} takes no theta")
    if isinstance(form, MechanizationForm):
        return float(form.value(x)), float(form.deriv(x))
    if isinstance(form, CostForm):
        return float(form.value(x)), float(form.deriv(x))
    raise DomainError(f"not a known primitive: {type(form).__name__}")


# ---------------------------------------------------------------------------
# configuration loading


def _require(mapping: dict, key: str, where: str) -> Any:
    if key not in mapping:
        raise DomainError(f"{where}: missing required field {key!r}")
    return mapping[key]


def _check_keys(mapping: dict, allowed: set[str], where: str) -> None:
    extra = set(mapping) - allowed
    if extra:
        raise DomainError(f"{where}: unknown field(s) {sorted(extra)}")


def scenario_from_dict(config: dict[str, Any]) -> Scenario:
    """Build a :class:`Scenario` from a plain configuration mapping.

    The accepted keys and defaults mirror ``schema/scenario.schema.json``.
    Raises :class:`DomainError` naming the offending field on any problem.
    """
    if not isinstance(config, dict):
        raise DomainError("scenario config must be a JSON object")
    _check_keys(config, {"nu", "xi", "cost", "types", "noise", "players", "prizes"},
                "scenario")

    nu_cfg = dict(_require(config, "nu", "scenario"))
    _check_keys(nu_cfg, {"kind", "alpha"}, "nu")
    kind = _require(nu_cfg, "kind", "nu")
    alpha = nu_cfg.get("alpha", 0.5 if kind == "power" else None)
    nu = ProductionForm(kind, alpha)

    xi_cfg = dict(_require(config, "xi", "scenario"))
    _check_keys(xi_cfg, {"kind", "alpha"}, "xi")
    kind = _require(xi_cfg, "kind", "xi")
    alpha = xi_cfg.get("alpha", 0.5 if kind == "power" else None)
    xi = MechanizationForm(kind, alpha)

    cost_cfg = dict(_require(config, "cost", "scenario"))
    _check_keys(cost_cfg, {"kind", "kappa"}, "cost")
    kind = _require(cost_cfg, "kind", "cost")
    cost = CostForm(kind, float(cost_cfg.get("kappa", 1.0 if kind == "linear" else 0.5)))

    types_cfg = dict(_require(config, "types", "scenario"))
    _check_keys(types_cfg, {"kind", "support", "loc", "scale"}, "types")
    kind = _require(types_cfg, "kind", "types")
    support = _require(types_cfg, "support", "types")
    if (not isinstance(support, (list, tuple)) or len(support) != 2):
        raise DomainError("types.support must be a [lo, hi] pair")
    lo, hi = float(support[0]), float(support[1])
    if kind == "truncated-normal":
        loc = float(types_cfg.get("loc", 0.5 * (lo + hi)))
        scale = float(types_cfg.get("scale", 0.25 * (hi - lo)))
        types = TypeDistribution(kind, lo, hi, loc, scale)
    else:
        if "loc" in types_cfg or "scale" in types_cfg:
            raise DomainError("types: loc/scale only apply to truncated-normal")
        types = TypeDistribution(kind, lo, hi)

    noise_cfg = dict(config.get("noise", {"kind": "normal"}))
    _check_keys(noise_cfg, {"kind", "dispersion"}, "noise")
    noise = NoiseFamily(_require(noise_cfg, "kind", "noise"),
                        float(noise_cfg.get("dispersion", 1.0)))

    players = config.get("players", 2)
    if isinstance(players, bool) or not isinstance(players, int):
        raise DomainError("players must be an integer")

    prizes_cfg = config.get("prizes", [1.0])
    if not isinstance(prizes_cfg, (list, tuple)):
        raise DomainError("prizes must be a list of numbers")
    prizes = PrizeVector(tuple(float(v) for v in prizes_cfg))

    return Scenario(nu, xi, cost, types, noise, players, prizes)


def load_scenario(path: str | Path) -> Scenario:
    """Load and validate a scenario JSON file."""
    raw = Path(path).read_text()
    try:
        config = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise DomainError(
            f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    try:
        return scenario_from_dict(config)
    except DomainError as exc:
        raise DomainError(f"{path}: {exc}") from exc


# ---------------------------------------------------------------------------
# assumption validation


@dataclass(frozen=True)
class AssumptionCheck:
    check_id: str
    status: str  # "pass" | "warn" | "fail"
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of the structural assumption checks for one scenario.

    Substantive violations (supermodularity, the stochastic performance
    order) are failures; regularity conditions that canonical
    configurations deliberately relax (a linear mechanistic channel, say)
    only warn.  Nothing here raises: the solvers decide for themselves
    what they can handle.
    """

    scenario_id: str
    checks: tuple[AssumptionCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    @property
    def warnings(self) -> tuple[AssumptionCheck, ...]:
        return tuple(c for c in self.checks if c.status == "warn")

    @property
    def failures(self) -> tuple[AssumptionCheck, ...]:
        return tuple(c for c in self.checks if c.status == "fail")

    def summary(self) -> str:
        lines = [f"scenario {self.scenario_id}:"]
        for c in self.checks:
            lines.append(f"  [{c.status.upper():4s}] {c.check_id}: {c.detail}")
        return "\n".join(lines)

    def to_dict(self) -> dict[str, Any]:
        return {
            "scenario_id": self.scenario_id,
            "ok": self.ok,
            "checks": [
                {"id": c.check_id, "status": c.status, "detail": c.detail}
                for c in self.checks
            ],
        }


def validate_assumptions(scenario: Scenario, grid: int = 25) -> ValidationReport:
    """Check the structural assumptions on a sample grid.

    Four checks, one entry each: supermodularity of the creative
    technology, stochastic ordering of the noise family, the boundary
    condition (mechanistic marginal product at zero beats marginal cost),
    and the vanishing-marginal-product limit of the mechanistic channel.
    """
    lo, hi = scenario.support
    checks: list[AssumptionCheck] = []

    # supermodularity: marginal product of a strictly increasing in theta
    a_grid = np.linspace(0.05, 5.0, grid)
    th_lo = lo if hi > lo else lo - 0.5
    th_hi = hi if hi > lo else lo + 0.5
    thetas = np.linspace(th_lo, th_hi, grid)
    margins = scenario.nu.deriv_a(a_grid[None, :], thetas[:, None])
    grown = np.diff(margins, axis=0)
    if np.all(grown > 0):
        status, detail = "pass", (
            "marginal creative product strictly increasing in type "
            f"on a {grid}x{grid} (type, effort) grid"
        )
    else:
        status, detail = "fail", (
            "marginal creative product not strictly increasing in type "
            "somewhere on the sample grid"
        )
    checks.append(AssumptionCheck("supermodularity", status, detail))

    # stochastic ordering of performance in mean fitness
    mu_grid = np.linspace(0.0 if scenario.noise.kind == "exponential" else -1.0,
                          4.0, grid)
    s_lo = float(scenario.noise.ppf(1e-6, mu_grid[0]))
    s_hi = float(scenario.noise.ppf(1.0 - 1e-6, mu_grid[-1]))
    s_grid = np.linspace(s_lo, s_hi, 4 * grid)
    cdfs = scenario.noise.cdf(s_grid[None, :], mu_grid[:, None])
    violation = float(np.max(np.diff(cdfs, axis=0)))
    support_note = ("support is the whole real line"
                    if scenario.noise.kind in ("normal", "gumbel")
                    else "support is the non-negative half line")
    if violation <= 1e-12:
        checks.append(AssumptionCheck(
            "performance-order", "pass",
            f"CDFs pointwise non-increasing in mean fitness ({support_note})"))
    else:
        checks.append(AssumptionCheck(
            "performance-order", "fail",
            f"stochastic-order violation up to {violation:.2e} ({support_note})"))

    # boundary condition: xi'(0) > c'(0); endpoint creation margins noted
    xi0 = float(scenario.xi.deriv(0.0))
    c0 = float(scenario.cost.deriv(0.0))
    nu_lo = float(scenario.nu.deriv_a(0.0, max(lo, 0.0)))
    nu_hi = float(scenario.nu.deriv_a(0.0, hi))
    note = (f"xi'(0)={xi0:.4g}, c'(0)={c0:.4g}; creation margin at zero effort "
            f"runs from {nu_lo:.4g} (lowest type) to {nu_hi:.4g} (highest type) "
            f"on the truncated support [{lo:g}, {hi:g}]")
    if xi0 > c0:
        checks.append(AssumptionCheck("boundary", "pass", note))
    else:
        checks.append(AssumptionCheck(
            "boundary", "warn",
            f"mechanization unprofitable at the margin: {note}"))

    # vanishing mechanistic returns far out
    tail = float(scenario.xi.deriv(1e12))
    if tail < 1e-3:
        checks.append(AssumptionCheck(
            "mechanization-limit", "pass",
            f"xi'(b) -> 0 (xi'(1e12) = {tail:.2e})"))
    else:
        checks.append(AssumptionCheck(
            "mechanization-limit", "warn",
            f"xi' does not vanish: xi'(1e12) = {tail:.4g}; "
            "mechanistic effort stays profitable without bound"))

    return ValidationReport(scenario.scenario_id, tuple(checks))
