"""Discrete sensitivity measurements and parameter sweeps.

Driving factors split into two groups.  Factors carrying a unit of
measure (q_star, p_star, price, l_n) get a discrete elasticity,

    eps_x = (dl*/l*) / (dx/x),

measured by re-solving the trade-off with the factor changed by a
relative step.  Dimensionless factors (nu, theta, pi_s, pi_c_star) live
on fixed scales, so they get a quasi-elasticity instead,

    qeps_x = (dl*/l*) / dx,

measured at an absolute new value.  A tornado table ranks factors by the
larger magnitude of their two one-sided measurements.  Sweeps re-solve
the scenario on a price grid; each grid point is an independent pure
solve, so evaluation order never changes the output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum

import numpy as np

from .errors import DomainError, UsageError, ValidationError
from .model import Scenario, demand_quantity, marginal_demand_factor
from .secure import secure_feasible_loss
from .solver import Regime, SolutionStatus, classify_regime, solve_tradeoff

__all__ = [
    "SensitivityKind",
    "SensitivityEntry",
    "SweepSeries",
    "DIMENSIONAL_FACTORS",
    "DIMENSIONLESS_FACTORS",
    "DEFAULT_TORNADO_PLAN",
    "discrete_elasticity",
    "discrete_quasi_elasticity",
    "tornado",
    "price_sweep",
    "revenue_sweep",
    "olr_sweep",
    "saturation_price",
    "default_price_grid",
]

DIMENSIONAL_FACTORS = ("q_star", "p_star", "price", "l_n")
DIMENSIONLESS_FACTORS = ("nu", "theta", "pi_s", "pi_c_star")

#: Factor, low perturbation, high perturbation.  Dimensional rows carry
#: relative steps; dimensionless rows carry absolute replacement values.
DEFAULT_TORNADO_PLAN = (
    ("q_star", -0.10, 0.10),
    ("p_star", -0.10, 0.10),
    ("price", -0.10, 0.10),
    ("l_n", -0.10, 0.10),
    ("nu", 0.1, 0.2),
    ("theta", 0.1, 0.2),
    ("pi_s", 5e-5, 2e-4),
    ("pi_c_star", 5e-5, 2e-4),
)


class SensitivityKind(str, Enum):
    ELASTICITY = "ELASTICITY"
    QUASI_ELASTICITY = "QUASI_ELASTICITY"


@dataclass(frozen=True)
class SensitivityEntry:
    """One one-sided sensitivity measurement.

    ``delta`` is the relative step for dimensional factors and the signed
    absolute change for dimensionless ones.  ``mixed_status`` flags that
    the perturbed solve landed in a different status than the base solve
    (for instance interior versus clamped), in which case the ratio mixes
    regimes and should be read with care.
    """

    factor: str
    delta: float
    value: float
    kind: SensitivityKind
    mixed_status: bool = False


@dataclass(frozen=True)
class SweepSeries:
    """Gridded solver output along one driving factor.

    ``saturation_price`` is the analytic threshold relevant to the sweep:
    the price below which the vulnerable-provider optimum sits at the cap
    for a price sweep, and the secure-side kink price for an OLR sweep.
    """

    factor: str
    grid: tuple
    l_opt: tuple
    revenue: tuple
    statuses: tuple
    olr: tuple | None = None
    saturation_price: float | None = None

    def __post_init__(self):
        n = len(self.grid)
        if any(self.grid[i] >= self.grid[i + 1] for i in range(n - 1)):
            raise ValidationError("grid", "must be strictly increasing")
        for name in ("l_opt", "revenue", "statuses", "olr"):
            series = getattr(self, name)
            if series is not None and len(series) != n:
                raise ValidationError(name, f"length {len(series)} != grid length {n}")


def _solve_base(s: Scenario):
    base = solve_tradeoff(s)
    if base.status is SolutionStatus.AT_ZERO:
        raise UsageError("sensitivity needs a base solution with a positive optimum")
    return base


def _perturbed(s: Scenario, factor: str, new_value: float) -> Scenario:
    try:
        s2 = replace(s, **{factor: new_value})
    except ValidationError as exc:
        raise DomainError(f"perturbation makes the scenario invalid: {exc}") from exc
    if s2.price >= s2.p_star:
        raise DomainError(
            f"perturbation pushes price ({s2.price}) to or above p_star ({s2.p_star})"
        )
    return s2


def discrete_elasticity(s: Scenario, factor: str, rel_delta: float) -> SensitivityEntry:
    """Relative response of the optimum to a relative change of a factor."""
    if factor not in DIMENSIONAL_FACTORS:
        raise DomainError(f"{factor!r} is not a dimensional factor {DIMENSIONAL_FACTORS}")
    if rel_delta == 0.0:
        raise DomainError("rel_delta must be nonzero")
    base = _solve_base(s)
    s2 = _perturbed(s, factor, getattr(s, factor) * (1.0 + rel_delta))
    sol2 = solve_tradeoff(s2)
    value = ((sol2.l_opt - base.l_opt) / base.l_opt) / rel_delta
    return SensitivityEntry(
        factor=factor,
        delta=rel_delta,
        value=value,
        kind=SensitivityKind.ELASTICITY,
        mixed_status=sol2.status is not base.status,
    )


def discrete_quasi_elasticity(s: Scenario, factor: str, new_value: float) -> SensitivityEntry:
    """Relative response of the optimum per absolute change of a factor."""
    if factor not in DIMENSIONLESS_FACTORS:
        raise DomainError(f"{factor!r} is not a dimensionless factor {DIMENSIONLESS_FACTORS}")
    delta = new_value - getattr(s, factor)
    if delta == 0.0:
        raise DomainError("new_value must differ from the current value")
    base = _solve_base(s)
    s2 = _perturbed(s, factor, new_value)
    sol2 = solve_tradeoff(s2)
    value = ((sol2.l_opt - base.l_opt) / base.l_opt) / delta
    return SensitivityEntry(
        factor=factor,
        delta=delta,
        value=value,
        kind=SensitivityKind.QUASI_ELASTICITY,
        mixed_status=sol2.status is not base.status,
    )


def tornado(s: Scenario, plan) -> list:
    """Two-sided sensitivity table sorted by descending bar size.

    Each plan row is ``(factor, low, high)``; dimensional factors take
    relative steps, dimensionless ones absolute values.  Returns a list
    of ``(minus_entry, plus_entry)`` pairs, largest
    ``max(|minus|, |plus|)`` first, so the biggest bar sits on top.
    """
    pairs = []
    for factor, low, high in plan:
        if factor in DIMENSIONAL_FACTORS:
            minus = discrete_elasticity(s, factor, low)
            plus = discrete_elasticity(s, factor, high)
        else:
            minus = discrete_quasi_elasticity(s, factor, low)
            plus = discrete_quasi_elasticity(s, factor, high)
        pairs.append((minus, plus))
    pairs.sort(key=lambda pair: max(abs(pair[0].value), abs(pair[1].value)), reverse=True)
    return pairs


def default_price_grid(s: Scenario, pmin: float = 0.0, pmax: float | None = None, points: int = 201) -> tuple:
    """Uniform price grid, by default 201 points on [0, 0.99 p_star]."""
    if pmax is None:
        pmax = 0.99 * s.p_star
    if points < 2:
        raise ValidationError("points", "need at least 2 grid points")
    if not 0 <= pmin < pmax:
        raise ValidationError("pmin", f"need 0 <= pmin < pmax, got [{pmin}, {pmax}]")
    if pmax >= s.p_star:
        raise ValidationError("pmax", f"must stay below p_star ({s.p_star})")
    return tuple(float(x) for x in np.linspace(pmin, pmax, points))


def _check_grid(s: Scenario, grid) -> tuple:
    grid = tuple(float(p) for p in grid)
    if any(grid[i] >= grid[i + 1] for i in range(len(grid) - 1)):
        raise ValidationError("grid", "must be strictly increasing")
    if grid and (grid[0] < 0 or grid[-1] >= s.p_star):
        raise ValidationError("grid", f"prices must lie in [0, {s.p_star})")
    return grid


def _revenue_at(s2: Scenario, l_opt: float) -> float:
    alpha = marginal_demand_factor(s2, l_opt)
    return s2.price * demand_quantity(s2, alpha, s2.price)


def price_sweep(s: Scenario, grid) -> SweepSeries:
    """Optimal loss and provider revenue across a price grid.

    For ``nu < 1`` the loss series is non-increasing in the price: a flat
    stretch at the cap below the saturation price, strictly falling above
    it.
    """
    grid = _check_grid(s, grid)
    l_opt, revenue, statuses = [], [], []
    for p in grid:
        s2 = replace(s, price=p)
        sol = solve_tradeoff(s2)
        l_opt.append(sol.l_opt)
        statuses.append(sol.status)
        revenue.append(_revenue_at(s2, sol.l_opt))
    sat = saturation_price(s) if classify_regime(s) is Regime.NU_LT_1 else None
    return SweepSeries(
        factor="price",
        grid=grid,
        l_opt=tuple(l_opt),
        revenue=tuple(revenue),
        statuses=tuple(statuses),
        saturation_price=sat,
    )


def revenue_sweep(s: Scenario, grid) -> tuple:
    """Price sweep plus the grid price maximising provider revenue."""
    series = price_sweep(s, grid)
    argmax_price = series.grid[int(np.argmax(series.revenue))]
    return series, argmax_price


def olr_sweep(s: Scenario, grid) -> SweepSeries:
    """Optimal Loss Ratio across a price grid.

    Requires a vulnerable provider (``pi_s > 0``), otherwise the ratio is
    identically 1.  The reported saturation price is the kink where the
    secure-side optimum leaves the cap; below both saturation points the
    ratio is exactly 1.  Grid points whose vulnerable optimum is 0 yield
    NaN.
    """
    if s.pi_s <= 0.0:
        raise UsageError("OLR sweep needs pi_s > 0; the ratio is identically 1 otherwise")
    grid = _check_grid(s, grid)
    l_opt, revenue, statuses, olr = [], [], [], []
    for p in grid:
        s2 = replace(s, price=p)
        sol = solve_tradeoff(s2)
        l_opt.append(sol.l_opt)
        statuses.append(sol.status)
        revenue.append(_revenue_at(s2, sol.l_opt))
        olr.append(secure_feasible_loss(s2) / sol.l_opt if sol.l_opt > 0 else math.nan)
    kink = None
    if classify_regime(s) is Regime.NU_LT_1:
        kink = saturation_price(replace(s, pi_s=0.0))
    return SweepSeries(
        factor="price",
        grid=grid,
        l_opt=tuple(l_opt),
        revenue=tuple(revenue),
        statuses=tuple(statuses),
        olr=tuple(olr),
        saturation_price=kink,
    )


def saturation_price(s: Scenario) -> float:
    """Largest price at which the optimum still sits at the cap ``l_n``.

    Derived from the gradient at ``l_n`` being nonnegative::

        p_sat = p* (1 - sqrt([pi_s + (1-pi_s) pi_c* (1+theta)] * 2 l_n
                             / (alpha_n q* p* nu)))

    clamped to ``[0, p*]``.  Only meaningful in the monotone ``nu < 1``
    regime.
    """
    if classify_regime(s) is not Regime.NU_LT_1:
        raise UsageError("saturation price applies to the nu < 1 regime only")
    risk = s.pi_s + (1.0 - s.pi_s) * s.pi_c_star * (1.0 + s.theta)
    ratio = risk * 2.0 * s.l_n / (s.alpha_n * s.q_star * s.p_star * s.nu)
    p_sat = s.p_star * (1.0 - math.sqrt(ratio))
    return float(min(max(p_sat, 0.0), s.p_star))
