"""Demand curve, disclosure power law, net surplus and its gradient.

The customer faces a linear demand curve ``q/q* + p/p* = 1``.  Releasing
personal data expands the curve by a factor ``(1 + alpha)``, where the
marginal demand factor earned by accepting a potential loss ``l`` follows
the power law ``alpha(l) = alpha_n * (l / l_n)**nu``.  The net surplus is
the consumption surplus on the expanded curve minus the expected breach
loss; its maximiser over ``[0, l_n]`` is the customer's optimal exposure.

All operations are pure functions of immutable values and accept scalars
or numpy arrays where a loss or price argument is marked array-compatible.
Power-law terms are evaluated in log domain, with the zero base handled
separately, so extreme exponents neither underflow nor overflow.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ValidationError

__all__ = [
    "Scenario",
    "DemandPoint",
    "ConsumptionRegion",
    "marginal_demand_factor",
    "demand_quantity",
    "provider_revenue",
    "valid_demand_region",
    "price_taker_demand",
    "pareto_privacy_parameter",
    "net_surplus",
    "surplus_gradient",
]

#: Tolerance used before taking the square root of the region discriminant.
DISCRIMINANT_TOL = 1e-12


def _pow_frac(base, exponent: float):
    """Power ``base**exponent`` in log domain for nonnegative ``base``.

    ``base == 0`` maps to 0 for a positive exponent and to ``inf`` for a
    negative one, the continuity limits.  Accepts scalars or arrays and
    always routes through numpy so scalar and vectorised callers agree
    bit for bit.
    """
    arr = np.asarray(base, dtype=np.float64)
    if exponent == 0.0:
        out = np.ones_like(arr)
    else:
        with np.errstate(divide="ignore"):
            out = np.exp(exponent * np.log(arr))
    return out if arr.ndim else float(out)


@dataclass(frozen=True)
class Scenario:
    """All nine model parameters for one customer/provider pair.

    Attributes:
        q_star: maximum base quantity of service (service units, > 0).
        p_star: willingness-to-pay per service unit (money, > 0).
        price: posted unit price (money, >= 0).  A price at or above
            ``p_star`` is legal input; demand is then zero.
        nu: privacy parameter, exponent of the benefit/loss power law (> 0).
        theta: security parameter, exponent of the customer-side breach
            power law, strictly inside (0, 1).
        alpha_n: maximum marginal demand factor (> 0).
        l_n: maximum potential loss (money, > 0).
        pi_s: provider-side breach probability, in [0, 1).
        pi_c_star: customer-side breach probability at maximum release,
            in (0, 1).
    """

    q_star: float
    p_star: float
    price: float
    nu: float
    theta: float
    alpha_n: float
    l_n: float
    pi_s: float
    pi_c_star: float

    def __post_init__(self):
        checks = [
            ("q_star", self.q_star > 0, "must be > 0"),
            ("p_star", self.p_star > 0, "must be > 0"),
            ("price", self.price >= 0, "must be >= 0"),
            ("nu", self.nu > 0, "must be > 0"),
            ("theta", 0 < self.theta < 1, "must lie strictly inside (0, 1)"),
            ("alpha_n", self.alpha_n > 0, "must be > 0"),
            ("l_n", self.l_n > 0, "must be > 0"),
            ("pi_s", 0 <= self.pi_s < 1, "must lie in [0, 1)"),
            ("pi_c_star", 0 < self.pi_c_star < 1, "must lie strictly inside (0, 1)"),
        ]
        for field, ok, msg in checks:
            value = getattr(self, field)
            if not np.isfinite(value):
                raise ValidationError(field, "must be finite")
            if not ok:
                raise ValidationError(field, f"{msg} (got {value!r})")

    def margin(self) -> float:
        """Relative price margin ``1 - price/p_star`` clamped at 0."""
        return max(0.0, 1.0 - self.price / self.p_star)


@dataclass(frozen=True)
class DemandPoint:
    """A working point (quantity, price) on or below a demand line."""

    quantity: float
    price: float

    def __post_init__(self):
        if self.quantity < 0:
            raise ValidationError("quantity", "must be >= 0")
        if self.price < 0:
            raise ValidationError("price", "must be >= 0")

    def reachable(self, s: "Scenario", alpha: float, tol: float = 1e-12) -> bool:
        """True when the point lies on or below the curve expanded by alpha."""
        return self.quantity <= demand_quantity(s, alpha, self.price) * (1.0 + tol)


@dataclass(frozen=True)
class ConsumptionRegion:
    """Quantity band where a data release benefits both parties.

    ``lower`` is the larger of the customer's surplus bound and the
    provider's lower revenue bound; ``upper`` is the provider's upper
    revenue bound.  An empty region is representable (``lower > upper``,
    or NaN bounds when the discriminant is negative).
    """

    lower: float
    upper: float
    customer_ok_lower: float
    provider_lower: float
    provider_upper: float

    @property
    def is_empty(self) -> bool:
        return not (self.lower <= self.upper)

    def contains(self, q2: float) -> bool:
        return (not self.is_empty) and self.lower < q2 < self.upper


def marginal_demand_factor(s: Scenario, l):
    """Marginal demand factor ``alpha_n * (l / l_n)**nu`` earned at loss ``l``.

    Defined as 0 at ``l == 0`` by continuity.  Array-compatible in ``l``.
    """
    arr = np.asarray(l, dtype=np.float64)
    if np.any(arr < 0) or np.any(arr > s.l_n):
        raise DomainError(f"loss must lie in [0, {s.l_n}]")
    out = s.alpha_n * _pow_frac(arr / s.l_n, s.nu)
    return out if arr.ndim else float(out)


def demand_quantity(s: Scenario, alpha: float, p):
    """Quantity demanded at price ``p`` on the curve expanded by ``alpha``.

    ``q = q_star * (1 + alpha) * (1 - p/p_star)``, clamped at 0 for
    ``p >= p_star``.  Array-compatible in ``p``.
    """
    if alpha < 0:
        raise DomainError("alpha must be >= 0")
    arr = np.asarray(p, dtype=np.float64)
    if np.any(arr < 0):
        raise DomainError("price must be >= 0")
    q = s.q_star * (1.0 + alpha) * np.maximum(0.0, 1.0 - arr / s.p_star)
    return q if arr.ndim else float(q)


def provider_revenue(s: Scenario, q2: float, alpha: float) -> float:
    """Provider revenue ``p * q2`` on the expanded curve at quantity ``q2``.

    The unit price implied by the curve is ``p_star * (1 - q2/((1+alpha)q_star))``.
    With ``alpha == 0`` this is the revenue on the base curve.
    """
    if alpha < 0:
        raise DomainError("alpha must be >= 0")
    q_max = s.q_star * (1.0 + alpha)
    if not 0 <= q2 <= q_max:
        raise DomainError(f"q2 must lie in [0, {q_max}]")
    return float(s.p_star * (1.0 - q2 / q_max) * q2)


def valid_demand_region(s: Scenario, q1: float, alpha: float) -> ConsumptionRegion:
    """Band of post-release quantities that benefit customer and provider.

    The customer's surplus grows iff ``q2 > q1*sqrt(1+alpha)``; the
    provider's revenue grows iff ``q2`` lies between the two roots of
    ``q2**2 - (1+alpha)*q_star*q2 + (1+alpha)*(q_star-q1)*q1 < 0``.
    The returned region intersects the two constraints.
    """
    if not 0 < q1 < s.q_star:
        raise DomainError(f"q1 must lie strictly inside (0, {s.q_star})")
    if alpha <= 0:
        raise DomainError("alpha must be > 0")
    customer = q1 * np.sqrt(1.0 + alpha)
    x = q1 / s.q_star
    disc = 1.0 - 4.0 * x * (1.0 - x) / (1.0 + alpha)
    if disc < -DISCRIMINANT_TOL:
        nan = float("nan")
        return ConsumptionRegion(nan, nan, float(customer), nan, nan)
    root = np.sqrt(max(0.0, disc))
    half = (1.0 + alpha) * s.q_star / 2.0
    provider_lower = half * (1.0 - root)
    provider_upper = half * (1.0 + root)
    lower = max(customer, provider_lower)
    return ConsumptionRegion(
        float(lower),
        float(provider_upper),
        float(customer),
        float(provider_lower),
        float(provider_upper),
    )


def price_taker_demand(q1: float, alpha: float) -> float:
    """Demand ``q1 * (1 + alpha)`` of a customer keeping the posted price."""
    if q1 < 0:
        raise DomainError("q1 must be >= 0")
    if alpha < 0:
        raise DomainError("alpha must be >= 0")
    return float(q1 * (1.0 + alpha))


def pareto_privacy_parameter(benefit_fraction: float, loss_fraction: float) -> float:
    """Exponent ``nu`` linking a benefit fraction to a loss fraction.

    Solves ``benefit_fraction = loss_fraction**nu`` for ``nu``, i.e.
    ``ln(benefit) / ln(loss)``.  An 80/20 split gives nu of about 0.1386.
    """
    for name, value in (("benefit_fraction", benefit_fraction), ("loss_fraction", loss_fraction)):
        if not 0.0 < value < 1.0:
            raise DomainError(f"{name} must lie strictly inside (0, 1), got {value!r}")
    return float(np.log(benefit_fraction) / np.log(loss_fraction))


def net_surplus(s: Scenario, l):
    """Net surplus at potential loss ``l``.

    Consumption surplus on the expanded demand curve minus the expected
    breach loss::

        (p*q*/2) [1 + alpha_n (l/l_n)^nu] margin^2
            - [pi_s + pi_c* (1 - pi_s) (l/l_n)^theta] l

    where ``margin = max(0, 1 - price/p_star)``.  At ``l == 0`` this is
    exactly ``(p*q*/2) * margin**2``.  Array-compatible in ``l``.
    """
    arr = np.asarray(l, dtype=np.float64)
    if np.any(arr < 0) or np.any(arr > s.l_n):
        raise DomainError(f"loss must lie in [0, {s.l_n}]")
    ratio = arr / s.l_n
    consumption = (
        0.5 * s.p_star * s.q_star
        * (1.0 + s.alpha_n * _pow_frac(ratio, s.nu))
        * s.margin() ** 2
    )
    expected_loss = (s.pi_s + s.pi_c_star * (1.0 - s.pi_s) * _pow_frac(ratio, s.theta)) * arr
    out = consumption - expected_loss
    return out if arr.ndim else float(out)


def surplus_gradient(s: Scenario, l):
    """Analytic derivative of the net surplus with respect to the loss.

    ::

        (q* p* nu / 2)(alpha_n / l_n) margin^2 (l/l_n)^(nu-1)
            - pi_s - pi_c* (1 - pi_s)(theta + 1)(l/l_n)^theta

    Diverges to +inf as ``l -> 0+`` when ``nu < 1``, hence the strictly
    positive domain.  Values above ``l_n`` are allowed; they describe the
    unconstrained surplus used when bracketing roots.  Array-compatible.
    """
    arr = np.asarray(l, dtype=np.float64)
    if np.any(arr <= 0):
        raise DomainError("loss must be > 0 (gradient may diverge at 0)")
    ratio = arr / s.l_n
    benefit = (
        0.5 * s.q_star * s.p_star * s.nu
        * (s.alpha_n / s.l_n)
        * s.margin() ** 2
        * _pow_frac(ratio, s.nu - 1.0)
    )
    risk = s.pi_s + s.pi_c_star * (1.0 - s.pi_s) * (s.theta + 1.0) * _pow_frac(ratio, s.theta)
    out = benefit - risk
    return out if arr.ndim else float(out)
