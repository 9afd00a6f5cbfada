"""Data-breach probability model.

A breach happens when either side of the customer/provider pair fails,
so the two independent probabilities compose like a two-component series
system.  The customer-side probability grows with the amount of personal
information released, proxied by the potential loss through a power law.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ValidationError
from .model import Scenario, _pow_frac

__all__ = ["BreachProfile", "customer_breach_probability", "combined_breach_probability"]


@dataclass(frozen=True)
class BreachProfile:
    """Vulnerability parameters of one customer/provider pair."""

    pi_s: float
    pi_c_star: float
    theta: float
    l_n: float

    def __post_init__(self):
        if not 0 <= self.pi_s < 1:
            raise ValidationError("pi_s", f"must lie in [0, 1) (got {self.pi_s!r})")
        if not 0 < self.pi_c_star < 1:
            raise ValidationError("pi_c_star", f"must lie strictly inside (0, 1) (got {self.pi_c_star!r})")
        if not 0 < self.theta < 1:
            raise ValidationError("theta", f"must lie strictly inside (0, 1) (got {self.theta!r})")
        if not self.l_n > 0:
            raise ValidationError("l_n", f"must be > 0 (got {self.l_n!r})")

    @classmethod
    def from_scenario(cls, s: Scenario) -> "BreachProfile":
        return cls(pi_s=s.pi_s, pi_c_star=s.pi_c_star, theta=s.theta, l_n=s.l_n)


def customer_breach_probability(bp: BreachProfile, l):
    """Customer-side breach probability ``pi_c* * (l / l_n)**theta``.

    Nondecreasing in ``l``; equals ``pi_c*`` at maximum release and 0 when
    nothing is disclosed.  Array-compatible in ``l``.
    """
    arr = np.asarray(l, dtype=np.float64)
    if np.any(arr < 0) or np.any(arr > bp.l_n):
        raise DomainError(f"loss must lie in [0, {bp.l_n}]")
    out = bp.pi_c_star * _pow_frac(arr / bp.l_n, bp.theta)
    return out if arr.ndim else float(out)


def combined_breach_probability(pi_s: float, pi_c: float) -> float:
    """Series-system breach probability of two independent failure modes.

    Evaluated as ``1 - (1 - pi_s)(1 - pi_c)``, identical to
    ``pi_s + pi_c - pi_s*pi_c`` but immune to cancellation near 1.
    """
    for name, value in (("pi_s", pi_s), ("pi_c", pi_c)):
        if not 0 <= value <= 1:
            raise DomainError(f"{name} must lie in [0, 1], got {value!r}")
    return float(1.0 - (1.0 - pi_s) * (1.0 - pi_c))
