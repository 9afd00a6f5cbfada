"""Optimal personal-data disclosure under data-breach risk.

A customer who releases personal data gets better service terms (the
demand curve expands) but risks losing money if the data leaks.  This
package models that trade-off, solves for the surplus-maximising
exposure, and analyses how the optimum responds to prices, parameters
and provider security.
"""

__version__ = "0.1.0"

from .breach import (
    BreachProfile,
    combined_breach_probability,
    customer_breach_probability,
)
from .errors import (
    ClosedFormInapplicableError,
    DegenerateScenarioError,
    DomainError,
    NumericError,
    PrivoptError,
    UsageError,
    ValidationError,
)
from .model import (
    ConsumptionRegion,
    DemandPoint,
    Scenario,
    demand_quantity,
    marginal_demand_factor,
    net_surplus,
    pareto_privacy_parameter,
    price_taker_demand,
    provider_revenue,
    surplus_gradient,
    valid_demand_region,
)
from .secure import (
    SecureElasticities,
    SecureQuasiElasticities,
    optimal_loss_ratio,
    secure_elasticities,
    secure_feasible_loss,
    secure_optimal_loss,
    secure_quasi_elasticities,
)
from .sensitivity import (
    DEFAULT_TORNADO_PLAN,
    DIMENSIONAL_FACTORS,
    DIMENSIONLESS_FACTORS,
    SensitivityEntry,
    SensitivityKind,
    SweepSeries,
    default_price_grid,
    discrete_elasticity,
    discrete_quasi_elasticity,
    olr_sweep,
    price_sweep,
    revenue_sweep,
    saturation_price,
    tornado,
)
from .solver import (
    DecisionCoefficients,
    FeasibilityCondition,
    FeasibilityReport,
    Regime,
    SolutionStatus,
    TradeoffSolution,
    classify_regime,
    construct_bracket,
    decision_coefficients,
    feasibility_report,
    normalized_gradient,
    oracle_grid_argmax,
    solve_discrete,
    solve_tradeoff,
)

__all__ = [
    "__version__",
    "BreachProfile",
    "ClosedFormInapplicableError",
    "ConsumptionRegion",
    "DEFAULT_TORNADO_PLAN",
    "DIMENSIONAL_FACTORS",
    "DIMENSIONLESS_FACTORS",
    "DecisionCoefficients",
    "DegenerateScenarioError",
    "DemandPoint",
    "DomainError",
    "FeasibilityCondition",
    "FeasibilityReport",
    "NumericError",
    "PrivoptError",
    "Regime",
    "Scenario",
    "SecureElasticities",
    "SecureQuasiElasticities",
    "SensitivityEntry",
    "SensitivityKind",
    "SolutionStatus",
    "SweepSeries",
    "TradeoffSolution",
    "UsageError",
    "ValidationError",
    "classify_regime",
    "combined_breach_probability",
    "construct_bracket",
    "customer_breach_probability",
    "decision_coefficients",
    "default_price_grid",
    "demand_quantity",
    "discrete_elasticity",
    "discrete_quasi_elasticity",
    "feasibility_report",
    "marginal_demand_factor",
    "net_surplus",
    "normalized_gradient",
    "olr_sweep",
    "optimal_loss_ratio",
    "oracle_grid_argmax",
    "pareto_privacy_parameter",
    "price_sweep",
    "price_taker_demand",
    "provider_revenue",
    "revenue_sweep",
    "saturation_price",
    "secure_elasticities",
    "secure_feasible_loss",
    "secure_optimal_loss",
    "secure_quasi_elasticities",
    "solve_discrete",
    "solve_tradeoff",
    "surplus_gradient",
    "tornado",
    "valid_demand_region",
]
