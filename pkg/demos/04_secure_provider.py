"""How much more a customer risks when the provider cannot be breached.

With a breach-proof provider the decision equation has a closed-form
solution, which also yields analytic elasticities.  The Optimal Loss
Ratio (secure optimum over vulnerable optimum) shows the extra exposure
perfect provider security unlocks; it kinks where the secure optimum
leaves the cap and grows with the price.
"""

import dataclasses
from pathlib import Path

import numpy as np

from privopt import (
    default_price_grid,
    olr_sweep,
    secure_elasticities,
    secure_optimal_loss,
    secure_quasi_elasticities,
    solve_tradeoff,
)
from privopt.cli import load_scenario

SCENARIOS = Path(__file__).resolve().parent.parent / "scenarios"
s = load_scenario(str(SCENARIOS / "table2.json")).scenario

raw, clamped = secure_optimal_loss(s)
vulnerable = solve_tradeoff(s).l_opt
print(f"secure-provider optimum: {clamped:.1f}   vulnerable-provider optimum: {vulnerable:.1f}")
print(f"optimal loss ratio at p = {s.price}: {clamped / vulnerable:.3f} "
      "(perfect security roughly doubles the accepted exposure here)\n")

series = olr_sweep(s, default_price_grid(s, points=25))
print("price    OLR      (secure-side kink at "
      f"p = {series.saturation_price:.3f})")
for p, v in zip(series.grid, series.olr):
    print(f"{p:5.3f}  {v:7.3f}  {'#' * int(round(v * 10))}")

# Closed-form sensitivities of the secure optimum.  Everything depends on
# the exponents only through theta - nu.
el = secure_elasticities(s)
qe = secure_quasi_elasticities(s)
print("\nelasticities at the reference point:")
print(f"  max quantity     {el.eps_q_star:+.3f}")
print(f"  willingness      {el.eps_p_star:+.3f}")
print(f"  loss cap         {el.eps_l_n:+.3f}")
print(f"  price            {el.eps_price:+.3f}")
print("quasi-elasticities:")
print(f"  privacy exponent  {qe.qeps_nu:+.3f}")
print(f"  security exponent {qe.qeps_theta:+.3f}")
print(f"  breach ceiling    {qe.qeps_pi_c_star:+.1f}")

print("\nelasticity of the optimum vs the exponent gap (price fixed at 0.5):")
for gap in np.linspace(-0.5, 0.8, 6):
    nu = 0.138647
    theta = nu + gap
    if not 0 < theta < 1:
        continue
    el = secure_elasticities(dataclasses.replace(s, nu=nu, theta=theta))
    print(f"  theta - nu = {gap:+.2f}:  eps_q* = {el.eps_q_star:.3f}  "
          f"eps_p* = {el.eps_p_star:.3f}  eps_p = {el.eps_price:.3f}")
