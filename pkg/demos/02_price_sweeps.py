"""What the service price does to disclosure and to provider revenue.

Sweeps the unit price across the case-study scenario.  Below the
saturation price the customer tolerates the maximum loss (the cap); above
it the optimal exposure falls.  Provider revenue peaks at a price a bit
above the saturation point, so the provider faces its own trade-off
between cash revenue and harvesting personal data.
"""

from pathlib import Path

from privopt import default_price_grid, price_sweep, revenue_sweep, saturation_price
from privopt.cli import load_scenario

SCENARIOS = Path(__file__).resolve().parent.parent / "scenarios"

s = load_scenario(str(SCENARIOS / "table1.json")).scenario

p_sat = saturation_price(s)
print(f"saturation price: {p_sat:.4f}  (below it the cap l_n = {s.l_n:.0f} binds)\n")

grid = default_price_grid(s, points=23)
series = price_sweep(s, grid)

print("price    l*        revenue   status")
for p, l, r, st in zip(series.grid, series.l_opt, series.revenue, series.statuses):
    print(f"{p:5.3f}  {l:9.1f}  {r:8.2f}  {st.value}")

series, best_price = revenue_sweep(s, default_price_grid(s))
print(f"\nrevenue-maximising price: {best_price:.3f} "
      f"(saturation price {series.saturation_price:.3f})")
print("pricing between the two lets the provider balance revenue against data gathering")

# The cap only shapes the flat stretch; the falling branch ignores it.
low_cap = load_scenario(str(SCENARIOS / "table1.json")).scenario
print("\nwith l_n = 5000 instead:")
import dataclasses

small = dataclasses.replace(low_cap, l_n=5000.0)
for p in (0.2, 0.5, 0.6, 0.8):
    a = price_sweep(small, (p,)).l_opt[0]
    b = price_sweep(low_cap, (p,)).l_opt[0]
    print(f"  p = {p:.1f}:  l*(cap 5000) = {a:7.1f}   l*(cap 10000) = {b:7.1f}")
