"""
Best block lengths and best mixing probabilities
================================================
"""

from fractions import Fraction

from parrondo import best_gamma, best_s, rho_sweep, sup_demo
from parrondo.games import parse_pattern

rs = [3, 5, 7, 9, 25, 125, 625, 3125]

print(" r    s   rate")
for r in rs:
    s, rate = best_s(r)
    print(f"{r:>4} {s:>3}  {float(rate):.6f}")

print("\n r    gamma       rate")
for r in rs:
    opt = best_gamma(r)
    print(f"{r:>4}  {opt.gamma:.7f}  {opt.rate:.6f}  unimodal={opt.unimodal}")

# rates creep toward 1 as r grows
print([round(float(row.rate), 6) for row in sup_demo(rs)])

# ABBB with r = 3 does best away from rho = 0
for row in rho_sweep(3, parse_pattern("ABBB"), [Fraction(k, 10) for k in range(6)]):
    print(row.params["rho"], round(float(row.rate), 6))
