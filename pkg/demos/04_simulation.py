"""
Seeded Monte Carlo against the exact rate
=========================================
"""

from fractions import Fraction

import numpy as np

from parrondo import make_game_spec, parse_pattern, pattern_rate
from parrondo.simulator import SimConfig, block_profiles, simulate

spec = make_game_spec(3, Fraction(1, 3))
pattern = parse_pattern("ABB")
exact = pattern_rate(spec, pattern).rate

res = simulate(SimConfig(spec, pattern, steps=10**6, seed=42, trace_every=100_000))
print("exact    ", float(exact))
print("empirical", res.mean_profit_per_game)
for step, capital in res.trace:
    print(f"{step:>8} {capital:>8} {capital / max(step, 1):+.4f}")

# same seed, same path
again = simulate(SimConfig(spec, pattern, steps=10**6, seed=42))
print("reproducible:", again.profit == res.profit)

# random mixture, gamma = 1/2
mix = simulate(SimConfig(spec, Fraction(1, 2), steps=10**6, seed=1))
print("mixture empirical", mix.mean_profit_per_game, "vs", 18 / 709)

# rho = 0: each (AB)^2 B block from capital 0 (mod 3) wins 3 or loses 1
profits = block_profiles(make_game_spec(3, 0), 2, 0, 100_000, seed=5)
values, counts = np.unique(profits, return_counts=True)
print(dict(zip(values.tolist(), (counts / counts.sum()).round(4).tolist())))
