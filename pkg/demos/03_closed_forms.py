"""
Closed forms for (AB)^s B^(r-2) at rho = 0
==========================================

The rate is a finite sum; the engine agrees with it exactly.
"""

from fractions import Fraction

import numpy as np

from parrondo import (ab_block_pattern, binom_negbinom_identity_check, make_game_spec,
                      pattern_rate, theorem2_rate, z_mean, z_parity, z_pmf, z_samples)
from parrondo.closed_form import VARIANTS, block_sum

for r in [3, 5, 7]:
    spec = make_game_spec(r, 0)
    for s in range(1, 5):
        engine = pattern_rate(spec, ab_block_pattern(s, r)).rate
        print(r, s, theorem2_rate(r, s), engine == theorem2_rate(r, s))

# even modulus: parity of the starting capital matters
print("r=6 s=2 even:", theorem2_rate(6, 2, "even"), " odd:", theorem2_rate(6, 2, "odd"))
print("block sum r=8 s=3:", block_sum(8, 3))

# the stopped lattice-path variable Z_n
n, p = 6, Fraction(1, 2)
dist = z_pmf(n, p)
print({k: str(v) for k, v in dist.pmf.items()})
print("P(Z even) =", z_parity(n, p), " E[Z] =", z_mean(n, p))

# three constructions, one distribution
exact = np.array([float(dist.pmf[k]) for k in range(n + 1)])
for i, variant in enumerate(VARIANTS):
    draws = z_samples(n, p, variant, 100_000, seed=i)
    freq = np.bincount(draws, minlength=n + 1) / draws.size
    print(f"{variant:>16}: max |freq - pmf| = {np.abs(freq - exact).max():.4f}")

print(all(binom_negbinom_identity_check(s, s0) for s in range(2, 10) for s0 in range(1, s)))
