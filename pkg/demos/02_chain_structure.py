"""
Recurrent classes, periods and absorption
=========================================
"""

from fractions import Fraction

from parrondo import make_game_spec, parse_pattern
from parrondo.chain import absorption_probability, classify, stationary
from parrondo.rates import pattern_rate, pattern_steps, product_matrix

spec = make_game_spec(3, Fraction(1, 3))
P = product_matrix(pattern_steps(spec, parse_pattern("ABB")))
print(P.dense())

c = classify(P)
print(c.case_label, c.recurrent_classes, c.periods)
print("stationary:", list(stationary(P).weights))

# rho = 0 with an even modulus: two closed classes and transients
spec4 = make_game_spec(4, 0)
Q = product_matrix(pattern_steps(spec4, parse_pattern("ABB")))
c4 = classify(Q)
print(c4.case_label, c4.recurrent_classes, "transient:", sorted(c4.transient_states))

# game B alone at rho = 0 never leaves the top states
B = product_matrix(pattern_steps(spec4, parse_pattern("B")))
print(classify(B))

# when two classes exist, the rate depends on where we start
report = pattern_rate(spec4, parse_pattern("ABBB"))
for start, rate in sorted(report.rate_for_start.items()):
    print("start", start, "->", rate)

# a two-class case: probability of ending in the class holding state 0
cls = classify(product_matrix(pattern_steps(spec4, parse_pattern("(AB)^1B^2"))))
if len(cls.recurrent_classes) == 2:
    target = cls.recurrent_classes[0]
    P2 = product_matrix(pattern_steps(spec4, parse_pattern("(AB)^1B^2")))
    for s in sorted(cls.transient_states):
        print("absorb from", s, "=", absorption_probability(P2, target, s))
