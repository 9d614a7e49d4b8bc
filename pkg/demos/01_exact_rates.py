"""
Exact long-run profit per game
==============================

Two fair games, a periodic or random schedule, and a rational answer.
"""

from fractions import Fraction

from parrondo import make_game_spec, mixture_rate, parse_pattern, pattern_rate

# three-state capital modulus, rho = 1/3
spec = make_game_spec(3, Fraction(1, 3))
print("p0 =", spec.p0, " p1 =", spec.p1)

# game A alone and game B alone are fair
for text in ["A", "B"]:
    print(f"{text:>6}: {pattern_rate(spec, parse_pattern(text)).rate}")

# but alternating them is not
for text in ["AB", "ABB", "ABABB", "(AB)^2B"]:
    report = pattern_rate(spec, parse_pattern(text))
    print(f"{text:>6}: {str(report.rate):>20}  ~ {float(report.rate):.6f}")

# random mixture: play A with probability 1/2
mix = mixture_rate(spec, Fraction(1, 2))
print("gamma=1/2:", mix.rate)

# the rate as rho varies
for k in range(0, 11, 2):
    rho = Fraction(k, 10)
    print(f"rho={str(rho):>4}  ABB -> {float(pattern_rate(make_game_spec(3, rho), parse_pattern('ABB')).rate):+.6f}")
