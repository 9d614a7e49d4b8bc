"""Independent brute-force references used by the test suite.

None of these import the formulas they are used to check.
"""
from __future__ import annotations

from fractions import Fraction


def lattice_path_pmf(n: int, p: Fraction) -> dict[int, Fraction]:
    """Distribution of the stopping x-coordinate, by enumerating every path.

    Unit steps right (p) or up (1-p) from the origin; stop on the first visit
    to the staircase boundary: ``y = m - floor(x/2)`` for ``n = 2m`` and
    ``y = m - ceil(x/2)`` for ``n = 2m - 1``.
    """
    q = 1 - p
    if n % 2 == 0:
        m = n // 2

        def boundary(x):
            return m - x // 2
    else:
        m = (n + 1) // 2

        def boundary(x):
            return m - (x + 1) // 2

    pmf: dict[int, Fraction] = {k: Fraction(0) for k in range(n + 1)}
    stack = [(0, 0, Fraction(1))]
    while stack:
        x, y, w = stack.pop()
        if y >= boundary(x):
            pmf[x] += w
            continue
        stack.append((x + 1, y, w * p))
        stack.append((x, y + 1, w * q))
    return pmf


def matrix_power_dense(P: list[list[Fraction]], k: int) -> list[list[Fraction]]:
    n = len(P)
    R = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(k):
        R = [[sum(R[i][l] * P[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
    return R


def mean_profit_by_enumeration(r: int, up_probs: list[list[Fraction]], start: int) -> Fraction:
    """Exact expected profit of one pass through a schedule, by enumerating
    every win/loss sequence. ``up_probs[k][x]`` is the win probability of
    step ``k`` from state ``x``.
    """
    total = Fraction(0)
    stack = [(0, start, Fraction(1), 0)]
    while stack:
        k, x, w, s = stack.pop()
        if k == len(up_probs):
            total += w * s
            continue
        u = up_probs[k][x]
        if u:
            stack.append((k + 1, (x + 1) % r, w * u, s + 1))
        if u != 1:
            stack.append((k + 1, (x - 1) % r, w * (1 - u), s - 1))
    return total
