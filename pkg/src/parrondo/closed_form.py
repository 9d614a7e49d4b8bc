"""Closed-form rates for ``(AB)^s B^(r-2)`` at rho = 0, and the stopped
lattice-path distribution that governs the block profits of that pattern.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Literal

import numpy as np

from ._rng import make_rng
from .games import RationalLike, as_rational

Parity = Literal["even", "odd"]
VARIANTS = ("floor-boundary", "two-up", "one-up-then-one")


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def block_sum(r: int, s: int) -> Fraction:
    """``sum_k ceil(2k/r) C(s,k) / 2^s``, the mean block count for even ``r``."""
    return Fraction(sum(_ceil_div(2 * k, r) * comb(s, k) for k in range(s + 1)), 2**s)


def theorem2_rate(r: int, s: int, start_parity: Parity = "even") -> Fraction:
    """Rate of ``(AB)^s B^(r-2)`` at rho = 0.

    Odd ``r`` gives ``r/(2s+r-2) * (2^s-1)/(2^s+1)`` from any start. Even
    ``r`` gives ``r/(2s+r-2) * block_sum(r, s)`` from even capital and 0 from
    odd capital.
    """
    if r < 3:
        raise ValueError(f"r must be >= 3, got {r}")
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    if start_parity not in ("even", "odd"):
        raise ValueError(f"start_parity must be 'even' or 'odd', got {start_parity!r}")
    scale = Fraction(r, 2 * s + r - 2)
    if r % 2:
        return scale * Fraction(2**s - 1, 2**s + 1)
    if start_parity == "odd":
        return Fraction(0)
    return scale * block_sum(r, s)


@dataclass(frozen=True)
class ZDistribution:
    n: int
    p: Fraction
    pmf: dict[int, Fraction]

    @property
    def q(self) -> Fraction:
        return 1 - self.p

    def even_mass(self) -> Fraction:
        return sum((v for k, v in self.pmf.items() if k % 2 == 0), Fraction(0))

    def mean(self) -> Fraction:
        return sum((k * v for k, v in self.pmf.items()), Fraction(0))


def _check_np(n: int, p: RationalLike) -> Fraction:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    p = as_rational(p)
    if not 0 < p < 1:
        raise ValueError(f"p must lie strictly between 0 and 1, got {p}")
    return p


def z_pmf(n: int, p: RationalLike) -> ZDistribution:
    """Exact pmf of ``Z_n`` on ``0..n``."""
    p = _check_np(n, p)
    q = 1 - p
    pmf = {}
    if n % 2 == 0:
        m = n // 2
        for k in range(n + 1):
            h = k // 2
            pmf[k] = comb(m + h, k) * p**k * q ** (m - h)
    else:
        m = (n + 1) // 2
        for k in range(n + 1):
            h = _ceil_div(k, 2)
            pmf[k] = comb(m - 1 + h, k) * p**k * q ** (m - h)
    return ZDistribution(n, p, pmf)


def z_parity(n: int, p: RationalLike) -> Fraction:
    """``P(Z_n is even)``."""
    p = _check_np(n, p)
    q = 1 - p
    if n % 2 == 0:
        return (1 + q ** (n + 1)) / (1 + q)
    return (q + q ** (n + 1)) / (1 + q)


def z_mean(n: int, p: RationalLike) -> Fraction:
    """``E[Z_n] = n p/(2-p) + (1 - (-1)^n (1-p)^n) p(1-p)/(2-p)^2``."""
    p = _check_np(n, p)
    q = 1 - p
    return n * p / (2 - p) + (1 - (-1) ** n * q**n) * p * q / (2 - p) ** 2


def binom_negbinom_identity_check(s: int, s0: int) -> bool:
    """Check ``P(kth success by trial s) = P(at least k successes in s)`` at
    success probability 1/2 for every ``k`` in ``s0+1..s``.
    """
    if not 1 <= s0 < s:
        raise ValueError(f"need 1 <= s0 < s, got s0={s0}, s={s}")
    for k in range(s0 + 1, s + 1):
        lhs = sum((Fraction(comb(j, k - 1), 2 ** (j + 1)) for j in range(k - 1, s)), Fraction(0))
        rhs = sum((Fraction(comb(s, j), 2**s) for j in range(k, s + 1)), Fraction(0))
        if lhs != rhs:
            return False
    return True


def z_samples(n: int, p: RationalLike, variant: str, size: int, seed=None) -> np.ndarray:
    """Draw ``size`` values of ``Z_n`` from one of the lattice-path walks.

    ``floor-boundary``
        unit steps right (p) or up (q); stop on reaching or crossing
        ``y = (n - x)/2``.
    ``two-up``
        right (p) or two units up (q); stop on reaching or crossing ``x + y = n``.
    ``one-up-then-one``
        right (p) or one unit up (q) followed by a forced unit up; stop the
        moment ``x + y = n``, even between the two up moves.
    """
    p = float(_check_np(n, p))
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    rng = make_rng(seed)
    x = np.zeros(size, dtype=np.int64)
    y = np.zeros(size, dtype=np.int64)
    active = np.ones(size, dtype=bool)
    forced = np.zeros(size, dtype=bool)  # one-up-then-one: second up pending
    while active.any():
        u = rng.random(size)
        right = active & ~forced & (u < p)
        up = active & ~right
        x += right
        if variant == "floor-boundary":
            y += up
            done = x + 2 * y >= n
        elif variant == "two-up":
            y += 2 * up
            done = x + y >= n
        else:
            y += up
            forced = up & ~forced
            done = x + y >= n
        active &= ~done
        forced &= active
    return x


def z_sample_alternative(n: int, p: RationalLike, variant: str, seed=None) -> int:
    """One draw of ``Z_n``; see :func:`z_samples` for the variants."""
    return int(z_samples(n, p, variant, 1, seed)[0])
