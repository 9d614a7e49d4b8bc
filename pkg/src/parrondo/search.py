"""Parameter searches and sweeps over the pattern and mixture families."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, NamedTuple, Sequence

import numpy as np
from scipy import optimize, sparse
from scipy.sparse.linalg import spsolve

from .closed_form import theorem2_rate
from .games import GameSpec, Pattern, RationalLike, as_rational, make_game_spec
from .rates import pattern_rate


class SearchTruncatedError(ValueError):
    """The maximum sits on the edge of the searched range."""


@dataclass(frozen=True)
class SweepRow:
    params: dict = field(default_factory=dict)
    rate: Fraction | float | None = None
    exact: bool = True

    @property
    def float_rate(self) -> float | None:
        return None if self.rate is None else float(self.rate)


def default_s_max(r: int) -> int:
    return 2 * math.ceil(math.log2(r)) + 8


def best_s(r: int, s_max: int | None = None) -> tuple[int, Fraction]:
    """Best ``s`` for ``(AB)^s B^(r-2)`` at rho = 0 and odd ``r``.

    Ties go to the smallest ``s``. Raises :class:`SearchTruncatedError` when
    the best value is at ``s_max`` itself.
    """
    if r < 3 or r % 2 == 0:
        raise ValueError(f"r must be odd and >= 3, got {r}")
    if s_max is None:
        s_max = default_s_max(r)
    if s_max < 1:
        raise ValueError("s_max must be >= 1")
    best = (1, theorem2_rate(r, 1))
    for s in range(2, s_max + 1):
        rate = theorem2_rate(r, s)
        if rate > best[1]:
            best = (s, rate)
    if best[0] == s_max:
        raise SearchTruncatedError(f"maximum attained at s_max={s_max}; increase s_max")
    return best


class GammaOptimum(NamedTuple):
    gamma: float
    rate: float
    unimodal: bool


@lru_cache(maxsize=32)
def _mixture_parts(r: int, p0: float, p1: float):
    # walk structure: column index and head probability of each state's up/down moves
    states = np.arange(r)
    up = (states + 1) % r
    down = (states - 1) % r
    heads_b = np.full(r, p1)
    heads_b[0] = p0
    return states, up, down, heads_b


def mixture_rate_float(spec: GameSpec, gamma: float) -> float:
    """Double-precision mixture rate for odd ``r`` and ``0 < gamma < 1``.

    In that range the mixture chain is irreducible and aperiodic, so the
    stationary law is unique and the rate is ``pi . h`` with ``h`` the
    expected one-step profit. Used inside optimizers; the exact engine is
    :func:`parrondo.rates.mixture_rate`.
    """
    r = spec.r
    if r % 2 == 0 or not 0 < gamma < 1:
        raise ValueError("float mixture path needs odd r and 0 < gamma < 1")
    states, up, down, heads_b = _mixture_parts(r, float(spec.p0), float(spec.p1))
    heads = 0.5 * gamma + (1 - gamma) * heads_b
    # pi (P - I) = 0 transposed, with the equation for state 0 swapped for
    # pi_0 = 1; a full normalization row would make the LU fill in
    rows = np.concatenate([up, down, states])
    cols = np.concatenate([states, states, states])
    vals = np.concatenate([heads, 1 - heads, -np.ones(r)])
    keep = rows != 0
    rows = np.concatenate([rows[keep], [0]])
    cols = np.concatenate([cols[keep], [0]])
    vals = np.concatenate([vals[keep], [1.0]])
    A = sparse.csc_matrix((vals, (rows, cols)), shape=(r, r))
    b = np.zeros(r)
    b[0] = 1.0
    pi = spsolve(A, b)
    pi /= pi.sum()
    h = 2 * heads - 1
    return float(pi @ h)


def best_gamma(r: int, rho: RationalLike = 0, tolerance: float = 1e-7, grid_size: int = 200) -> GammaOptimum:
    """Maximize the mixture rate over ``gamma`` in (0, 1) for odd ``r``.

    A grid of ``grid_size - 1`` interior points is scanned first; the best
    grid point and its neighbours bracket a golden-section refinement. If the
    grid shows more than one local maximum the best grid point's bracket is
    still refined but ``unimodal`` is False.
    """
    if r % 2 == 0:
        raise ValueError("best_gamma needs odd r (the mixture chain is then aperiodic)")
    if not 0 < tolerance <= 1e-6:
        raise ValueError("tolerance must lie in (0, 1e-6]")
    spec = make_game_spec(r, as_rational(rho))
    grid = np.linspace(0.0, 1.0, grid_size + 1)[1:-1]
    values = np.array([mixture_rate_float(spec, g) for g in grid])
    peaks = [i for i in range(len(grid))
             if (i == 0 or values[i] > values[i - 1]) and (i == len(grid) - 1 or values[i] >= values[i + 1])]
    i = int(np.argmax(values))
    lo = grid[i - 1] if i > 0 else grid[0] / 2
    hi = grid[i + 1] if i < len(grid) - 1 else (1 + grid[-1]) / 2
    res = optimize.minimize_scalar(
        lambda g: -mixture_rate_float(spec, g),
        bracket=(lo, grid[i], hi),
        method="golden",
        options={"xtol": tolerance / 10},
    )
    gamma = float(res.x)
    rate = -float(res.fun)
    if rate < values[i]:
        gamma, rate = float(grid[i]), float(values[i])
    return GammaOptimum(gamma, rate, len(peaks) == 1)


def rho_sweep(r: int, pattern: Pattern, grid: Sequence[RationalLike], start: int = 0) -> list[SweepRow]:
    """Exact rates of ``pattern`` at each ``rho`` in ``grid``."""
    rows = []
    for rho in grid:
        spec = make_game_spec(r, as_rational(rho))
        report = pattern_rate(spec, pattern, start)
        rows.append(SweepRow({"r": r, "rho": spec.rho, "pattern": str(pattern)}, report.rate, True))
    return rows


def sup_demo(r_list: Sequence[int], s_rule: Callable[[int], int] | None = None) -> list[SweepRow]:
    """Rates of ``(AB)^s(r) B^(r-2)`` at rho = 0 along ``r_list``.

    ``s_rule`` defaults to :func:`best_s`.
    """
    rows = []
    for r in r_list:
        s = s_rule(r) if s_rule else best_s(r)[0]
        rows.append(SweepRow({"r": r, "s": s}, theorem2_rate(r, s), True))
    return rows
