"""Seeded Monte Carlo play of periodic and randomly mixed game sequences."""
from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Union

import numpy as np

from ._rng import make_rng
from .games import GameSpec, Pattern, ab_block_pattern

BLOCK = 1 << 16  # uniforms drawn per batch; bounds memory for long runs


@dataclass(frozen=True)
class SimConfig:
    """``schedule`` is a :class:`Pattern` or a mixture weight ``gamma`` for game A."""

    spec: GameSpec
    schedule: Union[Pattern, Fraction, float]
    initial_capital: int = 0
    steps: int = 1_000_000
    seed: int = 0
    trace_every: int = 0  # 0 disables the trace

    def __post_init__(self) -> None:
        if self.steps < 1:
            raise ValueError("steps must be >= 1")
        if not isinstance(self.schedule, Pattern) and not 0 <= self.schedule <= 1:
            raise ValueError("mixture gamma must lie in [0, 1]")


@dataclass(frozen=True)
class SimResult:
    final_capital: int
    profit: int
    steps: int
    trace: tuple[tuple[int, int], ...] | None = None

    @property
    def mean_profit_per_game(self) -> float:
        return self.profit / self.steps

    def write_trace(self, path: str | Path) -> None:
        """Write the sampled trace as CSV with columns ``step,S_n``."""
        if self.trace is None:
            raise ValueError("simulation was run without a trace")
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["step", "S_n"])
            writer.writerows(self.trace)


def simulate(config: SimConfig) -> SimResult:
    """Play ``config.steps`` games and return the cumulative profit.

    Each game draws one uniform ``u`` and wins when ``u`` is below the active
    coin's head probability. Mixtures draw a second uniform first to choose
    the game. Results depend only on the config, seed included.
    """
    spec = config.spec
    r = spec.r
    p0, p1 = float(spec.p0), float(spec.p1)
    mixture = not isinstance(config.schedule, Pattern)
    if mixture:
        gamma = float(config.schedule)
        period = 1
        is_a = None
    else:
        is_a = [c == "A" for c in config.schedule.tokens]
        period = len(is_a)
    rng = make_rng(config.seed)
    state = config.initial_capital % r
    profit = 0
    every = config.trace_every
    trace = [] if every else None
    n = 0
    phase = 0
    while n < config.steps:
        m = min(BLOCK, config.steps - n)
        if mixture:
            draws = rng.random((m, 2))
            choose = (draws[:, 0] < gamma).tolist()
            coins = draws[:, 1].tolist()
        else:
            coins = rng.random(m).tolist()
        for k in range(m):
            play_a = choose[k] if mixture else is_a[phase]
            if play_a:
                win = coins[k] < 0.5
            else:
                win = coins[k] < (p0 if state == 0 else p1)
            if win:
                profit += 1
                state = state + 1 if state != r - 1 else 0
            else:
                profit -= 1
                state = state - 1 if state else r - 1
            if not mixture:
                phase = phase + 1 if phase != period - 1 else 0
            if every and (n + k + 1) % every == 0:
                trace.append((n + k + 1, profit))
        n += m
    return SimResult(
        final_capital=config.initial_capital + profit,
        profit=profit,
        steps=config.steps,
        trace=tuple(trace) if trace is not None else None,
    )


def block_profiles(spec: GameSpec, s: int, start: int, blocks: int, seed=None) -> np.ndarray:
    """Profits of ``blocks`` independent plays of one ``(AB)^s B^(r-2)`` block.

    Only defined at rho = 0, where game B is deterministic.
    """
    if spec.rho != 0:
        raise ValueError("block profiles are defined only for rho = 0")
    r = spec.r
    pattern = ab_block_pattern(s, r)
    rng = make_rng(seed)
    state = np.full(blocks, start % r, dtype=np.int64)
    profit = np.zeros(blocks, dtype=np.int64)
    for c in pattern.tokens:
        if c == "A":
            step = np.where(rng.random(blocks) < 0.5, 1, -1)
        else:
            # p0 = 0 and p1 = 1: lose at 0, win elsewhere
            step = np.where(state == 0, -1, 1)
        profit += step
        state = (state + step) % r
    return profit


def simulate_block_profile(spec: GameSpec, s: int, start: int, seed=None) -> int:
    """Profit of a single ``(AB)^s B^(r-2)`` block from capital ``start``."""
    return int(block_profiles(spec, s, start, 1, seed)[0])
