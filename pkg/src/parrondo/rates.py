"""Rates of profit for periodic patterns and random mixtures of games A and B.

A schedule is a list of steps, each a transition matrix together with the
expected one-step profit from every state (the row sums of the matrix's
Hadamard product with the payoff matrix). For the product chain
``P = P_1 ... P_t`` and a stationary law ``pi`` on one recurrent class the
rate is

    mu = (1/t) * sum_i  pi P_1 ... P_{i-1} h_i

which is evaluated by pushing ``pi`` through the steps one matrix at a
time. Several recurrent classes are blended with absorption
probabilities; a period-2 product chain is handled by doubling the
schedule, which turns it into the two-class case.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

from .chain import (
    ChainClassification,
    ChainStructureError,
    Distribution,
    absorption_vector,
    classify,
    stationary,
)
from .games import (
    GameSpec,
    Pattern,
    RationalLike,
    StochasticMatrix,
    as_rational,
    build_pA,
    build_pB,
    build_payoff,
    combine,
    hadamard,
    row_sums,
)

# exact stationary solves are cubic in r; beyond this mixtures default to floats
EXACT_MIXTURE_LIMIT = 512


@dataclass(frozen=True)
class Step:
    matrix: StochasticMatrix
    profit: tuple  # expected one-step profit per state


@dataclass(frozen=True)
class RateReport:
    """Rates of profit for one schedule.

    ``class_rates`` has one entry per recurrent class of the (possibly
    doubled) product chain, and ``rate_for_start`` maps every initial state
    to its almost-sure limit of ``S_n / n``.
    """

    classification: ChainClassification
    class_rates: tuple
    rate_for_start: dict
    start: int
    exact: bool
    doubled: bool = False

    @property
    def rate(self):
        return self.rate_for_start[self.start]

    @property
    def float_view(self) -> dict[int, float]:
        return {s: float(v) for s, v in self.rate_for_start.items()}


def profit_increment_vector(spec: GameSpec, game: Literal["A", "B"]) -> list[Fraction]:
    """Expected profit of one play of ``game`` from each state, ``(P o W) 1``."""
    if game == "A":
        P = build_pA(spec.r)
    elif game == "B":
        P = build_pB(spec)
    else:
        raise ValueError(f"game must be 'A' or 'B', got {game!r}")
    return row_sums(hadamard(P, build_payoff(spec.r)))


def game_steps(spec: GameSpec) -> dict[str, Step]:
    W = build_payoff(spec.r)
    out = {}
    for name, P in (("A", build_pA(spec.r)), ("B", build_pB(spec))):
        out[name] = Step(P, tuple(row_sums(hadamard(P, W))))
    return out


def pattern_steps(spec: GameSpec, pattern: Pattern) -> list[Step]:
    games = game_steps(spec)
    return [games[c] for c in pattern.tokens]


def mixture_step(spec: GameSpec, gamma: RationalLike) -> Step:
    """Single step playing A with probability ``gamma``, else B."""
    g = as_rational(gamma)
    games = game_steps(spec)
    A, B = games["A"], games["B"]
    P = combine(g, A.matrix, B.matrix)
    profit = tuple(g * a + (1 - g) * b for a, b in zip(A.profit, B.profit))
    return Step(P, profit)


def product_matrix(steps: Sequence[Step]) -> StochasticMatrix:
    P = steps[0].matrix
    for step in steps[1:]:
        P = P @ step.matrix
    return P


def _push(v: list, M: StochasticMatrix) -> list:
    out = [0] * M.size
    for i, vi in enumerate(v):
        if vi:
            for j, m in M.rows[i].items():
                out[j] += vi * m
    return out


def mean_formula(steps: Sequence[Step], pi: Distribution | Sequence) -> Fraction | float:
    """``(1/t) pi (h_1 + P_1 h_2 + ... + P_1...P_{t-1} h_t)`` for a given ``pi``."""
    v = list(pi.weights if isinstance(pi, Distribution) else pi)
    total = 0
    for k, step in enumerate(steps):
        if k:
            v = _push(v, steps[k - 1].matrix)
        total += sum(vi * hi for vi, hi in zip(v, step.profit) if vi)
    return total / len(steps) if isinstance(total, float) else Fraction(total) / len(steps)


def schedule_rate(steps: Sequence[Step], start: int = 0, *, exact: bool = True) -> RateReport:
    """Rate of profit of the schedule ``steps`` repeated forever."""
    if not steps:
        raise ValueError("schedule must be nonempty")
    n = steps[0].matrix.size
    if not 0 <= start < n:
        raise ValueError(f"start state {start} outside 0..{n - 1}")
    P = product_matrix(steps)
    info = classify(P)
    periods = info.periods
    if len(periods) == 1 and periods[0] == 2:
        doubled = schedule_rate(list(steps) + list(steps), start, exact=exact)
        return RateReport(info, doubled.class_rates, doubled.rate_for_start, start, exact, doubled=True)
    if any(p != 1 for p in periods) or len(periods) > 2:
        raise ChainStructureError(
            f"unsupported product-chain structure: {len(periods)} recurrent classes "
            f"with periods {list(periods)} and {len(info.transient_states)} transient states"
        )
    class_rates = tuple(
        mean_formula(steps, stationary(P, cls, exact=exact, classification=info))
        for cls in info.recurrent_classes
    )
    if len(class_rates) == 1:
        by_start = {s: class_rates[0] for s in range(n)}
    else:
        alpha = absorption_vector(P, info.recurrent_classes[0], exact=exact, classification=info)
        mu1, mu2 = class_rates
        by_start = {s: alpha[s] * mu1 + (1 - alpha[s]) * mu2 for s in range(n)}
    return RateReport(info, class_rates, by_start, start, exact)


def pattern_rate(spec: GameSpec, pattern: Pattern, start: int = 0) -> RateReport:
    """Exact rate of profit of ``pattern`` repeated ad infinitum.

    >>> from parrondo.games import make_game_spec, parse_pattern
    >>> pattern_rate(make_game_spec(3, Fraction(1, 3)), parse_pattern("ABB")).rate
    Fraction(2416, 35601)
    """
    if not 0 <= start < spec.r:
        raise ValueError(f"start state {start} outside 0..{spec.r - 1}")
    return schedule_rate(pattern_steps(spec, pattern), start)


def mixture_rate(spec: GameSpec, gamma: RationalLike | float, start: int = 0, *, exact: bool | None = None) -> RateReport:
    """Rate of the random mixture ``gamma A + (1 - gamma) B``.

    The mixture is a one-step schedule. ``exact`` defaults to True for
    ``r <= 512`` and to a double-precision stationary solve above that.
    A float ``gamma`` is converted to its exact binary value.
    """
    if not 0 <= start < spec.r:
        raise ValueError(f"start state {start} outside 0..{spec.r - 1}")
    if exact is None:
        exact = spec.r <= EXACT_MIXTURE_LIMIT
    return schedule_rate([mixture_step(spec, gamma)], start, exact=exact)


__all__ = [
    "RateReport",
    "Step",
    "game_steps",
    "mean_formula",
    "mixture_rate",
    "mixture_step",
    "pattern_rate",
    "pattern_steps",
    "product_matrix",
    "profit_increment_vector",
    "schedule_rate",
]
