"""Game parameters, transition/payoff matrices, and the pattern notation.

All scalars are :class:`fractions.Fraction`. Matrices are stored as sparse
rows (one ``{column: probability}`` dict per state) because every matrix the
games produce has at most three nonzeros per row, while products of them fill
in only as far as the pattern length allows.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

import numpy as np
from scipy import sparse

Rational = Fraction
RationalLike = Union[Fraction, int, str]


def as_rational(value: RationalLike | float) -> Fraction:
    """Convert ``value`` to an exact fraction.

    Strings may be ``"a/b"`` or a terminating decimal such as ``"0.420756"``;
    both are converted exactly. Floats are converted to their exact binary
    value, which is rarely what a caller typing a decimal wants, so prefer
    strings at API boundaries.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, str):
        text = value.strip()
        if not re.fullmatch(r"[+-]?(\d+(/\d+)?|\d*\.\d+|\d+\.\d*)", text):
            raise ValueError(f"not a rational number: {value!r}")
        return Fraction(text)
    return Fraction(value)


@dataclass(frozen=True)
class GameSpec:
    """Game B parameters: modulus ``r`` and the fairness parameter ``rho``.

    ``p0`` is the head probability used when capital is 0 mod r, ``p1`` the
    one used otherwise. Construct with :func:`make_game_spec`.
    """

    r: int
    rho: Fraction
    p0: Fraction
    p1: Fraction


def make_game_spec(r: int, rho: RationalLike) -> GameSpec:
    """Build a fair game B for modulus ``r`` from ``rho`` in [0, 1].

    >>> make_game_spec(3, Fraction(1, 3))
    GameSpec(r=3, rho=Fraction(1, 3), p0=Fraction(1, 10), p1=Fraction(3, 4))
    """
    if not isinstance(r, int) or isinstance(r, bool) or r < 3:
        raise ValueError(f"modulus r must be an integer >= 3, got {r!r}")
    rho = as_rational(rho)
    if not 0 <= rho <= 1:
        raise ValueError(f"rho must lie in [0, 1], got {rho}")
    lead = rho ** (r - 1)
    p0 = lead / (1 + lead)
    p1 = 1 / (1 + rho)
    if (1 - p0) * (1 - p1) ** (r - 1) != p0 * p1 ** (r - 1):
        raise ArithmeticError("fairness identity failed")  # unreachable for exact input
    return GameSpec(r=r, rho=rho, p0=p0, p1=p1)


@dataclass(frozen=True)
class StochasticMatrix:
    """Exact row-stochastic matrix on states ``0..size-1`` in sparse-row form."""

    size: int
    rows: tuple[Mapping[int, Fraction], ...] = field(repr=False)

    def __post_init__(self) -> None:
        if len(self.rows) != self.size:
            raise ValueError("row count does not match size")
        for i, row in enumerate(self.rows):
            total = Fraction(0)
            for j, value in row.items():
                if not 0 <= j < self.size:
                    raise ValueError(f"row {i}: column {j} out of range")
                if not 0 <= value <= 1:
                    raise ValueError(f"row {i}: entry {value} outside [0, 1]")
                total += value
            if total != 1:
                raise ValueError(f"row {i} sums to {total}, not 1")

    @classmethod
    def from_rows(cls, rows: Iterable[Mapping[int, RationalLike] | Sequence[RationalLike]]) -> StochasticMatrix:
        """Build from dense sequences or sparse dicts; zeros are dropped."""
        built = []
        for row in rows:
            items = row.items() if isinstance(row, Mapping) else enumerate(row)
            built.append({int(j): as_rational(v) for j, v in items if v != 0})
        return cls(len(built), tuple(built))

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self.rows[i].get(j, Fraction(0))

    def dense(self) -> list[list[Fraction]]:
        return [[row.get(j, Fraction(0)) for j in range(self.size)] for row in self.rows]

    def to_numpy(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.dense()])

    def to_scipy(self) -> sparse.csr_matrix:
        data, indices, indptr = [], [], [0]
        for row in self.rows:
            for j in sorted(row):
                indices.append(j)
                data.append(float(row[j]))
            indptr.append(len(indices))
        return sparse.csr_matrix((data, indices, indptr), shape=(self.size, self.size))

    def successors(self, i: int) -> list[int]:
        return sorted(j for j, v in self.rows[i].items() if v > 0)

    def __matmul__(self, other: StochasticMatrix) -> StochasticMatrix:
        if other.size != self.size:
            raise ValueError("size mismatch")
        out = []
        for row in self.rows:
            acc: dict[int, Fraction] = {}
            for k, a in row.items():
                for j, b in other.rows[k].items():
                    acc[j] = acc.get(j, 0) + a * b
            out.append({j: v for j, v in acc.items() if v})
        return StochasticMatrix(self.size, tuple(out))

    def power(self, n: int) -> StochasticMatrix:
        if n < 0:
            raise ValueError("negative power")
        result = identity(self.size)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def is_doubly_stochastic(self) -> bool:
        cols = [Fraction(0)] * self.size
        for row in self.rows:
            for j, v in row.items():
                cols[j] += v
        return all(c == 1 for c in cols)


def identity(size: int) -> StochasticMatrix:
    return StochasticMatrix(size, tuple({i: Fraction(1)} for i in range(size)))


def combine(weight: RationalLike, first: StochasticMatrix, second: StochasticMatrix) -> StochasticMatrix:
    """Convex combination ``weight*first + (1-weight)*second``."""
    w = as_rational(weight)
    if not 0 <= w <= 1:
        raise ValueError(f"mixture weight must lie in [0, 1], got {w}")
    out = []
    for a, b in zip(first.rows, second.rows):
        acc: dict[int, Fraction] = {}
        for j, v in a.items():
            acc[j] = acc.get(j, 0) + w * v
        for j, v in b.items():
            acc[j] = acc.get(j, 0) + (1 - w) * v
        out.append({j: v for j, v in acc.items() if v})
    return StochasticMatrix(first.size, tuple(out))


def _check_modulus(r: int) -> None:
    if not isinstance(r, int) or isinstance(r, bool) or r < 3:
        raise ValueError(f"modulus r must be an integer >= 3, got {r!r}")


def _walk(r: int, up: Sequence[Fraction]) -> StochasticMatrix:
    # state i moves to i+1 w.p. up[i], else to i-1 (mod r)
    rows = []
    for i in range(r):
        row = {}
        if up[i]:
            row[(i + 1) % r] = up[i]
        if up[i] != 1:
            row[(i - 1) % r] = 1 - up[i]
        rows.append(row)
    return StochasticMatrix(r, tuple(rows))


def build_pA(r: int) -> StochasticMatrix:
    """Transition matrix of the fair-coin game on capital mod ``r``."""
    _check_modulus(r)
    return _walk(r, [Fraction(1, 2)] * r)


def build_pB(spec: GameSpec) -> StochasticMatrix:
    """Transition matrix of the capital-dependent game B."""
    return _walk(spec.r, [spec.p0] + [spec.p1] * (spec.r - 1))


@dataclass(frozen=True)
class PayoffMatrix:
    """One-step payoff: +1 for a move i -> i+1, -1 for i -> i-1 (mod r)."""

    size: int
    entries: tuple[tuple[int, ...], ...] = field(repr=False)

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.entries[i][j]


def build_payoff(r: int) -> PayoffMatrix:
    _check_modulus(r)
    entries = []
    for i in range(r):
        row = [0] * r
        row[(i + 1) % r] = 1
        row[(i - 1) % r] = -1
        entries.append(tuple(row))
    return PayoffMatrix(r, tuple(entries))


def hadamard(P: StochasticMatrix, W: PayoffMatrix) -> list[dict[int, Fraction]]:
    """Entrywise product ``P o W`` as sparse rows (not stochastic any more)."""
    if P.size != W.size:
        raise ValueError("size mismatch")
    return [{j: v * W[i, j] for j, v in row.items() if W[i, j]} for i, row in enumerate(P.rows)]


def row_sums(rows: Sequence[Mapping[int, Fraction]]) -> list[Fraction]:
    return [sum(row.values(), Fraction(0)) for row in rows]


# ---------------------------------------------------------------------------
# patterns


class PatternSyntaxError(ValueError):
    """Raised for malformed pattern text; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class Pattern:
    """A finite word over {A, B}, played cyclically."""

    tokens: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.tokens:
            raise ValueError("pattern must be nonempty")
        bad = set(self.tokens) - {"A", "B"}
        if bad:
            raise ValueError(f"pattern tokens must be A or B, got {sorted(bad)}")

    @property
    def length(self) -> int:
        return len(self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)

    def __str__(self) -> str:
        return "".join(self.tokens)

    def rotate(self, k: int) -> Pattern:
        k %= len(self.tokens)
        return Pattern(self.tokens[k:] + self.tokens[:k])


def ab_block_pattern(s: int, r: int) -> Pattern:
    """The pattern ``(AB)^s B^(r-2)``."""
    if s < 1:
        raise ValueError("s must be >= 1")
    _check_modulus(r)
    return Pattern(("A", "B") * s + ("B",) * (r - 2))


def render(pattern: Pattern) -> str:
    """Compact text for ``pattern``, run-length encoding repeated letters."""
    out = []
    tokens = pattern.tokens
    i = 0
    while i < len(tokens):
        j = i
        while j < len(tokens) and tokens[j] == tokens[i]:
            j += 1
        out.append(tokens[i] if j - i == 1 else f"{tokens[i]}^{j - i}")
        i = j
    return "".join(out)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def sequence(self, nested: bool) -> list[str]:
        out: list[str] = []
        start = self.pos
        while True:
            ch = self.peek()
            if ch in ("A", "B"):
                self.pos += 1
                unit = [ch]
            elif ch == "(":
                open_at = self.pos
                self.pos += 1
                unit = self.sequence(nested=True)
                if self.peek() != ")":
                    raise PatternSyntaxError("unbalanced parenthesis", open_at)
                self.pos += 1
            elif ch == ")":
                if not nested:
                    raise PatternSyntaxError("unexpected ')'", self.pos)
                break
            elif ch == "":
                break
            else:
                raise PatternSyntaxError(f"unexpected character {ch!r}", self.pos)
            out.extend(unit * self.exponent())
        if not out:
            raise PatternSyntaxError("empty pattern", start)
        return out

    def exponent(self) -> int:
        if self.peek() != "^":
            return 1
        self.pos += 1
        self.skip()
        m = re.compile(r"\d+").match(self.text, self.pos)
        if not m:
            raise PatternSyntaxError("expected exponent after '^'", self.pos)
        value = int(m.group())
        if value == 0:
            raise PatternSyntaxError("exponent must be >= 1", self.pos)
        self.pos = m.end()
        return value


def parse_pattern(text: str) -> Pattern:
    """Expand compact notation such as ``"(AB)^2B"`` into a :class:`Pattern`.

    Grammar: ``Pattern := Term+``, ``Term := ("A" | "B" | "(" Pattern ")") ["^" UInt]``
    with exponents >= 1. Whitespace is ignored.
    """
    parser = _Parser(text)
    tokens = parser.sequence(nested=False)
    return Pattern(tuple(tokens))
