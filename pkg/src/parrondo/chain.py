"""Structural analysis of finite chains: classes, periods, stationary laws.

Everything here works on the positive-entry digraph of a
:class:`~parrondo.games.StochasticMatrix`. Linear solves are exact
(fraction Gauss-Jordan) unless a float solve is asked for explicitly.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph
from scipy.sparse.linalg import spsolve

from .games import StochasticMatrix

CASE_LABELS = ("Case1", "Case2", "Case3", "Case4", "Case5", "Other")


class ChainStructureError(ValueError):
    """The chain does not have the structure an operation requires."""


@dataclass(frozen=True)
class ChainClassification:
    recurrent_classes: tuple[frozenset[int], ...]
    periods: tuple[int, ...]
    transient_states: frozenset[int]
    case_label: str

    @property
    def size(self) -> int:
        return sum(len(c) for c in self.recurrent_classes) + len(self.transient_states)

    def class_of(self, state: int) -> int | None:
        for k, cls in enumerate(self.recurrent_classes):
            if state in cls:
                return k
        return None


@dataclass(frozen=True)
class Distribution:
    """Probability weights indexed by state (fractions, or floats from a float solve)."""

    weights: tuple

    def __post_init__(self) -> None:
        if any(w < 0 for w in self.weights):
            raise ValueError("negative weight")

    def __getitem__(self, i: int):
        return self.weights[i]

    def __len__(self) -> int:
        return len(self.weights)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, w in enumerate(self.weights) if w)


def _adjacency(P: StochasticMatrix) -> sparse.csr_matrix:
    rows, cols = [], []
    for i, row in enumerate(P.rows):
        for j, v in row.items():
            if v > 0:
                rows.append(i)
                cols.append(j)
    data = np.ones(len(rows), dtype=np.int8)
    return sparse.csr_matrix((data, (rows, cols)), shape=(P.size, P.size))


def _period(P: StochasticMatrix, members: frozenset[int]) -> int:
    # BFS levels from one member; the period is the gcd of level(u)+1-level(v)
    # over all edges u->v inside the class.
    root = min(members)
    level = {root: 0}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in P.successors(u):
            if v in members and v not in level:
                level[v] = level[u] + 1
                queue.append(v)
    d = 0
    for u in members:
        for v in P.successors(u):
            if v in members:
                d = gcd(d, abs(level[u] + 1 - level[v]))
    return d


def _case_label(n: int, classes: Sequence[frozenset[int]], periods: Sequence[int], transient: frozenset[int]) -> str:
    k = len(classes)
    if k == 1 and not transient:
        if periods[0] == 1:
            return "Case1"
        if periods[0] == 2:
            return "Case2"
    if k == 2 and all(p == 1 for p in periods):
        if all(len(c) == 1 for c in classes) and len(transient) == n - 2:
            return "Case5"
        return "Case3"
    if k == 1 and periods[0] == 1 and len(classes[0]) == 2 and len(transient) == n - 2:
        return "Case4"
    return "Other"


def classify(P: StochasticMatrix) -> ChainClassification:
    """Recurrent classes, their periods, transient states, and the case label.

    Recurrent classes are the closed strongly connected components of the
    positive-entry digraph. Labels:

    ========  ==========================================================
    Case1     irreducible, aperiodic
    Case2     irreducible, period 2
    Case3     two aperiodic recurrent classes (not Case5)
    Case4     one aperiodic class of size 2 plus ``r-2`` transient states
    Case5     two absorbing states plus ``r-2`` transient states
    Other     anything else
    ========  ==========================================================
    """
    n = P.size
    adj = _adjacency(P)
    ncomp, labels = csgraph.connected_components(adj, directed=True, connection="strong")
    members = [set() for _ in range(ncomp)]
    for i, c in enumerate(labels):
        members[c].add(i)
    closed = [True] * ncomp
    coo = adj.tocoo()
    for i, j in zip(coo.row, coo.col):
        if labels[i] != labels[j]:
            closed[labels[i]] = False
    classes = sorted((frozenset(m) for c, m in enumerate(members) if closed[c]), key=min)
    periods = tuple(_period(P, c) for c in classes)
    recurrent = set().union(*classes)
    transient = frozenset(i for i in range(n) if i not in recurrent)
    return ChainClassification(
        recurrent_classes=tuple(classes),
        periods=periods,
        transient_states=transient,
        case_label=_case_label(n, classes, periods, transient),
    )


def solve_exact(A: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    """Solve the square system ``A x = b`` over the rationals (Gauss-Jordan).

    Raises :class:`ZeroDivisionError` if ``A`` is singular.
    """
    n = len(A)
    M = [list(map(Fraction, row)) + [Fraction(b[i])] for i, row in enumerate(A)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if M[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular system")
        M[col], M[pivot] = M[pivot], M[col]
        prow = M[col]
        inv = 1 / prow[col]
        for c in range(col, n + 1):
            prow[c] *= inv
        for r in range(n):
            if r == col:
                continue
            factor = M[r][col]
            if factor:
                row = M[r]
                for c in range(col, n + 1):
                    if prow[c]:
                        row[c] -= factor * prow[c]
    return [M[i][n] for i in range(n)]


def _require_class(P: StochasticMatrix, support, classification: ChainClassification | None) -> tuple[list[int], ChainClassification]:
    info = classification or classify(P)
    if support is None:
        if len(info.recurrent_classes) != 1:
            raise ChainStructureError(
                f"chain has {len(info.recurrent_classes)} recurrent classes; pass one as support"
            )
        support = info.recurrent_classes[0]
    support = frozenset(support)
    if support not in info.recurrent_classes:
        raise ChainStructureError(f"{sorted(support)} is not a recurrent class of the chain")
    return sorted(support), info


def stationary(P: StochasticMatrix, support=None, *, exact: bool = True,
               classification: ChainClassification | None = None) -> Distribution:
    """Unique stationary distribution of ``P`` concentrated on ``support``.

    ``support`` must be a recurrent class; it may be omitted when the chain
    has exactly one. The class system ``pi (P_SS - I) = 0`` has rank
    ``|S| - 1``; its last equation is replaced by the normalization.
    With ``exact=False`` the system is solved in double precision with a
    sparse LU (one coordinate pinned, then rescaled), which is what large
    moduli need.
    """
    states, _ = _require_class(P, support, classification)
    k = len(states)
    index = {s: a for a, s in enumerate(states)}
    if exact:
        # row a of A is the equation for pi_a: sum_b pi_b P[b, a] - pi_a = 0
        A = [[Fraction(0)] * k for _ in range(k)]
        for b, s in enumerate(states):
            for j, v in P.rows[s].items():
                A[index[j]][b] += v
        for a in range(k):
            A[a][a] -= 1
        A[-1] = [Fraction(1)] * k
        rhs = [Fraction(0)] * (k - 1) + [Fraction(1)]
        sol = solve_exact(A, rhs)
        weights = [Fraction(0)] * P.size
    else:
        # pin pi at the first class state instead of a dense normalization
        # row, which keeps the sparse LU from filling in
        rows, cols, data = [0], [0], [1.0]
        for b, s in enumerate(states):
            for j, v in P.rows[s].items():
                a = index[j]
                if a:
                    rows.append(a)
                    cols.append(b)
                    data.append(float(v))
        for a in range(1, k):
            rows.append(a)
            cols.append(a)
            data.append(-1.0)
        A = sparse.csc_matrix((data, (rows, cols)), shape=(k, k))
        rhs = np.zeros(k)
        rhs[0] = 1.0
        sol = np.atleast_1d(spsolve(A, rhs))
        sol = np.clip(sol, 0.0, None)
        sol = sol / sol.sum()
        weights = [0.0] * P.size
    for a, s in enumerate(states):
        weights[s] = sol[a] if exact else float(sol[a])
    return Distribution(tuple(weights))


def absorption_vector(P: StochasticMatrix, target_class, *, exact: bool = True,
                      classification: ChainClassification | None = None) -> list:
    """Probability of ending in ``target_class``, for every start state.

    The chain must have exactly two recurrent classes.
    """
    info = classification or classify(P)
    if len(info.recurrent_classes) != 2:
        raise ChainStructureError(
            f"absorption split needs exactly two recurrent classes, found {len(info.recurrent_classes)}"
        )
    target = frozenset(target_class)
    if target not in info.recurrent_classes:
        raise ChainStructureError(f"{sorted(target)} is not a recurrent class of the chain")
    one, zero = (Fraction(1), Fraction(0)) if exact else (1.0, 0.0)
    result = [one if s in target else zero for s in range(P.size)]
    transient = sorted(info.transient_states)
    if not transient:
        return result
    index = {s: a for a, s in enumerate(transient)}
    k = len(transient)
    # h_T = P_TT h_T + P_T,target 1
    if exact:
        A = [[Fraction(0)] * k for _ in range(k)]
        b = [Fraction(0)] * k
        for a, s in enumerate(transient):
            A[a][a] += 1
            for j, v in P.rows[s].items():
                if j in index:
                    A[a][index[j]] -= v
                elif j in target:
                    b[a] += v
        sol = solve_exact(A, b)
    else:
        rows, cols, data = [], [], []
        b = np.zeros(k)
        for a, s in enumerate(transient):
            rows.append(a)
            cols.append(a)
            data.append(1.0)
            for j, v in P.rows[s].items():
                if j in index:
                    rows.append(a)
                    cols.append(index[j])
                    data.append(-float(v))
                elif j in target:
                    b[a] += float(v)
        A = sparse.csc_matrix((data, (rows, cols)), shape=(k, k))
        sol = [float(x) for x in np.atleast_1d(spsolve(A, b))]
    for a, s in enumerate(transient):
        result[s] = sol[a]
    return result


def absorption_probability(P: StochasticMatrix, target_class, start: int, *, exact: bool = True) -> Fraction:
    """Probability that the chain started at ``start`` is absorbed in ``target_class``."""
    if not 0 <= start < P.size:
        raise ValueError(f"start state {start} outside 0..{P.size - 1}")
    return absorption_vector(P, target_class, exact=exact)[start]
