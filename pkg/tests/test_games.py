from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from parrondo.games import (
    Pattern,
    PatternSyntaxError,
    StochasticMatrix,
    as_rational,
    build_pA,
    build_pB,
    build_payoff,
    make_game_spec,
    parse_pattern,
    render,
)

rationals01 = st.fractions(min_value=0, max_value=1, max_denominator=50)


@pytest.mark.parametrize("r, rho, p0, p1", [
    (3, F(1, 3), F(1, 10), F(3, 4)),
    (3, F(0), F(0), F(1)),
    (5, F(1, 2), F(1, 17), F(2, 3)),
    (7, F(1), F(1, 2), F(1, 2)),
])
def test_make_game_spec(r, rho, p0, p1):
    spec = make_game_spec(r, rho)
    assert (spec.p0, spec.p1) == (p0, p1)


@pytest.mark.parametrize("r, rho", [(2, F(1, 3)), (3, F(-1, 3)), (3, F(4, 3)), (3.0, F(1, 2))])
def test_make_game_spec_rejects(r, rho):
    with pytest.raises(ValueError):
        make_game_spec(r, rho)


def test_rational_inputs():
    assert as_rational("1/3") == F(1, 3)
    assert as_rational("0.420756") == F(420756, 10**6)
    assert make_game_spec(3, "1/3").p0 == F(1, 10)
    with pytest.raises(ValueError):
        as_rational("one third")


def test_pA_r3():
    h = F(1, 2)
    assert build_pA(3).dense() == [[0, h, h], [h, 0, h], [h, h, 0]]
    assert build_pA(4).dense()[0] == [0, h, 0, h]


def test_pB_r3(spec_3_third):
    assert build_pB(spec_3_third).dense() == [
        [0, F(1, 10), F(9, 10)],
        [F(1, 4), 0, F(3, 4)],
        [F(3, 4), F(1, 4), 0],
    ]
    assert build_pB(make_game_spec(3, 0)).dense() == [[0, 0, 1], [0, 0, 1], [1, 0, 0]]


def test_fairness_value_r3():
    assert F(9, 10) * F(1, 4) ** 2 == F(1, 10) * F(3, 4) ** 2 == F(9, 160)


def test_payoff():
    assert build_payoff(3).entries == ((0, 1, -1), (-1, 0, 1), (1, -1, 0))
    assert build_payoff(5).entries[2] == (0, -1, 0, 1, 0)


@pytest.mark.parametrize("r", [3, 4, 5, 10, 33])
def test_payoff_structure(r):
    W = build_payoff(r)
    for i in range(r):
        assert sorted(W.entries[i]).count(1) == 1 and sorted(W.entries[i]).count(-1) == 1
        for j in range(r):
            assert W[i, j] == -W[j, i]


@pytest.mark.parametrize("builder", [build_pA, build_payoff])
def test_small_modulus_rejected(builder):
    with pytest.raises(ValueError):
        builder(2)


@settings(max_examples=60, deadline=None)
@given(r=st.integers(3, 64), rho=rationals01)
def test_pB_fair_and_stochastic(r, rho):
    spec = make_game_spec(r, rho)
    P = build_pB(spec)
    assert all(sum(row.values()) == 1 for row in P.rows)
    # coins read back from the matrix: p0 = P[0,1], p1 = P[1,2]
    assert P[0, r - 1] * P[1, 0] ** (r - 1) == P[0, 1] * P[1, 2] ** (r - 1)
    assert (1 - spec.p0) * (1 - spec.p1) ** (r - 1) == spec.p0 * spec.p1 ** (r - 1)


@pytest.mark.parametrize("r", range(3, 65))
def test_pA_doubly_stochastic(r):
    P = build_pA(r)
    assert P.is_doubly_stochastic()


@pytest.mark.parametrize("r", [3, 4, 9, 16])
def test_rho_one_makes_B_equal_A(r):
    assert build_pB(make_game_spec(r, 1)).dense() == build_pA(r).dense()


def test_stochastic_matrix_validation():
    with pytest.raises(ValueError):
        StochasticMatrix.from_rows([[F(1, 2), F(1, 3)], [0, 1]])
    with pytest.raises(ValueError):
        StochasticMatrix.from_rows([[F(3, 2), F(-1, 2)], [0, 1]])


def test_matrix_power_matches_repeated_product():
    P = build_pB(make_game_spec(4, F(1, 3)))
    assert P.power(3).dense() == (P @ P @ P).dense()


@pytest.mark.parametrize("text, expanded", [
    ("ABB", "ABB"),
    ("(AB)^2B", "ABABB"),
    ("(AB)^3B^3", "ABABABBBB"),
    (" ( A B ) ^ 2 B ", "ABABB"),
    ("((AB)^2B)^2", "ABABBABABB"),
    ("A^10", "A" * 10),
])
def test_parse_pattern(text, expanded):
    assert str(parse_pattern(text)) == expanded


@pytest.mark.parametrize("text, position", [
    ("", 0),
    ("A^0", 2),
    ("(AB", 0),
    ("AB)", 2),
    ("ABC", 2),
    ("()", 1),
    ("A^", 2),
])
def test_parse_errors(text, position):
    with pytest.raises(PatternSyntaxError) as info:
        parse_pattern(text)
    assert info.value.position == position


@given(st.lists(st.sampled_from("AB"), min_size=1, max_size=40))
def test_render_round_trip(tokens):
    p = Pattern(tuple(tokens))
    assert parse_pattern(render(p)) == p
