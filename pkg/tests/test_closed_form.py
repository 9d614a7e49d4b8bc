from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import lattice_path_pmf
from parrondo.closed_form import (
    VARIANTS,
    binom_negbinom_identity_check,
    block_sum,
    theorem2_rate,
    z_mean,
    z_parity,
    z_pmf,
    z_sample_alternative,
    z_samples,
)
from parrondo.games import ab_block_pattern, make_game_spec
from parrondo.rates import pattern_rate

probs = st.fractions(min_value=0, max_value=1, max_denominator=30).filter(lambda p: 0 < p < 1)


@pytest.mark.parametrize("r, s, parity, expected", [
    (3, 2, "even", F(9, 25)),
    (25, 5, "even", F(775, 1089)),
    (4, 1, "even", F(1, 2)),
    (6, 2, "odd", F(0)),
])
def test_block_rate_examples(r, s, parity, expected):
    assert theorem2_rate(r, s, parity) == expected


def test_block_rate_six_digits():
    assert f"{float(theorem2_rate(25, 5)):.6f}" == "0.711662"


@pytest.mark.parametrize("r, s", [(2, 1), (3, 0)])
def test_block_rate_rejects(r, s):
    with pytest.raises(ValueError):
        theorem2_rate(r, s)


@pytest.mark.parametrize("r, s", [(4, 1), (5, 2), (6, 3), (7, 1)])
def test_block_rate_against_engine(r, s):
    spec = make_game_spec(r, 0)
    report = pattern_rate(spec, ab_block_pattern(s, r))
    for start, rate in report.rate_for_start.items():
        assert rate == theorem2_rate(r, s, "even" if start % 2 == 0 else "odd")


def test_odd_r_independent_of_parity():
    assert theorem2_rate(9, 4, "even") == theorem2_rate(9, 4, "odd")


def test_z_pmf_small_cases():
    p = F(2, 7)
    q = 1 - p
    assert z_pmf(1, p).pmf == {0: q, 1: p}
    assert z_pmf(2, p).pmf == {0: q, 1: p * q, 2: p * p}


@pytest.mark.parametrize("n", range(1, 13))
@pytest.mark.parametrize("p", [F(1, 2), F(1, 3), F(7, 8)])
def test_z_pmf_matches_path_enumeration(n, p):
    assert z_pmf(n, p).pmf == lattice_path_pmf(n, p)


@settings(max_examples=40, deadline=None)
@given(n=st.integers(1, 16), p=probs)
def test_z_laws(n, p):
    dist = z_pmf(n, p)
    assert sum(dist.pmf.values()) == 1
    assert all(v >= 0 for v in dist.pmf.values())
    assert z_parity(n, p) == dist.even_mass()
    assert z_mean(n, p) == dist.mean()


def test_z_parity_examples():
    assert z_parity(2, F(1, 2)) == F(3, 4)
    assert z_parity(1, F(1, 5)) == F(4, 5)
    d = z_pmf(7, F(3, 4))
    assert z_parity(7, F(3, 4)) == sum(d.pmf[k] for k in range(0, 8, 2))


def test_z_mean_examples():
    p = F(3, 5)
    q = 1 - p
    assert z_mean(1, p) == p
    assert z_mean(2, p) == (1 - q) * (2 - q)
    d = z_pmf(5, F(2, 3))
    assert z_mean(5, F(2, 3)) == sum(k * v for k, v in d.pmf.items())


@pytest.mark.parametrize("bad", [(0, F(1, 2)), (3, F(0)), (3, F(1)), (3, F(3, 2))])
def test_z_rejects(bad):
    with pytest.raises(ValueError):
        z_pmf(*bad)


@pytest.mark.parametrize("s, s0", [(2, 1), (5, 2), (8, 1)])
def test_identity_examples(s, s0):
    assert binom_negbinom_identity_check(s, s0)


def test_identity_rejects_bad_range():
    with pytest.raises(ValueError):
        binom_negbinom_identity_check(3, 3)


def test_block_sum_equals_floor_value_when_s_small():
    for r in range(4, 13, 2):
        for s in range(1, 11):
            floor = F(2**s - 1, 2**s)
            if s <= r // 2:
                assert block_sum(r, s) == floor
            assert block_sum(r, s) >= floor


@pytest.mark.parametrize("variant", VARIANTS)
def test_sampler_n1(variant):
    x = z_samples(1, F(1, 4), variant, 20000, seed=3)
    assert set(np.unique(x)) <= {0, 1}
    assert abs(x.mean() - 0.25) < 4 * np.sqrt(0.25 * 0.75 / 20000)


@pytest.mark.parametrize("variant", VARIANTS)
def test_sampler_single_draw_deterministic(variant):
    a = z_sample_alternative(6, F(1, 2), variant, seed=11)
    b = z_sample_alternative(6, F(1, 2), variant, seed=11)
    assert a == b and 0 <= a <= 6


def test_sampler_rejects_unknown_variant():
    with pytest.raises(ValueError):
        z_samples(3, F(1, 2), "diagonal", 10)
