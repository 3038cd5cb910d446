import random

import pytest
from hypothesis import given, settings, strategies as st

from homfcc.bounds import (RequirementMatrix, plotkin_bound_generic, plotkin_bound_z4,
                           three_point_matrix)
from homfcc.errors import DomainError
from homfcc.ring import RingParams
from homfcc.search import certificate_ok, default_r_max, exact_Nh

import oracles

Z4 = RingParams(2)


def test_examples():
    zero = RequirementMatrix(((0, 0), (0, 0)))
    res = exact_Nh(zero, Z4)
    assert res.value == 0 and res.exhausted and res.certificate == ((), ())
    res = exact_Nh(RequirementMatrix(((0, 2), (2, 0))), Z4)
    assert res.value == 1 and res.exhausted
    assert certificate_ok(RequirementMatrix(((0, 2), (2, 0))), res.certificate, Z4)
    res = exact_Nh(three_point_matrix(2), Z4)
    assert res.value == 3 and certificate_ok(three_point_matrix(2), res.certificate, Z4)


@pytest.mark.parametrize("strategy", ["columns", "codewords"])
@pytest.mark.parametrize("t,want", [(1, 2), (2, 3), (3, 5), (4, 6)])
def test_three_point_both_strategies(strategy, t, want):
    D = three_point_matrix(t)
    res = exact_Nh(D, Z4, strategy=strategy)
    assert res.exhausted and res.value == want
    assert certificate_ok(D, res.certificate, Z4)
    assert res.lower_bound_used <= res.value


def test_unknown_strategy():
    with pytest.raises(DomainError):
        exact_Nh(three_point_matrix(1), Z4, strategy="sat")


def test_budget_sentinel():
    D = three_point_matrix(4)
    res = exact_Nh(D, Z4, r_max=8, budget=1, strategy="codewords")
    assert not res.exhausted and res.value == 9 and res.certificate is None
    assert res.notes


def test_r_max_too_small():
    D = three_point_matrix(3)
    res = exact_Nh(D, Z4, r_max=4)
    assert res.certificate is None and res.exhausted and res.value >= 5


def test_default_r_max_is_achievable():
    for t in (1, 2, 3):
        D = three_point_matrix(t)
        assert exact_Nh(D, Z4).value <= default_r_max(D)


def _random(rng, m, top):
    e = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            e[i][j] = e[j][i] = rng.randint(0, top)
    return RequirementMatrix(tuple(map(tuple, e)))


@pytest.mark.parametrize("s", [1, 2, 3])
def test_against_bruteforce_oracle(s):
    ring = RingParams(s)
    rng = random.Random(7 + s)
    for _ in range(25):
        D = _random(rng, rng.randint(2, 3), 4)
        want = oracles.nh_bruteforce([list(r) for r in D.entries], s, 4)
        res = exact_Nh(D, ring)
        assert res.value == want, D.entries
        assert certificate_ok(D, res.certificate, ring)


def test_strategies_agree_on_random_matrices():
    rng = random.Random(11)
    for _ in range(30):
        D = _random(rng, rng.randint(2, 4), 5)
        a = exact_Nh(D, Z4, strategy="columns")
        b = exact_Nh(D, Z4, strategy="codewords")
        assert a.value == b.value, D.entries
        assert certificate_ok(D, a.certificate, Z4) and certificate_ok(D, b.certificate, Z4)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 4).flatmap(lambda m: st.lists(st.integers(0, 7), min_size=m * (m - 1) // 2,
                                                   max_size=m * (m - 1) // 2).map(lambda v: (m, v))))
def test_sandwich(data):
    m, vals = data
    e = [[0] * m for _ in range(m)]
    it = iter(vals)
    for i in range(m):
        for j in range(i + 1, m):
            e[i][j] = e[j][i] = next(it)
    D = RequirementMatrix(tuple(map(tuple, e)))
    res = exact_Nh(D, Z4)
    assert res.exhausted
    assert res.value >= max(plotkin_bound_generic(D), plotkin_bound_z4(D, Z4))
    assert res.value <= default_r_max(D)
    assert certificate_ok(D, res.certificate, Z4)


def test_determinism():
    D = three_point_matrix(3)
    assert exact_Nh(D, Z4).certificate == exact_Nh(D, Z4).certificate
