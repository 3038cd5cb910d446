import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from homfcc.bounds import (RequirementMatrix, bijective_length_bound, linear_plotkin_bound,
                           modular_sum_lower_bound, plotkin_bound_generic, plotkin_bound_z4,
                           plotkin_fraction_generic, plotkin_fraction_z4, redundancy_lower_bound,
                           requirement_matrix, three_point_matrix, upper_bound_from_lambda)
from homfcc.errors import DomainError, HypothesisError
from homfcc.functions import (hom_weight_function, linear, modular_sum, modular_sum_as_linear,
                              table_function)
from homfcc.ring import RingParams
from homfcc.witnesses import THREE_POINT_MESSAGES, example_linear, three_value_function

import oracles

Z4 = RingParams(2)


def test_requirement_matrix_examples():
    D = requirement_matrix(three_value_function(), 2, THREE_POINT_MESSAGES)
    assert D.entries == ((0, 4, 4), (4, 0, 3), (4, 3, 0))
    const = table_function(Z4, 1, [1] * 4)
    assert requirement_matrix(const, 2, [(0,), (1,), (2,)]).entries == ((0, 0, 0),) * 3
    far = requirement_matrix(hom_weight_function(Z4, 3), 1, [(0, 0, 0), (2, 2, 0)])
    assert far.entries == ((0, 0), (0, 0))


def test_requirement_matrix_errors():
    f = modular_sum(Z4, 1)
    with pytest.raises(DomainError):
        requirement_matrix(f, 1, [(0,), (0,)])
    with pytest.raises(DomainError):
        RequirementMatrix(((0, 1), (2, 0)))
    with pytest.raises(DomainError):
        RequirementMatrix(((1, 0), (0, 0)))
    with pytest.raises(DomainError):
        RequirementMatrix(((0, 4), (4, 0)), t=1)


def test_matrix_json_round_trip():
    D = requirement_matrix(three_value_function(), 3, THREE_POINT_MESSAGES)
    E = RequirementMatrix.from_json(json.dumps(D.to_json()))
    assert E.entries == D.entries and E.t == 3 and E.ring == Z4


@st.composite
def message_sets(draw):
    k = draw(st.integers(1, 3))
    vals = draw(st.lists(st.integers(0, 3), min_size=4 ** k, max_size=4 ** k))
    words = oracles.words(2, k)
    idx = draw(st.lists(st.integers(0, len(words) - 1), min_size=2, max_size=6, unique=True))
    t = draw(st.integers(1, 3))
    return table_function(Z4, k, vals), [words[i] for i in idx], t


@settings(max_examples=100, deadline=None)
@given(message_sets())
def test_requirement_matrix_properties(data):
    f, xs, t = data
    D = requirement_matrix(f, t, xs)
    D1 = requirement_matrix(f, t + 1, xs)
    for i in range(len(xs)):
        for j in range(len(xs)):
            e = D.entries[i][j]
            assert e == D.entries[j][i] and 0 <= e <= 2 * t + 1
            want = max(0, 2 * t + 1 - oracles.dist(xs[i], xs[j], 2)) if f(xs[i]) != f(xs[j]) else 0
            assert e == want
            if e > 0:
                assert D1.entries[i][j] == e + 2


def test_plotkin_values():
    D2, D3 = three_point_matrix(2), three_point_matrix(3)
    assert D2.total() == 22 and D3.total() == 34
    assert plotkin_fraction_generic(D2) == Fraction(22, 9) and plotkin_bound_generic(D2) == 3
    assert plotkin_fraction_generic(D3) == Fraction(34, 9) and plotkin_bound_generic(D3) == 4
    assert plotkin_fraction_z4(D3) == Fraction(34, 8) and plotkin_bound_z4(D3) == 5
    assert plotkin_bound_z4(D2) == 3
    zero = RequirementMatrix(((0, 0), (0, 0)))
    assert plotkin_bound_generic(zero) == 0 and plotkin_bound_z4(zero) == 0
    with pytest.raises(DomainError):
        plotkin_bound_z4(D2, RingParams(3))


def test_z4_divisor_by_residue():
    # M = 4 keeps M^2, M = 5 uses M^2 - 1
    D4 = RequirementMatrix(tuple(tuple(0 if i == j else 1 for j in range(4)) for i in range(4)))
    assert plotkin_fraction_z4(D4, Z4) == Fraction(12, 16)
    D5 = RequirementMatrix(tuple(tuple(0 if i == j else 1 for j in range(5)) for i in range(5)))
    assert plotkin_fraction_z4(D5, Z4) == Fraction(20, 24)


@st.composite
def matrices(draw):
    m = draw(st.integers(1, 6))
    e = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            e[i][j] = e[j][i] = draw(st.integers(0, 9))
    return RequirementMatrix(tuple(map(tuple, e)))


@given(matrices())
def test_z4_bound_dominates_generic(D):
    assert plotkin_bound_z4(D, Z4) >= plotkin_bound_generic(D)


def test_redundancy_lower_bound():
    f = three_value_function()
    assert redundancy_lower_bound(f, 2, THREE_POINT_MESSAGES) == 3
    assert redundancy_lower_bound(f, 3, THREE_POINT_MESSAGES) == 5
    const = table_function(Z4, 1, [0] * 4)
    assert redundancy_lower_bound(const, 2, [(0,), (1,)]) == 0
    # floor t applies even to a far-apart pair
    g = hom_weight_function(Z4, 3)
    assert redundancy_lower_bound(g, 2, [(0, 0, 0), (2, 2, 2)]) >= 2


@pytest.mark.parametrize("f", [three_value_function(), modular_sum(Z4, 2), hom_weight_function(Z4, 2)])
def test_redundancy_lower_bound_monotone(f):
    xs = oracles.words(2, f.k)[:5]
    vals = [redundancy_lower_bound(f, t, xs) for t in (1, 2, 3)]
    assert vals == sorted(vals)


def test_modular_sum_bound():
    b = modular_sum_lower_bound(2, 1)
    assert b.value == Fraction(5, 4) and b.ceiling == 2 and b.optimal == 2
    b = modular_sum_lower_bound(3, 2)
    assert b.value == Fraction(27, 8) and b.ceiling == 4 and b.optimal == 4
    assert modular_sum_lower_bound(2, 2).optimal is None
    for t in range(1, 30):
        assert modular_sum_lower_bound(3, t).value < 2 * t


def test_linear_plotkin_bound():
    assert linear_plotkin_bound(example_linear(), 2) == Fraction(15, 8)
    assert linear_plotkin_bound(modular_sum_as_linear(Z4, 2), 1) == Fraction(3, 4)
    inv = linear(Z4, ((1, 1), (0, 1)))
    assert linear_plotkin_bound(inv, 1) + 2 == bijective_length_bound(Z4, 2, 1) == Fraction(45, 16)
    with pytest.raises(HypothesisError):
        linear_plotkin_bound(linear(Z4, ((2, 2),)), 1)
    with pytest.raises(DomainError):
        linear_plotkin_bound(modular_sum(Z4, 2), 1)


def test_upper_bound_from_lambda():
    assert upper_bound_from_lambda(3, 2) == 3
    assert upper_bound_from_lambda(3, 1) == 2
    assert upper_bound_from_lambda(4, 2) == 4
    with pytest.raises(DomainError):
        upper_bound_from_lambda(1, 2)
    for lam in range(2, 12):
        for t in range(1, 12):
            assert upper_bound_from_lambda(lam, t) >= t
