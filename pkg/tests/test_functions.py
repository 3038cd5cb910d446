import pytest
from hypothesis import given, settings, strategies as st

from homfcc.errors import DomainError, IntegrityError, ShapeError
from homfcc.functions import (Kind, analyze_linear, evaluate, evaluate_all, format_matrix, format_table,
                              function_from_json, function_to_json, hom_weight_function, image, linear,
                              modular_sum, modular_sum_as_linear, parse_matrix, parse_selector,
                              parse_table, table_function, weight_distribution)
from homfcc.ring import RingParams
from homfcc.witnesses import example_linear

import oracles

Z4 = RingParams(2)


def test_evaluate_examples():
    assert evaluate(modular_sum(Z4, 2), (1, 1)) == 2
    assert evaluate(weight_distribution(Z4, 2, 2), (2, 1)) == 1
    assert evaluate(example_linear(), (1, 0, 0)) == (1, 0)
    assert evaluate(hom_weight_function(Z4, 3), (2, 3, 0)) == 3


def test_evaluate_shape_and_domain():
    with pytest.raises(ShapeError):
        evaluate(modular_sum(Z4, 2), (1,))
    with pytest.raises(DomainError):
        evaluate(modular_sum(Z4, 2), (1, 4))
    with pytest.raises(DomainError):
        weight_distribution(Z4, 2, 0)
    with pytest.raises(IntegrityError):
        table_function(Z4, 1, [0, 1, 2])


def test_image_examples():
    assert image(modular_sum(Z4, 3)) == [0, 1, 2, 3]
    assert image(hom_weight_function(Z4, 2)) == [0, 1, 2, 3, 4]
    assert image(table_function(Z4, 2, [7] * 16)) == [7]
    assert image(hom_weight_function(RingParams(1), 2)) == [0, 2, 4]


@pytest.mark.parametrize("s,k", [(1, 3), (2, 1), (2, 2), (2, 3), (3, 2)])
def test_closed_form_images_match_enumeration(s, k):
    ring = RingParams(s)
    for f in (hom_weight_function(ring, k), modular_sum(ring, k),
              weight_distribution(ring, k, 2), weight_distribution(ring, k, 3)):
        assert image(f) == sorted(set(evaluate_all(f)))
        if f.kind is Kind.HOM_WEIGHT:
            assert set(image(f)) <= set(range(2 * k + 1))
        elif f.kind is Kind.WEIGHT_DISTRIBUTION:
            assert set(image(f)) <= set(range(2 * k // f.threshold + 1))


def test_evaluate_all_matches_pointwise():
    ring = RingParams(3)
    for f in (hom_weight_function(ring, 2), weight_distribution(ring, 2, 3), modular_sum(ring, 2),
              linear(ring, ((1, 2), (3, 4)))):
        pointwise = [evaluate(f, w) for w in oracles.words(3, 2)]
        assert evaluate_all(f) == pointwise


def test_analyze_linear_examples():
    info = analyze_linear(example_linear())
    assert set(info.kernel) == {(c, (-c) % 4, c) for c in range(4)}
    assert info.kernel_size == 4 and info.kernel_weight_sum == 12
    assert info.surjective
    info = analyze_linear(modular_sum_as_linear(Z4, 2))
    assert set(info.kernel) == {(0, 0), (1, 3), (2, 2), (3, 1)}
    assert info.kernel_weight_sum == 8
    info = analyze_linear(linear(Z4, ((1, 0), (1, 1))))
    assert info.kernel == ((0, 0),) and info.kernel_weight_sum == 0
    # a non-surjective map: image is 2*Z_4
    assert not analyze_linear(linear(Z4, ((2, 2),))).surjective


@st.composite
def linear_maps(draw):
    s = draw(st.integers(1, 3))
    k = draw(st.integers(1, 8 // s if s > 1 else 4))
    ell = draw(st.integers(1, 2))
    m = 2 ** s
    F = tuple(tuple(draw(st.integers(0, m - 1)) for _ in range(k)) for _ in range(ell))
    x = tuple(draw(st.integers(0, m - 1)) for _ in range(k))
    y = tuple(draw(st.integers(0, m - 1)) for _ in range(k))
    c = draw(st.integers(0, m - 1))
    return RingParams(s), F, x, y, c


@settings(max_examples=150)
@given(linear_maps())
def test_linearity(data):
    ring, F, x, y, c = data
    f = linear(ring, F)
    fx, fy = f(x), f(y)
    assert f(ring.add(x, y)) == ring.add(fx, fy)
    assert f(ring.scale(c, x)) == ring.scale(c, fx)


@settings(max_examples=40, deadline=None)
@given(linear_maps())
def test_kernel_is_submodule_and_fibers_are_cosets(data):
    ring, F, _, _, _ = data
    f = linear(ring, F)
    info = analyze_linear(f)
    ker = set(info.kernel)
    assert (0,) * f.k in ker
    for u in list(ker)[:8]:
        for v in list(ker)[:8]:
            assert ring.add(u, v) in ker
        assert ring.scale(3 % ring.modulus, u) in ker
    if info.surjective:
        assert info.kernel_size == ring.modulus ** (f.k - f.ell)
        sizes = {}
        for v in evaluate_all(f):
            sizes[v] = sizes.get(v, 0) + 1
        assert set(sizes.values()) == {info.kernel_size}


def test_table_round_trip(tmp_path):
    f = table_function(Z4, 2, [(a % 2, a // 4) for a in range(16)])
    text = format_table(f)
    g = parse_table(text, Z4)
    assert evaluate_all(g) == evaluate_all(f)
    p = tmp_path / "f.txt"
    p.write_text(text)
    assert evaluate_all(parse_selector(f"table:{p}", Z4, 2)) == evaluate_all(f)


def test_table_parse_errors():
    with pytest.raises(IntegrityError):
        parse_table("0;1\n1;1\n", Z4)
    with pytest.raises(IntegrityError):
        parse_table("0;1\n0;2\n1;0\n2;0\n", Z4)
    with pytest.raises(DomainError):
        parse_table("0;1\n1;1\n2;x\n3;1\n", Z4)
    with pytest.raises(DomainError):
        parse_table("0;1\n1;1\n2;1\n4;1\n", Z4)
    with pytest.raises(ShapeError):
        parse_table("0;1\n1,0;1\n", Z4)


def test_matrix_round_trip():
    text = format_matrix(Z4, [[1, 1, 0], [0, 1, 1]])
    assert text.splitlines()[0] == "2 3 2"
    ring, mat = parse_matrix(text)
    assert ring == Z4 and mat == [[1, 1, 0], [0, 1, 1]]
    with pytest.raises(ShapeError):
        parse_matrix("2 3 2\n1 1 0\n")


def test_selectors():
    assert parse_selector("wdist:2", Z4, 3).threshold == 2
    assert parse_selector("msum-linear", Z4, 2).kind is Kind.LINEAR
    assert image(parse_selector("const:3", Z4, 2)) == [3]
    with pytest.raises(DomainError):
        parse_selector("bogus", Z4, 2)


def test_json_round_trip():
    for f in (hom_weight_function(Z4, 2), weight_distribution(Z4, 2, 3), modular_sum(Z4, 2),
              example_linear(), table_function(Z4, 1, [0, 1, 1, 2], name="t")):
        g = function_from_json(function_to_json(f))
        assert g.kind is f.kind and evaluate_all(g) == evaluate_all(f)
