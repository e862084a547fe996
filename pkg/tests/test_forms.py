from fractions import Fraction

import pytest

from canalg.forms import (CanonicalType, DimVector, a_dim, basis_e, basis_e0,
                          basis_einf, basis_h, delta, euler_form,
                          euler_quadratic, format_dim_vector,
                          parse_dim_vector, quadratic_lower_bound,
                          quadratic_via_decomposition, slope_one_vector,
                          zero_vector)

T222 = CanonicalType((2, 2, 2))
T236 = CanonicalType((2, 3, 6))
T237 = CanonicalType((2, 3, 7))
T5 = CanonicalType((5, 5, 5, 5, 5))

WITNESS_237 = parse_dim_vector("42;21/28,14/36,30,24,18,12,6;0")


def test_type_validation():
    with pytest.raises(ValueError):
        CanonicalType((2, 2))
    with pytest.raises(ValueError):
        CanonicalType((2, 1, 2))
    assert CanonicalType.parse("2,3,6") == T236
    with pytest.raises(ValueError):
        CanonicalType.parse("2,x,6")


def test_type_invariants():
    assert T236.total == 11
    assert T236.lcm == 6
    assert T236.product == 36
    assert T236.vertex_count == 10
    assert T237.sum_reciprocals == Fraction(41, 42)


def test_delta_values():
    assert delta(T236) == 0
    assert delta(T237) == Fraction(1, 84)
    assert delta(T5) == 1
    assert delta(T222) == Fraction(-1, 4)
    assert delta(CanonicalType((3,) * 7)) == Fraction(4, 3)


def test_euler_form_h_isotropic():
    for t in (T222, T236, T237, T5):
        assert euler_quadratic(t, basis_h(t)) == 0


def test_euler_form_witness_values():
    assert euler_quadratic(T237, WITNESS_237) == -21
    assert euler_form(T237, WITNESS_237, basis_h(T237)) == 42


def test_euler_form_shape_mismatch():
    with pytest.raises(ValueError):
        euler_form(T236, basis_h(T222), basis_h(T222))


def test_quadratic_via_decomposition_values():
    assert quadratic_via_decomposition(T236, basis_h(T236)) == 0
    assert quadratic_via_decomposition(T237, WITNESS_237) == -21
    assert quadratic_via_decomposition(T222, basis_e0(T222)) == 1


def test_basis_vectors():
    e10 = basis_e(T222, 1, 0)
    assert e10 == DimVector(1, 1, ((0,), (1,), (1,)))
    v = slope_one_vector(T236, (1, 0, 3))
    assert v == DimVector(1, 0, ((1,), (0, 0), (1, 1, 1, 0, 0)))
    with pytest.raises(ValueError):
        basis_e(T236, 2, 3)
    with pytest.raises(ValueError):
        slope_one_vector(T236, (1, 0, 6))


def test_basis_telescoping():
    for t in (T222, T236, T5):
        for i in range(1, t.n + 1):
            total = zero_vector(t)
            for j in range(t.m[i - 1]):
                total = total + basis_e(t, i, j)
            assert total == basis_h(t)


def test_a_dim_values():
    assert a_dim(T222, basis_h(T222)) == 5
    assert a_dim(T222, zero_vector(T222)) == 0
    # both defining expressions give 10 = number of vertices of (2,3,6)
    assert a_dim(T236, basis_h(T236)) == 10
    with pytest.raises(ValueError):
        a_dim(T222, zero_vector(T222) - basis_h(T222))


def test_quadratic_lower_bound():
    assert quadratic_lower_bound(T237, WITNESS_237) == (Fraction(-21), True)
    for t in (T222, T236, T5):
        assert quadratic_lower_bound(t, basis_h(t)) == (Fraction(0), True)
    bound, tight = quadratic_lower_bound(T222, basis_e0(T222))
    assert bound == Fraction(1, 4)
    assert not tight
    assert euler_quadratic(T222, basis_e0(T222)) > bound


def test_dim_vector_arithmetic():
    h = basis_h(T222)
    assert 3 * h - h == 2 * h
    assert (2 * h).entry(1, 0) == 2
    assert (2 * h).entry(1, 2) == 2
    assert basis_einf(T222).entry(2, 2) == 1


def test_text_form_round_trip():
    text = "42;21/28,14/36,30,24,18,12,6;0"
    assert format_dim_vector(parse_dim_vector(text)) == text
    with pytest.raises(ValueError):
        parse_dim_vector("1;2")
    with pytest.raises(ValueError):
        parse_dim_vector("1;a/b;2")
