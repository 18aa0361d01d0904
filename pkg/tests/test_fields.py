from fractions import Fraction

import pytest

from curvetorsion.fields import QQ, AlgNum, FieldError, NumberField, Rat, common_field


def test_rat_is_normalized_fraction():
    r = Rat(6, -4)
    assert r.numerator == -3 and r.denominator == 2


def test_zeta3_arithmetic():
    K = NumberField([1, 1, 1])  # t^2 + t + 1
    t = K.gen
    assert t**3 == 1
    assert t * t == -1 - t
    assert (1 + t) * (1 + t * t) == 1
    assert (t**2 + t + 1).is_zero()


def test_inverse_and_division():
    K = NumberField([-2, 0, 1])  # t^2 - 2
    t = K.gen
    inv = t.inverse()
    assert t * inv == 1
    assert (3 / t) * t == 3
    assert (t + 1) / (t + 1) == 1


def test_reducible_min_poly_rejected():
    with pytest.raises(FieldError):
        NumberField([-1, 0, 1])  # t^2 - 1 = (t-1)(t+1)


def test_non_monic_rejected():
    with pytest.raises(FieldError):
        NumberField([1, 1, 2])


def test_degree_four_power_basis():
    K = NumberField([1, 0, 0, 0, 1])  # t^4 + 1
    t = K.gen
    assert t**8 == 1
    assert (t**4) == -1
    assert (t**3 * t) == -1


def test_coercion_and_mixed_ops():
    K = NumberField([1, 1, 1])
    t = K.gen
    assert t + Fraction(1, 2) == K.element([Fraction(1, 2), 1])
    assert 2 * t == K.element([0, 2])
    with pytest.raises(FieldError):
        K2 = NumberField([-2, 0, 1])
        _ = K.gen + K2.gen


def test_quadratic_conjugation():
    K = NumberField([1, 1, 1])
    t = K.gen
    conj = K.conjugate(t)
    assert conj == -1 - t
    assert t * conj == 1  # norm of a root of t^2 + t + 1
    assert t + conj == -1


def test_tower_rejected():
    K1 = NumberField([1, 1, 1])
    K2 = NumberField([-2, 0, 1])
    with pytest.raises(FieldError):
        common_field(K1, K2)
    assert common_field(QQ, K1) == K1


def test_hashable_values():
    K = NumberField([1, 1, 1])
    assert len({K.gen, K.gen, K.one}) == 2
    assert hash(K.one) == hash(Fraction(1))
