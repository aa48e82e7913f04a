"""Tests for exact rationals and the quadratic extension Q[t]/(t^2 - D)."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from la_verifier.algebra.scalars import QuadExt, as_rational, quad_arith, rat_arith, surd_conjugate
from la_verifier.errors import DiscriminantMismatch, DivisionByZero, InvalidParams, NonInvertible, SurdPartRemains
from la_verifier.utils import parse_rational, parse_rational_list, rational_to_str

small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def quad(d):
    return st.builds(lambda x, y: QuadExt(x, y, d), small_fractions, small_fractions)


def test_rat_arith_basic():
    assert rat_arith("add", Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert rat_arith("mul", 4, Fraction(3, 8)) == Fraction(3, 2)
    assert rat_arith("div", 1, 3) == Fraction(1, 3)


def test_rat_arith_division_by_zero():
    with pytest.raises(DivisionByZero):
        rat_arith("div", 1, 0)


def test_rat_arith_unknown_op():
    with pytest.raises(ValueError):
        rat_arith("pow", 1, 2)


def test_quadext_conjugate_product_is_rational():
    z = QuadExt(1, 1, 5)
    product = z * z.conjugate()
    assert product.is_rational()
    assert product == -4
    assert z.norm() == -4


def test_quadext_inverse():
    z = QuadExt(Fraction(3, 2), -2, 7)
    assert z * z.inverse() == 1
    assert z / z == 1


def test_quadext_zero_norm_is_not_invertible():
    # D = 4 is a perfect square: 2 + t has norm 4 - 4 = 0
    z = QuadExt(2, 1, 4)
    with pytest.raises(NonInvertible):
        z.inverse()


def test_quadext_division_by_zero():
    with pytest.raises(DivisionByZero):
        QuadExt(1, 1, 5) / 0


def test_quadext_needs_discriminant():
    with pytest.raises(TypeError):
        QuadExt(1, 1)
    assert QuadExt.rational(3, -7).d == -7


def test_quadext_rejects_zero_discriminant():
    with pytest.raises(InvalidParams):
        QuadExt(1, 1, 0)


def test_discriminant_mismatch():
    with pytest.raises(DiscriminantMismatch):
        QuadExt(1, 1, 5) + QuadExt(1, 1, 2)
    with pytest.raises(DiscriminantMismatch):
        quad_arith("mul", QuadExt(0, 1, 3), QuadExt(0, 1, -3))


def test_negative_powers():
    z = QuadExt(1, 2, -3)
    assert z ** -2 * z ** 2 == 1
    assert z ** 0 == 1


def test_generator_squares_to_discriminant():
    t = QuadExt.generator(-7)
    assert t * t == -7


def test_rational_equality_and_hash():
    assert QuadExt(3, 0, 5) == Fraction(3)
    assert hash(QuadExt(3, 0, 5)) == hash(Fraction(3))
    assert QuadExt(3, 0, 5) == QuadExt(3, 0, 2)
    assert QuadExt(3, 1, 5) != QuadExt(3, 1, 2)


def test_to_rational_refuses_surd():
    with pytest.raises(SurdPartRemains) as info:
        QuadExt(1, 1, 5).to_rational()
    assert isinstance(info.value, ArithmeticError)
    assert as_rational(QuadExt(Fraction(2, 3), 0, 5)) == Fraction(2, 3)


def test_surd_conjugate():
    assert surd_conjugate(QuadExt(1, 2, 5)) == QuadExt(1, -2, 5)
    assert surd_conjugate(Fraction(1, 2)) == Fraction(1, 2)


def test_to_dict_is_exact():
    assert QuadExt(Fraction(1, 2), Fraction(-1, 2), 5).to_dict() == {"x": "1/2", "y": "-1/2", "D": 5}


@settings(max_examples=200, deadline=None)
@given(quad(5), quad(5), quad(5))
def test_ring_laws(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x - x == 0


@settings(max_examples=100, deadline=None)
@given(quad(-3))
def test_norm_is_multiplicative_with_conjugate(x):
    assert (x * x.conjugate()).x == x.norm()
    assert (x * x.conjugate()).y == 0


def test_parse_rational():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational(" -2 ") == Fraction(-2)
    assert parse_rational(5) == Fraction(5)
    with pytest.raises(TypeError):
        parse_rational(0.5)
    with pytest.raises(TypeError):
        parse_rational(True)
    with pytest.raises(ValueError):
        parse_rational("1.5")


def test_parse_rational_list():
    assert parse_rational_list("-2..2") == [Fraction(k) for k in range(-2, 3)]
    assert parse_rational_list("0,1/2,3..4") == [Fraction(0), Fraction(1, 2), Fraction(3), Fraction(4)]
    with pytest.raises(ValueError):
        parse_rational_list(" , ")


def test_rational_to_str():
    assert rational_to_str(Fraction(4, 2)) == "2"
    assert rational_to_str(Fraction(-3, 6)) == "-1/2"
