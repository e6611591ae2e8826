"""Exact Gaussian-rational arithmetic."""

from fractions import Fraction

import pytest

from symdirac.rational import GaussianRational, ZERO, ONE, I, gq

from conftest import random_gq


def test_i_squared():
    assert I * I == GaussianRational(-1)


def test_conjugate_pair_sum():
    half = Fraction(1, 2)
    a = GaussianRational(half, half)
    b = GaussianRational(half, -half)
    assert a + b == ONE


def test_norm_product():
    # (2+3i)(2-3i) = 2^2 + 3^2
    z = GaussianRational(2, 3)
    assert z * z.conjugate() == GaussianRational(13)


@pytest.mark.parametrize(
    "value,expected",
    [
        (GaussianRational(2), GaussianRational(Fraction(1, 2))),
        (I, -I),
        (GaussianRational(1, 1), GaussianRational(Fraction(1, 2), Fraction(-1, 2))),
    ],
)
def test_inverse(value, expected):
    assert value.inverse() == expected
    assert value * value.inverse() == ONE


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_canonical_form():
    z = GaussianRational(Fraction(2, 4), Fraction(-6, 8))
    assert (z.an, z.bn, z.den) == (2, -3, 4)
    assert z.den > 0
    assert z == GaussianRational(Fraction(1, 2), Fraction(-3, 4))
    assert hash(z) == hash(GaussianRational(Fraction(1, 2), Fraction(-3, 4)))


def test_field_properties_random(rng):
    for _ in range(300):
        a, b, c = (random_gq(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        if a:
            assert a * a.inverse() == ONE
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()
        assert a.conjugate().conjugate() == a


def test_str_parse_roundtrip(rng):
    fixed = [ZERO, ONE, I, -I, GaussianRational(Fraction(1, 2), Fraction(3, 4))]
    for z in fixed:
        assert GaussianRational.parse(str(z)) == z
    for _ in range(200):
        z = random_gq(rng)
        assert GaussianRational.parse(str(z)) == z


@pytest.mark.parametrize(
    "text,re_,im_",
    [
        ("0", 0, 0),
        ("-7/3", Fraction(-7, 3), 0),
        ("i", 0, 1),
        ("-i", 0, -1),
        ("2/5 i", 0, Fraction(2, 5)),
        ("1/2 + 3/4 i", Fraction(1, 2), Fraction(3, 4)),
        ("1 - i", 1, -1),
    ],
)
def test_parse_forms(text, re_, im_):
    z = GaussianRational.parse(text)
    assert z.re == re_ and z.im == im_


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        GaussianRational.parse("1 + q")


def test_mixed_arithmetic_with_ints():
    assert 2 * I == GaussianRational(0, 2)
    assert I + 1 == GaussianRational(1, 1)
    assert 1 - I == GaussianRational(1, -1)
    assert (ONE + I) / 2 == GaussianRational(Fraction(1, 2), Fraction(1, 2))


def test_units():
    assert all(u.is_unit() for u in (ONE, -ONE, I, -I))
    assert not GaussianRational(2).is_unit()
    assert not GaussianRational(1, 1).is_unit()
