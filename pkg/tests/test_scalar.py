from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from solvcoh.scalar import I, ONE, ZERO, Scalar

fracs = st.builds(Fraction, st.integers(-99, 99), st.integers(1, 20))
scalars = st.builds(Scalar, fracs, fracs)


@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(scalars.filter(bool))
def test_inverse(a):
    assert a * a.inverse() == ONE
    assert a / a == ONE


def test_canonical_form():
    s = Scalar(Fraction(2, -4), Fraction(6, 8))
    assert s.re.denominator == 2 and s.re.numerator == -1
    assert s.im == Fraction(3, 4)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("3", Scalar(3)),
        ("-1/2", Scalar(Fraction(-1, 2))),
        ("i", I),
        ("-i", -I),
        ("3i", Scalar(0, 3)),
        ("1/2-3i", Scalar(Fraction(1, 2), -3)),
        ("2+1/3i", Scalar(2, Fraction(1, 3))),
    ],
)
def test_parse(text, expected):
    assert Scalar.parse(text) == expected


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        Scalar.parse("1.5")
    with pytest.raises(ValueError):
        Scalar.parse("")


@given(scalars)
def test_str_roundtrip(a):
    assert Scalar.parse(str(a)) == a


def test_misc():
    assert I * I == -ONE
    assert not ZERO
    assert Scalar(1, 2).conjugate() == Scalar(1, -2)
    assert Scalar(3) == 3
    assert hash(Scalar(3)) == hash(Fraction(3))
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()
    with pytest.raises(AttributeError):
        ONE.re = 2
