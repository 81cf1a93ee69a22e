from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import field_elements, nonzero_rationals, rationals
from so3five.scalars import (
    EXACT,
    FLOAT,
    QF,
    R2,
    R3,
    R6,
    ScalarParseError,
    format_scalar,
    is_zero,
    parse_scalar,
    sqrt_const,
    to_float,
    to_mode,
)


def test_square_roots_are_field_identities():
    assert R2 * R2 == 2
    assert R3 * R3 == 3
    assert R2 * R3 == R6
    assert R6 * R6 == 6


@given(field_elements(), field_elements(), field_elements())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(field_elements())
def test_inverse(a):
    if a == 0:
        with pytest.raises(ZeroDivisionError):
            QF(1) / a
    else:
        assert a * (QF(1) / a) == 1


@given(field_elements())
def test_text_round_trip(a):
    assert parse_scalar(format_scalar(a)) == a


@given(field_elements())
def test_float_image_is_a_homomorphism(a):
    b = a * a + R3
    assert abs(to_float(b) - (to_float(a) ** 2 + 3**0.5)) < 1e-9


def test_canonical_format():
    assert format_scalar(QF(Fraction(1, 2), 0, -2, 0)) == "1/2 - 2*r3"
    assert format_scalar(QF(0)) == "0"
    assert format_scalar(-R3 * 18) == "-18*r3"
    assert format_scalar(0.25) == "0.25"


@pytest.mark.parametrize(
    "text,value",
    [
        ("1/2 + 3*r2", QF(Fraction(1, 2), 3, 0, 0)),
        ("r2*r3", R6),
        ("(1 + r3)^2", QF(4, 0, 2, 0)),
        ("2*t^2", QF(18)),
    ],
)
def test_parse_grammar(text, value):
    assert parse_scalar(text, EXACT, {"t": "3"}) == value


def test_parse_errors_report_column():
    with pytest.raises(ScalarParseError) as info:
        parse_scalar("1 + * r3")
    assert info.value.position is not None
    with pytest.raises(ScalarParseError, match="decimal"):
        parse_scalar("0.5", EXACT)
    with pytest.raises(ScalarParseError):
        parse_scalar("sqrt(5)")
    with pytest.raises(ScalarParseError):
        parse_scalar("1/0")


def test_float_mode_accepts_decimals():
    assert parse_scalar("0.5 + r2", FLOAT) == pytest.approx(0.5 + 2**0.5)


def test_mixed_mode_arithmetic_is_rejected():
    with pytest.raises(TypeError):
        QF(1) + 0.5


@given(rationals, nonzero_rationals)
def test_to_mode_and_zero(a, b):
    assert is_zero(to_mode(a, EXACT) - a)
    assert not is_zero(to_mode(b, EXACT))
    assert to_mode(a, FLOAT) == pytest.approx(float(a))


@given(st.sampled_from([2, 3, 6]))
def test_sqrt_const_modes(n):
    assert to_float(sqrt_const(n, EXACT)) == pytest.approx(sqrt_const(n, FLOAT))


def test_integer_exponents_in_float_mode():
    assert parse_scalar("2*t^2", FLOAT, {"t": 3.0}) == 18.0
    assert parse_scalar("2^-1", FLOAT) == 0.5
    with pytest.raises(ScalarParseError, match="integer"):
        parse_scalar("2^t", FLOAT, {"t": 2.0})
