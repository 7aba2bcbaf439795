import warnings

import pytest

from invar.errors import DivisionByZero, FieldMismatch, InvalidFieldSpec, ParseError
from invar.fields import (
    NumberField,
    PrimeField,
    Rationals,
    ReducibleMinimalPolynomialWarning,
    UnverifiedIrreducibilityWarning,
    characteristic,
    field_arith,
)
from invar.prng import XorShift

Q = Rationals()
G7 = PrimeField(7)
SQRT2 = NumberField([-2, 0, 1], "w")


def test_rational_arithmetic():
    assert Q.scalar(1) / 2 + Q.scalar(1) / 3 == Q.parse("5/6")


def test_prime_field_division():
    assert G7.scalar(3) / G7.scalar(5) == G7.scalar(2)


def test_extension_multiplication():
    w = SQRT2.generator
    assert (SQRT2.one + w) * (SQRT2.one - w) == SQRT2.scalar(-1)


def test_field_arith_dispatch():
    a, b = Q.scalar(3), Q.scalar(4)
    assert field_arith(a, b, "add") == Q.scalar(7)
    assert field_arith(a, b, "sub") == Q.scalar(-1)
    assert field_arith(a, b, "mul") == Q.scalar(12)
    assert field_arith(a, b, "div") == Q.parse("3/4")


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        Q.one / Q.zero
    with pytest.raises(DivisionByZero):
        G7.one / G7.zero
    with pytest.raises(DivisionByZero):
        SQRT2.one / SQRT2.zero


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        Q.one + G7.one
    with pytest.raises(FieldMismatch):
        field_arith(Q.one, SQRT2.one, "mul")


def test_parse_examples():
    assert Q.parse("-3/4") == Q.scalar(-3) / 4
    half = SQRT2.parse("(1+w)/2")
    assert half + half == SQRT2.one + SQRT2.generator
    assert G7.parse("9") == G7.scalar(2)


def test_parse_errors():
    with pytest.raises(ParseError):
        Q.parse("3 +")
    with pytest.raises(ParseError):
        Q.parse("1/0")
    with pytest.raises(ParseError):
        Q.parse("q")


def test_characteristic():
    assert characteristic(Q) == 0
    assert characteristic(PrimeField(7)) == 7
    assert characteristic(SQRT2) == 0


def test_prime_validation():
    with pytest.raises(InvalidFieldSpec):
        PrimeField(4)
    with pytest.raises(InvalidFieldSpec):
        PrimeField(1)
    PrimeField(2)
    PrimeField(100003)


def test_minimal_poly_validation():
    with pytest.raises(InvalidFieldSpec):
        NumberField([1, 1], "w")  # degree 1
    with pytest.raises(InvalidFieldSpec):
        NumberField([-2, 0, 2], "w")  # not monic
    with pytest.raises(InvalidFieldSpec):
        NumberField([1, 2, 1], "w")  # (w+1)^2, not squarefree


def test_reducibility_warnings():
    with pytest.warns(ReducibleMinimalPolynomialWarning):
        NumberField([-1, 0, 1], "w")  # w^2 - 1, rational roots
    with pytest.warns(ReducibleMinimalPolynomialWarning):
        NumberField([2, 0, 3, 0, 1], "w")  # (w^2+1)(w^2+2)
    with pytest.warns(ReducibleMinimalPolynomialWarning):
        NumberField([0, 1, 0, 1], "w")  # w(w^2+1): zero is a root
    with pytest.warns(UnverifiedIrreducibilityWarning):
        NumberField([-2, 0, 0, 0, 0, 1], "w")  # degree 5, unverified
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        NumberField([1, 1, 1, 1, 1], "w")  # 5th cyclotomic: irreducible quartic
        NumberField([1, 0, 0, 0, 1], "w")  # w^4 + 1: irreducible
        NumberField([-2, 0, 1], "w")


def test_zero_divisor_detection():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        bad = NumberField([-1, 0, 1], "w")  # w^2 - 1
    with pytest.raises(DivisionByZero):
        (bad.generator - bad.one).inverse()


def _random_scalars(field, rng, count):
    out = []
    for _ in range(count):
        if isinstance(field, PrimeField):
            out.append(field.scalar(rng.randint(0, field.p - 1)))
        elif isinstance(field, NumberField):
            s = field.zero
            for i in range(field.degree):
                s = s + field.generator ** i * rng.randint(-9, 9)
            out.append(s)
        else:
            num = rng.randint(-99, 99)
            den = rng.randint(1, 30)
            out.append(field.scalar(num) / den)
    return out


@pytest.mark.parametrize("field", [Q, G7, SQRT2], ids=["Q", "GF7", "Q(sqrt2)"])
def test_field_axioms_on_random_triples(field):
    rng = XorShift(7)
    scalars = _random_scalars(field, rng, 3000)
    for i in range(0, 3000, 3):
        a, b, c = scalars[i : i + 3]
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("field", [Q, G7, SQRT2], ids=["Q", "GF7", "Q(sqrt2)"])
def test_multiplicative_inverse(field):
    rng = XorShift(11)
    for a in _random_scalars(field, rng, 200):
        if not a.is_zero():
            assert a * a.inverse() == field.one


@pytest.mark.parametrize("field", [Q, G7, SQRT2], ids=["Q", "GF7", "Q(sqrt2)"])
def test_parse_format_roundtrip(field):
    rng = XorShift(13)
    for a in _random_scalars(field, rng, 300):
        assert field.parse(str(a)) == a
