from fractions import Fraction

import pytest

from tannakit import GF, QQ, FieldError
from tannakit.fields import field_from_config, field_to_config


def test_rational_normalization():
    x = QQ.parse("4/6")
    assert (x.numerator, x.denominator) == (2, 3)
    y = QQ.parse("-3/-9")  # Fraction normalizes the sign into the numerator
    assert y == Fraction(1, 3) and y.denominator > 0
    assert QQ.format(QQ.parse("8/4")) == "2"
    assert QQ.format(Fraction(-5, 10)) == "-1/2"


def test_rational_division_by_zero():
    with pytest.raises(FieldError):
        QQ.inv(Fraction(0))


def test_prime_field_arithmetic():
    f5 = GF(5)
    assert f5.add(3, 4) == 2
    assert f5.mul(3, 4) == 2
    assert f5.inv(2) == 3
    assert f5.neg(1) == 4
    assert f5.format(7) == "2 mod 5"
    assert f5.parse("12 mod 5") == 2
    assert f5.parse("-1") == 4
    with pytest.raises(FieldError):
        f5.inv(0)
    with pytest.raises(FieldError):
        f5.parse("1 mod 7")


def test_prime_field_rejects_composite():
    with pytest.raises(FieldError):
        GF(6)


def test_field_axioms_exact():
    f7 = GF(7)
    for a in f7.elements():
        for b in f7.elements():
            assert f7.add(a, b) == f7.add(b, a)
            assert f7.mul(a, b) == f7.mul(b, a)
            if b != 0:
                assert f7.mul(f7.div(a, b), b) == a


def test_field_config_codec():
    assert field_from_config("Q") == QQ
    assert field_from_config({"Fp": 3}) == GF(3)
    assert field_to_config(QQ) == "Q"
    assert field_to_config(GF(3)) == {"Fp": 3}
    with pytest.raises(FieldError):
        field_from_config({"weird": 1})
