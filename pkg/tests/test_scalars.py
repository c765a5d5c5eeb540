from fractions import Fraction

import pytest

from core.errors import DocumentError, ScopeError
from linalg.scalars import (
    Cyclotomic,
    check_order,
    demote,
    euler_phi,
    format_scalar,
    parse_scalar,
    root_of_unity,
    scalar_add,
    scalar_inv,
    scalar_mul,
)


def test_rational_arithmetic_is_exact():
    assert scalar_add(Fraction(1, 3), Fraction(1, 6)) == Fraction(1, 2)
    assert scalar_mul(Fraction(2, 3), 3) == 2
    assert scalar_inv(Fraction(-2, 5)) == Fraction(-5, 2)


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        scalar_inv(0)
    with pytest.raises(ZeroDivisionError):
        scalar_inv(Cyclotomic(5))


def test_powers_of_zeta():
    i = Cyclotomic.zeta(4)
    assert i * i == -1
    assert i ** 4 == 1
    assert i ** -1 == -i
    assert Cyclotomic.zeta(2) == -1


def test_cube_roots_sum_to_minus_one():
    w = Cyclotomic.zeta(3)
    assert w + w * w == -1
    assert 1 + w + w ** 2 == 0


def test_embedding_between_fields():
    assert Cyclotomic.zeta(4).embed(8) == Cyclotomic.zeta(8) ** 2
    assert Cyclotomic.zeta(3) * Cyclotomic.zeta(4) == Cyclotomic.zeta(12, 7)


def test_inverse_in_cyclotomic_field():
    x = 1 + Cyclotomic.zeta(5) * 2
    assert x * x.inverse() == 1
    assert x / x == 1


def test_normalized_trace():
    assert Cyclotomic.zeta(3).normalized_trace() == Fraction(-1, 2)
    assert Cyclotomic.zeta(4).normalized_trace() == 0
    assert Cyclotomic.from_rational(7, 3).normalized_trace() == 3


def test_demote_rational_cyclotomic():
    value = demote(Cyclotomic.zeta(4) ** 2)
    assert isinstance(value, Fraction)
    assert value == -1
    assert isinstance(demote(Cyclotomic.zeta(4)), Cyclotomic)


def test_euler_phi():
    assert [euler_phi(n) for n in (1, 2, 3, 4, 5, 6, 12)] == [1, 1, 2, 2, 4, 2, 4]


def test_order_bound(monkeypatch):
    from core.config import config
    monkeypatch.setitem(config._overrides, "linalg.max_cyclotomic_order", 10)
    with pytest.raises(ScopeError):
        check_order(12)


def test_parse_and_format():
    assert parse_scalar("-3/4") == Fraction(-3, 4)
    assert parse_scalar(7) == 7
    assert parse_scalar({"order": 4, "coeffs": ["0", "1"]}) == Cyclotomic.zeta(4)
    assert format_scalar(Fraction(-1, 2)) == "-1/2"
    assert format_scalar(root_of_unity(3, 1)) == {"order": 3, "coeffs": ["0", "1"]}


@pytest.mark.parametrize("raw", [0.5, "1.5", "x", {"order": 4, "coeffs": ["1"]}, {"coeffs": []}])
def test_parse_rejects_inexact_or_malformed(raw):
    with pytest.raises(DocumentError):
        parse_scalar(raw, "here")
