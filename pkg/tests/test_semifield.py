"""Scalar arithmetic on the four carriers."""

from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from tropsolve import (
    MAX_PLUS,
    MAX_TIMES,
    MIN_PLUS,
    MIN_TIMES,
    CarrierDomainError,
    TagMismatchError,
    ZeroInversionError,
    inverse,
    leq,
    oplus,
    otimes,
    power,
)

ALL = (MAX_PLUS, MIN_PLUS, MAX_TIMES, MIN_TIMES)


def test_oplus_definitional():
    assert oplus(MAX_PLUS.scalar(2), MAX_PLUS.scalar(3)).v == 3
    assert oplus(MAX_PLUS.zero, MAX_PLUS.scalar(7)).v == 7
    assert oplus(MIN_TIMES.scalar(2), MIN_TIMES.scalar(3)).v == 2


def test_otimes_definitional():
    assert otimes(MAX_PLUS.scalar(2), MAX_PLUS.scalar(3)).v == 5
    assert otimes(MAX_PLUS.zero, MAX_PLUS.scalar(3)).is_zero
    assert otimes(MAX_TIMES.scalar(2), MAX_TIMES.scalar(3)).v == 6


def test_inverse_definitional():
    assert inverse(MAX_PLUS.scalar(5)).v == -5
    assert inverse(MAX_TIMES.scalar(4)).v == pytest.approx(0.25)
    for sf in ALL:
        assert inverse(sf.one) == sf.one
    with pytest.raises(ZeroInversionError):
        inverse(MAX_PLUS.zero)


def test_power_definitional():
    assert power(MAX_PLUS.scalar(4), F(1, 2)).v == 2
    assert power(MAX_PLUS.scalar(3), -1).v == -3
    assert power(MAX_TIMES.scalar(9), F(1, 2)).v == pytest.approx(3.0)
    for sf in ALL:
        assert power(sf.zero, 3).is_zero
        assert power(sf.scalar(2), 0) == sf.one
        with pytest.raises(ZeroInversionError):
            power(sf.zero, 0)
        with pytest.raises(ZeroInversionError):
            power(sf.zero, -1)


def test_leq_definitional():
    assert leq(MAX_PLUS.scalar(1), MAX_PLUS.scalar(2))
    assert not leq(MIN_PLUS.scalar(1), MIN_PLUS.scalar(2))
    for sf in ALL:
        for v in (1, 2, 100):
            assert leq(sf.zero, sf.scalar(v))


def test_zero_one_distinct_and_neutral():
    for sf in ALL:
        assert sf.zero != sf.one
        x = sf.scalar(3)
        assert x + sf.zero == x
        assert x * sf.one == x
        assert (x * sf.zero).is_zero


def test_tag_mismatch_raises():
    with pytest.raises(TagMismatchError):
        oplus(MAX_PLUS.scalar(1), MIN_PLUS.scalar(1))
    with pytest.raises(TagMismatchError):
        otimes(MAX_PLUS.scalar(1), MAX_TIMES.scalar(1))
    with pytest.raises(TagMismatchError):
        leq(MAX_PLUS.scalar(1), MIN_PLUS.scalar(1))


def test_multiplicative_carrier_domain():
    with pytest.raises(CarrierDomainError):
        MAX_TIMES.scalar(-1)
    with pytest.raises(CarrierDomainError):
        MIN_TIMES.scalar(0)


def test_literals_round_trip():
    s = MAX_PLUS.scalar("7/2")
    assert s.v == F(7, 2) and s.literal() == "7/2"
    assert MAX_PLUS.scalar("-3").literal() == "-3"
    assert MAX_PLUS.scalar(2.5).v == F(5, 2)
    assert MAX_PLUS.from_literal("null").is_zero
    assert MAX_PLUS.from_literal(".").is_zero
    assert MAX_PLUS.zero.literal() == "null"
    assert MAX_PLUS.zero.literal(".") == "."
    t = MAX_TIMES.scalar(2.5)
    assert MAX_TIMES.from_literal(t.literal()) == t


# ----------------------------------------------------------------------
# algebraic laws, exercised per carrier

_payloads = st.one_of(st.none(), st.integers(-30, 30),
                      st.fractions(min_value=-30, max_value=30,
                                   max_denominator=8))
_mult_payloads = st.one_of(st.none(), st.floats(min_value=0.01, max_value=100.0,
                                                allow_nan=False))


def _scalars(sf):
    payload = _payloads if sf.additive else _mult_payloads
    return st.builds(sf.scalar, payload)


@pytest.mark.parametrize("sf", ALL, ids=lambda s: s.tag)
def test_semiring_laws(sf):
    @given(_scalars(sf), _scalars(sf), _scalars(sf))
    def check(a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a + a == a
        assert a * (b + c) == a * b + a * c

    check()


@pytest.mark.parametrize("sf", ALL, ids=lambda s: s.tag)
def test_isotonicity(sf):
    @given(_scalars(sf), _scalars(sf), _scalars(sf))
    def check(a, b, c):
        lo, hi = (a, b) if a <= b else (b, a)
        assert lo + c <= hi + c
        assert lo * c <= hi * c

    check()


@pytest.mark.parametrize("sf", ALL, ids=lambda s: s.tag)
def test_total_order_trichotomy(sf):
    @given(_scalars(sf), _scalars(sf))
    def check(a, b):
        assert sum((a < b, a == b, b < a)) == 1

    check()


@pytest.mark.parametrize("sf", (MAX_PLUS, MIN_PLUS), ids=lambda s: s.tag)
def test_power_composition_exact(sf):
    exps = st.fractions(min_value=-4, max_value=4, max_denominator=6)

    @given(_scalars(sf).filter(lambda s: not s.is_zero), exps, exps)
    def check(a, p, q):
        assert (a ** p) ** q == a ** (p * q)

    check()


def test_power_composition_multiplicative_tolerance():
    a = MAX_TIMES.scalar(7.3)
    assert (a ** F(2, 3)) ** F(3, 2) == a


@pytest.mark.parametrize("sf", ALL, ids=lambda s: s.tag)
def test_sum_bound_splits(sf):
    # x + y <= z is the same as (x <= z and y <= z)
    @given(_scalars(sf), _scalars(sf), _scalars(sf))
    def check(x, y, z):
        assert (x + y <= z) == (x <= z and y <= z)

    check()


@pytest.mark.parametrize("sf", ALL, ids=lambda s: s.tag)
def test_inverse_cancels(sf):
    @given(_scalars(sf).filter(lambda s: not s.is_zero))
    def check(a):
        assert a.inv() * a == sf.one

    check()
