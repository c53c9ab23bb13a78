import pytest
from hypothesis import given
from hypothesis import strategies as st

from tanglematrix.cyclotomic import (
    A, ONE, ZERO, CycInt, ZPhi, cyc_add, cyc_mul, monomial, to_zphi, zphi_mul_power,
)
from tanglematrix.errors import NotMonomial

ints = st.integers(-10**6, 10**6)
cyc = st.builds(CycInt, ints, ints, ints, ints)
zphi = st.builds(ZPhi.of, ints, st.integers(-20, 20))


def test_add_examples():
    assert cyc_add(CycInt(1, 1), CycInt(1, -1)) == CycInt(2)
    assert cyc_add(ZERO, CycInt(3, 1, 4, 1)) == CycInt(3, 1, 4, 1)
    assert cyc_add(CycInt(0, 0, 0, 1), CycInt(0, 0, 0, 1)) == CycInt(0, 0, 0, 2)


def test_mul_examples():
    assert cyc_mul(A, CycInt(0, 0, 0, 1)) == CycInt(-1)
    assert cyc_mul(CycInt(0, 0, 1), CycInt(0, 0, 1)) == CycInt(-1)
    assert cyc_mul(CycInt(1, 1), CycInt(1, -1)) == CycInt(1, 0, -1)


def test_to_zphi_examples():
    assert to_zphi(CycInt(0, 0, 3)) == ZPhi(3, 2)
    assert to_zphi(A + A * monomial(1, 4)) == ZPhi(0, 0)
    with pytest.raises(NotMonomial):
        to_zphi(CycInt(1, 1))


def test_mul_power_examples():
    assert zphi_mul_power(ZPhi(1, 3), 1) == ZPhi(-1, 0)
    assert zphi_mul_power(ZPhi(2, 0), 2) == ZPhi(2, 2)
    assert zphi_mul_power(ZPhi(5, 1), -2) == ZPhi(-5, 3)


def test_zero_is_canonical():
    assert ZPhi.of(0, 3) == ZPhi(0, 0)
    with pytest.raises(ValueError):
        ZPhi(0, 2)
    with pytest.raises(ValueError):
        ZPhi(1, 4)


def test_no_silent_overflow():
    big = CycInt(2**62, 0, 0, 0)
    assert cyc_mul(big, big).c0 == 2**124


@given(cyc, cyc, cyc)
def test_ring_axioms(a, b, c):
    assert a * (b * c) == (a * b) * c
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a * ONE == a


def test_a_has_order_eight():
    x = ONE
    for k in range(1, 9):
        x = x * A
        assert (x == ONE) == (k == 8)
    assert x * 1 == ONE


@given(zphi, zphi)
def test_to_zphi_is_multiplicative(z, w):
    assert to_zphi(cyc_mul(z.to_cyc(), w.to_cyc())) == z * w


@given(zphi, st.integers(-50, 50))
def test_mul_power_period_and_magnitude(z, e):
    assert zphi_mul_power(z, 8) == z
    assert abs(zphi_mul_power(z, e)) == abs(z)
    assert zphi_mul_power(zphi_mul_power(z, e), -e) == z


@given(zphi)
def test_zphi_roundtrip(z):
    assert to_zphi(z.to_cyc()) == z


@given(ints, ints, st.integers(0, 3), st.integers(0, 3))
def test_two_terms_monomial_iff_same_phase_class(a, b, k, l):
    # a*A^k + b*A^l is of the form p*A^m exactly when ab = 0 or k = l
    x = monomial(a, k) + monomial(b, l)
    expect = a * b == 0 or k == l
    try:
        to_zphi(x)
        got = True
    except NotMonomial:
        got = False
    assert got == expect
