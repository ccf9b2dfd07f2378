from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from posbasis.bernstein import (
    CapExceeded,
    bernstein_basis_poly,
    degree_elevate,
    from_bernstein,
    lorentz_degree,
    lorentz_theorem_applies,
    to_bernstein,
)
from posbasis.errors import DegreeTooLow, IndexOutOfRange, NotAdmissible
from posbasis.oracle import lorentz_oracle
from posbasis.polycore import Polynomial

from conftest import polynomials

X = Polynomial.x()
F = Fraction


@pytest.mark.parametrize("N, k, want", [(1, 0, 1 + X), (1, 1, 1 - X), (2, 1, 1 - X**2)])
def test_basis_elements(N, k, want):
    assert bernstein_basis_poly(N, k) == want


def test_basis_index_range():
    with pytest.raises(IndexOutOfRange):
        bernstein_basis_poly(2, 3)


def test_conversions():
    assert to_bernstein(X, 1) == [F(1, 2), F(-1, 2)]
    assert to_bernstein(Polynomial([1]), 2) == [F(1, 4), F(1, 2), F(1, 4)]
    assert to_bernstein(X**2 + 2, 2) == [F(3, 4), F(1, 2), F(3, 4)]
    assert to_bernstein(X**2 + F(1, 4), 2) == [F(5, 16), F(-3, 8), F(5, 16)]
    with pytest.raises(DegreeTooLow):
        to_bernstein(X**3, 2)


def test_elevation():
    assert degree_elevate([F(1)]) == [F(1, 2), F(1, 2)]
    up = degree_elevate([F(3, 4), F(1, 2), F(3, 4)])
    assert from_bernstein(up) == X**2 + 2
    assert up == to_bernstein(X**2 + 2, 3)


def test_lorentz_degrees():
    assert lorentz_degree(X**2 + 2) == 2
    assert lorentz_degree(1 - X) == 1
    # found by scanning lorentz_oracle upward
    assert lorentz_degree(X**2 + F(1, 4)) == 5
    assert lorentz_oracle(X**2 + F(1, 4), 5)
    assert not lorentz_oracle(X**2 + F(1, 4), 4)


def test_lorentz_oracle_examples():
    assert lorentz_oracle(X**2 + 2, 2)
    assert not lorentz_oracle(X**2 + F(1, 4), 2)
    assert lorentz_oracle(1 - X, 1)


def test_lorentz_rejects_and_caps():
    with pytest.raises(NotAdmissible):
        lorentz_degree(X)
    with pytest.raises(NotAdmissible):
        lorentz_degree(X**2)
    # boundary roots are fine
    assert lorentz_degree(1 - X**2) == 2
    with pytest.raises(CapExceeded) as info:
        lorentz_degree(X**2 + F(1, 1000), cap=20)
    assert info.value.cap == 20


def test_theorem_predicate():
    assert lorentz_theorem_applies(X**2 + 2)
    assert not lorentz_theorem_applies(X**2 + F(1, 4))
    assert lorentz_theorem_applies((X - 2) ** 2)


@given(polynomials(max_degree=6), st.integers(0, 3))
def test_roundtrip(p, extra):
    N = (0 if p.is_zero() else p.degree) + extra
    assert from_bernstein(to_bernstein(p, N)) == p
    assert degree_elevate(to_bernstein(p, N)) == to_bernstein(p, N + 1)


@given(st.lists(st.fractions(min_value=0, max_value=5, max_denominator=7), min_size=1, max_size=6))
def test_elevation_keeps_nonnegativity(c):
    assert all(v >= 0 for v in degree_elevate(c))


@given(st.fractions(min_value=F(1, 50), max_value=3, max_denominator=50), st.fractions(-1, 1, max_denominator=9))
def test_minimality_and_monotonicity(c, s):
    p = (X - s) ** 2 + c
    L = lorentz_degree(p)
    assert lorentz_oracle(p, L)
    if L > p.degree:
        assert not lorentz_oracle(p, L - 1)
    assert lorentz_oracle(p, L + 1)
