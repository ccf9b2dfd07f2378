from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from posbasis.polycore import Polynomial
from posbasis.sets import canonicalize

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_ints = st.integers(min_value=-20, max_value=20)
rationals = st.builds(Fraction, small_ints, st.integers(min_value=1, max_value=8))


@st.composite
def polynomials(draw, max_degree=5, nonzero=False):
    coeffs = draw(st.lists(rationals, min_size=1, max_size=max_degree + 1))
    p = Polynomial(coeffs)
    if nonzero and p.is_zero():
        p = Polynomial([1])
    return p


@st.composite
def omegas(draw, min_len=1, max_len=9):
    return tuple(draw(st.lists(st.integers(0, 1), min_size=min_len, max_size=max_len)))


@st.composite
def compact_sets(draw, max_pieces=4, allow_finite=True):
    k = draw(st.integers(1, max_pieces))
    cuts = sorted(draw(st.lists(st.integers(0, 30), min_size=2 * k, max_size=2 * k, unique=True)))
    flags = draw(st.lists(st.booleans(), min_size=k, max_size=k))
    if not allow_finite:
        flags[draw(st.integers(0, k - 1))] = False
    pieces = []
    for i, point in enumerate(flags):
        lo, hi = cuts[2 * i], cuts[2 * i + 1]
        pieces.append((lo, lo) if point else (lo, hi))
    return canonicalize(pieces)


@pytest.fixture
def interval01():
    return canonicalize([(0, 1)])
