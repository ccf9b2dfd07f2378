"""Bernstein–Lorentz representations on [-1, 1].

``e(N, k) = (1 - x)**k * (1 + x)**(N - k)``.  A polynomial has a positive
representation of degree N when all its coefficients in that system are
nonnegative; the least such N is its Lorentz degree.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import DegreeTooLow, IndexOutOfRange, NotAdmissible, PosBasisError, ZeroPolynomial
from .polycore import Polynomial
from .schur import schur_cohn_has_root_in_closed_unit_disk
from .sturm import sturm_sign_report

DEFAULT_CAP = 256


class CapExceeded(PosBasisError):
    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"Lorentz degree exceeds the scan cap {cap}")


def bernstein_basis_poly(N: int, k: int) -> Polynomial:
    if not 0 <= k <= N:
        raise IndexOutOfRange(f"k={k} outside 0..{N}")
    return Polynomial([1, -1]) ** k * Polynomial([1, 1]) ** (N - k)


def _split_power(k: int, N: int) -> list[int]:
    # coefficients in v of (1 - v)^k (1 + v)^(N - k): the u^(N-i) v^i part of (u - v)^k (u + v)^(N - k)
    return [
        sum((-1) ** s * comb(k, s) * comb(N - k, i - s) for s in range(max(0, i - N + k), min(k, i) + 1))
        for i in range(N + 1)
    ]


def to_bernstein(p: Polynomial, N: int) -> list[Fraction]:
    """Coefficients ``a_0..a_N`` with ``p = sum a_k e(N, k)``.

    Expands ``x**k = 2**-N ((1+x) - (1-x))**k ((1+x) + (1-x))**(N-k)``.
    """
    if not p.is_zero() and p.degree > N:
        raise DegreeTooLow(f"N={N} is below deg p = {p.degree}")
    out = [Fraction(0)] * (N + 1)
    scale = Fraction(1, 2**N)
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        for i, v in enumerate(_split_power(k, N)):
            if v:
                out[i] += c * v * scale
    return out


def from_bernstein(coeffs: Sequence[Fraction]) -> Polynomial:
    N = len(coeffs) - 1
    total = Polynomial()
    for k, a in enumerate(coeffs):
        if a:
            total = total + a * bernstein_basis_poly(N, k)
    return total


def degree_elevate(coeffs: Sequence[Fraction]) -> list[Fraction]:
    """Same polynomial one degree up: multiply by ``((1 - x) + (1 + x)) / 2``."""
    a = [Fraction(0), *coeffs, Fraction(0)]
    return [(a[k] + a[k + 1]) / 2 for k in range(len(a) - 1)]


def check_admissible(p: Polynomial) -> None:
    """Raise NotAdmissible unless ``p > 0`` on (-1, 1) and ``p >= 0`` on [-1, 1]."""
    if p.is_zero():
        raise ZeroPolynomial("Lorentz degree of the zero polynomial")
    rep = sturm_sign_report(p, -1, 1)
    if not rep.nonneg:
        raise NotAdmissible(f"p is negative at {rep.witness}; no positive representation")
    inner = [r for r in rep.roots if not (r.exact and abs(r.value) == 1)]
    if inner:
        raise NotAdmissible(f"p vanishes inside (-1, 1) near {inner[0]}")


def lorentz_degree(p: Polynomial, cap: int = DEFAULT_CAP) -> int:
    """Least N with all degree-N Bernstein coefficients of ``p`` nonnegative.

    Nonnegativity survives degree elevation, so the upward scan stops at the
    minimum.  Raises CapExceeded past ``cap``.
    """
    check_admissible(p)
    N = p.degree
    coeffs = to_bernstein(p, N)
    while any(c < 0 for c in coeffs):
        N += 1
        if N > cap:
            raise CapExceeded(cap)
        coeffs = degree_elevate(coeffs)
    return N


def lorentz_theorem_applies(p: Polynomial) -> bool:
    """No root in the closed unit disk and strictly positive on [-1, 1]."""
    if p.is_zero():
        raise ZeroPolynomial("Lorentz test of the zero polynomial")
    if schur_cohn_has_root_in_closed_unit_disk(p):
        return False
    return sturm_sign_report(p, -1, 1).strict
