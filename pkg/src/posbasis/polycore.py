"""Exact univariate polynomials over the rationals.

Scalars are :class:`fractions.Fraction` throughout.  A :class:`Polynomial`
stores its coefficients lowest degree first with trailing zeros removed, so
the zero polynomial is the empty tuple.  :class:`FactoredPoly` is a signed
product of linear factors ``(x - root)**mult``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import ParseError, ZeroPolynomial

Rational = Fraction


def rat(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected: they would smuggle rounding into exact code paths.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational {value!r}") from exc
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def fmt_rat(q: Fraction) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # constructors

    @classmethod
    def const(cls, c) -> Polynomial:
        return cls([c])

    @classmethod
    def x(cls) -> Polynomial:
        return cls([0, 1])

    @classmethod
    def linear(cls, root) -> Polynomial:
        """``x - root``."""
        return cls([-rat(root), 1])

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> Polynomial:
        p = cls.const(lead)
        for r in roots:
            p = p * cls.linear(r)
        return p

    # basic queries

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomial("degree of the zero polynomial is undefined")
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x) -> Fraction:
        x = rat(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial.const(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial([{', '.join(fmt_rat(c) for c in self.coeffs)}])"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = fmt_rat(mag)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if mag == 1 else f"{fmt_rat(mag)}*{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # ring operations

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Polynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result, base = Polynomial.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, divisor: Polynomial) -> tuple[Polynomial, Polynomial]:
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd, lead = divisor.degree, divisor.lead
        if len(rem) - 1 < dd:
            return Polynomial(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for k in range(len(rem) - 1 - dd, -1, -1):
            c = rem[k + dd] / lead
            quot[k] = c
            if c:
                for i, dc in enumerate(divisor.coeffs):
                    rem[k + i] -= c * dc
        return Polynomial(quot), Polynomial(rem[:dd])

    def __divmod__(self, other):
        return self.divmod(_coerce(other))

    def __floordiv__(self, other):
        return self.divmod(_coerce(other))[0]

    def __mod__(self, other):
        return self.divmod(_coerce(other))[1]

    def derivative(self) -> Polynomial:
        return Polynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def monic(self) -> Polynomial:
        return self * (1 / self.lead)

    def primitive_integer(self) -> Polynomial:
        """Scale to coprime integer coefficients with positive leading term."""
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if ints[-1] < 0:
            g = -g
        return Polynomial(Fraction(v, g) for v in ints)

    def to_json(self) -> list[str]:
        return [fmt_rat(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> Polynomial:
        return cls(rat(c) for c in data)


def _coerce(v) -> Polynomial:
    if isinstance(v, Polynomial):
        return v
    return Polynomial.const(v)


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic gcd; gcd(0, 0) is the zero polynomial."""
    while not q.is_zero():
        p, q = q, p % q
    return p if p.is_zero() else p.monic()


def squarefree_part(p: Polynomial) -> Polynomial:
    g = poly_gcd(p, p.derivative())
    return (p // g).monic()


@dataclass(frozen=True)
class FactoredPoly:
    """``sign * prod (x - root)**mult`` with strictly increasing roots."""

    sign: int = 1
    factors: tuple[tuple[Fraction, int], ...] = ()

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        fs = tuple((rat(r), int(m)) for r, m in self.factors)
        for _, m in fs:
            if m < 1:
                raise ValueError("multiplicities must be positive")
        for (r0, _), (r1, _) in zip(fs, fs[1:]):
            if not r0 < r1:
                raise ValueError("roots must be strictly increasing")
        object.__setattr__(self, "factors", fs)

    @classmethod
    def from_multiplicities(cls, sign: int, mults: dict) -> FactoredPoly:
        """Build from ``{root: mult}``; zero multiplicities are dropped."""
        items = sorted((rat(r), m) for r, m in mults.items() if m)
        return cls(sign, tuple(items))

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.factors)

    @property
    def roots(self) -> tuple[Fraction, ...]:
        return tuple(r for r, _ in self.factors)

    def multiplicity(self, root) -> int:
        root = rat(root)
        for r, m in self.factors:
            if r == root:
                return m
        return 0

    def __mul__(self, other: FactoredPoly) -> FactoredPoly:
        mults = dict(self.factors)
        for r, m in other.factors:
            mults[r] = mults.get(r, 0) + m
        return FactoredPoly.from_multiplicities(self.sign * other.sign, mults)

    def __neg__(self) -> FactoredPoly:
        return FactoredPoly(-self.sign, self.factors)

    def __call__(self, x) -> Fraction:
        x = rat(x)
        acc = Fraction(self.sign)
        for r, m in self.factors:
            acc *= (x - r) ** m
        return acc

    def expand(self) -> Polynomial:
        return expand(self)

    def to_json(self) -> dict:
        return {
            "sign": self.sign,
            "factors": [[fmt_rat(r), m] for r, m in self.factors],
        }

    @classmethod
    def from_json(cls, data: dict) -> FactoredPoly:
        return cls(int(data["sign"]), tuple((rat(r), int(m)) for r, m in data["factors"]))

    def __str__(self):
        if not self.factors:
            return "1" if self.sign > 0 else "-1"
        parts = []
        for r, m in self.factors:
            base = "x" if r == 0 else f"(x - {fmt_rat(r)})" if r > 0 else f"(x + {fmt_rat(-r)})"
            parts.append(base if m == 1 else f"{base}^{m}")
        return ("-" if self.sign < 0 else "") + "*".join(parts)


def expand(f: FactoredPoly) -> Polynomial:
    p = Polynomial.const(f.sign)
    for r, m in f.factors:
        p = p * Polynomial.linear(r) ** m
    return p
