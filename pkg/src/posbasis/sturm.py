"""Exact real-root isolation and sign analysis via Sturm sequences.

Everything here works over :class:`fractions.Fraction`; no floating point
enters any decision.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor

from .errors import BadInterval, ZeroPolynomial
from .polycore import Polynomial, fmt_rat, rat, squarefree_part


def sturm_sequence(p: Polynomial) -> list[Polynomial]:
    """Canonical Sturm chain ``p, p', -rem(p, p'), ...`` (no normalization)."""
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        seq.append(-(seq[-2] % seq[-1]))
    seq.pop()
    return seq


def sign_variations(seq: list[Polynomial], x: Fraction) -> int:
    signs = []
    for q in seq:
        v = q(x)
        if v:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(seq: list[Polynomial], lo: Fraction, hi: Fraction) -> int:
    """Distinct roots in the half-open interval ``(lo, hi]``.

    ``seq`` must be the Sturm chain of a squarefree polynomial; then the
    variation count is right-continuous at every root, so endpoints that are
    roots need no special treatment.
    """
    return sign_variations(seq, lo) - sign_variations(seq, hi)


@dataclass(frozen=True)
class RealRoot:
    """A real root, either an exact rational or an isolating open interval."""

    lo: Fraction
    hi: Fraction

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> Fraction:
        if not self.exact:
            raise ValueError("root is irrational; only an isolating interval is known")
        return self.lo

    def contains(self, x: Fraction) -> bool:
        return self.lo == x == self.hi if self.exact else self.lo < x < self.hi

    def to_json(self):
        if self.exact:
            return fmt_rat(self.lo)
        return [fmt_rat(self.lo), fmt_rat(self.hi)]

    def __str__(self):
        return fmt_rat(self.lo) if self.exact else f"({fmt_rat(self.lo)}, {fmt_rat(self.hi)})"


def _shrink_left(seq, s, l, h):
    # root strictly inside (l, h), h not a root, l may be one; move l off it
    while s(l) == 0:
        m = (l + h) / 2
        if s(m) == 0:
            return RealRoot(m, m)
        if count_roots(seq, l, m) == 1:
            h = m
        else:
            l = m
    return RealRoot(l, h)


def _try_rational(s: Polynomial, root: RealRoot, denom: int) -> RealRoot:
    """Pin the root down exactly if it is rational.

    Any rational root of the primitive integer polynomial has the form
    k/denom with denom its leading coefficient, so once the isolating
    interval is narrower than 1/denom at most one candidate remains.
    """
    l, h = root.lo, root.hi
    pos_at_h = s(h) > 0
    while (h - l) * denom >= 1:
        m = (l + h) / 2
        v = s(m)
        if v == 0:
            return RealRoot(m, m)
        if (v > 0) == pos_at_h:
            h = m
        else:
            l = m
    lo_k, hi_k = floor(l * denom) + 1, ceil(h * denom) - 1
    for k in range(lo_k, hi_k + 1):
        c = Fraction(k, denom)
        if s(c) == 0:
            return RealRoot(c, c)
    return RealRoot(l, h)


def isolate_real_roots(p: Polynomial, lo, hi) -> list[RealRoot]:
    """Distinct real roots of ``p`` in ``[lo, hi]`` in increasing order.

    Rational roots are returned exactly; irrational ones as disjoint open
    intervals with non-root rational endpoints.
    """
    lo, hi = rat(lo), rat(hi)
    if p.is_zero():
        raise ZeroPolynomial("cannot isolate roots of the zero polynomial")
    if lo > hi:
        raise BadInterval(f"empty interval [{lo}, {hi}]")
    if p.degree == 0:
        return []
    s = squarefree_part(p)
    if lo == hi:
        return [RealRoot(lo, lo)] if s(lo) == 0 else []
    seq = sturm_sequence(s)
    denom = int(s.primitive_integer().lead)
    found = []
    if s(lo) == 0:
        found.append(RealRoot(lo, lo))
    stack = [(lo, hi)]
    while stack:
        l, h = stack.pop()
        c = count_roots(seq, l, h)
        if c == 0:
            continue
        if c == 1:
            if s(h) == 0:
                found.append(RealRoot(h, h))
            else:
                r = _shrink_left(seq, s, l, h)
                found.append(r if r.exact else _try_rational(s, r, denom))
            continue
        m = (l + h) / 2
        stack.append((l, m))
        stack.append((m, h))
    found.sort(key=lambda r: r.lo)
    return found


def _sample_points(roots: list[RealRoot], lo: Fraction, hi: Fraction) -> list[Fraction]:
    """One rational per open region between consecutive roots, plus endpoints."""
    pts = [lo, hi]
    bounds = [(r.lo, r.hi) for r in roots]
    if not bounds:
        if lo < hi:
            pts.append((lo + hi) / 2)
        return pts
    if bounds[0][0] > lo:
        pts.append((lo + bounds[0][0]) / 2)
    for (_, right), (left, _) in zip(bounds, bounds[1:]):
        pts.append((right + left) / 2)
    if bounds[-1][1] < hi:
        pts.append((bounds[-1][1] + hi) / 2)
    return pts


@dataclass(frozen=True)
class SignReport:
    nonneg: bool
    strict: bool
    roots: tuple[RealRoot, ...] = ()
    witness: Fraction | None = field(default=None)

    def to_json(self) -> dict:
        return {
            "nonneg": self.nonneg,
            "strict": self.strict,
            "roots": [r.to_json() for r in self.roots],
            "negative_witness": None if self.witness is None else fmt_rat(self.witness),
        }


def sturm_sign_report(p: Polynomial, lo, hi) -> SignReport:
    """Decide ``p >= 0`` and ``p > 0`` on ``[lo, hi]`` exactly.

    When ``p`` is negative somewhere, ``witness`` holds a rational point
    where it is.
    """
    lo, hi = rat(lo), rat(hi)
    if p.is_zero():
        raise ZeroPolynomial("sign report of the zero polynomial")
    roots = isolate_real_roots(p, lo, hi)
    witness = None
    for x in _sample_points(roots, lo, hi):
        if p(x) < 0:
            witness = x
            break
    nonneg = witness is None
    return SignReport(nonneg, nonneg and not roots, tuple(roots), witness)


def is_nonneg_on(p: Polynomial, omega) -> bool:
    return negativity_witness(p, omega) is None


def negativity_witness(p: Polynomial, omega) -> Fraction | None:
    """A point of ``omega`` where ``p < 0``, or None if ``p >= 0`` there."""
    if p.is_zero():
        raise ZeroPolynomial("nonnegativity of the zero polynomial")
    for lo, hi in omega.pieces:
        if lo == hi:
            if p(lo) < 0:
                return lo
        else:
            rep = sturm_sign_report(p, lo, hi)
            if not rep.nonneg:
                return rep.witness
    return None


def roots_in_set(p: Polynomial, omega) -> list[RealRoot]:
    """Distinct real roots of ``p`` lying in ``omega``."""
    out = []
    for lo, hi in omega.pieces:
        out.extend(isolate_real_roots(p, lo, hi))
    return out
