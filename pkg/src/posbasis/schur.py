"""Exact Schur–Cohn decision for roots in the closed unit disk."""

from __future__ import annotations

from .errors import ZeroPolynomial
from .polycore import Polynomial


def _reverse(p: Polynomial) -> Polynomial:
    return Polynomial(reversed(p.coeffs))


def is_schur_stable(q: Polynomial) -> bool:
    """True iff every root of ``q`` satisfies ``|z| < 1``.

    Schur–Cohn reduction: with a0 = q(0) and an the leading coefficient, q
    is stable iff ``|a0| < |an|`` and ``(an*q - a0*q_rev) / z`` is stable.
    """
    if q.is_zero():
        raise ZeroPolynomial("stability of the zero polynomial")
    while q.degree > 0:
        a0, an = q.coeffs[0], q.lead
        if abs(a0) >= abs(an):
            return False
        reduced = an * q - a0 * _reverse(q)
        # constant term cancels exactly
        q = Polynomial(reduced.coeffs[1:])
    return True


def schur_cohn_has_root_in_closed_unit_disk(p: Polynomial) -> bool:
    """True iff ``p`` has a complex root with ``|z| <= 1``."""
    if p.is_zero():
        raise ZeroPolynomial("root location of the zero polynomial")
    if p.degree == 0:
        return False
    if p.coeffs[0] == 0:
        return True
    # roots of p outside the closed disk <=> roots of z^n p(1/z) inside the open disk
    return not is_schur_stable(_reverse(p))
