"""Independent check that a family of polynomials is a positive basis of its span.

A family of nonnegative functions with a node for every member (a point
where that member is nonzero and all others vanish) is a positive basis of
its span.  Only exact nodes are searched for; families that could qualify
only through approximating sequences are rejected as ``NO_EXACT_NODE``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ZeroPolynomial
from .exactlp import rank
from .polycore import Polynomial, fmt_rat, poly_gcd
from .sets import CompactSet
from .sturm import RealRoot, negativity_witness, roots_in_set

ACCEPT = "ACCEPT"
REJECT = "REJECT"


@dataclass(frozen=True)
class VerifyReport:
    nonneg_ok: tuple[bool, ...]
    negative_witnesses: tuple[Fraction | None, ...]
    nodes_found: tuple[RealRoot | None, ...]
    independent: bool
    verdict: str
    reasons: tuple[str, ...] = ()

    @property
    def reason(self) -> str | None:
        return self.reasons[0] if self.reasons else None

    @property
    def accepted(self) -> bool:
        return self.verdict == ACCEPT

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "reason": self.reason,
            "reasons": list(self.reasons),
            "nonneg_ok": list(self.nonneg_ok),
            "negative_witnesses": [None if w is None else fmt_rat(w) for w in self.negative_witnesses],
            "nodes_found": [None if r is None else r.to_json() for r in self.nodes_found],
            "independent": self.independent,
        }


def _nonroot_point(p: Polynomial, omega: CompactSet) -> RealRoot | None:
    # a point of omega where p != 0; p has at most deg p roots per piece
    for lo, hi in omega.pieces:
        if lo == hi:
            cands = [lo]
        else:
            k = p.degree + 2
            cands = [lo + (hi - lo) * i / k for i in range(k + 1)]
        for x in cands:
            if p(x) != 0:
                return RealRoot(x, x)
    return None


def find_node(polys: Sequence[Polynomial], k: int, omega: CompactSet) -> RealRoot | None:
    """A point of ``omega`` where ``polys[k] != 0`` and every other member vanishes."""
    pk = polys[k]
    others = [p for i, p in enumerate(polys) if i != k]
    if not others:
        return _nonroot_point(pk, omega)
    g = Polynomial()
    for p in others:
        g = poly_gcd(g, p)
    # drop the common roots shared with p_k
    while g.degree > 0:
        h = poly_gcd(g, pk)
        if h.degree == 0:
            break
        g = g // h
    if g.degree == 0:
        return None
    found = roots_in_set(g, omega)
    return found[0] if found else None


def verify_positive_basis(omega: CompactSet, polys: Sequence[Polynomial]) -> VerifyReport:
    polys = list(polys)
    if not polys:
        raise ValueError("need at least one polynomial")
    if any(p.is_zero() for p in polys):
        raise ZeroPolynomial("a positive basis cannot contain the zero polynomial")
    witnesses = tuple(negativity_witness(p, omega) for p in polys)
    nonneg = tuple(w is None for w in witnesses)
    nodes = tuple(find_node(polys, k, omega) for k in range(len(polys)))
    width = max(p.degree for p in polys) + 1
    matrix = [list(p.coeffs) + [0] * (width - len(p.coeffs)) for p in polys]
    independent = rank(matrix) == len(polys)
    # a dependent family never has nodes, so DEPENDENT is the sharper diagnosis
    reasons = []
    if not all(nonneg):
        reasons.append("NEGATIVE")
    if not independent:
        reasons.append("DEPENDENT")
    if any(n is None for n in nodes):
        reasons.append("NO_EXACT_NODE")
    verdict = REJECT if reasons else ACCEPT
    return VerifyReport(nonneg, witnesses, nodes, independent, verdict, tuple(reasons))
