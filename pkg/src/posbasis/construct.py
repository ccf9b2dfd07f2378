"""Constructions: extremal polynomials, optimal node systems, positive bases,
and the closed forms for the minimal maximal degree ``d_n`` and the maximal
dimension of a subspace with positive basis.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    BadVariantParity,
    FiniteSet,
    LengthMismatch,
    TooManyNodes,
)
from .nodes import NodeSystem, node_system, nodes_to_json, omega_type
from .omega import contract, sigma
from .polycore import FactoredPoly, Polynomial, rat
from .sets import CompactSet, canonicalize, hole_chains, holes, profile


def extremal_poly(w: Sequence[int], t: Sequence) -> FactoredPoly:
    """A minimal-degree polynomial vanishing at ``t`` and >= 0 on occupied gaps.

    Reduction order: strip end zeros, then inner double zeros left to right,
    then apply the closed form for isolated inner zeros.  The result has
    degree ``tau(w)`` and roots only at the nodes.
    """
    w, t = list(w), [rat(x) for x in t]
    if len(w) != len(t) + 1:
        raise LengthMismatch(f"omega has length {len(w)}, expected {len(t) + 1}")
    sign = 1
    mult: dict[Fraction, int] = {}

    def bump(node, k=1):
        mult[node] = mult.get(node, 0) + k

    while len(w) > 1 and w[0] == 0:
        bump(t.pop(0))
        w.pop(0)
    while len(w) > 1 and w[-1] == 0:
        # (x - t_n) is negative on every remaining witness
        bump(t.pop())
        w.pop()
        sign = -sign
    j = 1
    while j < len(w) - 1:
        if w[j] == 0 and w[j + 1] == 0:
            bump(t[j - 1])
            bump(t[j])
            del t[j - 1 : j + 1]
            del w[j : j + 2]
            j = 1
        else:
            j += 1
    for j in range(1, len(w) - 1):
        if w[j] == 0:
            bump(t[j - 1])
            bump(t[j])
    for i in range(1, len(w)):
        if w[i - 1] == 1 and w[i] == 1:
            bump(t[i - 1], 2)
    return FactoredPoly.from_multiplicities(sign, mult)


# --- d_n and the maximal dimension -------------------------------------------------


class Branch(str, enum.Enum):
    LAMBDA_LARGE = "LAMBDA_LARGE"
    LAMBDA_HALF_EVEN = "LAMBDA_HALF_EVEN"
    LAMBDA_HALF_ODD = "LAMBDA_HALF_ODD"
    LAMBDA_SMALL = "LAMBDA_SMALL"
    INTERVAL = "INTERVAL"
    FINITE = "FINITE"
    SMALL_N = "SMALL_N"


@dataclass(frozen=True)
class DnBranch:
    branch: Branch
    degree: int

    def __int__(self):
        return self.degree


def dn(omega: CompactSet, n: int) -> DnBranch:
    """Least possible maximal degree of an n-element positive basis on ``omega``."""
    if n < 1:
        raise ValueError("n must be positive")
    if omega.is_finite:
        card = omega.cardinality
        if n > card:
            raise TooManyNodes(f"{n} nodes requested but the set has {card} points")
        if n <= 2:
            return DnBranch(Branch.SMALL_N, n - 1)
        return DnBranch(Branch.FINITE, n - 1 if n == card else n)
    if n <= 2:
        return DnBranch(Branch.SMALL_N, n - 1)
    prof = profile(omega)
    lam, tl, tr = prof.lambda_, prof.theta_left, prof.theta_right
    if lam == 0:
        return DnBranch(Branch.INTERVAL, 2 * n - 3)
    if 2 * lam > n:
        return DnBranch(Branch.LAMBDA_LARGE, n)
    if lam == n // 2:
        if n % 2 == 0:
            return DnBranch(Branch.LAMBDA_HALF_EVEN, n)
        return DnBranch(Branch.LAMBDA_HALF_ODD, n + tl * tr)
    return DnBranch(Branch.LAMBDA_SMALL, 2 * (n - 1 - lam) + tl + tr)


def max_dim(omega: CompactSet, m: int) -> int:
    """Largest dimension of a subspace of degree-<=m polynomials with a positive basis."""
    if omega.is_finite:
        raise FiniteSet("max_dim is defined here for infinite sets only")
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m < 2:
        # constants (m=0) and the two-node linear pair (m=1)
        return m + 1
    prof = profile(omega)
    lam, tl, tr = prof.lambda_, prof.theta_left, prof.theta_right
    if lam == 0:
        return (m + 3) // 2
    if m <= 2 * lam:
        return m
    if m - 1 == 2 * lam:
        return m - tl * tr
    return (m - tl - tr) // 2 + 1 + lam


# --- basis families --------------------------------------------------------------


@dataclass(frozen=True)
class BasisFamily:
    omega_set: CompactSet
    nodes: NodeSystem
    polys: tuple[FactoredPoly, ...]

    @property
    def expanded(self) -> list[Polynomial]:
        return [f.expand() for f in self.polys]

    @property
    def degrees(self) -> list[int]:
        return [f.degree for f in self.polys]

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    def to_json(self) -> dict:
        return {
            "omega_set": self.omega_set.to_json(),
            "nodes": nodes_to_json(self.nodes),
            "basis": [
                {**f.to_json(), "coeffs": f.expand().to_json(), "degree": f.degree}
                for f in self.polys
            ],
            "max_degree": self.max_degree,
            "sigma": sigma(omega_type(self.omega_set, self.nodes)),
        }

    @classmethod
    def from_json(cls, data: dict) -> BasisFamily:
        return cls(
            CompactSet.from_json(data["omega_set"]),
            node_system(data["nodes"]),
            tuple(FactoredPoly.from_json(b) for b in data["basis"]),
        )


def basis_for_nodes(omega: CompactSet, t) -> BasisFamily:
    """Minimal-degree positive basis whose k-th member has node ``t_k``."""
    t = node_system(t, omega)
    w = omega_type(omega, t)
    polys = []
    for j in range(1, len(t) + 1):
        f = extremal_poly(contract(w, j), t[: j - 1] + t[j:])
        if f(t[j - 1]) < 0:
            f = -f
        polys.append(f)
    return BasisFamily(omega, t, tuple(polys))


class Variant(str, enum.Enum):
    STANDARD = "standard"
    LEFT_ANCHORED = "left"
    RIGHT_ANCHORED = "right"
    UNANCHORED = "unanchored"


def equally_spaced(lo: Fraction, hi: Fraction, n: int) -> NodeSystem:
    if n == 1:
        return (lo,)
    return tuple(lo + (hi - lo) * i / (n - 1) for i in range(n))


def interval_basis(a, b, m: int, variant=Variant.STANDARD, nodes=None) -> BasisFamily:
    """Positive basis of maximal dimension ``(m + 3) // 2`` on ``[a, b]``."""
    a, b = rat(a), rat(b)
    variant = Variant(variant)
    if not a < b:
        raise ValueError("need a < b")
    if m < 1:
        raise ValueError("m must be at least 1")
    if variant is not Variant.STANDARD and m % 2:
        raise BadVariantParity(f"variant {variant.value} exists only for even m")
    n = (m + 3) // 2
    omega = canonicalize([(a, b)])
    t = equally_spaced(a, b, n) if nodes is None else node_system(nodes, omega)
    if len(t) != n:
        raise LengthMismatch(f"need {n} nodes for m={m}, got {len(t)}")
    if variant in (Variant.STANDARD, Variant.LEFT_ANCHORED) and t[0] != a:
        raise ValueError(f"variant {variant.value} requires t_1 = a")
    if variant in (Variant.STANDARD, Variant.RIGHT_ANCHORED) and t[-1] != b:
        raise ValueError(f"variant {variant.value} requires t_n = b")

    def squares(skip):
        return {x: 2 for i, x in enumerate(t) if i not in skip}

    polys = []
    for k in range(n):
        if variant is Variant.STANDARD:
            mult = squares({0, n - 1, k})
            sign = 1
            if k != 0:
                mult[t[0]] = 1
            if k != n - 1:
                mult[t[-1]] = 1
                sign = -1
        elif variant is Variant.LEFT_ANCHORED:
            mult = squares({0, k})
            sign = 1
            if k != 0:
                mult[t[0]] = 1
        elif variant is Variant.RIGHT_ANCHORED:
            mult = squares({n - 1, k})
            sign = 1
            if k != n - 1:
                mult[t[-1]] = 1
                sign = -1
        else:
            mult = squares({k})
            sign = 1
        polys.append(FactoredPoly.from_multiplicities(sign, mult))
    return BasisFamily(omega, t, tuple(polys))


# --- optimal node placement ---------------------------------------------------------


def _free_family(omega: CompactSet, avoid_a: bool) -> list[int]:
    """Maximum free family of holes; optionally steered off ``a``.

    Within each chain every other hole is taken from the left end.  An
    even chain starting at the isolated point ``a`` can instead start from
    its second hole, which frees ``a``; odd chains admit no such shift.
    Taking the left end of an even chain already avoids ``b``.
    """
    ps = omega.pieces
    out = []
    for chain in hole_chains(omega):
        touches_a = chain[0] == 0 and ps[0][0] == ps[0][1]
        if avoid_a and touches_a and len(chain) % 2 == 0:
            out.extend(chain[1::2])
        else:
            out.extend(chain[::2])
    return out


def _endpoints(omega: CompactSet, family: list[int]) -> list[Fraction]:
    hs = holes(omega)
    return [x for i in family for x in (hs[i].alpha, hs[i].beta)]


def optimal_nodes(omega: CompactSet, n: int) -> NodeSystem:
    """A node system ``t`` with ``sigma(omega_type(omega, t)) == dn(omega, n)``."""
    branch = dn(omega, n).branch
    a, b = omega.a, omega.b
    if branch is Branch.SMALL_N:
        return (a,) if n == 1 else (a, b)
    if branch is Branch.FINITE:
        return tuple(omega.points()[:n])
    solid = next((lo, hi) for lo, hi in omega.pieces if lo < hi)
    if branch is Branch.INTERVAL:
        return equally_spaced(a, b, n)

    prof = profile(omega)
    lam, tl, tr = prof.lambda_, prof.theta_left, prof.theta_right
    k = n // 2
    if branch in (Branch.LAMBDA_LARGE, Branch.LAMBDA_HALF_EVEN) and n % 2 == 0:
        nodes = _endpoints(omega, _free_family(omega, False)[:k])
    elif branch is Branch.LAMBDA_LARGE:
        hs = holes(omega)
        fam = [i for i in _free_family(omega, False) if hs[i].alpha != a][:k]
        nodes = [a, *_endpoints(omega, fam)]
    elif branch is Branch.LAMBDA_HALF_ODD:
        if tl == 0:
            nodes = [a, *_endpoints(omega, _free_family(omega, True))]
        elif tr == 0:
            nodes = [*_endpoints(omega, _free_family(omega, False)), b]
        else:
            nodes = [*_endpoints(omega, _free_family(omega, False)), (solid[0] + solid[1]) / 2]
    else:
        base = {a, b, *_endpoints(omega, _free_family(omega, tl == 0))}
        fill = n - len(base)
        lo, hi = solid
        nodes = [*base, *(lo + (hi - lo) * i / (fill + 1) for i in range(1, fill + 1))]
    t = tuple(sorted(nodes))
    assert len(t) == n == len(set(t)), (t, n)
    return t
