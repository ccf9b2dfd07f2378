"""Brute-force oracles, independent of the closed forms they check.

* ``tau_oracle`` searches the whole coefficient space of ``q`` in
  ``p = q * prod (x - t_i)`` by exact LP feasibility; it does not assume the
  extremal polynomial has roots only at the nodes.
* ``dn_oracle`` enumerates every combinatorial node placement in the set.
* ``lorentz_oracle`` converts directly at degree N, without elevation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Sequence

from .bernstein import to_bernstein
from .errors import LengthMismatch, TooLarge, TooManyNodes
from .exactlp import maximize, rank
from .nodes import NodeSystem, omega_type
from .omega import OmegaSeq, contract, tau
from .polycore import Polynomial, rat
from .sets import CompactSet


@dataclass(frozen=True)
class ConeProblem:
    """Is there ``q != 0`` in Q^dim with ``row . q >= 0`` for every row?"""

    dim: int
    rows: tuple[tuple[Fraction, ...], ...]


def cone_nontrivial(cone: ConeProblem) -> bool:
    d = cone.dim
    if d < 1:
        raise ValueError("cone dimension must be positive")
    rows = cone.rows
    if rank(rows) < d:
        # a nonzero kernel vector satisfies every constraint with equality
        return True
    # full column rank: q != 0 forces some row . q != 0, so look for a strictly
    # positive total.  q = u - v with 0 <= u, v <= 1.
    c = [sum(r[i] for r in rows) for i in range(d)]
    obj = c + [-v for v in c]
    A, b = [], []
    for r in rows:
        A.append([-v for v in r] + list(r))
        b.append(0)
    for i in range(2 * d):
        A.append([int(i == j) for j in range(2 * d)])
        b.append(1)
    best, _ = maximize(obj, A, b)
    return best > 0


def tau_cone(w: Sequence[int], t: Sequence, x: dict, degree: int) -> ConeProblem:
    """Constraints on ``q`` (deg <= degree - n) so that ``q * prod(x - t_i)`` is admissible."""
    n = len(t)
    d = degree - n + 1
    rows = []
    for j, digit in enumerate(w):
        if not digit:
            continue
        xj = x[j]
        s = 1
        for ti in t:
            if xj < ti:
                s = -s
        rows.append(tuple(s * xj**i for i in range(d)))
    return ConeProblem(d, tuple(rows))


def tau_oracle(w: Sequence[int], t: Sequence, x: dict) -> int:
    """Least degree of a nonzero p with p(t_i) = 0 and p(x_j) >= 0 where w_j = 1."""
    t = [rat(v) for v in t]
    if len(w) != len(t) + 1:
        raise LengthMismatch("omega length must be len(t) + 1")
    n = len(t)
    for D in range(n, 2 * n + 1):
        if cone_nontrivial(tau_cone(w, t, x, D)):
            return D
    raise AssertionError("prod (x - t_i)^2 is always admissible; unreachable")


def canonical_nodes(n: int) -> NodeSystem:
    return tuple(Fraction(i) for i in range(1, n + 1))


def canonical_witnesses(w: Sequence[int], t: Sequence) -> dict[int, Fraction]:
    n = len(t)
    out = {}
    for j, digit in enumerate(w):
        if not digit:
            continue
        if n == 0:
            out[j] = Fraction(0)
        elif j == 0:
            out[j] = t[0] - 1
        elif j == n:
            out[j] = t[-1] + 1
        else:
            out[j] = (t[j - 1] + t[j]) / 2
    return out


@lru_cache(maxsize=None)
def tau_oracle_canonical(w: OmegaSeq) -> int:
    t = canonical_nodes(len(w) - 1)
    return tau_oracle(w, t, canonical_witnesses(w, t))


# --- d_n by enumeration -------------------------------------------------------------


@dataclass(frozen=True)
class DnOracleResult:
    value: int
    pattern: tuple
    nodes: NodeSystem
    omega: OmegaSeq


def _piece_options(piece, n):
    lo, hi = piece
    if lo == hi:
        return [((0,), ()), ((1,), (lo,))]
    opts = []
    for left, right in product((0, 1), repeat=2):
        for c in range(n + 1 - left - right):
            inner = tuple(lo + (hi - lo) * i / (c + 1) for i in range(1, c + 1))
            nodes = ((lo,) if left else ()) + inner + ((hi,) if right else ())
            opts.append(((left, c, right), nodes))
    return opts


def node_patterns(omega: CompactSet, n: int, limit: int = 200_000):
    """Every combinatorially distinct placement of ``n`` nodes, in lexicographic order.

    Per piece a pattern is (endpoint flags, interior count) or a 0/1 point
    flag; interior nodes are realized equally spaced.  The type of a node
    system depends only on its pattern.
    """
    options = [sorted(_piece_options(p, n)) for p in omega.pieces]
    produced = 0

    def rec(i, remaining, pat, nodes):
        nonlocal produced
        if i == len(options):
            if remaining == 0:
                produced += 1
                if produced > limit:
                    raise TooLarge(f"more than {limit} node patterns")
                yield tuple(pat), tuple(nodes)
            return
        for key, ns in options[i]:
            if len(ns) <= remaining:
                yield from rec(i + 1, remaining - len(ns), pat + [key], nodes + list(ns))

    yield from rec(0, n, [], [])


def sigma_by(w: OmegaSeq, tau_fn) -> int:
    return max(tau_fn(contract(w, j)) for j in range(1, len(w)))


def dn_oracle(omega: CompactSet, n: int, use_lp: bool | None = None, limit: int = 200_000) -> DnOracleResult:
    """Minimum over all node patterns of ``max_j tau(contract(w(t), j))``.

    With ``use_lp`` (default for n <= 4) each tau comes from the LP oracle
    instead of the closed form.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if omega.is_finite and n > omega.cardinality:
        raise TooManyNodes(f"{n} nodes requested but the set has {omega.cardinality} points")
    if use_lp is None:
        use_lp = n <= 4
    tau_fn = tau_oracle_canonical if use_lp else tau
    best = None
    for pat, t in node_patterns(omega, n, limit):
        w = omega_type(omega, t)
        val = sigma_by(w, tau_fn)
        if best is None or val < best.value:
            best = DnOracleResult(val, pat, t, w)
    return best


def lorentz_oracle(p: Polynomial, N: int) -> bool:
    """All degree-N Bernstein coefficients of ``p`` are nonnegative."""
    return all(c >= 0 for c in to_bernstein(p, N))
