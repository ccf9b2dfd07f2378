"""Node systems inside a compact set, their type, and canonical witnesses."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .errors import IndexOutOfRange, NodeNotInSet
from .omega import OmegaSeq
from .polycore import fmt_rat, rat
from .sets import CompactSet, membership

NodeSystem = tuple[Fraction, ...]


def node_system(nodes: Iterable, omega: CompactSet | None = None) -> NodeSystem:
    """Validate and freeze a node system (strictly increasing, inside ``omega``)."""
    t = tuple(rat(x) for x in nodes)
    if not t:
        raise ValueError("a node system needs at least one node")
    for a, b in zip(t, t[1:]):
        if not a < b:
            raise ValueError("nodes must be strictly increasing")
    if omega is not None:
        for x in t:
            if not membership(omega, x):
                raise NodeNotInSet(f"node {fmt_rat(x)} is not in {omega}")
    return t


def gaps(t: NodeSystem) -> list[tuple[Fraction | None, Fraction | None]]:
    """The ``n + 1`` open gaps between consecutive nodes; None stands for infinity."""
    bounds = [None, *t, None]
    return list(zip(bounds, bounds[1:]))


def _meets(piece, gap) -> bool:
    lo, hi = piece
    l, h = gap
    return (h is None or lo < h) and (l is None or hi > l)


def omega_type(omega: CompactSet, t: Iterable) -> OmegaSeq:
    t = node_system(t, omega)
    return tuple(int(any(_meets(p, g) for p in omega.pieces)) for g in gaps(t))


def witnesses(omega: CompactSet, t: Iterable) -> dict[int, Fraction]:
    """A canonical point of ``omega`` in every occupied gap.

    Uses the leftmost piece meeting the gap: the point itself if the piece is
    degenerate, otherwise the midpoint of the piece clipped to the gap.
    """
    t = node_system(t, omega)
    out = {}
    for j, g in enumerate(gaps(t)):
        for p in omega.pieces:
            if _meets(p, g):
                lo, hi = p
                if lo == hi:
                    out[j] = lo
                else:
                    l, h = g
                    c1 = lo if l is None else max(lo, l)
                    c2 = hi if h is None else min(hi, h)
                    out[j] = (c1 + c2) / 2
                break
    return out


def remove_node(t: NodeSystem, j: int) -> NodeSystem:
    """Drop ``t_j`` (1-based)."""
    n = len(t)
    if n < 2 or not 1 <= j <= n:
        raise IndexOutOfRange(f"cannot remove node {j} from a system of {n}")
    return tuple(t[: j - 1]) + tuple(t[j:])


def nodes_to_json(t: NodeSystem) -> list[str]:
    return [fmt_rat(x) for x in t]
