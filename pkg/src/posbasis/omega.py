"""Calculus of 0-1 node types.

A type ``w = (w_0, ..., w_n)`` records, for ``n`` nodes padded by
``-inf``/``+inf``, which of the ``n + 1`` gaps meet the set.  ``tau`` is the
minimal degree of a nonzero polynomial vanishing at the nodes and
nonnegative in every occupied gap; ``sigma`` is the best achievable maximal
degree of a basis with nodes of that type.
"""

from __future__ import annotations

from itertools import groupby
from typing import Sequence

from .errors import IndexOutOfRange, ParseError

OmegaSeq = tuple[int, ...]


def as_omega(bits) -> OmegaSeq:
    """Accept a digit string like ``"10010"`` or any sequence of 0/1."""
    if isinstance(bits, str):
        s = bits.strip()
        if not s or set(s) - {"0", "1"}:
            raise ParseError(f"omega must be a nonempty 0/1 string, got {bits!r}")
        return tuple(int(c) for c in s)
    out = tuple(int(b) for b in bits)
    if not out or any(b not in (0, 1) for b in out):
        raise ValueError(f"omega must be a nonempty 0/1 sequence, got {bits!r}")
    return out


def omega_str(w: Sequence[int]) -> str:
    return "".join(str(b) for b in w)


def zero_blocks(w: Sequence[int]) -> list[tuple[int, int]]:
    """Maximal zero runs as ``(start, length)``."""
    out, pos = [], 0
    for digit, run in groupby(w):
        k = len(list(run))
        if digit == 0:
            out.append((pos, k))
        pos += k
    return out


def count_N(w: Sequence[int]) -> int:
    return sum(w)


def count_K(w: Sequence[int]) -> int:
    """Inner zero blocks (ones on both sides) of odd length."""
    n1 = len(w)
    return sum(1 for start, k in zero_blocks(w) if start > 0 and start + k < n1 and k % 2)


def nu(w: Sequence[int]) -> int:
    return int(not any(w))


def tau(w: Sequence[int]) -> int:
    n = len(w) - 1
    return n - 1 + count_N(w) - count_K(w) + nu(w)


def contract(w: Sequence[int], j: int) -> OmegaSeq:
    """Type after removing node ``t_j``: digits ``j-1`` and ``j`` merge into a 1."""
    n = len(w) - 1
    if not 1 <= j <= n:
        raise IndexOutOfRange(f"j={j} outside 1..{n}")
    return tuple(w[: j - 1]) + (1,) + tuple(w[j + 1 :])


def sigma(w: Sequence[int]) -> int:
    """``max_j tau(contract(w, j))`` straight from the definition."""
    n = len(w) - 1
    if n < 1:
        raise IndexOutOfRange("sigma needs at least one node")
    return max(tau(contract(w, j)) for j in range(1, n + 1))


def exceptional_kind(w: Sequence[int]) -> str | None:
    """Which of the four special shapes ``w`` has, if any."""
    w = tuple(w)
    if not any(w):
        return "zeros"
    if all(w):
        return "ones"
    inner = w[1:-1]
    if w[0] == 0 and w[-1] == 0 and len(w) >= 3 and all(inner):
        return "zero-ones-zero"
    if (w[0] == 0 and all(w[1:])) or (w[-1] == 0 and all(w[:-1])):
        return "zero-ones"
    return None


def sigma_closed(w: Sequence[int]) -> int:
    n = len(w) - 1
    if n < 1:
        raise IndexOutOfRange("sigma needs at least one node")
    kind = exceptional_kind(w)
    if kind == "zeros":
        return n - 1
    if kind in ("ones", "zero-ones"):
        return 2 * n - 2
    if kind == "zero-ones-zero":
        return 2 * n - 3
    return tau(w)
