"""Compact subsets of the line as finite unions of closed rational intervals.

A degenerate interval ``[c, c]`` is an isolated point.  Holes are the bounded
gaps between consecutive pieces; a family of holes is *free* when their
closures are pairwise disjoint.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import BadInterval, EmptySet, NoLimitPoints, ParseError
from .polycore import fmt_rat, rat


@dataclass(frozen=True)
class CompactSet:
    pieces: tuple[tuple[Fraction, Fraction], ...]

    @property
    def a(self) -> Fraction:
        return self.pieces[0][0]

    @property
    def b(self) -> Fraction:
        return self.pieces[-1][1]

    @property
    def is_finite(self) -> bool:
        return all(lo == hi for lo, hi in self.pieces)

    @property
    def cardinality(self) -> int | None:
        return len(self.pieces) if self.is_finite else None

    def points(self) -> list[Fraction]:
        """The elements of a finite set, in increasing order."""
        if not self.is_finite:
            raise ValueError("set is infinite")
        return [lo for lo, _ in self.pieces]

    def __contains__(self, x) -> bool:
        return membership(self, x)

    def __str__(self):
        return serialize(self)

    def to_json(self) -> dict:
        return {"pieces": [[fmt_rat(lo), fmt_rat(hi)] for lo, hi in self.pieces]}

    @classmethod
    def from_json(cls, data: dict) -> CompactSet:
        return canonicalize([(rat(lo), rat(hi)) for lo, hi in data["pieces"]])


def canonicalize(raw_pieces: Iterable) -> CompactSet:
    pieces = [(rat(lo), rat(hi)) for lo, hi in raw_pieces]
    if not pieces:
        raise EmptySet("a compact set needs at least one piece")
    for lo, hi in pieces:
        if lo > hi:
            raise BadInterval(f"interval [{fmt_rat(lo)}, {fmt_rat(hi)}] has lo > hi")
    pieces.sort()
    merged = [pieces[0]]
    for lo, hi in pieces[1:]:
        plo, phi = merged[-1]
        if lo <= phi:
            merged[-1] = (plo, max(phi, hi))
        else:
            merged.append((lo, hi))
    return CompactSet(tuple(merged))


def membership(omega: CompactSet, x) -> bool:
    x = rat(x)
    return any(lo <= x <= hi for lo, hi in omega.pieces)


@dataclass(frozen=True)
class Hole:
    alpha: Fraction
    beta: Fraction
    left_piece_index: int
    right_piece_index: int

    def to_json(self) -> list[str]:
        return [fmt_rat(self.alpha), fmt_rat(self.beta)]


def holes(omega: CompactSet) -> list[Hole]:
    ps = omega.pieces
    return [Hole(ps[i][1], ps[i + 1][0], i, i + 1) for i in range(len(ps) - 1)]


def hole_chains(omega: CompactSet) -> list[list[int]]:
    """Maximal runs of holes whose closures touch (separated by single points).

    The closure-intersection graph on holes is a disjoint union of paths;
    these are its components, as lists of hole indices.
    """
    ps = omega.pieces
    chains: list[list[int]] = []
    for i in range(len(ps) - 1):
        if chains and chains[-1][-1] == i - 1 and ps[i][0] == ps[i][1]:
            chains[-1].append(i)
        else:
            chains.append([i])
    return chains


def lambda_(omega: CompactSet) -> int:
    """Size of a largest free family of holes."""
    return sum((len(c) + 1) // 2 for c in hole_chains(omega))


def leftmost_free_family(omega: CompactSet) -> list[int]:
    """A maximum free family: every other hole of each chain, from its left end."""
    return [i for chain in hole_chains(omega) for i in chain[::2]]


@dataclass(frozen=True)
class TopoProfile:
    holes: tuple[Hole, ...]
    lambda_: int
    theta_left: int | None
    theta_right: int | None
    eccentric_left: tuple[Fraction, ...]
    eccentric_right: tuple[Fraction, ...]
    limit_point_hull: tuple[Fraction, Fraction] | None
    is_infinite: bool
    cardinality: int | None

    def require_limit_points(self):
        if not self.is_infinite:
            raise NoLimitPoints("finite set: thetas and eccentric points are undefined")

    def to_json(self) -> dict:
        hull = self.limit_point_hull
        return {
            "holes": [h.to_json() for h in self.holes],
            "lambda": self.lambda_,
            "theta_left": self.theta_left,
            "theta_right": self.theta_right,
            "eccentric_left": [fmt_rat(x) for x in self.eccentric_left],
            "eccentric_right": [fmt_rat(x) for x in self.eccentric_right],
            "limit_point_hull": None if hull is None else [fmt_rat(hull[0]), fmt_rat(hull[1])],
            "is_infinite": self.is_infinite,
            "cardinality": self.cardinality,
        }


def profile(omega: CompactSet) -> TopoProfile:
    """Topological data of ``omega``.

    For a finite set there are no limit points, so the hull, the eccentric
    points and the parities are reported as absent (``None``/empty).
    """
    hs = tuple(holes(omega))
    lam = lambda_(omega)
    solid = [(lo, hi) for lo, hi in omega.pieces if lo < hi]
    if not solid:
        return TopoProfile(hs, lam, None, None, (), (), None, False, len(omega.pieces))
    lo_lim, hi_lim = solid[0][0], solid[-1][1]
    left = tuple(lo for lo, hi in omega.pieces if lo == hi and lo < lo_lim)
    right = tuple(lo for lo, hi in omega.pieces if lo == hi and lo > hi_lim)
    return TopoProfile(
        holes=hs,
        lambda_=lam,
        theta_left=len(left) % 2,
        theta_right=len(right) % 2,
        eccentric_left=left,
        eccentric_right=right,
        limit_point_hull=(lo_lim, hi_lim),
        is_infinite=True,
        cardinality=None,
    )


# text form:  set := piece ('U' piece)* ; piece := '[' rat ',' rat ']' | '{' rat '}'

_TOKEN = re.compile(r"(?P<rat>[+-]?\d+(?:/\d+)?)|(?P<sym>[\[\]{},Uu])")


def _tokens(text: str):
    out = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = "rat" if m.group("rat") else "sym"
        out.append((kind, m.group(kind), pos))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


def parse_set_expr(text: str) -> CompactSet:
    """Parse e.g. ``"[0,1] U {2} U [3, 7/2]"`` and canonicalize it."""
    toks = _tokens(text)
    i = 0

    def expect(sym):
        nonlocal i
        kind, val, pos = toks[i]
        if kind != "sym" or val != sym:
            raise ParseError(f"expected {sym!r}, found {val or 'end of input'!r}", pos)
        i += 1

    def number():
        nonlocal i
        kind, val, pos = toks[i]
        if kind != "rat":
            raise ParseError(f"expected a rational, found {val or 'end of input'!r}", pos)
        num, _, den = val.partition("/")
        if den and int(den) == 0:
            raise ParseError("zero denominator", pos)
        i += 1
        return Fraction(int(num), int(den) if den else 1)

    pieces = []
    while True:
        kind, val, pos = toks[i]
        if kind == "sym" and val == "[":
            i += 1
            lo = number()
            expect(",")
            hi = number()
            expect("]")
            pieces.append((lo, hi))
        elif kind == "sym" and val == "{":
            i += 1
            c = number()
            expect("}")
            pieces.append((c, c))
        else:
            if kind == "end" and not pieces:
                raise EmptySet("empty set expression")
            raise ParseError(f"expected '[' or '{{', found {val or 'end of input'!r}", pos)
        kind, val, pos = toks[i]
        if kind == "end":
            break
        if kind == "sym" and val in "Uu":
            i += 1
            continue
        raise ParseError(f"expected 'U' or end of input, found {val!r}", pos)
    return canonicalize(pieces)


def serialize(omega: CompactSet) -> str:
    parts = []
    for lo, hi in omega.pieces:
        parts.append(f"{{{fmt_rat(lo)}}}" if lo == hi else f"[{fmt_rat(lo)},{fmt_rat(hi)}]")
    return " U ".join(parts)
