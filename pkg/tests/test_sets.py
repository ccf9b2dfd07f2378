from fractions import Fraction

import pytest
from hypothesis import given

from posbasis.errors import BadInterval, EmptySet, NoLimitPoints, ParseError
from posbasis.sets import (
    CompactSet,
    canonicalize,
    hole_chains,
    holes,
    lambda_,
    membership,
    parse_set_expr,
    profile,
    serialize,
)

from conftest import compact_sets


def pieces(expr):
    return [(int(lo), int(hi)) for lo, hi in parse_set_expr(expr).pieces]


@pytest.mark.parametrize(
    "raw, want",
    [
        ([(0, 1), (1, 2)], [(0, 2)]),
        ([(3, 4), (0, 1), (2, 2)], [(0, 1), (2, 2), (3, 4)]),
        ([(0, 2), (1, 3)], [(0, 3)]),
    ],
)
def test_canonicalize(raw, want):
    assert list(canonicalize(raw).pieces) == want


def test_bad_and_empty():
    with pytest.raises(BadInterval):
        canonicalize([(1, 0)])
    with pytest.raises(BadInterval):
        parse_set_expr("[1,0]")
    with pytest.raises(EmptySet):
        canonicalize([])


@pytest.mark.parametrize(
    "expr, want",
    [
        ("[0,1] U [2,3]", [(1, 2)]),
        ("[0,1] U {2} U [3,4]", [(1, 2), (2, 3)]),
        ("[0,1]", []),
    ],
)
def test_holes(expr, want):
    assert [(h.alpha, h.beta) for h in holes(parse_set_expr(expr))] == want


@pytest.mark.parametrize(
    "expr, lam",
    [
        ("[0,1] U [2,3]", 1),
        ("[0,1] U {2} U [3,4]", 1),
        ("{0} U [1,2] U {3}", 2),
        ("[0,1] U {2} U {3} U [4,5]", 2),
        ("{0} U {1} U [2,3]", 1),
    ],
)
def test_lambda(expr, lam):
    assert lambda_(parse_set_expr(expr)) == lam


def test_eccentric_points():
    p = profile(parse_set_expr("{0} U [1,2] U {3}"))
    assert (p.eccentric_left, p.eccentric_right) == ((0,), (3,))
    assert (p.theta_left, p.theta_right, p.lambda_) == (1, 1, 2)
    p = profile(parse_set_expr("[0,1] U {2} U {3} U [4,5]"))
    assert p.eccentric_left == p.eccentric_right == ()
    assert (p.theta_left, p.theta_right) == (0, 0)
    p = profile(parse_set_expr("{0} U {1} U [2,3]"))
    assert p.eccentric_left == (0, 1)
    assert (p.theta_left, p.theta_right, p.lambda_) == (0, 0, 1)


def test_finite_profile_has_no_hull():
    p = profile(parse_set_expr("{0} U {1} U {2}"))
    assert p.limit_point_hull is None and p.cardinality == 3
    with pytest.raises(NoLimitPoints):
        p.require_limit_points()


def test_membership():
    s = parse_set_expr("{0} U [1,2]")
    assert membership(s, 0)
    assert not membership(s, Fraction(1, 2))
    assert membership(parse_set_expr("[0,1]"), 1)


def test_parser_details():
    assert parse_set_expr("[0, 1/2]").pieces == ((0, Fraction(1, 2)),)
    assert len(parse_set_expr("[0,1] U {2} U [3,4]").pieces) == 3
    assert parse_set_expr(" [ -1 , 1 ]u{ 3 } ").pieces == ((-1, 1), (3, 3))
    with pytest.raises(ParseError, match="position"):
        parse_set_expr("[0,1] U (2,3)")
    with pytest.raises(ParseError):
        parse_set_expr("[0,1/0]")


@given(compact_sets())
def test_serialize_roundtrip(s):
    assert parse_set_expr(serialize(s)) == s
    assert CompactSet.from_json(s.to_json()) == s


@given(compact_sets())
def test_chains_partition_holes(s):
    chains = hole_chains(s)
    flat = [i for c in chains for i in c]
    assert flat == list(range(len(holes(s))))
    assert lambda_(s) == sum((len(c) + 1) // 2 for c in chains)


@given(compact_sets())
def test_lambda_is_max_independent_family(s):
    # brute force over subsets: closures of chosen holes must be pairwise disjoint
    hs = holes(s)
    best = 0
    for mask in range(1 << len(hs)):
        chosen = [hs[i] for i in range(len(hs)) if mask >> i & 1]
        if all(x.beta < y.alpha for x, y in zip(chosen, chosen[1:])):
            best = max(best, len(chosen))
    assert lambda_(s) == best
