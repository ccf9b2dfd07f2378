from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from posbasis.errors import IndexOutOfRange, NodeNotInSet
from posbasis.nodes import node_system, omega_type, remove_node, witnesses
from posbasis.sets import parse_set_expr

from conftest import compact_sets


@pytest.mark.parametrize(
    "expr, t, want",
    [
        ("[0,2]", (0, 1, 2), (0, 1, 1, 0)),
        ("[0,1] U [2,3]", (1, 2), (1, 0, 1)),
        ("{0} U {1} U {2}", (0, 1, 2), (0, 0, 0, 0)),
    ],
)
def test_omega_type(expr, t, want):
    assert omega_type(parse_set_expr(expr), t) == want


def test_witness_rule():
    assert witnesses(parse_set_expr("[0,2]"), (0, 2)) == {1: 1}
    assert witnesses(parse_set_expr("[0,1] U {3/2} U [2,3]"), (0, 3)) == {1: Fraction(1, 2)}
    assert witnesses(parse_set_expr("{0} U {1}"), (0, 1)) == {}


def test_remove_node():
    assert remove_node((0, 1, 2), 2) == (0, 2)
    assert remove_node((0, 1, 2, 3), 4) == (0, 1, 2)
    with pytest.raises(IndexOutOfRange):
        remove_node((0, 1), 3)


def test_nodes_must_lie_in_set():
    with pytest.raises(NodeNotInSet):
        node_system((0, Fraction(3, 2)), parse_set_expr("[0,1] U [2,3]"))
    with pytest.raises(ValueError):
        node_system((1, 0))


@given(compact_sets(), st.data())
def test_witnesses_sit_in_their_gaps(s, data):
    pts = [p for lo, hi in s.pieces for p in {lo, hi, (lo + hi) / 2}]
    t = sorted(set(data.draw(st.lists(st.sampled_from(sorted(set(pts))), min_size=1, max_size=5))))
    w = omega_type(s, t)
    x = witnesses(s, t)
    assert sorted(x) == [j for j, d in enumerate(w) if d]
    for j, xj in x.items():
        assert xj in s
        assert j == 0 or xj > t[j - 1]
        assert j == len(t) or xj < t[j]
