import pytest
from hypothesis import given
from hypothesis import strategies as st

from posbasis.bernstein import bernstein_basis_poly
from posbasis.construct import basis_for_nodes, interval_basis, optimal_nodes
from posbasis.errors import ZeroPolynomial
from posbasis.polycore import Polynomial
from posbasis.sets import parse_set_expr
from posbasis.verify import verify_positive_basis

from conftest import compact_sets

X = Polynomial.x()


def test_interval_family_accepted():
    fam = interval_basis(0, 2, 3)
    rep = verify_positive_basis(fam.omega_set, fam.expanded)
    assert rep.accepted
    assert [r.value for r in rep.nodes_found] == [0, 1, 2]


def test_bernstein_family_has_no_middle_node():
    polys = [bernstein_basis_poly(2, k) for k in range(3)]
    rep = verify_positive_basis(parse_set_expr("[-1,1]"), polys)
    assert not rep.accepted and rep.reason == "NO_EXACT_NODE"
    assert rep.nodes_found[1] is None
    assert rep.independent and all(rep.nonneg_ok)


def test_duplicate_is_dependent():
    rep = verify_positive_basis(parse_set_expr("[0,1]"), [X**2, X**2])
    assert rep.reason == "DEPENDENT"


def test_negative_member():
    rep = verify_positive_basis(parse_set_expr("[0,2]"), [X, 1 - X])
    assert rep.reason == "NEGATIVE"
    assert rep.negative_witnesses[0] is None and rep.negative_witnesses[1] > 1


def test_zero_member():
    with pytest.raises(ZeroPolynomial):
        verify_positive_basis(parse_set_expr("[0,1]"), [X, Polynomial()])


def test_report_json():
    rep = verify_positive_basis(parse_set_expr("{0} U {1}"), [1 - X, X])
    data = rep.to_json()
    assert data["verdict"] == "ACCEPT" and data["nodes_found"] == ["0", "1"]


@given(compact_sets(), st.integers(1, 6))
def test_constructed_bases_verify(s, n):
    if s.is_finite and n > s.cardinality:
        return
    fam = basis_for_nodes(s, optimal_nodes(s, n))
    assert verify_positive_basis(s, fam.expanded).accepted


@given(compact_sets(), st.integers(2, 5), st.integers(0, 4))
def test_negated_member_rejected(s, n, k):
    if s.is_finite and n > s.cardinality:
        return
    polys = basis_for_nodes(s, optimal_nodes(s, n)).expanded
    polys[k % n] = -polys[k % n]
    assert verify_positive_basis(s, polys).reason == "NEGATIVE"
