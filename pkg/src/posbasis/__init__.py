"""Positive bases in spaces of polynomials over compact subsets of the line."""

from .bernstein import (
    CapExceeded,
    bernstein_basis_poly,
    degree_elevate,
    from_bernstein,
    lorentz_degree,
    lorentz_theorem_applies,
    to_bernstein,
)
from .construct import (
    BasisFamily,
    Branch,
    DnBranch,
    Variant,
    basis_for_nodes,
    dn,
    extremal_poly,
    interval_basis,
    max_dim,
    optimal_nodes,
)
from .nodes import omega_type, remove_node, witnesses
from .omega import contract, count_K, count_N, nu, sigma, sigma_closed, tau
from .oracle import ConeProblem, cone_nontrivial, dn_oracle, lorentz_oracle, tau_oracle
from .polycore import FactoredPoly, Polynomial, expand
from .schur import schur_cohn_has_root_in_closed_unit_disk
from .sets import CompactSet, canonicalize, holes, lambda_, membership, parse_set_expr, profile
from .sturm import is_nonneg_on, sturm_sign_report
from .verify import VerifyReport, verify_positive_basis

__version__ = "0.1.0"
