"""Exact Sylvester double sums, subresultants and the ``U_d(x, T)`` determinants."""
from .arith import BiPoly, Rat, UniPoly, binomial, parse_rat, poly_from_roots, sign_pow
from .doublesum import enumerate_subsets, sylvester_double_sum
from .errors import (
    CorruptInputError,
    DomainError,
    DuplicateRootError,
    NonMonicError,
    NotApplicableError,
    ShapeError,
    SylvError,
)
from .linalg import Kernel, PolyMatrix, RootList, block, det, r_product, vandermonde
from .subres import cofactors, dhks_delta_check, resultant, scalar_subresultant, sres, sres_matrix
from .sylvmatrix import Branch, UdContext, build_ud, pq_polys, ud_closed_form, ud_coeff, ud_det
from .verify import classify, main_theorem_rhs, random_instance, verify_main_theorem, verify_matrix_suite

__all__ = [
    "BiPoly", "Rat", "UniPoly", "binomial", "parse_rat", "poly_from_roots", "sign_pow",
    "enumerate_subsets", "sylvester_double_sum",
    "CorruptInputError", "DomainError", "DuplicateRootError", "NonMonicError",
    "NotApplicableError", "ShapeError", "SylvError",
    "Kernel", "PolyMatrix", "RootList", "block", "det", "r_product", "vandermonde",
    "cofactors", "dhks_delta_check", "resultant", "scalar_subresultant", "sres", "sres_matrix",
    "Branch", "UdContext", "build_ud", "pq_polys", "ud_closed_form", "ud_coeff", "ud_det",
    "classify", "main_theorem_rhs", "random_instance", "verify_main_theorem", "verify_matrix_suite",
]
