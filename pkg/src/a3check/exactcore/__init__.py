"""Exact arithmetic substrate: rationals, Q(zeta), polynomials, rank."""

from a3check.exactcore.eisenstein import (
    ONE,
    ZERO,
    ZETA,
    ZETA2,
    EisensteinNumber,
    eis_conj,
    eis_mul,
    eis_norm,
)
from a3check.exactcore.linalg import RationalMatrix, echelon_pivots, rank_of_span
from a3check.exactcore.parse import parse_poly
from a3check.exactcore.poly import Poly, monomials_of_degree, poly_partial, poly_squarefree
from a3check.exactcore.rational import Rational, as_rational, rational_str

__all__ = [
    "ONE",
    "ZERO",
    "ZETA",
    "ZETA2",
    "EisensteinNumber",
    "Poly",
    "Rational",
    "RationalMatrix",
    "as_rational",
    "echelon_pivots",
    "eis_conj",
    "eis_mul",
    "eis_norm",
    "monomials_of_degree",
    "parse_poly",
    "poly_partial",
    "poly_squarefree",
    "rank_of_span",
    "rational_str",
]
