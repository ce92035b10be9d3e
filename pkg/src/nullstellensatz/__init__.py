"""Exact nonvanishing certificates for polynomials on product grids.

Over an integral domain, a polynomial with a top-degree term ``c * x^d``
cannot vanish on a grid ``S_1 x ... x S_n`` with ``|S_k| = d_k + 1``.  This
package makes that constructive: Vandermonde cofactors give weights whose
grid sum against ``f`` equals ``c * prod_k det V(S_k)``, and a scan then
finds a point where ``f`` is nonzero.
"""

from .errors import (CapExceededError, DuplicateElementError, GridSizeError, InputError,
                     IntegrityError, InternalError, NullstellensatzError, ParseError, UsageError)
from .linalg import (Matrix, cofactor, determinant, determinant_bareiss, determinant_cofactor,
                     laplace_expansion, minor, pairwise_difference_product,
                     vandermonde_det_product, vandermonde_matrix)
from .multipoly import (Polynomial, Term, evaluate, max_degree_terms, parse_polynomial,
                        select_leading_term, total_degree)
from .nonvanishing import (Certificate, EvaluationSet, GridSpec, LambdaFamily, certify_nonvanishing,
                           find_witness, lambda_family, phi_fast, phi_grid, phi_term_product,
                           verify_lambda_family)
from .ring import ZZ, ZZ_t, Integer, IntPoly, get_domain

__all__ = [
    "ZZ", "ZZ_t", "Integer", "IntPoly", "get_domain",
    "Matrix", "vandermonde_matrix", "determinant", "determinant_cofactor", "determinant_bareiss",
    "minor", "cofactor", "laplace_expansion", "vandermonde_det_product",
    "pairwise_difference_product",
    "Polynomial", "Term", "parse_polynomial", "evaluate", "total_degree",
    "max_degree_terms", "select_leading_term",
    "EvaluationSet", "GridSpec", "LambdaFamily", "Certificate", "lambda_family",
    "verify_lambda_family", "phi_grid", "phi_term_product", "phi_fast",
    "certify_nonvanishing", "find_witness",
    "NullstellensatzError", "UsageError", "InputError", "ParseError",
    "DuplicateElementError", "GridSizeError", "CapExceededError",
    "IntegrityError", "InternalError",
]
