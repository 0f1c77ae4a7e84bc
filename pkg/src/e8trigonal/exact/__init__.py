"""Exact rational arithmetic, polynomials, and linear algebra."""

from fractions import Fraction as Q

from .binform import (
    BinaryForm,
    bf_exact_div,
    bf_gcd,
    root_multiplicity,
    squarefree_decomposition,
    transvectant,
)
from .linalg import (
    mat_kernel,
    mat_rank,
    mat_rank_certified,
    mat_rref,
    primitive_vector,
    smith_invariant_factors,
    solve_linear,
)
from .poly import Poly, poly_gcd, resultant

__all__ = [
    "Q",
    "BinaryForm",
    "Poly",
    "bf_exact_div",
    "bf_gcd",
    "mat_kernel",
    "mat_rank",
    "mat_rank_certified",
    "mat_rref",
    "poly_gcd",
    "primitive_vector",
    "resultant",
    "root_multiplicity",
    "smith_invariant_factors",
    "solve_linear",
    "squarefree_decomposition",
    "transvectant",
]
