"""Exact search and verification of equal sums of squares over integer intervals."""

from .arith import (
    DomainError,
    InvariantError,
    QuadExt,
    is_perfect_square,
    isqrt,
    qext_pow,
    sum_sq_interval,
    sum_sq_prefix,
    triangular,
)
from .families import (
    bi_pyth_pair,
    even_family,
    family,
    family_roots,
    j_poly,
    j_value,
    odd_family,
    pi_sqrt,
    table2,
    verify_family,
)
from .intervals import (
    CaseParams,
    discriminant,
    dostor,
    normalize,
    quadratic_of,
    roots,
    side_sums,
    verify_solution,
)
from .pell import (
    euler_td,
    k1_roots,
    near_isosceles,
    pell_step,
    square_triangular,
    x_at,
    x_explicit,
    x_sequence,
)
from .polynomial import IntPolynomial
from .search import (
    j0_k_bound,
    s_ratio,
    scan_discriminant,
    scan_square_pairs,
    swap23,
    type2_from_euler,
    type2_scan,
)

__version__ = "0.1.0"

__all__ = [
    "CaseParams",
    "DomainError",
    "IntPolynomial",
    "InvariantError",
    "QuadExt",
    "bi_pyth_pair",
    "discriminant",
    "dostor",
    "euler_td",
    "even_family",
    "family",
    "family_roots",
    "is_perfect_square",
    "isqrt",
    "j0_k_bound",
    "j_poly",
    "j_value",
    "k1_roots",
    "near_isosceles",
    "normalize",
    "odd_family",
    "pell_step",
    "pi_sqrt",
    "qext_pow",
    "quadratic_of",
    "roots",
    "s_ratio",
    "scan_discriminant",
    "scan_square_pairs",
    "side_sums",
    "square_triangular",
    "sum_sq_interval",
    "sum_sq_prefix",
    "swap23",
    "table2",
    "triangular",
    "type2_from_euler",
    "type2_scan",
    "verify_family",
    "verify_solution",
    "x_at",
    "x_explicit",
    "x_sequence",
]
