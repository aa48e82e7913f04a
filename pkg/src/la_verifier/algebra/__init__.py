# src/la_verifier/algebra/__init__.py
"""Exact scalars and the hybrid-number ring."""

from la_verifier.algebra.scalars import QuadExt, as_rational, quad_arith, rat_arith, surd_conjugate
from la_verifier.algebra.hybrid import (
    Hybrid,
    character,
    character_abs,
    hybrid_conj,
    hybrid_inverse,
    hybrid_mul,
    hybrid_pow,
    matrix_rep,
)

__all__ = [
    "QuadExt",
    "as_rational",
    "quad_arith",
    "rat_arith",
    "surd_conjugate",
    "Hybrid",
    "character",
    "character_abs",
    "hybrid_conj",
    "hybrid_inverse",
    "hybrid_mul",
    "hybrid_pow",
    "matrix_rep",
]
