"""
Linalg module - Exact matrices, elimination, forms and lattice reduction.
"""

from .matrix import ExactMatrix, SignatureTriple, dot
from .elimination import det_exact, inverse_bilinear, inverse_matrix, rank, solve_exact
from .forms import (
    alexander_matrix,
    ball_bilinear,
    hermitian_signature_at_omega,
    omega_form_is_singular,
    seifert_alexander_determinant,
    symmetric_signature,
)
from .lattice import kernel_basis, unimodular_split

__all__ = [
    "ExactMatrix",
    "SignatureTriple",
    "dot",
    "det_exact",
    "inverse_bilinear",
    "inverse_matrix",
    "rank",
    "solve_exact",
    "alexander_matrix",
    "ball_bilinear",
    "hermitian_signature_at_omega",
    "omega_form_is_singular",
    "seifert_alexander_determinant",
    "symmetric_signature",
    "kernel_basis",
    "unimodular_split",
]
