"""Exact scalars and sparse linear algebra over Z, Z/n, Q and Q[t]."""
from .matrix import (SparseMatrix, identity_vector, kron, kron_all, kron_apply,
                     mat_mul, swap, tensor_permutation, tensor_permutation_map,
                     unvectorize, vectorize)
from .normal_forms import (canonical_row_form, column_module_form, image_subset,
                           invert, is_invertible, nullspace, rank, reduce_modulo,
                           rref, same_image, solve, spans_everything)
from .rings import QQ, QQ_T, ZZ, BaseRing, Scalar, Zmod, is_prime, ring_ops

__all__ = [
    "BaseRing", "Scalar", "SparseMatrix", "ZZ", "QQ", "QQ_T", "Zmod", "is_prime",
    "ring_ops", "mat_mul", "kron", "kron_all", "kron_apply", "swap",
    "tensor_permutation", "tensor_permutation_map", "vectorize", "unvectorize",
    "identity_vector", "canonical_row_form", "column_module_form", "image_subset",
    "same_image", "spans_everything", "invert", "is_invertible", "rref", "rank",
    "nullspace", "solve", "reduce_modulo",
]
