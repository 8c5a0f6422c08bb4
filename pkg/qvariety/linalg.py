"""Exact linear algebra over finite fields.

Thin wrappers around the :mod:`galois` matrix routines that fix conventions used throughout the
package: matrices are generator matrices whose rows span a code, and "null space" means the set of
row vectors orthogonal to every row.
"""

from typing import Type

import numpy as np
import galois


def rank(M: galois.FieldArray) -> int:
	"""Rank of a matrix over its field."""
	if M.shape[0] == 0 or M.shape[1] == 0:
		return 0
	return int(np.linalg.matrix_rank(M))


def row_basis(M: galois.FieldArray) -> galois.FieldArray:
	"""Reduced row echelon basis of the row space of ``M``, with zero rows dropped."""
	if M.shape[0] == 0:
		return M
	R = M.row_reduce()
	nonzero = np.any(R.view(np.ndarray) != 0, axis=1)
	return R[nonzero]


def null_space(M: galois.FieldArray, n: int = None) -> galois.FieldArray:
	"""Basis (as rows) of ``{x : M @ x = 0}``, the Euclidean dual of the row space of ``M``.

	Parameters
	----------
	M
		Matrix with ``n`` columns. May have zero rows.
	n
		Number of columns, only needed if ``M`` is not a 2D array with known shape.
	"""
	GF = type(M)
	n = M.shape[1] if n is None else n
	if M.shape[0] == 0 or not np.any(M.view(np.ndarray)):
		return GF.Identity(n)
	N = M.null_space()
	if N.ndim == 1:
		N = N.reshape(-1, n)
	return N


def zeros(GF: Type[galois.FieldArray], n: int) -> galois.FieldArray:
	"""Empty generator matrix with ``n`` columns."""
	return GF.Zeros((0, n))


def stack(GF: Type[galois.FieldArray], blocks, n: int) -> galois.FieldArray:
	"""Vertically stack matrices with ``n`` columns, allowing an empty list."""
	blocks = [b for b in blocks if b.shape[0] > 0]
	if not blocks:
		return zeros(GF, n)
	return GF(np.vstack([b.view(np.ndarray) for b in blocks]))


def cross_gram(A: galois.FieldArray, B: galois.FieldArray, conj_exp: int = 1) -> galois.FieldArray:
	"""Matrix of inner products ``sum_k A[i, k] ** conj_exp * B[j, k]``."""
	if A.shape[0] == 0 or B.shape[0] == 0:
		return type(A).Zeros((A.shape[0], B.shape[0]))
	return (A ** conj_exp) @ B.T


def same_rowspace(A: galois.FieldArray, B: galois.FieldArray) -> bool:
	"""Whether two matrices over the same field have the same row space."""
	if A.shape[1] != B.shape[1]:
		return False
	GF = type(A)
	ra = rank(A)
	return ra == rank(B) and ra == rank(stack(GF, [A, B], A.shape[1]))


def rowspace_contains(A: galois.FieldArray, B: galois.FieldArray) -> bool:
	"""Whether the row space of ``A`` contains every row of ``B``."""
	GF = type(A)
	return rank(A) == rank(stack(GF, [A, B], A.shape[1]))
