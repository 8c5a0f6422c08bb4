"""Test qvariety.linalg."""

import numpy as np
import pytest

from qvariety.field import make_field, as_ints
from qvariety import linalg


@pytest.fixture()
def GF7():
	return make_field(7, 1).GF


def test_rank(GF7):
	assert linalg.rank(GF7([[1, 2], [2, 4]])) == 1
	assert linalg.rank(GF7([[1, 2], [2, 5]])) == 2
	assert linalg.rank(GF7.Zeros((0, 3))) == 0


def test_row_basis(GF7):
	M = GF7([[1, 2, 3], [2, 4, 6], [0, 0, 0], [0, 1, 1]])
	B = linalg.row_basis(M)
	assert B.shape == (2, 3)
	assert linalg.same_rowspace(B, M)


class TestNullSpace:

	@pytest.mark.parametrize('seed', range(5))
	def test_random(self, GF7, seed):
		rng = np.random.default_rng(seed)
		M = GF7(rng.integers(0, 7, (3, 6)))
		N = linalg.null_space(M)
		assert N.shape == (6 - linalg.rank(M), 6)
		assert not np.any(as_ints(M @ N.T))

	def test_zero(self, GF7):
		assert np.array_equal(linalg.null_space(GF7.Zeros((2, 4))), GF7.Identity(4))
		assert np.array_equal(linalg.null_space(GF7.Zeros((0, 4))), GF7.Identity(4))

	def test_full_rank(self, GF7):
		N = linalg.null_space(GF7.Identity(3))
		assert N.shape[0] == 0


def test_stack(GF7):
	assert linalg.stack(GF7, [], 4).shape == (0, 4)
	A = GF7([[1, 0, 0]])
	B = GF7([[0, 1, 0], [0, 0, 1]])
	assert linalg.stack(GF7, [A, linalg.zeros(GF7, 3), B], 3).shape == (3, 3)


def test_cross_gram():
	GF = make_field(2, 2).GF
	A = GF([[2, 1]])
	B = GF([[1, 1]])
	assert linalg.cross_gram(A, B)[0, 0] == GF(2) + GF(1)
	assert linalg.cross_gram(A, B, 2)[0, 0] == GF(2) ** 2 + GF(1)
	assert linalg.cross_gram(A, GF.Zeros((0, 2))).shape == (1, 0)


def test_rowspace(GF7):
	A = GF7([[1, 0, 1], [0, 1, 1]])
	assert linalg.rowspace_contains(A, GF7([[1, 1, 2]]))
	assert not linalg.rowspace_contains(A, GF7([[0, 0, 1]]))
	assert linalg.same_rowspace(A, GF7([[1, 1, 2], [1, 6, 0]]))
	assert not linalg.same_rowspace(A, GF7([[1, 1, 2]]))
	assert not linalg.same_rowspace(A, GF7([[1, 1]]))
