"""Test qvariety.field."""

import itertools

import pytest
import numpy as np

from qvariety.field import make_field, field_of_order, FieldSpec, is_irreducible, as_ints, \
	subfield_membership, trace_to, working_exponent, ZERO_LOG, MAX_FIELD_ORDER


FIELDS = [(2, 1), (2, 2), (2, 4), (3, 1), (3, 2), (5, 2), (7, 2)]


@pytest.mark.parametrize('coeffs,p,expected', [
	((1, 1, 1), 2, True),
	((1, 0, 1), 2, False),
	((1, 1, 0, 1), 2, True),
	((1, 0, 0, 1, 1), 2, True),
	((1, 0, 0, 0, 1), 2, False),
	((1, 0, 1), 3, True),
	((2, 0, 1), 3, False),
	((3, 1), 5, True),
])
def test_is_irreducible(coeffs, p, expected):
	assert is_irreducible(coeffs, p) == expected


class TestMakeField:
	"""Test make_field() and the FieldSpec class."""

	@pytest.mark.parametrize('p,e', FIELDS)
	def test_basic(self, p, e):
		field = make_field(p, e)
		assert field.p == p
		assert field.e == e
		assert field.order == p ** e
		assert field.GF.order == p ** e
		assert is_irreducible(field.modulus, p) or e == 1

	@pytest.mark.parametrize('p,e', FIELDS)
	def test_deterministic(self, p, e):
		field = make_field(p, e)
		field2 = FieldSpec(p, e, field.modulus, field.generator)
		assert field2 == field
		assert hash(field2) == hash(field)
		assert np.array_equal(field2.power_ints, field.power_ints)

	@pytest.mark.parametrize('p,e', FIELDS)
	def test_generator_primitive(self, p, e):
		field = make_field(p, e)
		powers = field.power_ints
		assert len(powers) == field.order - 1
		assert sorted(powers) == list(range(1, field.order))

	def test_modulus_order(self):
		# First irreducible polynomial in lexicographic order
		assert make_field(2, 2).modulus == (1, 1, 1)
		assert make_field(2, 3).modulus == (1, 0, 1, 1)
		assert make_field(3, 2).modulus == (1, 0, 1)

	@pytest.mark.parametrize('p,e', [(4, 1), (2, 0), (2, 21), (1, 3)])
	def test_invalid(self, p, e):
		with pytest.raises(ValueError):
			make_field(p, e)

	def test_max_order(self):
		assert MAX_FIELD_ORDER == 2 ** 20

	def test_bad_modulus(self):
		with pytest.raises(ValueError):
			FieldSpec(2, 2, (1, 0, 1), 2)

	def test_str(self):
		assert str(make_field(5, 2)) == 'GF(5^2)'


@pytest.mark.parametrize('p,e', [(7, 1), (3, 4), (7, 2), (5, 3)])
def test_odd_prime_powers(p, e):
	"""Fields whose orders need factoring for the irreducibility and primitivity checks."""
	field = make_field(p, e)
	assert str(field) == f'GF({p}^{e})'
	assert field_of_order(p ** e) == field
	assert sorted(field.power_ints) == list(range(1, p ** e))
	if e > 1:
		assert is_irreducible(field.modulus, p)


def test_field_of_order():
	assert field_of_order(49) == make_field(7, 2)
	assert field_of_order(2) == make_field(2, 1)
	for bad in [1, 6, 12]:
		with pytest.raises(ValueError):
			field_of_order(bad)


class TestLogs:
	"""Test discrete logs and exponentials."""

	@pytest.mark.parametrize('p,e', FIELDS)
	def test_roundtrip(self, p, e):
		field = make_field(p, e)
		logs = np.arange(field.order - 1)
		assert np.array_equal(field.log(field.exp(logs)), logs)

	def test_zero(self):
		field = make_field(3, 2)
		assert field.log(field.GF(0)) is None
		assert field.log(field.GF(1)) == 0
		assert field.log(field.GF(field.generator)) == 1
		assert as_ints(field.exp([ZERO_LOG, 0])).tolist() == [0, 1]
		assert field.log(field.GF([0, 1])).tolist() == [ZERO_LOG, 0]

	def test_exp_wraps(self):
		field = make_field(2, 3)
		assert np.array_equal(field.exp([7, 8]), field.exp([0, 1]))


class TestSubfields:
	"""Test subfield membership, trace and embeddings."""

	@pytest.mark.parametrize('p,e,s', [(2, 4, 1), (2, 4, 2), (3, 2, 1), (5, 2, 1), (2, 4, 4)])
	def test_membership(self, p, e, s):
		field = make_field(p, e)
		x = field.GF(np.arange(field.order))
		assert np.count_nonzero(subfield_membership(x, s)) == p ** s

	def test_membership_scalar(self):
		field = make_field(2, 4)
		assert subfield_membership(field.GF(1), 2) is True

	@pytest.mark.parametrize('p,e,s', [(2, 4, 1), (2, 4, 2), (3, 2, 1), (7, 2, 1)])
	def test_trace(self, p, e, s):
		field = make_field(p, e)
		x = field.GF(np.arange(field.order))
		assert np.all(subfield_membership(trace_to(x, s), s))

	@pytest.mark.parametrize('p,e,s', [(2, 4, 1), (2, 4, 2), (3, 2, 1), (7, 2, 1), (2, 6, 3), (3, 4, 2)])
	def test_trace_linear(self, p, e, s):
		"""The trace is linear over the subfield and maps onto it."""
		field = make_field(p, e)
		x = field.GF(np.arange(field.order))
		y = field.GF(np.random.default_rng(0).permutation(field.order))
		tx, ty = trace_to(x, s), trace_to(y, s)

		for a in field.subfield(s).elements():
			assert np.array_equal(trace_to(a * x + y, s), a * tx + ty)

		assert len(np.unique(as_ints(tx))) == p ** s

	@pytest.mark.parametrize('p,e', FIELDS)
	def test_frobenius_additive(self, p, e):
		field = make_field(p, e)
		i, j = np.meshgrid(np.arange(field.order), np.arange(field.order))
		x, y = field.GF(i.ravel()), field.GF(j.ravel())
		assert np.array_equal((x + y) ** p, x ** p + y ** p)

	def test_bad_sub_exp(self):
		field = make_field(2, 4)
		with pytest.raises(ValueError):
			subfield_membership(field.GF(1), 3)

	@pytest.mark.parametrize('p,e,s', [(2, 4, 2), (2, 4, 1), (3, 2, 1), (2, 6, 3), (2, 6, 2)])
	def test_embedding(self, p, e, s):
		big = make_field(p, e)
		emb = big.subfield(s)
		small = emb.small
		assert small == make_field(p, s)

		x = small.GF(np.arange(small.order))
		lifted = emb.lift(x)
		assert np.all(subfield_membership(lifted, s))
		assert np.array_equal(emb.restrict(lifted), x)
		assert sorted(as_ints(emb.elements())) == sorted(as_ints(lifted))

		# Ring homomorphism
		for a, b in itertools.product(range(small.order), repeat=2):
			a, b = small.GF(a), small.GF(b)
			assert emb.lift(a * b) == emb.lift(a) * emb.lift(b)
			assert emb.lift(a + b) == emb.lift(a) + emb.lift(b)

	def test_restrict_outside(self):
		emb = make_field(2, 4).subfield(2)
		outside = [x for x in range(16) if not subfield_membership(make_field(2, 4).GF(x), 2)]
		with pytest.raises(ValueError):
			emb.restrict(make_field(2, 4).GF(outside[0]))

	def test_cached(self):
		field = make_field(2, 4)
		assert field.subfield(2) is field.subfield(2)


@pytest.mark.parametrize('p,modulus,multiple,expected', [
	(2, 91, 2, 12),
	(5, 104, 1, 4),
	(3, 80, 1, 4),
	(3, 80, 2, 4),
	(2, 3, 1, 2),
	(7, 48, 1, 2),
	(2, 1, 3, 3),
])
def test_working_exponent(p, modulus, multiple, expected):
	assert working_exponent(p, modulus, multiple) == expected


def test_working_exponent_invalid():
	with pytest.raises(ValueError):
		working_exponent(2, 4)
	with pytest.raises(ValueError):
		working_exponent(3, 0)
