"""Exact arithmetic in finite fields GF(p^e) and their subfields.

Field elements are instances of :class:`galois.FieldArray` subclasses. This module fixes the
modulus and primitive element of each field deterministically, so that discrete-log indices
printed by the command line tool and stored in golden files never depend on library defaults.

Polynomials over the prime field are written as tuples of coefficients with the lowest degree
first, ``(c_0, c_1, ..., c_e)``. Integer representations of field elements follow
:mod:`galois`: the element ``sum(c_i * alpha^i)`` is the integer ``sum(c_i * p^i)``.

.. data:: MAX_FIELD_ORDER

	Largest field order accepted by :func:`make_field`.

.. data:: ZERO_LOG

	Discrete-log index used for the zero element in integer arrays.
"""

import itertools
import math
import logging
from functools import lru_cache
from typing import Tuple

import numpy as np
import galois
from attr import attrs, attrib

from qvariety.io.json import Jsonable


logger = logging.getLogger(__name__)


MAX_FIELD_ORDER = 2 ** 20

ZERO_LOG = -1


def as_ints(x) -> np.ndarray:
	"""Get the integer representation of field elements as a plain Numpy array."""
	if isinstance(x, galois.FieldArray):
		return x.view(np.ndarray)
	return np.asarray(x)


def _coeffs_to_int(coeffs, p: int) -> int:
	return sum(int(c) * p ** i for i, c in enumerate(coeffs))


def _poly(coeffs, GFp) -> galois.Poly:
	"""Make a polynomial from coefficients given lowest degree first."""
	return galois.Poly(list(reversed(coeffs)), field=GFp)


def is_irreducible(coeffs, p: int) -> bool:
	"""Rabin irreducibility test for a monic polynomial over GF(p).

	Parameters
	----------
	coeffs
		Coefficients of the polynomial, lowest degree first.
	p
		Characteristic.
	"""
	GFp = galois.GF(p)
	f = _poly(coeffs, GFp)
	e = f.degree

	if e < 1:
		return False
	if e == 1:
		return True

	x = galois.Poly([1, 0], field=GFp)
	if pow(x, p ** e, f) != x:
		return False

	primes, _ = galois.factors(e)
	for ell in primes:
		h = pow(x, p ** (e // ell), f) - x
		if galois.gcd(h, f).degree != 0:
			return False

	return True


def _first_irreducible(p: int, e: int) -> Tuple[int, ...]:
	for low in itertools.product(range(p), repeat=e):
		if low[0] == 0:
			continue
		coeffs = low + (1,)
		if is_irreducible(coeffs, p):
			return coeffs

	raise RuntimeError(f'No irreducible polynomial of degree {e} over GF({p}) found')


def _is_primitive(x, order: int) -> bool:
	if x == 0:
		return False
	n = order - 1
	if n == 1:
		return True
	primes, _ = galois.factors(n)
	return all(x ** (n // ell) != 1 for ell in primes)


def _first_primitive(GF, p: int, e: int) -> int:
	for coeffs in itertools.product(range(p), repeat=e):
		value = _coeffs_to_int(coeffs, p)
		if value != 0 and _is_primitive(GF(value), p ** e):
			return value

	raise RuntimeError(f'No primitive element found in GF({p}^{e})')


@attrs(frozen=True, repr=False, eq=False)
class FieldSpec(Jsonable):
	"""A finite field GF(p^e) with a fixed modulus and primitive element.

	Use :func:`make_field` to obtain instances with the default (deterministic) choices.

	Parameters
	----------
	p
		Characteristic, a prime.
	e
		Extension degree over the prime field.
	modulus
		Coefficients of the monic irreducible defining polynomial, lowest degree first. For prime
		fields this is ``(0, 1)``.
	generator
		Integer representation of the primitive element used for discrete logs.

	Attributes
	----------
	GF : type
		The :class:`galois.FieldArray` subclass for this field.
	order : int
		Number of elements, ``p ** e``.

	Raises
	------
	ValueError
		If ``p`` is not prime, the modulus is not irreducible or the generator is not primitive.
	"""
	p: int = attrib()
	e: int = attrib()
	modulus: Tuple[int, ...] = attrib(converter=tuple)
	generator: int = attrib()
	GF: type
	order: int

	@p.validator
	def _validate_p(self, attribute, value):
		if not galois.is_prime(value):
			raise ValueError(f'Field characteristic must be prime, got {value}')

	@e.validator
	def _validate_e(self, attribute, value):
		if value < 1:
			raise ValueError('Extension degree must be positive')

	def __attrs_post_init__(self):
		order = self.p ** self.e
		if order > MAX_FIELD_ORDER:
			raise ValueError(f'Field order {self.p}^{self.e} exceeds budget of {MAX_FIELD_ORDER}')

		if self.e == 1:
			GF = galois.GF(self.p, primitive_element=self.generator)
		else:
			if len(self.modulus) != self.e + 1 or self.modulus[-1] != 1:
				raise ValueError(f'Modulus {self.modulus} is not monic of degree {self.e}')
			if not is_irreducible(self.modulus, self.p):
				raise ValueError(f'Modulus {self.modulus} is not irreducible over GF({self.p})')
			GF = galois.GF(
				order,
				irreducible_poly=_poly(self.modulus, galois.GF(self.p)),
				primitive_element=self.generator,
			)

		object.__setattr__(self, 'GF', GF)
		object.__setattr__(self, 'order', order)
		object.__setattr__(self, '_power_ints', None)
		object.__setattr__(self, '_log_table', None)
		object.__setattr__(self, '_subfields', dict())

	@property
	def power_ints(self) -> np.ndarray:
		"""Integer representations of ``g^0, ..., g^(order-2)``."""
		if self._power_ints is None:
			g = self.GF(self.generator)
			powers = g ** np.arange(self.order - 1)
			object.__setattr__(self, '_power_ints', as_ints(powers).astype(np.int64))
		return self._power_ints

	@property
	def powers(self) -> galois.FieldArray:
		"""Field array ``g^0, ..., g^(order-2)`` of powers of the generator."""
		return self.GF(self.power_ints)

	@property
	def log_table(self) -> np.ndarray:
		"""Discrete log of each element indexed by integer representation (:data:`ZERO_LOG` for 0)."""
		if self._log_table is None:
			table = np.full(self.order, ZERO_LOG, dtype=np.int64)
			table[self.power_ints] = np.arange(self.order - 1)
			object.__setattr__(self, '_log_table', table)
		return self._log_table

	def log(self, x):
		"""Discrete logarithm of field elements with respect to the generator.

		Returns ``None`` for a scalar zero and :data:`ZERO_LOG` for zero entries of arrays.
		"""
		logs = self.log_table[as_ints(x)]
		if np.ndim(logs) == 0:
			return None if logs == ZERO_LOG else int(logs)
		return logs

	def exp(self, logs) -> galois.FieldArray:
		"""Field elements ``g^i`` from discrete-log indices, mapping :data:`ZERO_LOG` to zero."""
		logs = np.asarray(logs, dtype=np.int64)
		ints = np.where(logs == ZERO_LOG, 0, self.power_ints[logs % (self.order - 1)])
		return self.GF(ints)

	def subfield(self, sub_exp: int) -> 'SubfieldEmbedding':
		"""Get the embedding of ``make_field(p, sub_exp)`` into this field."""
		if sub_exp not in self._subfields:
			self._subfields[sub_exp] = SubfieldEmbedding.build(make_field(self.p, sub_exp), self)
		return self._subfields[sub_exp]

	def __eq__(self, other):
		return isinstance(other, FieldSpec) and \
			(self.p, self.e, self.modulus, self.generator) == \
			(other.p, other.e, other.modulus, other.generator)

	def __hash__(self):
		return hash((self.p, self.e, self.modulus, self.generator))

	def __repr__(self):
		return f'{type(self).__name__}({self.p}, {self.e}, modulus={self.modulus}, generator={self.generator})'

	def __str__(self):
		return f'GF({self.p}^{self.e})'

	def __to_json__(self):
		return dict(p=self.p, e=self.e, modulus=list(self.modulus), generator=self.generator)

	@classmethod
	def __from_json__(cls, data):
		return cls(data['p'], data['e'], data['modulus'], data['generator'])


@lru_cache(maxsize=None)
def make_field(p: int, e: int) -> FieldSpec:
	"""Create GF(p^e) with its default modulus and generator.

	The modulus is the first monic irreducible polynomial of degree ``e`` with nonzero constant
	term, comparing coefficient tuples ``(c_0, ..., c_{e-1})`` lexicographically. The generator is
	the first primitive element in the same order.

	Parameters
	----------
	p
		Characteristic.
	e
		Extension degree.

	Raises
	------
	ValueError
		If ``p`` is not prime, ``e < 1`` or ``p ** e`` exceeds :data:`MAX_FIELD_ORDER`.
	"""
	if not galois.is_prime(p):
		raise ValueError(f'Field characteristic must be prime, got {p}')
	if e < 1:
		raise ValueError('Extension degree must be positive')
	if p ** e > MAX_FIELD_ORDER:
		raise ValueError(f'Field order {p}^{e} exceeds budget of {MAX_FIELD_ORDER}')

	if e == 1:
		modulus = (0, 1)
		generator = _first_primitive(galois.GF(p), p, 1)
	else:
		modulus = _first_irreducible(p, e)
		provisional = galois.GF(p ** e, irreducible_poly=_poly(modulus, galois.GF(p)))
		generator = _first_primitive(provisional, p, e)

	logger.debug('GF(%d^%d): modulus %s, generator %d', p, e, modulus, generator)
	return FieldSpec(p, e, modulus, generator)


def field_of_order(order: int) -> FieldSpec:
	"""Get the default field with the given number of elements.

	Raises
	------
	ValueError
		If ``order`` is not a prime power.
	"""
	if order < 2 or not galois.is_prime_power(order):
		raise ValueError(f'{order} is not a prime power')
	primes, exps = galois.factors(order)
	return make_field(primes[0], exps[0])


def _check_sub_exp(GF, sub_exp: int):
	if sub_exp < 1 or GF.degree % sub_exp != 0:
		raise ValueError(f'{sub_exp} does not divide the extension degree {GF.degree}')


def subfield_membership(x: galois.FieldArray, sub_exp: int):
	"""Test whether field elements lie in the subfield GF(p^sub_exp).

	Parameters
	----------
	x
		Field element or array of elements.
	sub_exp
		Degree of the subfield over the prime field. Must divide the extension degree.

	Returns
	-------
	bool or numpy.ndarray
		Elementwise result of ``x ** (p ** sub_exp) == x``.
	"""
	GF = type(x)
	_check_sub_exp(GF, sub_exp)
	result = (x ** (GF.characteristic ** sub_exp)) == x
	return bool(result) if np.ndim(result) == 0 else np.asarray(result)


def trace_to(x: galois.FieldArray, sub_exp: int) -> galois.FieldArray:
	"""Trace from the field of ``x`` down to its subfield GF(p^sub_exp).

	Computes ``sum(x ** (p ** (sub_exp * i)) for i < e / sub_exp)`` elementwise.
	"""
	GF = type(x)
	_check_sub_exp(GF, sub_exp)
	p = GF.characteristic
	acc = x
	for i in range(1, GF.degree // sub_exp):
		acc = acc + x ** (p ** (sub_exp * i))
	return acc


def working_exponent(p: int, modulus: int, multiple: int = 1) -> int:
	"""Smallest multiple ``R`` of ``multiple`` such that ``modulus`` divides ``p^R - 1``.

	>>> working_exponent(2, 91, 2)
	12
	>>> working_exponent(5, 104)
	4

	Raises
	------
	ValueError
		If ``p`` divides ``modulus``.
	"""
	if modulus < 1:
		raise ValueError('Modulus must be positive')
	if modulus % p == 0:
		raise ValueError(f'{p} divides {modulus}, no power of {p} is 1 modulo it')

	order = 1
	while pow(p, order, modulus) != 1 % modulus:
		order += 1

	return order * multiple // math.gcd(order, multiple)


@attrs(frozen=True, repr=False, eq=False)
class SubfieldEmbedding:
	"""Embedding of the default field GF(p^S) into a larger field GF(p^R).

	The image of the subfield's defining variable is a root of its modulus inside the larger
	field, so the embedding respects both the subfield's integer representation and its discrete
	logs up to a fixed power map.

	Attributes
	----------
	small
		The subfield as returned by ``make_field(p, S)``.
	big
		The containing field.
	lift_table
		Integer representation in ``big`` of each element of ``small``, indexed by its integer
		representation.
	restrict_table
		Inverse of ``lift_table``, indexed by integer representation in ``big``. Elements outside
		the subfield map to -1.
	"""
	small: FieldSpec = attrib()
	big: FieldSpec = attrib()
	lift_table: np.ndarray = attrib()
	restrict_table: np.ndarray = attrib()

	@classmethod
	def build(cls, small: FieldSpec, big: FieldSpec) -> 'SubfieldEmbedding':
		if small.p != big.p or big.e % small.e != 0:
			raise ValueError(f'{small} is not a subfield of {big}')

		p, S = small.p, small.e

		if S == big.e:
			lift = np.arange(big.order, dtype=np.int64)
		elif S == 1:
			lift = np.arange(p, dtype=np.int64)
		else:
			gamma = big.powers[(big.order - 1) // (small.order - 1)]
			candidates = gamma ** np.arange(small.order - 1)
			value = big.GF.Zeros(small.order - 1)
			for i, c in enumerate(small.modulus):
				value = value + big.GF(c) * candidates ** i
			root = candidates[int(np.flatnonzero(as_ints(value) == 0)[0])]

			digits = small.GF(np.arange(small.order)).vector()
			acc = big.GF.Zeros(small.order)
			for i in range(S):
				acc = acc + big.GF(digits[:, S - 1 - i].view(np.ndarray)) * root ** i
			lift = as_ints(acc).astype(np.int64)

		restrict = np.full(big.order, -1, dtype=np.int64)
		restrict[lift] = np.arange(small.order)
		return cls(small, big, lift, restrict)

	def lift(self, x) -> galois.FieldArray:
		"""Map elements of the subfield into the containing field."""
		return self.big.GF(self.lift_table[as_ints(x)])

	def restrict(self, x) -> galois.FieldArray:
		"""Map elements of the containing field which lie in the subfield back to it.

		Raises
		------
		ValueError
			If any element is not in the subfield.
		"""
		ints = self.restrict_table[as_ints(x)]
		if np.any(ints < 0):
			raise ValueError(f'Elements are not contained in {self.small}')
		return self.small.GF(ints)

	def elements(self) -> galois.FieldArray:
		"""All elements of the subfield as elements of the containing field."""
		return self.big.GF(self.lift_table)

	def log(self, x):
		"""Discrete logs in the subfield of elements of the containing field."""
		return self.small.log(self.restrict(x))

	def __repr__(self):
		return f'{type(self).__name__}({self.small} -> {self.big})'
