"""Euclidean, Hermitian and twisted orthogonality of variety codes.

All three inner products have the form ``x . y = sum(x_i ** c * y_i)`` for a conjugation exponent
``c``, which is 1 for the Euclidean product, ``q`` for the Hermitian product over GF(q^2) and
``p^s`` for the twisted product used to certify subfield-subcodes.
"""

import logging
from typing import List, Tuple

import numpy as np
import galois
from attr import attrs, attrib

from qvariety.affine import VarietySpec, DeltaSet, ClassicalCode
from qvariety.field import as_ints
from qvariety import linalg


logger = logging.getLogger(__name__)


METRIC_KINDS = ('euclidean', 'hermitian', 'twisted')


@attrs(frozen=True)
class Metric:
	"""An inner product on vectors over a finite field.

	Attributes
	----------
	kind : str
		One of ``'euclidean'``, ``'hermitian'`` or ``'twisted'``.
	q : int
		For Hermitian products, the square root of the alphabet size. For twisted products, the
		power of the characteristic applied to the first argument. 1 for Euclidean products.
	"""
	kind: str = attrib()
	q: int = attrib(default=1)

	@kind.validator
	def _validate_kind(self, attribute, value):
		if value not in METRIC_KINDS:
			raise ValueError(f'Unknown metric {value!r}')

	@classmethod
	def euclidean(cls) -> 'Metric':
		return cls('euclidean', 1)

	@classmethod
	def hermitian(cls, q: int) -> 'Metric':
		return cls('hermitian', q)

	@classmethod
	def twisted(cls, ps: int) -> 'Metric':
		return cls('twisted', ps)

	@classmethod
	def parse(cls, name: str, q: int = None) -> 'Metric':
		"""Create from a name as given on the command line."""
		if name == 'euclidean':
			return cls.euclidean()
		if q is None:
			raise ValueError(f'Metric {name!r} requires q')
		return cls(name, q)

	@property
	def conj_exp(self) -> int:
		"""Exponent applied to the first argument of the product."""
		return 1 if self.kind == 'euclidean' else self.q

	@property
	def is_hermitian(self) -> bool:
		return self.kind == 'hermitian'

	def check_alphabet(self, order: int):
		"""Check that the product is defined over an alphabet of the given size.

		Raises
		------
		ValueError
			For a Hermitian product on an alphabet whose size is not ``q ** 2``.
		"""
		if self.kind == 'hermitian' and order != self.q ** 2:
			raise ValueError(f'Hermitian product with q={self.q} requires an alphabet of size {self.q ** 2}, got {order}')

	def __str__(self):
		return self.kind if self.kind == 'euclidean' else f'{self.kind}(q={self.q})'


def monomials_orthogonal(spec: VarietySpec, a, b, metric: Metric) -> bool:
	"""Decide whether ``ev(X^a) ** c . ev(X^b)`` vanishes without computing the evaluations.

	The product factors over coordinates. With ``e_j = c * a_j + b_j`` the factor of coordinate
	``j`` is nonzero exactly when ``N_j - 1`` divides ``e_j`` and either ``j`` is in ``J``,
	``e_j > 0`` or ``p`` does not divide ``N_j``.

	Raises
	------
	ValueError
		If either tuple is outside of the exponent box.
	"""
	a = spec.check_exponent(a)
	b = spec.check_exponent(b)
	c = metric.conj_exp

	for j in range(spec.m):
		e = c * a[j] + b[j]
		M = spec.moduli[j]
		if e % M != 0:
			return True
		if not spec.in_J(j) and e == 0 and spec.N[j] % spec.p == 0:
			return True

	return False


def companion_images(spec: VarietySpec, a, metric: Metric) -> List[Tuple[int, ...]]:
	"""Exponents removed from the box by ``a`` when forming the dual exponent set.

	Coordinate ``j`` of the image is ``-c * a_j`` modulo ``N_j - 1``, reduced into ``{0..N_j-2}``
	for ``j`` in ``J`` and into ``{1..N_j-1}`` otherwise. For ``j`` not in ``J`` with
	``a_j = N_j - 1`` the coordinate takes both values 0 and ``N_j - 1``.
	"""
	a = spec.check_exponent(a)
	c = metric.conj_exp
	choices = []

	for j in range(spec.m):
		M = spec.moduli[j]
		if spec.in_J(j):
			choices.append([(-c * a[j]) % M])
		elif a[j] == M:
			choices.append([0, M])
		else:
			choices.append([(-c * a[j] - 1) % M + 1])

	images = [()]
	for values in choices:
		images = [img + (v,) for img in images for v in values]
	return images


def delta_perp(spec: VarietySpec, delta, metric: Metric) -> DeltaSet:
	"""The dual exponent set: the box minus the companion images of all members of ``delta``.

	When ``p`` divides ``N_j`` for all ``j`` not in ``J``, the code of the result is contained in the
	dual of ``E_delta``, with equality when ``delta`` has no coordinate equal to ``N_j - 1``.
	"""
	if not isinstance(delta, DeltaSet):
		delta = DeltaSet(spec, delta)

	removed = set()
	for a in delta:
		removed.update(companion_images(spec, a, metric))

	return DeltaSet(spec, (b for b in spec.box() if b not in removed))


def in_H_prime(spec: VarietySpec, delta) -> bool:
	"""Whether no exponent tuple has a coordinate equal to ``N_j - 1``."""
	return all(all(x < M for x, M in zip(a, spec.moduli)) for a in delta)


@attrs()
class GramCertificate:
	"""Result of an exact self-orthogonality check.

	Attributes
	----------
	self_orthogonal
		Whether every entry of the Gram matrix is zero.
	violations
		Index pairs ``(i, j)``, ``i <= j``, of generator rows whose product is nonzero in either
		order.
	metric
		Inner product used.
	gram
		The Gram matrix ``(G ** c) @ G.T``.
	"""
	self_orthogonal: bool = attrib()
	violations: List[Tuple[int, int]] = attrib(factory=list)
	metric: Metric = attrib(default=None)
	gram: galois.FieldArray = attrib(default=None, repr=False)

	def __bool__(self):
		return self.self_orthogonal


def certify_self_orthogonal(code: ClassicalCode, metric: Metric) -> GramCertificate:
	"""Compute the Gram matrix of a code and check that it vanishes.

	Raises
	------
	ValueError
		For a Hermitian product on a code whose alphabet is not GF(q^2).
	"""
	metric.check_alphabet(code.alphabet_order)
	G = code.generator
	gram = linalg.cross_gram(G, G, metric.conj_exp)

	nonzero = as_ints(gram) != 0
	nonzero = nonzero | nonzero.T
	violations = [(int(i), int(j)) for i, j in zip(*np.nonzero(np.triu(nonzero)))]

	if violations:
		logger.debug('%r is not self-orthogonal under %s: %d violations', code, metric, len(violations))

	return GramCertificate(not violations, violations, metric, gram)


def cross_orthogonal(code_a: ClassicalCode, code_b: ClassicalCode, metric: Metric) -> bool:
	"""Whether every row of ``code_a`` is orthogonal to every row of ``code_b``."""
	gram = linalg.cross_gram(code_a.generator, code_b.generator, metric.conj_exp)
	return not np.any(as_ints(gram))
