"""Stabilizer code parameters from certified self-orthogonal classical codes.

.. data:: CERTIFIED

	Certification status of a code whose self-orthogonality and distance are both backed by an exact
	check or a satisfied construction hypothesis.

.. data:: UNVERIFIED

	Certification status of a code whose distance is claimed but not backed.
"""

import math
from typing import List, Optional

from attr import attrs, attrib

from qvariety.affine import ClassicalCode
from qvariety.ortho import Metric, GramCertificate
from qvariety.errors import CertificationError, HypothesisError


CERTIFIED = 'true'
UNVERIFIED = 'unverified(distance)'

#: Certificate kinds which back the distance rather than self-orthogonality.
DISTANCE_KINDS = ('footprint', 'witness')


@attrs()
class Certificate:
	"""One link in the chain of evidence behind a set of parameters.

	Attributes
	----------
	kind
		What is certified, e.g. ``'gram'``, ``'hypothesis'``, ``'witness'`` or ``'oracle'``.
	status
		``'certified'``, ``'unverified'`` or ``'violated'``.
	detail
		Human-readable description.
	"""
	kind: str = attrib()
	status: str = attrib()
	detail: str = attrib(default='')

	@property
	def ok(self) -> bool:
		return self.status == 'certified'


@attrs()
class StabilizerParams:
	"""Parameters ``[[n, k, >= d]]_q`` of a stabilizer code.

	Attributes
	----------
	n
		Length.
	k
		Number of encoded qudits.
	d
		Designed lower bound on the minimum distance.
	q
		Size of the quantum alphabet.
	rule
		Name of the construction.
	certified
		:data:`CERTIFIED` or :data:`UNVERIFIED`.
	chain
		Certificates backing the parameters.
	notes
		Free-text remarks, e.g. purity or discrepancies with published values.
	"""
	n: int = attrib()
	k: int = attrib()
	d: int = attrib()
	q: int = attrib()
	rule: str = attrib()
	certified: str = attrib(default=CERTIFIED)
	chain: List[Certificate] = attrib(factory=list, repr=False)
	notes: List[str] = attrib(factory=list, repr=False)

	@k.validator
	def _validate_k(self, attribute, value):
		if not 0 <= value <= self.n:
			raise ValueError(f'k = {value} is outside of [0, {self.n}]')

	@d.validator
	def _validate_d(self, attribute, value):
		if value < 1:
			raise ValueError(f'Distance must be positive, got {value}')

	@property
	def is_certified(self) -> bool:
		return self.certified == CERTIFIED

	def add(self, kind: str, status: str, detail: str = ''):
		"""Append a certificate, downgrading the status if it is not certified."""
		self.chain.append(Certificate(kind, status, detail))
		if status != 'certified':
			self.certified = UNVERIFIED

	def back_distance(self, kind: str, detail: str = ''):
		"""Record a distance certificate which supersedes unverified footprint and witness entries."""
		self.chain.append(Certificate(kind, 'certified', detail))
		if all(c.ok for c in self.chain if c.kind not in DISTANCE_KINDS):
			self.certified = CERTIFIED

	def to_row(self) -> dict:
		"""Dictionary in the JSON output schema."""
		return dict(n=self.n, k=self.k, d_lower=self.d, q=self.q, rule=self.rule, certified=self.is_certified)

	def __str__(self):
		return f'[[{self.n},{self.k},>={self.d}]]_{self.q}'


def quantum_alphabet(code: ClassicalCode, metric: Metric) -> int:
	"""Size of the quantum alphabet of the CSS-type code built from ``code`` with ``metric``."""
	if metric.kind == 'euclidean':
		return code.alphabet_order
	if metric.kind == 'hermitian':
		metric.check_alphabet(code.alphabet_order)
		return metric.q
	raise ValueError(f'No stabilizer construction for the {metric.kind} product')


def css_params(code: ClassicalCode,
               certified_d: int,
               metric: Metric,
               certificate: Optional[GramCertificate],
               rule: str = 'CSS',
               ) -> StabilizerParams:
	"""Parameters of the stabilizer code obtained from a self-orthogonal code.

	The large classical code is the dual ``C`` of ``code``, so ``k = 2 dim C - n = n - 2 dim(code)``.

	Parameters
	----------
	code
		Self-orthogonal code ``D``.
	certified_d
		Lower bound on the minimum distance of the dual of ``code``.
	metric
		Euclidean or Hermitian product under which ``code`` is self-orthogonal.
	certificate
		Result of :func:`qvariety.ortho.certify_self_orthogonal` for ``code`` and ``metric``.
	rule
		Construction name recorded in the result.

	Raises
	------
	qvariety.errors.CertificationError
		If the certificate is missing, failed or was computed for another product.
	"""
	if certificate is None or not certificate.self_orthogonal:
		raise CertificationError(f'{rule}: code is not certified self-orthogonal')
	if certificate.metric is not None and certificate.metric != metric:
		raise CertificationError(f'{rule}: certificate is for {certificate.metric}, not {metric}')

	params = StabilizerParams(
		n=code.n,
		k=code.n - 2 * code.dimension,
		d=certified_d,
		q=quantum_alphabet(code, metric),
		rule=rule,
	)
	params.add('gram', 'certified', f'{metric} Gram matrix of {code.dimension} rows is zero')
	return params


def enlargement_params(n: int, card1: int, card2: int, d: int, q: int, rule: str = 'Hamada') -> StabilizerParams:
	"""Parameters given by the enlargement of two nested self-orthogonal codes.

	Parameters
	----------
	n
		Length.
	card1, card2
		Dimensions of the larger and the smaller self-orthogonal code.
	d
		Distance bound of the enlarged code.
	q
	rule

	Raises
	------
	ValueError
		If ``card2 > card1``.
	"""
	if card2 > card1:
		raise ValueError(f'Inner code dimension {card2} exceeds outer dimension {card1}')
	return StabilizerParams(n=n, k=n - (card1 + card2), d=d, q=q, rule=rule)


def enlarged_distance(d1: int, d2: int, q: int) -> int:
	"""Distance bound ``min(d1, ceil((q + 1) d2 / q))`` of an enlarged code.

	>>> enlarged_distance(6, 4, 4)
	5
	>>> enlarged_distance(10, 9, 3)
	10
	"""
	return min(d1, math.ceil((q + 1) * d2 / q))


def check_gap(d1: int, d2: int, q: int, rule: str = 'Hamada'):
	"""Check that the enlargement keeps the distance ``d1`` of the outer code.

	Raises
	------
	qvariety.errors.HypothesisError
		If ``ceil((q + 1) d2 / q) < d1``.
	"""
	bound = enlarged_distance(d1, d2, q)
	if bound < d1:
		raise HypothesisError(
			f'{rule}: gap inequality {d1} <= ceil(({q}+1)*{d2}/{q}) = {bound} fails'
		)
