"""J-affine variety codes and their subfield-subcodes.

A :class:`VarietySpec` fixes a field GF(Q), integers ``N_1, ..., N_m`` with ``N_j - 1`` dividing
``Q - 1`` and a subset ``J`` of coordinates. The variety consists of the points whose ``j``-th
coordinate is an ``(N_j - 1)``-th root of unity, or zero when ``j`` is not in ``J``. The code
``E_Delta`` is spanned by the evaluations of the monomials ``X^a``, ``a`` in ``Delta``, at these
points.

Points are handled through their discrete logs: the ``i``-th root of unity of coordinate ``j`` is
``g^(step_j * i)`` with ``step_j = (Q - 1) / (N_j - 1)``, and zero comes last.
"""

import logging
from typing import Tuple, FrozenSet, Optional, Iterable, List

import numpy as np
import galois
from attr import attrs, attrib

from qvariety.field import FieldSpec, ZERO_LOG, field_of_order, trace_to
from qvariety.cyclo import cyclotomic_partition, exponent_box, ExponentTuple
from qvariety.io.json import Jsonable, exponent_tuples_to_json, exponent_tuples_from_json
from qvariety import linalg


logger = logging.getLogger(__name__)


@attrs(frozen=True, repr=False, eq=False)
class VarietySpec(Jsonable):
	"""Parameters of a J-affine variety.

	Parameters
	----------
	field
		The field GF(Q).
	N
		Integers ``N_j > 1`` with ``N_j - 1`` dividing ``Q - 1``.
	J
		1-based indices of the coordinates restricted to nonzero values.

	Attributes
	----------
	m : int
		Number of variables.
	n : int
		Number of points, ``prod(N_j for j not in J) * prod(N_j - 1 for j in J)``.
	epsilon : tuple
		1 for coordinates in ``J`` and 0 otherwise.
	moduli : tuple
		``N_j - 1`` for each coordinate.
	steps : tuple
		``(Q - 1) / (N_j - 1)`` for each coordinate.
	zero_fixed : tuple
		True for coordinates not in ``J``.
	T : tuple
		Largest exponent allowed in each coordinate, ``N_j - 1 - epsilon_j``.

	Raises
	------
	ValueError
		If some ``N_j - 1`` does not divide ``Q - 1`` or ``J`` is not a subset of the coordinates.
	"""
	field: FieldSpec = attrib()
	N: Tuple[int, ...] = attrib(converter=lambda v: tuple(int(x) for x in v))
	J: FrozenSet[int] = attrib(converter=lambda v: frozenset(int(x) for x in v))
	m: int
	n: int
	epsilon: Tuple[int, ...]
	moduli: Tuple[int, ...]
	steps: Tuple[int, ...]
	zero_fixed: Tuple[bool, ...]
	T: Tuple[int, ...]

	@N.validator
	def _validate_N(self, attribute, value):
		if not value:
			raise ValueError('Must give at least one N_j')
		for Nj in value:
			if Nj < 2:
				raise ValueError(f'N_j must be at least 2, got {Nj}')
			if (self.field.order - 1) % (Nj - 1) != 0:
				raise ValueError(f'N_j - 1 = {Nj - 1} does not divide Q - 1 = {self.field.order - 1}')

	@J.validator
	def _validate_J(self, attribute, value):
		bad = [j for j in value if not 1 <= j <= len(self.N)]
		if bad:
			raise ValueError(f'J contains indices {bad} outside of 1..{len(self.N)}')

	def __attrs_post_init__(self):
		m = len(self.N)
		epsilon = tuple(int(self.in_J(j)) for j in range(m))
		n = 1
		for Nj, eps in zip(self.N, epsilon):
			n *= Nj - eps

		derived = dict(
			m=m,
			n=n,
			epsilon=epsilon,
			moduli=tuple(Nj - 1 for Nj in self.N),
			steps=tuple((self.field.order - 1) // (Nj - 1) for Nj in self.N),
			zero_fixed=tuple(not e for e in epsilon),
			T=tuple(Nj - 1 - e for Nj, e in zip(self.N, epsilon)),
			_point_logs=None,
		)
		for name, value in derived.items():
			object.__setattr__(self, name, value)

	@classmethod
	def create(cls, Q: int, N, J) -> 'VarietySpec':
		"""Create from the field order instead of a :class:`.FieldSpec`."""
		return cls(field_of_order(Q), N, J)

	@property
	def p(self) -> int:
		return self.field.p

	@property
	def Q(self) -> int:
		return self.field.order

	def in_J(self, j: int) -> bool:
		"""Whether the coordinate with 0-based index ``j`` is in ``J``."""
		return (j + 1) in self.J

	def box(self) -> Iterable[ExponentTuple]:
		"""Iterate over the exponent box ``H_J`` in lexicographic order."""
		return exponent_box(self.moduli, self.zero_fixed)

	def in_box(self, a) -> bool:
		return len(a) == self.m and all(0 <= x <= t for x, t in zip(a, self.T))

	def check_exponent(self, a) -> ExponentTuple:
		a = tuple(int(x) for x in a)
		if not self.in_box(a):
			raise ValueError(f'Exponent {a} is outside of the exponent box with maxima {self.T}')
		return a

	def point_logs(self) -> np.ndarray:
		"""Discrete logs of all points as an ``(n, m)`` integer array, :data:`.ZERO_LOG` for zero."""
		if self._point_logs is None:
			axes = []
			for j in range(self.m):
				axis = [self.steps[j] * i for i in range(self.N[j] - 1)]
				if not self.in_J(j):
					axis.append(ZERO_LOG)
				axes.append(np.array(axis, dtype=np.int64))
			grids = np.meshgrid(*axes, indexing='ij')
			logs = np.stack([g.ravel() for g in grids], axis=1)
			object.__setattr__(self, '_point_logs', logs)
		return self._point_logs

	def __eq__(self, other):
		return isinstance(other, VarietySpec) and \
			(self.field, self.N, self.J) == (other.field, other.N, other.J)

	def __hash__(self):
		return hash((self.field, self.N, self.J))

	def __repr__(self):
		J = sorted(self.J)
		return f'{type(self).__name__}(Q={self.Q}, N={self.N}, J={J})'

	def __to_json__(self):
		return dict(Q=self.Q, N=list(self.N), J=sorted(self.J))

	@classmethod
	def __from_json__(cls, data):
		return cls.create(data['Q'], data['N'], data['J'])


@attrs(frozen=True, repr=False)
class DeltaSet(Jsonable):
	"""A set of exponent tuples inside the exponent box of a variety.

	Iteration yields the tuples in canonical (lexicographic) order.
	"""
	spec: VarietySpec = attrib()
	tuples: FrozenSet[ExponentTuple] = attrib(converter=lambda v: frozenset(tuple(int(x) for x in a) for a in v))

	@tuples.validator
	def _validate_tuples(self, attribute, value):
		for a in value:
			self.spec.check_exponent(a)

	@property
	def ordered(self) -> List[ExponentTuple]:
		return sorted(self.tuples)

	def __len__(self):
		return len(self.tuples)

	def __iter__(self):
		return iter(self.ordered)

	def __contains__(self, a):
		return tuple(a) in self.tuples

	def __le__(self, other):
		return self.tuples <= frozenset(other)

	def __repr__(self):
		return f'{type(self).__name__}({self.spec!r}, {self.ordered})'

	def __to_json__(self):
		return dict(spec=self.spec.__to_json__(), tuples=exponent_tuples_to_json(self.tuples))

	@classmethod
	def __from_json__(cls, data):
		return cls(VarietySpec.__from_json__(data['spec']), exponent_tuples_from_json(data['tuples']))


@attrs(frozen=True)
class Provenance:
	"""Where a code came from.

	Attributes
	----------
	spec
		Variety the code is defined on, if any.
	delta
		Exponent set of the evaluation code the code was derived from, if any.
	note
		Free-text description of derivation steps.
	"""
	spec: Optional[VarietySpec] = attrib(default=None)
	delta: Optional[FrozenSet[ExponentTuple]] = attrib(default=None)
	note: str = attrib(default='')

	def derive(self, note: str) -> 'Provenance':
		note = f'{self.note}; {note}' if self.note else note
		return Provenance(self.spec, self.delta, note)


@attrs(frozen=True, repr=False, eq=False)
class ClassicalCode:
	"""A linear code given by a generator matrix.

	The entries of the generator matrix are stored as elements of ``field`` but all lie in the
	subfield GF(p^sub_exp), which is the alphabet of the code.

	Attributes
	----------
	field
		Field the generator matrix entries are stored in.
	generator
		Generator matrix with linearly independent rows.
	sub_exp
		Degree of the alphabet over the prime field.
	provenance
		Derivation record.
	"""
	field: FieldSpec = attrib()
	generator: galois.FieldArray = attrib()
	sub_exp: int = attrib()
	provenance: Provenance = attrib(factory=Provenance)

	@sub_exp.validator
	def _validate_sub_exp(self, attribute, value):
		if value < 1 or self.field.e % value != 0:
			raise ValueError(f'Alphabet degree {value} does not divide field degree {self.field.e}')

	@property
	def n(self) -> int:
		return self.generator.shape[1]

	@property
	def dimension(self) -> int:
		return self.generator.shape[0]

	@property
	def alphabet_order(self) -> int:
		return self.field.p ** self.sub_exp

	def alphabet_generator(self) -> galois.FieldArray:
		"""Generator matrix as a matrix over the alphabet field ``make_field(p, sub_exp)``."""
		if self.sub_exp == self.field.e:
			return self.generator
		return self.field.subfield(self.sub_exp).restrict(self.generator)

	def __repr__(self):
		return f'{type(self).__name__}([{self.n}, {self.dimension}] over GF({self.field.p}^{self.sub_exp}))'


def point_set(spec: VarietySpec) -> galois.FieldArray:
	"""Points of the variety as the rows of an ``(n, m)`` field array.

	The first coordinate varies slowest. Within a coordinate the roots of unity come in order of
	increasing discrete log, followed by zero for coordinates not in ``J``.
	"""
	return spec.field.exp(spec.point_logs())


def evaluation_matrix(spec: VarietySpec, exponents) -> galois.FieldArray:
	"""Evaluations of several monomials, one per row.

	Parameters
	----------
	spec
	exponents
		Sequence of exponent tuples in the exponent box.

	Returns
	-------
	galois.FieldArray
		Array of shape ``(len(exponents), n)``.
	"""
	exps = np.array([spec.check_exponent(a) for a in exponents], dtype=np.int64).reshape(-1, spec.m)
	logs = spec.point_logs()
	is_zero = logs == ZERO_LOG

	total = (exps @ np.where(is_zero, 0, logs).T) % (spec.Q - 1)
	# 0^0 = 1, 0^a = 0 for a > 0
	vanish = ((exps > 0).astype(np.int64) @ is_zero.T.astype(np.int64)) > 0
	return spec.field.exp(np.where(vanish, ZERO_LOG, total))


def evaluate_monomial(spec: VarietySpec, a) -> galois.FieldArray:
	"""Evaluate ``X^a`` at all points of the variety.

	Raises
	------
	ValueError
		If ``a`` is outside the exponent box.
	"""
	return evaluation_matrix(spec, [a])[0]


def _as_tuples(spec, delta) -> List[ExponentTuple]:
	if isinstance(delta, DeltaSet):
		return delta.ordered
	return DeltaSet(spec, delta).ordered


def build_code(spec: VarietySpec, delta) -> ClassicalCode:
	"""Build the evaluation code ``E_Delta`` over GF(Q).

	The generator rows are the evaluations of the monomials of ``delta`` in canonical order.

	Raises
	------
	ValueError
		If ``delta`` is empty or contains tuples outside the exponent box.
	"""
	tuples = _as_tuples(spec, delta)
	if not tuples:
		raise ValueError('Delta must not be empty')

	G = evaluation_matrix(spec, tuples)
	return ClassicalCode(spec.field, G, spec.field.e, Provenance(spec, frozenset(tuples)))


def is_closed(spec: VarietySpec, delta, base: int) -> bool:
	"""Whether ``delta`` is a union of minimal cyclotomic sets under ``base``."""
	partition = cyclotomic_partition(spec.moduli, base, spec.zero_fixed)
	return partition.is_closed(_as_tuples(spec, delta))


def _basis_elements(field: FieldSpec, count: int) -> galois.FieldArray:
	"""The elements ``x^0, ..., x^(count-1)`` of the polynomial basis."""
	return field.GF([field.p ** l for l in range(count)])


def _subcode_kernel(code: ClassicalCode, sub_exp: int) -> galois.FieldArray:
	field = code.field
	GF = field.GF
	G = code.generator
	k, n = G.shape
	e = field.e
	q_sub = field.p ** sub_exp

	basis = _basis_elements(field, e)
	# Rows B_l * G_i, basis-major: row l * k + i
	V = GF(np.concatenate([(b * G).view(np.ndarray) for b in basis], axis=0))
	defect = V ** q_sub - V
	W = defect.vector().reshape(V.shape[0], n * e)

	solutions = linalg.null_space(W.T)
	if solutions.shape[0] == 0:
		return linalg.zeros(GF, n)

	combos = GF(solutions.view(np.ndarray)) @ V
	return linalg.row_basis(combos)


def _subcode_trace(code: ClassicalCode, sub_exp: int) -> galois.FieldArray:
	field = code.field
	GF = field.GF
	G = code.generator
	basis = _basis_elements(field, field.e // sub_exp)
	rows = [trace_to(b * G, sub_exp) for b in basis]
	return linalg.row_basis(linalg.stack(GF, rows, code.n))


def subfield_subcode(code: ClassicalCode, sub_exp: int, method: str = 'auto') -> ClassicalCode:
	"""The subcode of codewords with all coordinates in GF(p^sub_exp).

	Parameters
	----------
	code
	sub_exp
		Degree of the subfield. Must divide ``code.sub_exp``.
	method : str
		``'kernel'`` solves for codewords fixed by the Frobenius map ``x -> x^(p^sub_exp)`` over the
		prime field and works for any code. ``'trace'`` takes traces of the code, which gives the
		subfield-subcode when the code is mapped to itself by that Frobenius map (for evaluation
		codes, when Delta is closed under multiplication by ``p^sub_exp``). ``'auto'`` uses the
		trace method when the provenance shows the code is a closed evaluation code.

	Returns
	-------
	.ClassicalCode
		Code with row-reduced generator matrix over the alphabet GF(p^sub_exp).
	"""
	if sub_exp < 1 or code.sub_exp % sub_exp != 0:
		raise ValueError(f'{sub_exp} does not divide the alphabet degree {code.sub_exp}')
	if sub_exp == code.sub_exp:
		return code

	if method == 'auto':
		prov = code.provenance
		closed = prov.spec is not None and prov.delta is not None and \
			is_closed(prov.spec, prov.delta, code.field.p ** sub_exp)
		method = 'trace' if closed else 'kernel'

	if method == 'kernel':
		G = _subcode_kernel(code, sub_exp)
	elif method == 'trace':
		G = _subcode_trace(code, sub_exp)
	else:
		raise ValueError(f'Unknown method {method!r}')

	logger.debug(
		'Subfield-subcode over GF(%d^%d) by %s method: dimension %d -> %d',
		code.field.p, sub_exp, method, code.dimension, G.shape[0],
	)
	prov = code.provenance.derive(f'subfield-subcode GF({code.field.p}^{sub_exp})')
	return ClassicalCode(code.field, G, sub_exp, prov)


def dual_code(code: ClassicalCode) -> ClassicalCode:
	"""Euclidean dual over the alphabet of the code."""
	N = linalg.null_space(code.generator)
	return ClassicalCode(code.field, linalg.row_basis(N), code.sub_exp, code.provenance.derive('dual'))
