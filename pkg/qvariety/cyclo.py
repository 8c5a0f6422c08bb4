"""Minimal cyclotomic sets of exponent tuples.

A cyclotomic set is the orbit of an exponent tuple ``a`` in ``Z_{M_1} x ... x Z_{M_m}`` under
coordinate-wise multiplication by a base ``p^S``. Orbits are identified by their
lexicographically smallest member, the representative.

Coordinates marked ``zero_fixed`` model variables which may take the value zero (``j`` not in
``J``): their exponents range over ``{0, ..., M_j}``, the exponent 0 is fixed and nonzero exponents
are reduced into ``{1, ..., M_j}``. In particular ``M_j`` is then a fixed point distinct from 0.
"""

import itertools
import logging
from functools import lru_cache
from typing import Tuple, Sequence, Optional, List, Dict, Iterable

from attr import attrs, attrib


logger = logging.getLogger(__name__)


ExponentTuple = Tuple[int, ...]


def normalize_exponent(value: int, modulus: int, zero_fixed: bool) -> int:
	"""Reduce an exponent of a single coordinate.

	>>> normalize_exponent(-3, 80, False)
	77
	>>> normalize_exponent(160, 80, True)
	80
	>>> normalize_exponent(0, 80, True)
	0
	"""
	if not zero_fixed:
		return value % modulus
	if value == 0:
		return 0
	return (value - 1) % modulus + 1


def _check_args(moduli, base, zero_fixed):
	moduli = tuple(int(m) for m in moduli)
	if not moduli:
		raise ValueError('Must give at least one modulus')
	if any(m < 1 for m in moduli):
		raise ValueError(f'Moduli must be positive, got {moduli}')
	if zero_fixed is None:
		zero_fixed = (False,) * len(moduli)
	zero_fixed = tuple(bool(z) for z in zero_fixed)
	if len(zero_fixed) != len(moduli):
		raise ValueError('zero_fixed must have one entry per modulus')
	return moduli, int(base), zero_fixed


def exponent_box(moduli: Sequence[int], zero_fixed: Sequence[bool] = None) -> Iterable[ExponentTuple]:
	"""Iterate over all exponent tuples in lexicographic order."""
	moduli, _, zero_fixed = _check_args(moduli, 1, zero_fixed)
	ranges = [range(m + 1 if z else m) for m, z in zip(moduli, zero_fixed)]
	return itertools.product(*ranges)


@attrs(frozen=True)
class CyclotomicSet:
	"""A minimal cyclotomic set.

	Attributes
	----------
	moduli
		Moduli ``M_j`` of each coordinate.
	base
		Multiplier generating the orbit.
	elements
		Members of the set in lexicographic order.
	representative
		Smallest member.
	"""
	moduli: Tuple[int, ...] = attrib()
	base: int = attrib()
	elements: Tuple[ExponentTuple, ...] = attrib()
	representative: ExponentTuple = attrib()

	@property
	def cardinality(self) -> int:
		return len(self.elements)

	def __len__(self):
		return len(self.elements)

	def __contains__(self, a):
		return tuple(a) in self.elements

	def __iter__(self):
		return iter(self.elements)


def orbit(a: ExponentTuple, moduli, base: int, zero_fixed=None) -> List[ExponentTuple]:
	"""Orbit of an exponent tuple under multiplication by ``base``, in order of generation."""
	moduli, base, zero_fixed = _check_args(moduli, base, zero_fixed)
	start = tuple(normalize_exponent(x, m, z) for x, m, z in zip(a, moduli, zero_fixed))
	members = [start]
	current = start
	while True:
		current = tuple(normalize_exponent(x * base, m, z) for x, m, z in zip(current, moduli, zero_fixed))
		if current == start:
			return members
		members.append(current)


class CyclotomicPartition:
	"""Partition of an exponent box into minimal cyclotomic sets.

	Attributes
	----------
	moduli
	base
	zero_fixed
	sets
		Minimal sets ordered by representative.
	"""
	moduli: Tuple[int, ...]
	base: int
	zero_fixed: Tuple[bool, ...]
	sets: List[CyclotomicSet]

	def __init__(self, moduli, base, zero_fixed=None):
		self.moduli, self.base, self.zero_fixed = _check_args(moduli, base, zero_fixed)
		self.sets = []
		self._index = dict()

		for a in exponent_box(self.moduli, self.zero_fixed):
			if a in self._index:
				continue
			members = orbit(a, self.moduli, self.base, self.zero_fixed)
			cset = CyclotomicSet(self.moduli, self.base, tuple(sorted(set(members))), a)
			for b in cset.elements:
				self._index[b] = len(self.sets)
			self.sets.append(cset)

		logger.debug(
			'Cyclotomic partition of moduli %s under %d: %d sets',
			self.moduli, self.base, len(self.sets),
		)

	def __len__(self):
		return len(self.sets)

	def __iter__(self):
		return iter(self.sets)

	@property
	def representatives(self) -> List[ExponentTuple]:
		return [s.representative for s in self.sets]

	def normalize(self, a) -> ExponentTuple:
		"""Reduce an arbitrary integer tuple into the exponent box."""
		return tuple(normalize_exponent(int(x), m, z) for x, m, z in zip(a, self.moduli, self.zero_fixed))

	def set_of(self, a) -> CyclotomicSet:
		"""The minimal set containing the (normalized) tuple ``a``."""
		return self.sets[self._index[self.normalize(a)]]

	def set_with_rep(self, rep) -> CyclotomicSet:
		"""The minimal set with the given representative.

		Raises
		------
		ValueError
			If ``rep`` is not the representative of its set.
		"""
		cset = self.set_of(rep)
		if cset.representative != tuple(rep):
			raise ValueError(f'{tuple(rep)} is not a cyclotomic representative')
		return cset

	def is_closed(self, tuples) -> bool:
		"""Whether a set of exponent tuples is a union of minimal cyclotomic sets."""
		tuples = set(map(self.normalize, tuples))
		return all(set(self.set_of(a).elements) <= tuples for a in tuples)

	def union(self, reps) -> List[ExponentTuple]:
		"""Sorted union of the minimal sets with the given representatives."""
		out = set()
		for rep in reps:
			out.update(self.set_with_rep(rep).elements)
		return sorted(out)


@lru_cache(maxsize=None)
def _partition(moduli, base, zero_fixed) -> CyclotomicPartition:
	return CyclotomicPartition(moduli, base, zero_fixed)


def cyclotomic_partition(moduli: Sequence[int], base: int, zero_fixed: Sequence[bool] = None) -> CyclotomicPartition:
	"""Get the (cached) partition of the exponent box into minimal cyclotomic sets.

	Parameters
	----------
	moduli
		Moduli ``M_j``. For variety codes these are ``N_j - 1``.
	base
		Multiplier, a power of the characteristic.
	zero_fixed
		Per-coordinate flag, true where the coordinate ranges over ``{0, ..., M_j}`` with 0 and
		``M_j`` both fixed.
	"""
	moduli, base, zero_fixed = _check_args(moduli, base, zero_fixed)
	return _partition(moduli, base, zero_fixed)


def minimal_sets(moduli: Sequence[int], base: int, zero_fixed: Sequence[bool] = None) -> List[CyclotomicSet]:
	"""Partition the exponent box into minimal cyclotomic sets, ordered by representative.

	Raises
	------
	ValueError
		If ``moduli`` is empty.
	"""
	return list(cyclotomic_partition(moduli, base, zero_fixed).sets)


def companion(cset: CyclotomicSet, multiplier: int, partition: CyclotomicPartition) -> CyclotomicSet:
	"""The minimal set containing ``multiplier * representative``.

	Used with multiplier ``-1`` (Euclidean duality) and ``-p^s`` (Hermitian duality).

	Raises
	------
	ValueError
		If ``cset`` and ``partition`` have different moduli.
	"""
	if cset.moduli != partition.moduli:
		raise ValueError(f'Set has moduli {cset.moduli}, partition has {partition.moduli}')
	image = tuple(multiplier * x for x in cset.representative)
	return partition.set_of(image)


def ordered_representatives(moduli: Sequence[int], base: int, zero_fixed: Sequence[bool] = None) -> List[ExponentTuple]:
	"""Representatives ``a_0 = 0 < a_1 < ...`` in lexicographic order."""
	return cyclotomic_partition(moduli, base, zero_fixed).representatives


def univariate_representatives(modulus: int, base: int) -> List[int]:
	"""Representatives of the cyclotomic cosets modulo ``modulus`` as plain integers.

	>>> univariate_representatives(8, 3)
	[0, 1, 2, 4, 5]
	"""
	return [a[0] for a in ordered_representatives((modulus,), base)]


def lemma_representative(p: int, r: int) -> int:
	"""Coset representative modulo ``p^r - 1`` at which self-orthogonality of a single coset first fails.

	This is ``p^(r/2) - 1`` for even ``r`` and ``p^((r+1)/2) - p - 1`` for odd ``r``.

	>>> lemma_representative(2, 4)
	3
	>>> lemma_representative(3, 3)
	5
	"""
	if r % 2 == 0:
		return p ** (r // 2) - 1
	return p ** ((r + 1) // 2) - p - 1


def lemma_bound(p: int, r: int) -> int:
	"""Strict upper bound on ``[p^j b mod (p^r - 1)]`` for every ``b`` below :func:`lemma_representative`.

	For even ``r`` this is ``p^r - p^(r/2)`` and applies to ``b < p^(r/2) - 1``. For odd ``r`` it is
	``p^r - p^((r+1)/2) + p`` and applies to ``b <= p^((r+1)/2) - p - 1``.
	"""
	if r % 2 == 0:
		return p ** r - p ** (r // 2)
	return p ** r - p ** ((r + 1) // 2) + p


def lemma_bound_range(p: int, r: int) -> range:
	"""Values of ``b`` covered by :func:`lemma_bound`."""
	if r % 2 == 0:
		return range(lemma_representative(p, r))
	return range(lemma_representative(p, r) + 1)


def expected_cardinality(p: int, r: int, s: int, a: int) -> Optional[int]:
	"""Cardinality of the coset of ``a`` modulo ``p^r - 1`` under ``p^s`` predicted for small ``a``.

	Returns ``r/s`` for ``0 < a <= p^(r/2) - 1`` when ``r`` is even and ``s`` divides ``r/2``, and
	``r`` for ``0 < a <= p^((r+1)/2) - p - 1`` when ``r`` is odd and ``s = 1``. Returns ``None`` outside
	this range.
	"""
	if r % 2 == 0:
		if (r // 2) % s == 0 and 0 < a <= p ** (r // 2) - 1:
			return r // s
	elif s == 1 and 0 < a <= lemma_representative(p, r):
		return r
	return None
