"""Exhaustive checks of minimum distances.

Two searches are provided. :func:`min_distance_exact` enumerates every codeword of a small code.
:func:`no_word_below` decides whether the code with a given parity-check matrix has a nonzero word
of small weight by matching syndromes of column combinations, which only needs the combinations
of up to half the weight.

Both searches refuse to start if the number of items they would examine exceeds an
:class:`OracleBudget`.
"""

import itertools
import logging
import math
from typing import Iterator, Tuple, Optional, Dict

import numpy as np
import galois
from attr import attrs, attrib

from qvariety.affine import ClassicalCode
from qvariety.field import field_of_order, as_ints
from qvariety.ortho import Metric
from qvariety.errors import BudgetExceededError


logger = logging.getLogger(__name__)


#: Largest table of inner-block codewords computed at once by :func:`min_distance_exact`.
INNER_BLOCK = 2 ** 12


@attrs(frozen=True)
class OracleBudget:
	"""Limits on exhaustive searches.

	Attributes
	----------
	exact
		Maximum number of codewords enumerated by :func:`min_distance_exact`.
	witness
		Maximum number of column combinations formed by :func:`no_word_below`.
	"""
	exact: int = attrib(default=2 ** 24)
	witness: int = attrib(default=2 ** 22)

	@exact.validator
	@witness.validator
	def _validate_positive(self, attribute, value):
		if value < 1:
			raise ValueError(f'{attribute.name} budget must be positive, got {value}')

	@classmethod
	def scaled(cls, exact: int) -> 'OracleBudget':
		"""Budget with the given exact limit and the witness limit in the default proportion."""
		return cls(exact=exact, witness=max(1, exact // 4))


def gray_code(q: int, length: int) -> Iterator[Tuple[int, int, int]]:
	"""Steps of the reflected ``q``-ary Gray code of the given length.

	Starting from the all-zero word, each step changes a single digit. Yields
	``(position, old_digit, new_digit)`` for each of the ``q ** length - 1`` steps.

	>>> list(gray_code(3, 2))[:4]
	[(0, 0, 1), (0, 1, 2), (1, 0, 1), (0, 2, 1)]
	"""
	digits = [0] * length
	direction = [1] * length

	for _ in range(q ** length - 1):
		pos = 0
		while True:
			new = digits[pos] + direction[pos]
			if 0 <= new < q:
				break
			direction[pos] = -direction[pos]
			pos += 1

		old = digits[pos]
		digits[pos] = new
		yield pos, old, new


def _weights(words: galois.FieldArray) -> np.ndarray:
	return np.count_nonzero(as_ints(words), axis=-1)


def min_distance_exact(code: ClassicalCode, budget: OracleBudget = None) -> int:
	"""Minimum weight of a nonzero codeword, by enumerating the message space.

	The first rows of the generator matrix form an inner block whose codewords are tabulated in
	one matrix product. The coefficients of the remaining rows advance in Gray code order so that
	each step adds a multiple of a single row to the outer offset.

	Returns
	-------
	int
		The minimum distance, or ``n + 1`` for the zero code.

	Raises
	------
	qvariety.errors.BudgetExceededError
		If the code has more than ``budget.exact`` codewords.
	"""
	budget = OracleBudget() if budget is None else budget
	G = code.alphabet_generator()
	GF = type(G)
	k, n = G.shape
	q = code.alphabet_order

	if k == 0:
		return n + 1

	total = q ** k
	if total > budget.exact:
		raise BudgetExceededError(f'{code!r} has {total} codewords', required=total, budget=budget.exact)

	k_in = max(1, min(k, int(math.log(INNER_BLOCK, q))))
	messages = GF(np.array(list(itertools.product(range(q), repeat=k_in)), dtype=np.int64))
	table = messages @ G[:k_in]
	inner_weights = _weights(table)
	# Skip the zero message
	best = int(inner_weights[1:].min()) if len(inner_weights) > 1 else n + 1

	outer = G[k_in:]
	offset = GF.Zeros(n)
	for pos, old, new in gray_code(q, k - k_in):
		offset = offset + (GF(new) - GF(old)) * outer[pos]
		best = min(best, int(_weights(table + offset).min()))
		if best == 1:
			break

	logger.debug('%r: minimum distance %d from %d codewords', code, best, total)
	return best


def _combination_count(n: int, size: int, q: int) -> int:
	return math.comb(n, size) * (q - 1) ** (size - 1)


def _projective_keys(S: galois.FieldArray) -> Tuple[np.ndarray, np.ndarray]:
	"""Scale each row to have first nonzero entry 1.

	Returns the scaled rows as integers and a boolean array marking zero rows.
	"""
	ints = as_ints(S)
	nonzero = ints != 0
	is_zero = ~np.any(nonzero, axis=1)
	first = np.argmax(nonzero, axis=1)
	lead = S[np.arange(S.shape[0]), first]
	lead[is_zero] = 1
	return as_ints(S / lead[:, None]), is_zero


def _combinations(columns: galois.FieldArray, size: int, coeffs: galois.FieldArray):
	"""Projective keys of all combinations of ``size`` columns with nonzero coefficients, first one 1.

	Yields ``(support, keys, zero_rows)`` per column subset.
	"""
	GF = type(columns)
	ncols = columns.shape[0]
	tails = list(itertools.product(range(len(coeffs)), repeat=size - 1))
	C = GF.Ones((len(tails), size))
	if size > 1:
		C[:, 1:] = coeffs[np.array(tails, dtype=np.int64)]

	for support in itertools.combinations(range(ncols), size):
		S = C @ columns[list(support)]
		keys, zero = _projective_keys(S)
		yield support, keys, zero


def no_word_below(generator: galois.FieldArray, w: int, budget: OracleBudget = None, sub_exp: int = None) -> bool:
	"""Check that no ``w - 1`` or fewer columns of a matrix are linearly dependent.

	Equivalently, the code with parity-check matrix ``generator``, which is the Euclidean dual of
	the code it generates, has no nonzero word of weight below ``w``.

	Combinations of ``1..floor((w-1)/2)`` columns are stored by the projective class of their
	syndrome. A word of weight below ``w`` exists iff some combination has zero syndrome, two
	stored combinations share a class, or a combination of ``ceil((w-1)/2)`` columns hits a
	stored class.

	Parameters
	----------
	generator
		Matrix whose columns are checked.
	w
		Weight bound.
	budget
	sub_exp
		Degree over the prime field of the alphabet of the dual code. Coefficients of the
		combinations range over this subfield. Defaults to the whole field of ``generator``.

	Raises
	------
	qvariety.errors.BudgetExceededError
		If more than ``budget.witness`` combinations would be formed.
	"""
	budget = OracleBudget() if budget is None else budget
	if w <= 1:
		return True

	GF = type(generator)
	field = field_of_order(GF.order)
	if sub_exp is None:
		sub_exp = field.e
	coeffs = field.subfield(sub_exp).elements()
	coeffs = GF(as_ints(coeffs)[as_ints(coeffs) != 0])
	q = len(coeffs) + 1

	columns = generator.T
	n = columns.shape[0]
	small = (w - 1) // 2
	large = (w - 1) - small

	sizes = list(range(1, small + 1))
	if large > small:
		sizes_large = [large]
	else:
		sizes_large = []
	required = sum(_combination_count(n, s, q) for s in sizes + sizes_large if s <= n)
	if required > budget.witness:
		raise BudgetExceededError(
			f'Weight {w} check on {n} columns needs {required} combinations',
			required=required, budget=budget.witness,
		)

	seen: Dict[bytes, Tuple[int, ...]] = dict()

	for size in sizes:
		if size > n:
			break
		for support, keys, zero in _combinations(columns, size, coeffs):
			if np.any(zero):
				logger.debug('Columns %s are dependent', support)
				return False
			for row in keys:
				key = row.tobytes()
				if key in seen:
					logger.debug('Columns %s and %s are dependent', seen[key], support)
					return False
				seen[key] = support

	for size in sizes_large:
		if size > n:
			break
		for support, keys, zero in _combinations(columns, size, coeffs):
			if np.any(zero):
				logger.debug('Columns %s are dependent', support)
				return False
			for row in keys:
				if row.tobytes() in seen:
					logger.debug('Columns %s and %s are dependent', seen[row.tobytes()], support)
					return False

	return True


def dual_distance_status(code: ClassicalCode, d: int, budget: OracleBudget = None, metric: Optional[Metric] = None) -> str:
	"""Check that the dual of a code has minimum distance at least ``d``.

	Parameters
	----------
	code
	d
	budget
	metric
		Product defining the dual. Defaults to Euclidean.

	Returns
	-------
	str
		``'certified'`` if the bound holds, ``'violated'`` if the dual has a word of smaller weight
		and ``'unverified'`` if the search exceeds the budget.
	"""
	metric = Metric.euclidean() if metric is None else metric
	G = code.generator ** metric.conj_exp
	try:
		ok = no_word_below(G, d, budget, sub_exp=code.sub_exp)
	except BudgetExceededError as exc:
		logger.info('Distance %d of the dual of %r not checked: %s', d, code, exc)
		return 'unverified'
	return 'certified' if ok else 'violated'
