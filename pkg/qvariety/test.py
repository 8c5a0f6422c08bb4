"""Helper functions for tests."""

from typing import List, Optional

import numpy as np

from qvariety.affine import VarietySpec, evaluate_monomial
from qvariety.cyclo import ExponentTuple
from qvariety.ortho import Metric


#: Arguments to :meth:`qvariety.affine.VarietySpec.create` for small varieties with ``p | N_j`` for
#: every ``j`` not in ``J``.
SMALL_SPECS = [
	(4, (4,), []),
	(8, (8,), [1]),
	(9, (9,), []),
	(9, (3, 3), [1]),
	(16, (4, 4), []),
	(25, (5, 5), [2]),
]


def small_specs() -> List[VarietySpec]:
	"""Small varieties on which monomial codes have the footprint bound."""
	return [VarietySpec.create(*args) for args in SMALL_SPECS]


def random_exponent_set(spec: VarietySpec, size: int, rng: Optional[np.random.Generator] = None) -> List[ExponentTuple]:
	"""Sample distinct exponent tuples from the box of a variety.

	Parameters
	----------
	spec
	size
		Number of tuples, capped at the size of the box.
	rng
		Random generator. Defaults to one with a fixed seed.
	"""
	if rng is None:
		rng = np.random.default_rng(0)
	box = list(spec.box())
	idx = rng.choice(len(box), size=min(size, len(box)), replace=False)
	return sorted(box[i] for i in idx)


def brute_force_product(spec: VarietySpec, a, b, metric: Metric) -> int:
	"""Inner product of the evaluations of two monomials, summed point by point.

	Returns the integer representation of the result.
	"""
	va = evaluate_monomial(spec, a) ** metric.conj_exp
	vb = evaluate_monomial(spec, b)
	total = spec.field.GF(0)
	for x, y in zip(va, vb):
		total = total + x * y
	return int(total)
