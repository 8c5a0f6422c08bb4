"""Test qvariety.oracle."""

import itertools

import numpy as np
import pytest

from qvariety.affine import VarietySpec, build_code, subfield_subcode, dual_code
from qvariety.field import as_ints
from qvariety.ortho import Metric
from qvariety.oracle import OracleBudget, gray_code, min_distance_exact, no_word_below, dual_distance_status
from qvariety.errors import BudgetExceededError
from qvariety.test import random_exponent_set, small_specs
from qvariety import hyper


def brute_force_distance(code):
	G = code.alphabet_generator()
	GF = type(G)
	k, n = G.shape
	best = n + 1
	for coeffs in itertools.product(range(code.alphabet_order), repeat=k):
		if any(coeffs):
			word = GF(np.array(coeffs, dtype=np.int64)) @ G
			best = min(best, int(np.count_nonzero(as_ints(word))))
	return best


def test_budget():
	with pytest.raises(ValueError):
		OracleBudget(exact=0)
	budget = OracleBudget.scaled(100)
	assert budget.exact == 100
	assert budget.witness == 25


@pytest.mark.parametrize('q,length', [(2, 1), (2, 4), (3, 3), (4, 2)])
def test_gray_code(q, length):
	digits = [0] * length
	seen = {tuple(digits)}
	for pos, old, new in gray_code(q, length):
		assert digits[pos] == old
		assert abs(new - old) == 1
		digits[pos] = new
		seen.add(tuple(digits))
	assert len(seen) == q ** length


@pytest.mark.parametrize('args,size', [
	((4, (4,), []), 2),
	((8, (8,), [1]), 2),
	((9, (3, 3), [1]), 3),
	((16, (4, 4), []), 2),
	((25, (5, 5), [2]), 2),
])
def test_min_distance_exact(args, size):
	spec = VarietySpec.create(*args)
	code = build_code(spec, random_exponent_set(spec, size))
	assert min_distance_exact(code) == brute_force_distance(code)


def test_known_distances():
	# Evaluations of x and x^2 on GF(8)* form a Reed-Solomon code
	spec = VarietySpec.create(8, (8,), [1])
	assert min_distance_exact(build_code(spec, [(1,), (2,)])) == 6

	# Constants, with zero in the variety
	spec = VarietySpec.create(8, (8,), [])
	assert min_distance_exact(build_code(spec, [(0,)])) == 8


def test_subfield_code():
	spec = VarietySpec.create(16, (16,), [])
	code = subfield_subcode(build_code(spec, [(0,), (1,), (2,), (4,), (8,)]), 1)
	assert code.alphabet_order == 2
	assert min_distance_exact(code) == brute_force_distance(code)


def test_exact_budget():
	spec = VarietySpec.create(4, (4,), [])
	code = build_code(spec, [(0,), (1,)])
	with pytest.raises(BudgetExceededError) as exc_info:
		min_distance_exact(code, OracleBudget(exact=10))
	assert exc_info.value.required == 16
	assert exc_info.value.budget == 10


@pytest.mark.parametrize('args,delta', [
	((4, (4,), []), [(0,)]),
	((8, (8,), [1]), [(1,), (2,)]),
	((9, (3, 3), [1]), [(0, 0), (1, 2)]),
])
def test_no_word_below(args, delta):
	spec = VarietySpec.create(*args)
	code = build_code(spec, delta)
	d = min_distance_exact(dual_code(code))
	for w in range(1, d + 2):
		assert no_word_below(code.generator, w) == (w <= d)


def test_witness_budget():
	spec = VarietySpec.create(8, (8,), [1])
	code = build_code(spec, [(1,), (2,)])
	budget = OracleBudget(exact=10, witness=1)
	with pytest.raises(BudgetExceededError):
		no_word_below(code.generator, 4, budget)
	assert dual_distance_status(code, 4, budget) == 'unverified'


def test_dual_distance_status():
	spec = VarietySpec.create(8, (8,), [1])
	code = build_code(spec, [(1,), (2,)])
	# The dual is a [7, 5, 3] Reed-Solomon code
	assert dual_distance_status(code, 3) == 'certified'
	assert dual_distance_status(code, 4) == 'violated'


@pytest.mark.parametrize('spec', small_specs())
def test_footprint_bound(spec):
	for t in [2, 3]:
		F = hyper.hyperbolic_code(spec, t).F
		assert dual_distance_status(F, t) == 'certified'


def test_hermitian_dual():
	spec = VarietySpec.create(4, (4,), [])
	code = build_code(spec, [(0,)])
	assert dual_distance_status(code, 2, metric=Metric.hermitian(2)) == 'certified'
	assert dual_distance_status(code, 3, metric=Metric.hermitian(2)) == 'violated'
