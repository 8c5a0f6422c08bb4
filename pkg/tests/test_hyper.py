"""Test qvariety.hyper."""

import pytest

from qvariety.affine import VarietySpec
from qvariety.ortho import Metric
from qvariety.quantum import UNVERIFIED
from qvariety.errors import HypothesisError, AdmissibilityError
from qvariety.test import small_specs
from qvariety import hyper


@pytest.fixture(scope='module')
def spec98():
	return VarietySpec.create(7, (3, 7, 7), [1])


def test_r_euclid():
	for N in range(2, 50):
		r = hyper.r_euclid(N)
		assert 2 * r < N - 1 or r == 0
		assert 2 * (r + 1) >= N - 1


def test_r_hermitian():
	for q in [2, 3, 4, 7]:
		for N in range(2, 60):
			r = hyper.r_hermitian(N, q)
			assert (q + 1) * r < N - 1 or r == 0
			assert (q + 1) * (r + 1) >= N - 1


@pytest.mark.parametrize('Q,N,J,t,expected', [
	(49, (49, 4), [1, 2], 4, {(1, 1), (1, 2), (1, 3), (2, 1), (3, 1)}),
	(7, (3, 7, 7), [1], 3, {(1, 0, 0), (2, 0, 0), (1, 1, 0), (1, 0, 1)}),
	(16, (16, 6), [], 4, {(0, 0), (1, 0), (2, 0), (0, 1), (0, 2)}),
])
def test_n_set(Q, N, J, t, expected):
	spec = VarietySpec.create(Q, N, J)
	assert hyper.n_set(spec, t) == expected


def test_n_set_invalid(spec98):
	with pytest.raises(ValueError):
		hyper.n_set(spec98, 0)
	with pytest.raises(ValueError):
		hyper.n_set(spec98, spec98.n + 1)


@pytest.mark.parametrize('spec', small_specs())
def test_m_set_complement(spec):
	for t in range(1, min(spec.n, 6) + 1):
		assert len(hyper.m_set(spec, t)) + len(hyper.n_set(spec, t)) == spec.n


def test_box_maps():
	spec = VarietySpec.create(9, (3, 3), [1])
	assert hyper.to_box(spec, (2, 1)) == (0, 1)
	assert hyper.to_bar(spec, (0, 1)) == (2, 1)
	for a in spec.box():
		assert hyper.to_box(spec, hyper.to_bar(spec, a)) == a


def test_footprint():
	spec = VarietySpec.create(9, (3, 3), [1])
	assert hyper.footprint(spec, (0, 0)) == spec.n
	assert hyper.footprint(spec, (1, 2)) == 1


#: Bivariate varieties with p | N_j and n_J <= 100, besides the small ones.
HYPERBOLIC_SPECS = [
	(16, (4, 6), []),
	(9, (3, 9), []),
	(49, (7, 7), []),
	(16, (16, 4), []),
]


@pytest.mark.parametrize('spec', small_specs() + [VarietySpec.create(*args) for args in HYPERBOLIC_SPECS])
def test_hyperbolic_code(spec):
	assert hyper.divides_outside_J(spec)
	for t in range(1, spec.n + 1):
		codes = hyper.hyperbolic_code(spec, t)
		assert codes.F.dimension == len(hyper.n_set(spec, t))
		assert codes.hyp.dimension == spec.n - codes.F.dimension
		assert codes.E.dimension == codes.hyp.dimension
		assert codes.equal, t


def test_window():
	spec = VarietySpec.create(16, (16, 6), [])
	win = hyper.window(spec, 0, Metric.euclidean())
	assert win.cap == 7
	assert win.label == 'R_1'
	assert (7, 5) in win
	assert (8, 0) not in win

	win = hyper.window(spec, 0, Metric.hermitian(4))
	assert win.cap == 2
	assert win.includes(hyper.n_set(spec, 4))


@pytest.mark.parametrize('q', [2, 3, 4, 5, 7, 8, 9])
def test_corlll_inequality(q):
	assert hyper.corlll_inequality(q)


def test_corlll_limit():
	assert hyper.corlll_limit(4) == 10.5
	assert hyper.corlll_limit(9) == 37


class TestDesignMultivariate:

	@pytest.mark.parametrize('t,k', [(2, 96), (3, 90)])
	def test_euclidean(self, spec98, t, k):
		result = hyper.design_multivariate(spec98, t, 'ThmF')
		assert result.self_orthogonal
		assert result.metric == Metric.euclidean()
		assert result.window is not None
		params = result.params
		assert (params.n, params.k, params.d, params.q) == (98, k, t, 7)
		assert params.is_certified
		assert [c.kind for c in params.chain] == ['gram', 'hypothesis', 'footprint']

	def test_hermitian(self):
		spec = VarietySpec.create(16, (16, 6), [])
		result = hyper.design_multivariate(spec, 4, 'CorLL')
		assert result.metric == Metric.hermitian(4)
		params = result.params
		assert (params.n, params.k, params.d, params.q) == (96, 86, 4, 4)
		assert params.is_certified

	def test_direct_check(self):
		spec = VarietySpec.create(4, (4,), [])
		result = hyper.design_multivariate(spec, 4, 'DirectCheck')
		assert not result.self_orthogonal
		assert result.params is None

	def test_window_fails(self):
		spec = VarietySpec.create(4, (4,), [])
		with pytest.raises(HypothesisError):
			hyper.design_multivariate(spec, 4, 'ThmF')

		result = hyper.design_multivariate(spec, 4, 'ThmF', strict=False)
		assert result.trace.failed('window')
		assert result.params is None

	def test_invalid(self, spec98):
		with pytest.raises(ValueError):
			hyper.design_multivariate(spec98, 3, 'Foo')
		with pytest.raises(ValueError):
			hyper.design_multivariate(spec98, 1, 'ThmF')
		with pytest.raises(ValueError):
			hyper.design_multivariate(spec98, 3, 'ThmF', Metric.hermitian(7))
		with pytest.raises(ValueError):
			hyper.design_multivariate(spec98, 3, 'CorLL')

	def test_enlarge(self, spec98):
		r2, r3, r4 = [hyper.design_multivariate(spec98, t, 'ThmF') for t in [2, 3, 4]]

		params = hyper.enlarge(r3, r2)
		assert (params.n, params.k, params.d, params.q) == (98, 93, 3, 7)
		assert params.rule == 'ThmF+Hamada'
		assert params.is_certified

		params = hyper.enlarge(r4, r3)
		assert (params.k, params.d) == (88, 4)

		with pytest.raises(ValueError):
			hyper.enlarge(r2, r3)


class TestGeneralMonomials:

	def test_constant(self):
		spec = VarietySpec.create(4, (4, 4), [])
		result = hyper.design_general_monomials(spec, [(0, 0)])
		assert result.delta_bound == 2
		assert (3, 3) not in result.dual_exponents
		assert len(result.dual_exponents) == spec.n - 1
		params = result.params
		assert (params.n, params.k, params.d, params.q) == (16, 14, 2, 4)
		assert params.rule == 'PropP'
		assert params.is_certified

	def test_pairing(self):
		spec = VarietySpec.create(7, (7, 3), [])
		win = hyper.check_admissible(spec, {(1, 0), (1, 2)}, Metric.euclidean())
		assert win.label == 'R_1'
		with pytest.raises(AdmissibilityError):
			hyper.check_admissible(spec, {(1, 2)}, Metric.euclidean())

	def test_not_admissible(self):
		spec = VarietySpec.create(4, (4, 4), [])
		with pytest.raises(AdmissibilityError):
			hyper.design_general_monomials(spec, [(2, 2)])

		spec = VarietySpec.create(7, (3, 4), [])
		with pytest.raises(AdmissibilityError):
			hyper.design_general_monomials(spec, [(0, 0)])

		spec = VarietySpec.create(7, (3, 7, 7), [1])
		with pytest.raises(AdmissibilityError):
			hyper.design_general_monomials(spec, [(1, 0, 0)])

	def test_empty(self):
		spec = VarietySpec.create(4, (4, 4), [])
		with pytest.raises(ValueError):
			hyper.design_general_monomials(spec, [])


class TestSubfield:

	def test_rule(self):
		assert hyper.subfield_rule(Metric.euclidean()) == 'ThmAS'
		assert hyper.subfield_rule(Metric.hermitian(2)) == 'ThmCS'
		assert hyper.subfield_rule(Metric.euclidean(), True) == 'CorAS'
		assert hyper.subfield_rule(Metric.hermitian(2), True) == 'CorCS'

	def test_hermitian(self):
		spec = VarietySpec.create(625, (14, 5), [])
		result = hyper.design_subfield_multivariate(spec, 3, 1, Metric.hermitian(5), strict=False)
		assert result.rule == 'ThmCS'
		assert result.metric == Metric.hermitian(5)
		assert result.code.alphabet_order == 25
		params = result.params
		assert (params.n, params.k, params.d, params.q) == (70, 62, 3, 5)
		assert params.certified == UNVERIFIED
		assert result.trace.failed('divisibility')

		with pytest.raises(HypothesisError):
			hyper.design_subfield_multivariate(spec, 3, 1, Metric.hermitian(5))

	def test_invalid_subfield(self):
		spec = VarietySpec.create(16, (4, 4), [])
		with pytest.raises(ValueError):
			hyper.design_subfield_multivariate(spec, 2, 3)
		with pytest.raises(ValueError):
			hyper.design_subfield_multivariate(spec, 1, 2)
