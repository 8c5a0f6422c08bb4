"""Test qvariety.designer."""

import pytest
from attr import evolve

from qvariety.designer import UnivariateDesign, HypothesisTrace, design_univariate, design_ladder
from qvariety.ortho import Metric
from qvariety.quantum import UNVERIFIED
from qvariety.errors import HypothesisError


ZETA80 = UnivariateDesign('ThmZ', p=3, s=1, N=81, t=1)


class TestHypothesisTrace:

	def test_strict(self):
		trace = HypothesisTrace('X')
		assert trace.check('a', True, 'fine')
		with pytest.raises(HypothesisError) as exc_info:
			trace.check('b', False, 'bad')
		assert 'X: b fails: bad' in str(exc_info.value)
		assert not trace.ok
		assert trace.failed('b')
		assert not trace.failed('a')

	def test_lenient(self):
		trace = HypothesisTrace('X', strict=False)
		assert not trace.check('b', False, 'bad')
		assert trace.warnings == ['X: b fails: bad']
		assert not trace.ok

	def test_exception_type(self):
		trace = HypothesisTrace('X')
		with pytest.raises(KeyError):
			trace.check('b', False, 'bad', exc=KeyError)


class TestUnivariateDesign:

	def test_parse(self):
		design = UnivariateDesign.parse('ThmZ+RemarkN', p=5, s=1, N=105, t=0)
		assert design.rule == 'ThmZ'
		assert design.affine_zero
		assert design.label == 'ThmZ+RemarkN'

		design = UnivariateDesign.parse('RemarkN', p=2, s=2, N=94, t=1)
		assert design.rule == 'ThmC'
		assert design.affine_zero

		design = UnivariateDesign.parse('ThmZ', p=3, s=1, N=81, t=8, t2=7)
		assert not design.affine_zero
		assert design.label == 'ThmZ+Hamada'

	@pytest.mark.parametrize('rule', ['Foo', 'ThmZ+ThmE', 'ThmZ+Foo'])
	def test_parse_invalid(self, rule):
		with pytest.raises(ValueError):
			UnivariateDesign.parse(rule, p=3, s=1, N=81, t=1)

	def test_validation(self):
		with pytest.raises(ValueError):
			UnivariateDesign('ThmZ', p=3, s=1, N=81, t=0)
		UnivariateDesign('ThmZ', p=3, s=1, N=81, t=0, affine_zero=True)
		with pytest.raises(ValueError):
			UnivariateDesign('ThmZ', p=3, s=1, N=81, t=3, t2=3)
		with pytest.raises(ValueError):
			UnivariateDesign('ThmZ', p=3, s=1, N=81, t=3, t2=0)

	def test_hermitian(self):
		assert ZETA80.hermitian
		assert ZETA80.alphabet_exp == 2
		assert ZETA80.base == 9
		assert ZETA80.q == 3
		assert ZETA80.companion_multiplier == -3
		assert ZETA80.metric == Metric.hermitian(3)

	def test_euclidean(self):
		design = UnivariateDesign('ThmC', p=2, s=2, N=94, t=1)
		assert not design.hermitian
		assert design.alphabet_exp == 2
		assert design.base == 4
		assert design.q == 4
		assert design.companion_multiplier == -1
		assert design.metric == Metric.euclidean()


class TestDesignUnivariate:

	def test_zeta(self):
		result = design_univariate(ZETA80)
		assert result.designed_distance == 2
		assert result.delta.tuples == {(1,), (9,)}
		assert result.certificate.self_orthogonal
		assert result.code.alphabet_order == 9
		assert result.code.dimension == 2

		params = result.params
		assert (params.n, params.k, params.d, params.q) == (80, 76, 2, 3)
		assert params.rule == 'ThmZ'
		assert params.is_certified
		assert result.trace.ok

	def test_affine_zero(self):
		design = UnivariateDesign.parse('ThmE+RemarkN', p=2, s=2, N=92, t=1)
		result = design_univariate(design)
		assert result.delta.tuples == {(0,), (1,), (16,), (74,)}
		assert result.designed_distance == 3
		params = result.params
		assert (params.n, params.k, params.d, params.q) == (92, 84, 3, 4)
		assert params.is_certified

	def test_ladder(self):
		results = design_ladder(ZETA80, [1, 2, 3])
		assert [r.params.k for r in results] == [76, 72, 68]
		assert [r.params.d for r in results] == [2, 3, 4]

	def test_enlargement(self):
		result = design_univariate(evolve(ZETA80, t=8, t2=7))
		params = result.params
		assert (params.n, params.k, params.d, params.q) == (80, 50, 10, 3)
		assert params.rule == 'ThmZ+Hamada'
		assert params.is_certified
		assert result.delta2.tuples < result.delta.tuples
		assert result.code2.dimension == len(result.delta2)

	def test_gap_failure(self):
		design = UnivariateDesign.parse('ThmC+RemarkN', p=2, s=2, N=94, t=3, t2=2, strict=False)
		result = design_univariate(design)
		params = result.params
		assert (params.n, params.k, params.d, params.q) == (94, 67, 6, 4)
		assert params.certified == UNVERIFIED
		assert params.notes[0] == 'gap inequality fails, enlargement bound is 5'
		assert result.trace.failed('gap')

		with pytest.raises(HypothesisError):
			design_univariate(evolve(design, strict=True))

	def test_hypothesis_failure(self):
		# a_17 = 20 and 20 * (3 + 1) is not below 80
		with pytest.raises(HypothesisError):
			design_univariate(evolve(ZETA80, t=17))

		with pytest.raises(HypothesisError):
			design_univariate(UnivariateDesign('PropA', p=3, s=1, N=11, t=1))

	@pytest.mark.parametrize('kw', [
		dict(p=4, N=81),
		dict(p=3, N=82),
		dict(p=3, N=81, t=100),
	])
	def test_invalid(self, kw):
		kw.setdefault('t', 1)
		with pytest.raises(ValueError):
			design_univariate(UnivariateDesign('ThmZ', s=1, **kw))
