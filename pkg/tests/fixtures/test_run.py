"""Test qvariety.fixtures.run and qvariety.fixtures.registry."""

import pytest

from qvariety.affine import VarietySpec, build_code
from qvariety.designer import UnivariateDesign, design_univariate
from qvariety.hyper import design_multivariate
from qvariety.ortho import Metric
from qvariety.oracle import OracleBudget, dual_distance_status
from qvariety.quantum import StabilizerParams
from qvariety.errors import CertificationError
from qvariety.fixtures import REGISTRY, get_fixture, run_fixture, run_fixtures, load_golden
from qvariety.fixtures.registry import settle_distance, ORACLE_MAX_D, ORACLE_MAX_N
from qvariety.fixtures.run import compare_rows, golden_path
from qvariety.fixtures.results import TableRow


ALL_FIXTURES = [
	pytest.param(name, marks=pytest.mark.slow) if fixture.slow else name
	for name, fixture in REGISTRY.items()
]


def test_registry():
	assert list(REGISTRY)[:2] == ['len80_f3', 'len105_f5']
	assert len(REGISTRY) == 13
	assert {name for name, fx in REGISTRY.items() if fx.slow} == {'len729_f9', 'len512_f4'}
	with pytest.raises(KeyError):
		get_fixture('len1_f2')


@pytest.mark.parametrize('name', list(REGISTRY))
def test_golden_exists(name):
	assert golden_path(name).is_file()
	assert load_golden(name)


def test_missing_golden():
	assert load_golden('len1_f2') is None


def test_compare_rows():
	a = TableRow(98, 96, 2, 7, 'ThmF', 'true')
	b = TableRow(98, 90, 3, 7, 'ThmF', 'true')
	assert compare_rows([a, b], [a, b]) == []
	assert compare_rows([a, a], [a, b]) == [
		'row 2 k: got 96, expected 90',
		'row 2 d_lower: got 2, expected 3',
	]
	assert compare_rows([a], [a, b]) == ['1 rows computed, 2 expected']


@pytest.mark.parametrize('name', ALL_FIXTURES)
def test_fixture(name):
	result = run_fixture(name)
	assert result.name == name
	assert result.matches, result.diffs


def test_run_fixtures_order():
	names = ['len72_f5', 'len96_f4']
	results = run_fixtures(names)
	assert [r.name for r in results] == names
	assert all(r.matches for r in results)


class TestSettleDistance:
	"""Test oracle checks of fixture rows."""

	@pytest.fixture()
	def code4(self):
		# Dual is the even-weight code of length 4 over GF(4), distance 2
		spec = VarietySpec.create(4, (4,), [])
		return build_code(spec, [(0,)])

	def make_params(self, d):
		params = StabilizerParams(4, 2, d, 4, 'x')
		params.add('gram', 'certified')
		params.add('footprint', 'unverified')
		return params

	def test_upgrade(self, code4):
		params = settle_distance(self.make_params(2), code4, Metric.euclidean(), OracleBudget())
		assert params.is_certified
		assert params.chain[-1].kind == 'oracle'

	def test_no_upgrade(self, code4):
		params = settle_distance(self.make_params(2), code4, Metric.euclidean(), OracleBudget(), upgrade=False)
		assert not params.is_certified
		assert params.chain[-1].kind == 'oracle'
		assert params.chain[-1].ok

	def test_violated(self, code4):
		with pytest.raises(CertificationError):
			settle_distance(self.make_params(3), code4, Metric.euclidean(), OracleBudget())

	def test_out_of_range(self, code4):
		params = self.make_params(ORACLE_MAX_D + 1)
		assert settle_distance(params, code4, Metric.euclidean(), OracleBudget()) is params
		assert [c.kind for c in params.chain] == ['gram', 'footprint']
		assert ORACLE_MAX_N == 200

	def test_over_budget(self, code4):
		params = settle_distance(self.make_params(2), code4, Metric.euclidean(), OracleBudget(witness=1))
		assert not params.is_certified
		assert 'oracle' not in [c.kind for c in params.chain]


def test_len94_first_row_oracle():
	design = UnivariateDesign.parse('ThmC+RemarkN', p=2, s=2, N=94, t=1, strict=False)
	result = design_univariate(design)
	assert result.params.d <= ORACLE_MAX_D
	assert dual_distance_status(result.code, result.params.d, OracleBudget(), result.design.metric) == 'certified'

	params = settle_distance(result.params, result.code, result.design.metric, OracleBudget())
	assert params.is_certified
	assert params.chain[-1].kind == 'oracle'


def test_len144_first_row_oracle():
	spec = VarietySpec.create(49, (49, 4), [1, 2])
	result = design_multivariate(spec, 4, 'CorLL')
	assert result.params.d == 4
	assert dual_distance_status(result.code, 4, OracleBudget(), result.metric) == 'certified'


@pytest.mark.parametrize('name', ['len80_f3', 'len98_f7', 'len96_f4'])
def test_fixture_rows_checked(name, monkeypatch):
	"""Every row within the oracle's range is checked."""
	from qvariety.fixtures import registry

	checked = []

	def record(params, code, metric, budget, upgrade=True):
		checked.append(params.d)
		return settle_distance(params, code, metric, budget, upgrade)

	monkeypatch.setattr(registry, 'settle_distance', record)
	rows = get_fixture(name).build(OracleBudget())
	assert len(checked) == len(rows)
	assert any(d <= ORACLE_MAX_D for d in checked)
