"""Named fixtures reproducing published parameter tables.

Each fixture is a function taking an :class:`qvariety.oracle.OracleBudget` and returning the rows
of its table in order. Fixtures are registered in :data:`REGISTRY` in the order they are listed
by the command line tool.
"""

import logging
from typing import Callable, List, Dict, Optional

from attr import attrs, attrib, evolve

from qvariety.affine import VarietySpec, ClassicalCode
from qvariety.designer import UnivariateDesign, design_univariate
from qvariety.hyper import MultivariateResult, design_multivariate, design_subfield_multivariate, enlarge
from qvariety.ortho import Metric
from qvariety.oracle import OracleBudget, dual_distance_status
from qvariety.quantum import StabilizerParams
from qvariety.errors import CertificationError
from .results import TableRow


logger = logging.getLogger(__name__)


#: Largest designed distance checked by the oracle when no construction backs it.
ORACLE_MAX_D = 5

#: Largest length checked by the oracle.
ORACLE_MAX_N = 200


@attrs(frozen=True)
class Fixture:
	"""A named table.

	Attributes
	----------
	name
	description
	build
		Function computing the rows.
	slow
		Whether the table takes long to compute.
	"""
	name: str = attrib()
	description: str = attrib()
	build: Callable[[OracleBudget], List[TableRow]] = attrib(repr=False)
	slow: bool = attrib(default=False)


REGISTRY: Dict[str, Fixture] = dict()


def register(name: str, description: str, slow: bool = False):
	"""Decorator adding a function to :data:`REGISTRY`."""
	def decorator(func):
		REGISTRY[name] = Fixture(name, description, func, slow)
		return func
	return decorator


def get_fixture(name: str) -> Fixture:
	try:
		return REGISTRY[name]
	except KeyError:
		raise KeyError(f'Unknown fixture {name!r}') from None


def settle_distance(params: StabilizerParams,
                    code: ClassicalCode,
                    metric: Metric,
                    budget: OracleBudget,
                    upgrade: bool = True,
                    ) -> StabilizerParams:
	"""Check the designed distance of a row with the oracle.

	Only rows with ``d <= ORACLE_MAX_D`` and ``n <= ORACLE_MAX_N`` are checked. The oracle confirms
	that the dual of ``code`` has no word of weight below ``params.d``.

	Parameters
	----------
	params
	code
		Self-orthogonal code the parameters were computed from. For enlargements, the code with
		the larger exponent set.
	metric
	budget
	upgrade
		Whether a confirmed distance supersedes unverified footprint and witness entries. Unset
		for enlargements, where the check on a single code is only a necessary condition.

	Raises
	------
	qvariety.errors.CertificationError
		If the oracle finds a word of weight below the designed distance in the dual code.
	"""
	if params.d > ORACLE_MAX_D or params.n > ORACLE_MAX_N:
		return params

	status = dual_distance_status(code, params.d, budget, metric)
	if status == 'violated':
		raise CertificationError(f'{params.rule}: dual of {code!r} has a word of weight below {params.d}')

	if status == 'certified':
		detail = f'no dual word of weight below {params.d}'
		if upgrade:
			params.back_distance('oracle', detail)
		else:
			params.add('oracle', 'certified', detail)
	else:
		logger.info('%s %s: distance %d not checked within budget', params.rule, params, params.d)

	return params


def _row(params: Optional[StabilizerParams], note: str = '') -> TableRow:
	if params is None:
		raise CertificationError('Design is not self-orthogonal')
	if not note and not params.is_certified and params.notes:
		note = params.notes[0]
	row = TableRow.from_params(params, note)
	logger.info('%s', row)
	return row


def _univariate_rows(design: UnivariateDesign, ts, budget: OracleBudget) -> List[TableRow]:
	rows = []
	for t in ts:
		t2 = None
		if isinstance(t, tuple):
			t, t2 = t
		result = design_univariate(evolve(design, t=t, t2=t2))
		params = settle_distance(result.params, result.code, result.design.metric, budget, upgrade=t2 is None)
		rows.append(_row(params))
	return rows


def _multivariate_row(result: MultivariateResult, budget: OracleBudget, note: str = '') -> TableRow:
	if result.params is None:
		return _row(None)
	return _row(settle_distance(result.params, result.code, result.metric, budget), note)


def _enlarged_row(outer: MultivariateResult, inner: MultivariateResult, budget: OracleBudget) -> TableRow:
	params = enlarge(outer, inner)
	return _row(settle_distance(params, outer.code, outer.metric, budget, upgrade=False))


@register('len80_f3', 'ThmZ, p=3, s=1, N=81, with an enlargement at t=8')
def len80_f3(budget: OracleBudget) -> List[TableRow]:
	design = UnivariateDesign('ThmZ', p=3, s=1, N=81, t=1)
	ts = list(range(1, 8)) + [(8, 7)] + list(range(9, 17))
	return _univariate_rows(design, ts, budget)


@register('len105_f5', 'ThmZ with the affine zero, p=5, s=1, N=105')
def len105_f5(budget: OracleBudget) -> List[TableRow]:
	design = UnivariateDesign.parse('ThmZ+RemarkN', p=5, s=1, N=105, t=0)
	return _univariate_rows(design, range(0, 17), budget)


@register('len92_f4', 'ThmE with the affine zero, p=2, s=2, N=92')
def len92_f4(budget: OracleBudget) -> List[TableRow]:
	design = UnivariateDesign.parse('ThmE+RemarkN', p=2, s=2, N=92, t=1)
	return _univariate_rows(design, range(1, 6), budget)


@register('len94_f4', 'Enlargements of ThmC codes with the affine zero, p=2, s=2, N=94')
def len94_f4(budget: OracleBudget) -> List[TableRow]:
	design = UnivariateDesign.parse('ThmC+RemarkN', p=2, s=2, N=94, t=1, strict=False)
	return _univariate_rows(design, [(1, 0), (2, 1), (3, 2)], budget)


def _hyperbolic_ladder(spec: VarietySpec, ts, rule: str, metric: Metric = None):
	return {t: design_multivariate(spec, t, rule, metric) for t in ts}


@register('len98_f7', 'ThmF with Q=7, N=(3,7,7), J={1} and enlargements')
def len98_f7(budget: OracleBudget) -> List[TableRow]:
	spec = VarietySpec.create(7, (3, 7, 7), [1])
	results = _hyperbolic_ladder(spec, [2, 3, 4], 'ThmF')
	rows = [_multivariate_row(results[t], budget) for t in (2, 3, 4)]
	rows.append(_enlarged_row(results[3], results[2], budget))
	rows.append(_enlarged_row(results[4], results[3], budget))
	return rows


@register('len72_f7', 'ThmF and a direct check with Q=7, N=(7,7,3), J={1,2,3} and enlargements')
def len72_f7(budget: OracleBudget) -> List[TableRow]:
	spec = VarietySpec.create(7, (7, 7, 3), [1, 2, 3])
	results = _hyperbolic_ladder(spec, [2, 3], 'ThmF')
	results[4] = design_multivariate(spec, 4, 'DirectCheck', Metric.euclidean())
	rows = [_multivariate_row(results[t], budget) for t in (2, 3, 4)]
	rows.append(_enlarged_row(results[3], results[2], budget))
	rows.append(_enlarged_row(results[4], results[3], budget))
	return rows


@register('len144_f7', 'CorLL and direct checks, Hermitian q=7, N=(49,4), J={1,2}')
def len144_f7(budget: OracleBudget) -> List[TableRow]:
	spec = VarietySpec.create(49, (49, 4), [1, 2])
	results = _hyperbolic_ladder(spec, range(4, 7), 'CorLL')
	results.update(_hyperbolic_ladder(spec, range(7, 13), 'DirectCheck', Metric.hermitian(7)))
	return [_multivariate_row(results[t], budget) for t in range(4, 13)]


@register('len96_f4', 'CorLL and direct checks, Hermitian q=4, N=(16,6), J empty')
def len96_f4(budget: OracleBudget) -> List[TableRow]:
	spec = VarietySpec.create(16, (16, 6), [])
	results = _hyperbolic_ladder(spec, [4], 'CorLL')
	results.update(_hyperbolic_ladder(spec, [5, 6], 'DirectCheck', Metric.hermitian(4)))
	return [_multivariate_row(results[t], budget) for t in (4, 5, 6)]


@register('len72_f5', 'Direct check, Hermitian q=5, N=(25,4), J={1,2}')
def len72_f5(budget: OracleBudget) -> List[TableRow]:
	spec = VarietySpec.create(25, (25, 4), [1, 2])
	result = design_multivariate(spec, 4, 'DirectCheck', Metric.hermitian(5))
	return [_multivariate_row(result, budget)]


LEN64_NOTES = {2: 'GV', 3: 'GV', 4: 'GV*', 5: '*', 6: 'GV*', 9: '*', 11: '*', 12: '*'}


@register('len64_f4', 'CorLLL and direct checks, Hermitian q=4, N=(16,4), J empty')
def len64_f4(budget: OracleBudget) -> List[TableRow]:
	spec = VarietySpec.create(16, (16, 4), [])
	results = _hyperbolic_ladder(spec, range(2, 11), 'CorLLL')
	results.update(_hyperbolic_ladder(spec, [11, 12], 'DirectCheck', Metric.hermitian(4)))
	return [_multivariate_row(results[t], budget, LEN64_NOTES.get(t, '')) for t in range(2, 13)]


@register('len729_f9', 'CorLLL, Hermitian q=9, N=(81,9), J empty', slow=True)
def len729_f9(budget: OracleBudget) -> List[TableRow]:
	spec = VarietySpec.create(81, (81, 9), [])
	results = _hyperbolic_ladder(spec, range(2, 22), 'CorLLL')
	return [_multivariate_row(results[t], budget) for t in range(2, 22)]


@register('len70_f5', 'ThmCS, p=5, Q=625, N=(14,5), J empty, checked by the oracle')
def len70_f5(budget: OracleBudget) -> List[TableRow]:
	spec = VarietySpec.create(625, (14, 5), [])
	metric = Metric.hermitian(5)
	result = design_subfield_multivariate(spec, 3, 1, metric, strict=False)
	params = settle_distance(result.params, result.code, result.metric, budget)
	return [_row(params, 'N corrected to (14,5)')]


@register('len512_f4', 'Subfield corollary, Hermitian, p=2, Q=256, N=(256,2), J empty', slow=True)
def len512_f4(budget: OracleBudget) -> List[TableRow]:
	spec = VarietySpec.create(256, (256, 2), [])
	metric = Metric.hermitian(4)
	rows = []
	for t in range(2, 17):
		result = design_subfield_multivariate(spec, t, 2, metric, corollary=True)
		rows.append(_row(settle_distance(result.params, result.code, result.metric, budget)))
	return rows
