"""The ``design`` command group."""

from typing import Optional

import click

from qvariety.designer import UnivariateDesign, design_univariate
from qvariety.hyper import (
	design_multivariate, design_subfield_multivariate, design_general_monomials,
	MULTIVARIATE_RULES,
)
from qvariety.quantum import StabilizerParams
from .common import INT_LIST, METRIC_CHOICE, spec_options, make_spec, make_metric, library_errors, echo_json


SUBFIELD_RULES = ('ThmAS', 'ThmCS', 'CorAS', 'CorCS')


def _params_json(params: Optional[StabilizerParams]) -> Optional[dict]:
	if params is None:
		return None
	data = params.to_row()
	data['status'] = params.certified
	data['chain'] = params.chain
	data['notes'] = params.notes
	return data


@click.group()
def design():
	"""Design stabilizer codes with a named construction."""


@design.command(name='uni')
@click.option('--rule', required=True, help='Rule name, optionally with +RemarkN for the affine zero.')
@click.option('--p', 'p', type=int, required=True, help='Characteristic.')
@click.option('--r', 'r', type=int, help='Exponent in the hypotheses of the rule. Inferred if omitted.')
@click.option('--s', 's', type=int, required=True, help='The quantum code is over GF(p^s).')
@click.option('--N', 'N', type=int, required=True, help='Classical length plus one.')
@click.option('--t', 't', type=int, required=True, help='Number of nonzero cyclotomic sets.')
@click.option('--t2', type=int, help='Inner code of an enlargement.')
@click.option('--strict/--no-strict', default=True, help='Fail on hypotheses which do not hold.')
@click.option('--extended', is_flag=True, help='Allow the extended range of PropD.')
@library_errors
def design_uni(rule, p, r, s, N, t, t2, strict, extended):
	"""Univariate design from cyclotomic sets of a single modulus."""
	udesign = UnivariateDesign.parse(rule, p=p, s=s, N=N, t=t, t2=t2, r=r, strict=strict, extended=extended)
	result = design_univariate(udesign)
	echo_json(dict(
		rule=udesign.label,
		designed_distance=result.designed_distance,
		delta=result.delta.ordered,
		params=_params_json(result.params),
		trace=result.trace.checks,
	))


@design.command(name='multi')
@click.option(
	'--rule', type=click.Choice(MULTIVARIATE_RULES + SUBFIELD_RULES), required=True,
	help='Construction. Subfield rules require --sub-exp.',
)
@spec_options
@click.option('--t', 't', type=int, required=True, help='Designed distance.')
@click.option('--sub-exp', type=click.IntRange(min=1), help='The quantum code is over GF(p^SUB_EXP).')
@click.option('--metric', type=METRIC_CHOICE, help='Inner product. Determined by the rule if omitted.')
@click.option('--strict/--no-strict', default=True, help='Fail on hypotheses which do not hold.')
@library_errors
def design_multi(rule, Q, N, J, t, sub_exp, metric, strict):
	"""Multivariate design from hyperbolic exponent sets."""
	spec = make_spec(Q, N, J)

	if rule in SUBFIELD_RULES:
		if sub_exp is None:
			raise click.UsageError(f'Rule {rule} requires --sub-exp.')
		hermitian = rule[-2] == 'C'
		if metric is not None and (metric == 'hermitian') != hermitian:
			raise click.UsageError(f'Rule {rule} uses the {"hermitian" if hermitian else "euclidean"} product.')
		m = make_metric('hermitian', spec.p ** (2 * sub_exp)) if hermitian else None
		result = design_subfield_multivariate(spec, t, sub_exp, m, corollary=rule.startswith('Cor'), strict=strict)
		representatives = result.representatives

	else:
		if sub_exp is not None:
			raise click.UsageError(f'Rule {rule} does not take --sub-exp.')
		m = None if metric is None else make_metric(metric, spec.Q)
		result = design_multivariate(spec, t, rule, m, strict=strict)
		representatives = None

	data = dict(
		rule=result.rule,
		metric=str(result.metric),
		monomials=sorted(result.monomials),
		delta=result.delta.ordered,
		certificate=dict(
			self_orthogonal=result.certificate.self_orthogonal,
			violations=result.certificate.violations,
		),
		params=_params_json(result.params),
		trace=result.trace.checks,
	)
	if representatives is not None:
		data['representatives'] = representatives
	echo_json(data)


@design.command(name='monomials')
@spec_options
@click.option(
	'--monomial', 'monomials', type=INT_LIST, multiple=True, required=True,
	help='Exponent tuple, comma-separated. May be given multiple times.',
)
@click.option('--metric', type=METRIC_CHOICE, default='euclidean', help='Inner product.')
@library_errors
def design_monomials(Q, N, J, monomials, metric):
	"""Design from an admissible set of bivariate monomials."""
	spec = make_spec(Q, N, J)
	result = design_general_monomials(spec, monomials, make_metric(metric, spec.Q))
	echo_json(dict(
		rule=result.params.rule,
		window=result.window.label,
		monomials=sorted(result.monomials),
		delta_bound=result.delta_bound,
		params=_params_json(result.params),
	))
