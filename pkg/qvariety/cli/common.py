"""Parameter types and options shared by several commands."""

import math
from functools import wraps
from typing import Tuple

import click

from qvariety.affine import VarietySpec, DeltaSet, build_code, subfield_subcode, ClassicalCode
from qvariety.ortho import Metric
from qvariety.errors import HypothesisError, CertificationError, BudgetExceededError
from qvariety.io.json import dumps


class IntListType(click.ParamType):
	"""Comma-separated list of integers. The empty string is the empty list."""
	name = 'INTS'

	def convert(self, value, param, ctx) -> Tuple[int, ...]:
		if isinstance(value, tuple):
			return value
		value = value.strip()
		if not value:
			return ()
		try:
			return tuple(int(x) for x in value.split(','))
		except ValueError:
			self.fail(f'{value!r} is not a comma-separated list of integers', param, ctx)


INT_LIST = IntListType()


def spec_options(func):
	"""Add the ``--Q``, ``--N`` and ``--J`` options describing a variety."""
	func = click.option(
		'--J', 'J', type=INT_LIST, default='',
		help='Comma-separated 1-based coordinates restricted to nonzero values.',
	)(func)
	func = click.option(
		'--N', 'N', type=INT_LIST, required=True,
		help='Comma-separated values N_j, each with N_j - 1 dividing Q - 1.',
	)(func)
	func = click.option(
		'--Q', 'Q', type=int, required=True,
		help='Order of the field the variety is defined over.',
	)(func)
	return func


def code_options(func):
	"""Add :func:`spec_options` plus ``--delta`` and ``--sub-exp`` describing a code."""
	func = click.option(
		'--sub-exp', type=click.IntRange(min=1),
		help='Take the subfield-subcode over GF(p^SUB_EXP).',
	)(func)
	func = click.option(
		'--delta', 'delta', type=INT_LIST, multiple=True, required=True,
		help='Exponent tuple, comma-separated. May be given multiple times.',
	)(func)
	return spec_options(func)


def make_spec(Q, N, J) -> VarietySpec:
	return VarietySpec.create(Q, N, J)


def make_code(Q, N, J, delta, sub_exp) -> ClassicalCode:
	spec = make_spec(Q, N, J)
	code = build_code(spec, DeltaSet(spec, delta))
	if sub_exp is not None:
		code = subfield_subcode(code, sub_exp)
	return code


def make_metric(name: str, alphabet_order: int) -> Metric:
	"""Metric from its command line name, with q the square root of the alphabet size."""
	if name == 'euclidean':
		return Metric.euclidean()
	q = math.isqrt(alphabet_order)
	if q * q != alphabet_order:
		raise ValueError(f'Hermitian product needs a square alphabet size, got {alphabet_order}')
	return Metric.hermitian(q)


METRIC_CHOICE = click.Choice(['euclidean', 'hermitian'])


def library_errors(func):
	"""Decorator converting library exceptions into :class:`click.ClickException`."""
	@wraps(func)
	def wrapper(*args, **kw):
		try:
			return func(*args, **kw)
		except (HypothesisError, CertificationError, BudgetExceededError, ValueError) as exc:
			raise click.ClickException(f'{type(exc).__name__}: {exc}') from exc
	return wrapper


def echo_json(data):
	"""Write data to stdout as a single line of JSON."""
	click.echo(dumps(data, separators=(',', ':')))
