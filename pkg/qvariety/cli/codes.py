"""Commands working on a single exponent set or code."""

import click

from qvariety.cyclo import cyclotomic_partition
from qvariety.field import field_of_order, ZERO_LOG
from qvariety.ortho import certify_self_orthogonal
from qvariety.oracle import min_distance_exact, dual_distance_status
from .context import CLIContext
from .common import INT_LIST, METRIC_CHOICE, code_options, make_code, make_metric, library_errors, echo_json


@click.command()
@click.option(
	'--modulus', type=INT_LIST, required=True,
	help='Comma-separated moduli of each coordinate.',
)
@click.option('--base', type=int, required=True, help='Multiplier generating the cyclotomic sets.')
@click.option(
	'--zero/--no-zero', default=False,
	help='Include exponent M_j, which stands for the evaluation at zero, in each coordinate.',
)
@library_errors
def cyclo(modulus, base, zero):
	"""Print the minimal cyclotomic sets of an exponent box."""
	zero_fixed = [zero] * len(modulus)
	partition = cyclotomic_partition(modulus, base, zero_fixed)

	sets = [dict(rep=s.representative, elements=s.elements) for s in partition]
	if len(modulus) == 1:
		sets = [dict(rep=s['rep'][0], elements=[a[0] for a in s['elements']]) for s in sets]
		modulus = modulus[0]

	echo_json(dict(modulus=modulus, base=base, sets=sets))


@click.command()
@code_options
@library_errors
def build(Q, N, J, delta, sub_exp):
	"""Print the generator matrix of an evaluation code.

	The first line is ``GF(p^e) n k`` for the alphabet of the code. Each of the following k lines
	holds the discrete logs of one generator row, with ``-`` standing for zero.
	"""
	code = make_code(Q, N, J, delta, sub_exp)
	alphabet = field_of_order(code.alphabet_order)
	logs = alphabet.log(code.alphabet_generator())

	click.echo(f'GF({alphabet.p}^{alphabet.e}) {code.n} {code.dimension}')
	for row in logs:
		click.echo(' '.join('-' if x == ZERO_LOG else str(x) for x in row))


@click.command()
@code_options
@click.option('--metric', type=METRIC_CHOICE, default='euclidean', help='Inner product.')
@library_errors
def check(Q, N, J, delta, sub_exp, metric):
	"""Check self-orthogonality of an evaluation code with its exact Gram matrix."""
	code = make_code(Q, N, J, delta, sub_exp)
	certificate = certify_self_orthogonal(code, make_metric(metric, code.alphabet_order))
	echo_json(dict(self_orthogonal=certificate.self_orthogonal, violations=certificate.violations))


@click.command()
@code_options
@click.option('--weight', type=click.IntRange(min=1), help='Check that the dual code has no word of smaller weight.')
@click.option('--exact', is_flag=True, help='Compute the minimum distance of the code itself.')
@click.pass_obj
@library_errors
def verify(ctxobj: CLIContext, Q, N, J, delta, sub_exp, weight, exact):
	"""Run the exhaustive distance oracle on an evaluation code."""
	if (weight is None) == (not exact):
		raise click.UsageError('Give exactly one of --weight and --exact.')

	code = make_code(Q, N, J, delta, sub_exp)
	budget = ctxobj.oracle_budget()

	if exact:
		echo_json(dict(distance=min_distance_exact(code, budget)))
	else:
		echo_json(dict(weight=weight, status=dual_distance_status(code, weight, budget)))
