import sys

import click

from .context import CLIContext
from .common import library_errors
from qvariety.fixtures import REGISTRY, run_fixtures, emit


@click.command()
@click.option(
	'-o', '--out', 'output',
	type=click.File(mode='w', encoding='utf-8'),
	default=sys.stdout,
	help='File path to write to. If omitted will write to stdout.',
)
@click.option(
	'-f', '--format', 'outfmt',
	type=click.Choice(['csv', 'json']),
	default='csv',
	help='Format to output tables in.',
)
@click.option('--all', 'run_all', is_flag=True, help='Run every registered fixture.')
@click.option('--skip-slow', is_flag=True, help='With --all, skip the long ladders.')
@click.option('-j', '--jobs', type=click.IntRange(min=1), default=1, help='Number of worker processes.')
@click.option('--list', 'list_', is_flag=True, help='List fixture names and exit.')
@click.argument('name', required=False, type=click.Choice(list(REGISTRY)))
@click.pass_obj
@library_errors
def fixture(ctxobj: CLIContext, name, output, outfmt, run_all, skip_slow, jobs, list_):
	"""Reproduce a published parameter table and compare it to its golden copy.

	Exits with status 1 if any table differs from its golden copy.
	"""
	if list_:
		for fx in REGISTRY.values():
			click.echo(f'{fx.name}\t{fx.description}')
		return

	if run_all == (name is not None):
		raise click.UsageError('Give exactly one of NAME and --all.')

	if run_all:
		names = [fx.name for fx in REGISTRY.values() if not (skip_slow and fx.slow)]
	else:
		names = [name]

	results = run_fixtures(names, ctxobj.oracle_budget(), jobs=jobs)
	emit(results, outfmt, output)

	failed = [r.name for r in results if not r.matches]
	if failed:
		click.echo(f'Fixtures differing from golden tables: {", ".join(failed)}', err=True)
		for result in results:
			for diff in result.diffs:
				click.echo(f'  {result.name}: {diff}', err=True)
		sys.exit(1)
