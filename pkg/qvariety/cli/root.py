"""Define the root CLI command group."""

import logging

import click

from qvariety import __version__ as QVARIETY_VERSION
from .context import CLIContext


LOG_LEVELS = ['DEBUG', 'INFO', 'WARNING', 'ERROR']


# Top-level cli group
@click.group()
@click.option(
	'--budget',
	type=click.IntRange(min=1),
	envvar='QVARIETY_BUDGET',
	help='Maximum number of codewords or column combinations examined by exhaustive distance checks.',
)
@click.option(
	'--log-level',
	type=click.Choice(LOG_LEVELS, case_sensitive=False),
	default='WARNING',
	help='Level of log messages written to stderr.',
)
@click.version_option(QVARIETY_VERSION, prog_name='qvariety')
@click.pass_context
def cli(ctx: click.Context, budget, log_level):
	"""Quantum stabilizer codes from self-orthogonal J-affine variety codes."""
	logging.basicConfig(level=log_level.upper(), format='%(levelname)s %(name)s: %(message)s')
	ctx.obj = CLIContext(budget)


# Add sub-commands
from .codes import cyclo, build, check, verify
cli.add_command(cyclo)
cli.add_command(build)
cli.add_command(check)
cli.add_command(verify)
from .design import design
cli.add_command(design)
from .fixture import fixture
cli.add_command(fixture)
