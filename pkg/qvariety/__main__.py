"""Script entry point to the qvariety CLI."""

# Run the CLI
from qvariety.cli import cli
cli()
