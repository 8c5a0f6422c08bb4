"""Reproduce published tables of stabilizer code parameters and compare them to golden copies."""

from .results import TableRow, FixtureResult, COLUMNS
from .registry import REGISTRY, Fixture, get_fixture
from .run import run_fixture, run_fixtures, load_golden, emit
