"""Run fixtures and compare them to their golden tables."""

import logging
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import List, Optional, Sequence, Iterable

from qvariety.oracle import OracleBudget
from .registry import REGISTRY, get_fixture
from .results import FixtureResult, TableRow, COLUMNS
from .export import get_exporter
from .export.csv import read_table


logger = logging.getLogger(__name__)


GOLDEN_DIR = Path(__file__).parent.parent / 'data' / 'golden'


def golden_path(name: str) -> Path:
	"""Path to the golden table of a fixture."""
	return GOLDEN_DIR / f'{name}.csv'


def load_golden(name: str) -> Optional[List[TableRow]]:
	"""Load the golden table of a fixture, or None if it does not exist."""
	path = golden_path(name)
	if not path.is_file():
		return None
	with open(path, newline='', encoding='utf-8') as f:
		return read_table(f)


def compare_rows(rows: Sequence[TableRow], golden: Sequence[TableRow]) -> List[str]:
	"""Describe every difference between computed and golden rows."""
	diffs = []
	if len(rows) != len(golden):
		diffs.append(f'{len(rows)} rows computed, {len(golden)} expected')

	for i, (row, expected) in enumerate(zip(rows, golden)):
		for column, value, exp in zip(COLUMNS, row.values(), expected.values()):
			if value != exp:
				diffs.append(f'row {i + 1} {column}: got {value!r}, expected {exp!r}')

	return diffs


def run_fixture(name: str, budget: OracleBudget = None) -> FixtureResult:
	"""Compute a fixture's table and compare it to the golden table.

	Parameters
	----------
	name
		Key in :data:`qvariety.fixtures.registry.REGISTRY`.
	budget
		Oracle budget for rows whose distance is not backed by a construction.

	Raises
	------
	KeyError
		If no fixture has that name.
	qvariety.errors.CertificationError
		If an exact check contradicts a row.
	"""
	budget = OracleBudget() if budget is None else budget
	fixture = get_fixture(name)

	logger.info('Running fixture %s: %s', name, fixture.description)
	rows = fixture.build(budget)
	golden = load_golden(name)

	if golden is None:
		logger.warning('No golden table for fixture %s', name)
		return FixtureResult(name, rows)

	diffs = compare_rows(rows, golden)
	for diff in diffs:
		logger.info('%s: %s', name, diff)
	logger.info('%s: %s', name, 'mismatch' if diffs else 'matches golden table')

	return FixtureResult(name, rows, golden, diffs)


def run_fixtures(names: Iterable[str] = None, budget: OracleBudget = None, jobs: int = 1) -> List[FixtureResult]:
	"""Run several fixtures, optionally in a process pool.

	Results are returned in the order of ``names`` regardless of ``jobs``.

	Parameters
	----------
	names
		Fixture names. Defaults to all in registry order.
	budget
	jobs
		Number of worker processes. 1 runs in this process.
	"""
	names = list(REGISTRY) if names is None else list(names)
	budget = OracleBudget() if budget is None else budget

	if jobs <= 1 or len(names) <= 1:
		return [run_fixture(name, budget) for name in names]

	with ProcessPoolExecutor(max_workers=jobs) as executor:
		return list(executor.map(run_fixture, names, [budget] * len(names)))


def emit(results: Sequence[FixtureResult], fmt: str, f, **kw):
	"""Write results to a file through the exporter for ``fmt``."""
	get_exporter(fmt, **kw).export(f, results)
