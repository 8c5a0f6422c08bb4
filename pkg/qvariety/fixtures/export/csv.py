"""Export tables to CSV and read golden tables back."""

import csv
from typing import Sequence, List, TextIO

from attr import attrs

from .base import AbstractTableExporter
from qvariety.fixtures.results import FixtureResult, TableRow, COLUMNS


def _writer(f):
	return csv.writer(f, lineterminator='\n')


@attrs()
class CSVTableExporter(AbstractTableExporter):
	"""Exports fixture tables in CSV format.

	A single table is written with the header :data:`qvariety.fixtures.results.COLUMNS`, which is
	also the format of the golden tables. Several tables are written as one with a leading
	``fixture`` column.
	"""

	def export(self, f, results: Sequence[FixtureResult]):
		writer = _writer(f)

		if len(results) == 1:
			writer.writerow(COLUMNS)
			for row in results[0].rows:
				writer.writerow(row.values())
			return

		writer.writerow(('fixture',) + COLUMNS)
		for result in results:
			for row in result.rows:
				writer.writerow((result.name,) + row.values())


def write_table(f, rows: Sequence[TableRow]):
	"""Write rows of a single table."""
	writer = _writer(f)
	writer.writerow(COLUMNS)
	for row in rows:
		writer.writerow(row.values())


def read_table(f: TextIO) -> List[TableRow]:
	"""Read rows of a single table written by :func:`write_table`.

	Raises
	------
	ValueError
		If the header does not match.
	"""
	reader = csv.reader(f)
	header = tuple(next(reader, ()))
	if header != COLUMNS:
		raise ValueError(f'Expected header {",".join(COLUMNS)}, got {",".join(header)}')
	return [TableRow(*values) for values in reader if values]
