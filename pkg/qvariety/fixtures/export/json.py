"""Export tables to JSON."""

import json
from functools import singledispatchmethod

from attr import attrs, attrib

from .base import AbstractTableExporter
from qvariety.fixtures.results import FixtureResult, TableRow
import qvariety.io.json as qjson


@attrs()
class JSONTableExporter(AbstractTableExporter):
	"""Exports fixture tables in JSON format.

	The output is a list with one object per fixture, each having ``name``, ``matches`` and
	``rows``. Rows are objects with the same keys as the CSV columns.

	Attributes
	----------
	dense
		Write with no whitespace to cut down on file size. Disable to produce more human-friendly
		output. Defaults to True.
	"""
	dense: bool = attrib(default=True)

	@singledispatchmethod
	def _to_json(self, obj):
		# Base case
		return qjson.to_json(obj)

	@_to_json.register(FixtureResult)
	def _result_to_json(self, result: FixtureResult):
		return dict(name=result.name, matches=result.matches, diffs=result.diffs, rows=result.rows)

	@_to_json.register(TableRow)
	def _row_to_json(self, row: TableRow):
		return row.to_dict()

	def export(self, f, results):
		kw = dict(separators=(',', ':')) if self.dense else dict(indent=2)
		json.dump(list(results), f, default=self._to_json, **kw)
		f.write('\n')
