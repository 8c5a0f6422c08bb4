"""Test qvariety.fixtures.export."""

from io import StringIO
import json

import pytest

from qvariety.fixtures.results import TableRow, FixtureResult, COLUMNS
from qvariety.fixtures.export import get_exporter
from qvariety.fixtures.export.csv import CSVTableExporter, write_table, read_table
from qvariety.fixtures.export.json import JSONTableExporter


ROWS = [
	TableRow(98, 96, 2, 7, 'ThmF', 'true'),
	TableRow(98, 93, 3, 7, 'ThmF+Hamada', 'unverified(distance)', 'a note, with a comma'),
]


@pytest.fixture()
def results():
	return [
		FixtureResult('a', ROWS, ROWS),
		FixtureResult('b', ROWS[:1], None),
	]


def test_get_exporter():
	assert isinstance(get_exporter('csv'), CSVTableExporter)
	exporter = get_exporter('json', dense=False)
	assert isinstance(exporter, JSONTableExporter)
	assert not exporter.dense
	with pytest.raises(ValueError):
		get_exporter('xml')


def test_read_table(test_data):
	with open(test_data / 'sample_table.csv', newline='', encoding='utf-8') as f:
		rows = read_table(f)

	assert len(rows) == 2
	assert rows[0] == TableRow(94, 87, 3, 4, 'ThmC+RemarkN+Hamada', 'true', '')
	assert rows[1].note == 'gap inequality fails, enlargement bound is 5'


def test_table_roundtrip():
	f = StringIO()
	write_table(f, ROWS)
	f.seek(0)
	assert read_table(f) == ROWS


def test_read_bad_header():
	with pytest.raises(ValueError):
		read_table(StringIO('n,k,d\n1,2,3\n'))


class TestCSVExporter:

	def test_single(self, results):
		f = StringIO()
		CSVTableExporter().export(f, results[:1])
		lines = f.getvalue().splitlines()
		assert lines[0] == ','.join(COLUMNS)
		assert lines[1] == '98,96,2,7,ThmF,true,'
		assert lines[2].endswith('"a note, with a comma"')

	def test_multiple(self, results):
		f = StringIO()
		CSVTableExporter().export(f, results)
		lines = f.getvalue().splitlines()
		assert lines[0] == 'fixture,' + ','.join(COLUMNS)
		assert len(lines) == 4
		assert lines[1].startswith('a,98,96')
		assert lines[3].startswith('b,98,96')


class TestJSONExporter:

	@pytest.mark.parametrize('dense', [False, True])
	def test_export(self, results, dense):
		f = StringIO()
		JSONTableExporter(dense=dense).export(f, results)
		text = f.getvalue()
		assert text.endswith('\n')
		if dense:
			assert ' ' not in text.replace('a note, with a comma', '')

		data = json.loads(text)
		assert [item['name'] for item in data] == ['a', 'b']
		assert [item['matches'] for item in data] == [True, False]
		assert data[0]['diffs'] == []
		assert data[0]['rows'][1] == dict(
			n=98, k=93, d_lower=3, q=7, rule='ThmF+Hamada', certified='unverified(distance)',
			note='a note, with a comma',
		)
