"""Export fixture tables to various formats."""

from .base import AbstractTableExporter


def get_exporter(fmt: str, **kw) -> AbstractTableExporter:
	"""Get an exporter instance for the given format (``'csv'`` or ``'json'``)."""
	if fmt == 'json':
		from .json import JSONTableExporter
		return JSONTableExporter(**kw)
	if fmt == 'csv':
		from .csv import CSVTableExporter
		return CSVTableExporter(**kw)
	raise ValueError(f'Unknown format {fmt!r}')
