from abc import ABC, abstractmethod
from typing import Sequence

from qvariety.fixtures.results import FixtureResult


class AbstractTableExporter(ABC):
	"""Base for classes that export computed fixture tables.

	Subclasses must implement :meth:`export`.
	"""

	@abstractmethod
	def export(self, f, results: Sequence[FixtureResult]):
		"""Write fixture tables to file.

		Parameters
		----------
		f
			Writable file-like object in text mode.
		results
			Results to export, in order.
		"""
