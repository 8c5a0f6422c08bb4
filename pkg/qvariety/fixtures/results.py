"""Data classes for rows of parameter tables."""

from typing import Optional, List

from attr import attrs, attrib

from qvariety.quantum import StabilizerParams


#: Column names of parameter tables, in order.
COLUMNS = ('n', 'k', 'd_lower', 'q', 'rule', 'certified', 'note')


@attrs(frozen=True)
class TableRow:
	"""One row of a parameter table.

	Attributes
	----------
	n, k, d_lower, q
		Parameters ``[[n, k, >= d_lower]]_q``.
	rule
		Construction name.
	certified
		Certification status string, see :mod:`qvariety.quantum`.
	note
		Table annotations and discrepancy notes.
	"""
	n: int = attrib(converter=int)
	k: int = attrib(converter=int)
	d_lower: int = attrib(converter=int)
	q: int = attrib(converter=int)
	rule: str = attrib()
	certified: str = attrib()
	note: str = attrib(default='')

	@classmethod
	def from_params(cls, params: StabilizerParams, note: str = '') -> 'TableRow':
		return cls(params.n, params.k, params.d, params.q, params.rule, params.certified, note)

	def values(self) -> tuple:
		return tuple(getattr(self, c) for c in COLUMNS)

	def to_dict(self) -> dict:
		return dict(zip(COLUMNS, self.values()))

	def __str__(self):
		return f'[[{self.n},{self.k},>={self.d_lower}]]_{self.q} {self.rule} {self.certified}'


@attrs()
class FixtureResult:
	"""Rows computed for a fixture and their comparison to the golden table.

	Attributes
	----------
	name
		Fixture name.
	rows
		Computed rows.
	golden
		Rows of the golden table, None if it is missing.
	diffs
		Description of each mismatch.
	"""
	name: str = attrib()
	rows: List[TableRow] = attrib()
	golden: Optional[List[TableRow]] = attrib(default=None, repr=False)
	diffs: List[str] = attrib(factory=list)

	@property
	def matches(self) -> bool:
		return self.golden is not None and not self.diffs
