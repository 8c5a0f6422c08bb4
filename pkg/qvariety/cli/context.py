from typing import Optional

from qvariety.oracle import OracleBudget


class CLIContext:
	"""Click context object for the qvariety CLI.

	Attributes
	----------
	budget
		Limit on exhaustive enumerations, specified in root command group. None for the defaults.
	"""
	budget: Optional[int]

	def __init__(self, budget: Optional[int] = None):
		self.budget = budget
		self._oracle_budget = None

	def oracle_budget(self) -> OracleBudget:
		"""Budget passed to the distance oracle."""
		if self._oracle_budget is None:
			if self.budget is None:
				self._oracle_budget = OracleBudget()
			else:
				self._oracle_budget = OracleBudget(exact=self.budget, witness=self.budget)
		return self._oracle_budget
