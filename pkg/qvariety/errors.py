"""Exception types raised by the library.

All of them derive from builtin exceptions so callers that only care about the broad category can
catch ``ValueError`` or ``RuntimeError``.
"""


class HypothesisError(ValueError):
	"""The hypothesis of a code construction does not hold for the given parameters.

	The message names the construction rule and the inequality or divisibility condition which
	failed.
	"""


class AdmissibilityError(HypothesisError):
	"""A set of general monomials violates the admissibility conditions of its construction."""


class CompanionCollisionError(HypothesisError):
	"""A cyclotomic representative used by a construction collides with the companion of another."""


class CertificationError(RuntimeError):
	"""An exact check (Gram product or distance oracle) contradicts a claimed property of a code."""


class BudgetExceededError(RuntimeError):
	"""An exhaustive enumeration would exceed its configured budget.

	Attributes
	----------
	required
		Number of items the enumeration would need to examine, if known.
	budget
		The configured budget.
	"""

	def __init__(self, msg: str, required: int = None, budget: int = None):
		super().__init__(msg)
		self.required = required
		self.budget = budget
