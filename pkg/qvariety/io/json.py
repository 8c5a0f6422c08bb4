"""JSON conversion of library types.

A single ``cattrs`` converter turns ``attrs`` classes, exponent tuple sets and Numpy values into
plain lists and dictionaries. Exponent tuple sets are written as sorted lists of lists so the
output does not depend on hash order.
"""

import json
from typing import Any, FrozenSet

import cattr
import numpy as np

from qvariety.cyclo import ExponentTuple


converter = cattr.Converter()


def to_json(obj):
	"""Convert an object to data accepted by :func:`json.dumps`."""
	return converter.unstructure(obj)


def from_json(data, cls=Any):
	"""Build an instance of ``cls`` from parsed JSON data."""
	return converter.structure(data, cls)


def dumps(obj, **kw) -> str:
	"""JSON string of an object.

	Parameters
	----------
	obj
	\\**kw
		Keyword arguments to :func:`json.dumps`.
	"""
	return json.dumps(to_json(obj), **kw)


def loads(s: str, cls=Any):
	"""Parse a JSON string into an instance of ``cls``."""
	return from_json(json.loads(s), cls)


def exponent_tuples_to_json(tuples) -> list:
	"""Sorted list-of-lists form of a collection of exponent tuples."""
	return [list(map(int, a)) for a in sorted(tuples)]


def exponent_tuples_from_json(data) -> FrozenSet[ExponentTuple]:
	return frozenset(tuple(map(int, a)) for a in data)


converter.register_unstructure_hook(frozenset, lambda s: sorted(converter.unstructure(x) for x in s))
converter.register_unstructure_hook(tuple, lambda t: [converter.unstructure(x) for x in t])

# Field arrays and log tables come out of numpy
converter.register_unstructure_hook(np.integer, int)
converter.register_unstructure_hook(np.bool_, bool)
converter.register_unstructure_hook(np.ndarray, lambda a: a.tolist())


class Jsonable:
	"""Mixin for classes with their own JSON form.

	Subclasses set ``__to_json__(self)`` and the classmethod ``__from_json__(cls, data)``. Either
	may be left as ``None`` to use the converter's default ``attrs`` handling.
	"""
	__to_json__ = None
	__from_json__ = None


converter.register_structure_hook_func(
	lambda cls: isinstance(cls, type) and issubclass(cls, Jsonable) and cls.__from_json__ is not None,
	lambda data, cls: cls.__from_json__(data),
)

converter.register_unstructure_hook_func(
	lambda cls: isinstance(cls, type) and issubclass(cls, Jsonable) and cls.__to_json__ is not None,
	lambda obj: obj.__to_json__(),
)
