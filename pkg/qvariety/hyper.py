"""Multivariate designs based on the footprint bound.

For an exponent tuple ``a`` in the box ``H_J`` the footprint ``delta_a = prod(N_j - eps_j - a_j)``
bounds from below the number of points at which a polynomial with leading monomial ``X^a`` does
not vanish. The hyperbolic code ``Hyp(J, t)`` is the dual of the code ``F(J, t)`` spanned by the
monomials of

	``N(J, t) = {b : eps_j <= b_j <= N_j - 1, prod(b_j + 1 - eps_j) < t}``

and has minimum distance at least ``t``. Whenever ``F(J, t)`` is self-orthogonal it yields a
stabilizer code ``[[n_J, n_J - 2 |N(J, t)|, >= t]]``.

Tuples of ``N(J, t)`` live in the shifted box ``Hbar_J`` where coordinates in ``J`` range over
``1..N_j - 1``. The exponent ``N_j - 1`` of such a coordinate evaluates like 0, see :func:`to_box`.
"""

import itertools
import logging
import math
from typing import FrozenSet, Optional, List, Tuple

from attr import attrs, attrib

from qvariety.affine import VarietySpec, DeltaSet, ClassicalCode, Provenance, build_code, dual_code, subfield_subcode
from qvariety.cyclo import cyclotomic_partition, companion, univariate_representatives, lemma_bound_range, ExponentTuple
from qvariety.designer import HypothesisTrace
from qvariety.ortho import Metric, GramCertificate, certify_self_orthogonal, monomials_orthogonal
from qvariety.quantum import StabilizerParams, css_params, enlargement_params, enlarged_distance
from qvariety.errors import AdmissibilityError, CertificationError, CompanionCollisionError
from qvariety import linalg


logger = logging.getLogger(__name__)


EUCLIDEAN_RULES = ('ThmF', 'CorL')
HERMITIAN_RULES = ('ThmFF', 'CorLL', 'CorLLL')
DIRECT_CHECK = 'DirectCheck'
MULTIVARIATE_RULES = EUCLIDEAN_RULES + HERMITIAN_RULES + (DIRECT_CHECK,)

GENERAL_RULE = 'PropP'


def footprint(spec: VarietySpec, a) -> int:
	"""Footprint value ``prod(N_j - eps_j - a_j)`` of a tuple in the exponent box."""
	a = spec.check_exponent(a)
	return math.prod(N - eps - x for N, eps, x in zip(spec.N, spec.epsilon, a))


def r_euclid(N: int) -> int:
	"""Largest exponent ``r(N)`` with ``2 r(N) < N - 1``.

	>>> r_euclid(7)
	2
	>>> r_euclid(16)
	7
	"""
	if N % 2 == 0:
		return (N - 1) // 2
	return (N - 1) // 2 - 1


def r_hermitian(N: int, q: int) -> int:
	"""Largest exponent ``r_q(N)`` with ``(q + 1) r_q(N) < N - 1``.

	>>> r_hermitian(49, 7)
	5
	>>> r_hermitian(16, 4)
	2
	"""
	quo, rem = divmod(N - 1, q + 1)
	return quo - 1 if rem == 0 else quo


def to_box(spec: VarietySpec, b) -> ExponentTuple:
	"""Map a tuple of the shifted box ``Hbar_J`` into ``H_J``, sending ``N_j - 1`` to 0 for ``j`` in ``J``."""
	return tuple(x % M if eps else x for x, M, eps in zip(b, spec.moduli, spec.epsilon))


def to_bar(spec: VarietySpec, a) -> ExponentTuple:
	"""Inverse of :func:`to_box`."""
	return tuple(M if eps and x == 0 else x for x, M, eps in zip(a, spec.moduli, spec.epsilon))


def _bar_ranges(spec: VarietySpec):
	return [range(eps, N) for N, eps in zip(spec.N, spec.epsilon)]


def _check_t(spec: VarietySpec, t: int):
	if not 1 <= t <= spec.n:
		raise ValueError(f't = {t} is outside of [1, {spec.n}]')


@attrs(frozen=True)
class MonomialWindow:
	"""The set ``R_i(J)`` (or ``R_i^q(J)``) of tuples of ``Hbar_J`` with ``b_i <= cap``.

	Any two monomials in a window are orthogonal because their product has exponent
	``c * a_i + b_i`` strictly between 0 and ``N_i - 1`` in coordinate ``i``.

	Attributes
	----------
	spec
	i
		0-based coordinate index.
	cap
		``r(N_i)`` for the Euclidean product, ``r_q(N_i)`` for the Hermitian one.
	"""
	spec: VarietySpec = attrib(repr=False)
	i: int = attrib()
	cap: int = attrib()

	def __contains__(self, b):
		return self.spec.epsilon[self.i] <= b[self.i] <= self.cap

	def includes(self, tuples) -> bool:
		return all(b in self for b in tuples)

	@property
	def label(self) -> str:
		return f'R_{self.i + 1}'


def window(spec: VarietySpec, i: int, metric: Metric) -> MonomialWindow:
	"""Get the window of coordinate ``i`` (0-based) for an inner product."""
	if metric.is_hermitian:
		cap = r_hermitian(spec.N[i], metric.q)
	else:
		cap = r_euclid(spec.N[i])
	return MonomialWindow(spec, i, cap)


def n_set(spec: VarietySpec, t: int) -> FrozenSet[ExponentTuple]:
	"""Tuples ``b`` of ``Hbar_J`` with ``prod(b_j + 1 - eps_j) < t``.

	Raises
	------
	ValueError
		If ``t`` is outside of ``[1, n_J]``.
	"""
	_check_t(spec, t)
	eps = spec.epsilon
	return frozenset(
		b for b in itertools.product(*_bar_ranges(spec))
		if math.prod(x + 1 - e for x, e in zip(b, eps)) < t
	)


def m_set(spec: VarietySpec, t: int) -> FrozenSet[ExponentTuple]:
	"""Tuples ``a`` of ``H_J`` with footprint at least ``t``.

	Raises
	------
	ValueError
		If ``t`` is outside of ``[1, n_J]``.
	"""
	_check_t(spec, t)
	return frozenset(a for a in spec.box() if footprint(spec, a) >= t)


def divides_outside_J(spec: VarietySpec) -> bool:
	"""Whether ``p`` divides ``N_j`` for every coordinate not in ``J``."""
	return all(spec.N[j] % spec.p == 0 for j in range(spec.m) if not spec.in_J(j))


def _monomial_code(spec: VarietySpec, tuples) -> ClassicalCode:
	"""Evaluation code of tuples of ``H_J``, the zero code if there are none."""
	if tuples:
		return build_code(spec, tuples)
	return ClassicalCode(spec.field, linalg.zeros(spec.field.GF, spec.n), spec.field.e, Provenance(spec, frozenset()))


@attrs()
class HyperbolicCodes:
	"""The codes attached to ``(J, t)``.

	Attributes
	----------
	F
		Code of the monomials of ``N(J, t)``.
	E
		Code of the monomials of ``M(J, t)``.
	hyp
		Euclidean dual of ``F``.
	equal
		Whether ``E`` and ``hyp`` have the same row space, or None if ``p`` does not divide
		``N_j`` for some ``j`` outside of ``J``.
	"""
	F: ClassicalCode = attrib()
	E: ClassicalCode = attrib()
	hyp: ClassicalCode = attrib()
	equal: Optional[bool] = attrib(default=None)


def hyperbolic_code(spec: VarietySpec, t: int) -> HyperbolicCodes:
	"""Build ``F(J, t)``, ``E(J, t)`` and ``Hyp(J, t)``.

	Raises
	------
	ValueError
		If ``t`` is outside of ``[1, n_J]``.
	"""
	F = _monomial_code(spec, {to_box(spec, b) for b in n_set(spec, t)})
	E = build_code(spec, m_set(spec, t))
	hyp = dual_code(F)

	equal = None
	if divides_outside_J(spec):
		equal = linalg.same_rowspace(E.generator, hyp.generator)
		logger.debug('%r t=%d: E(J,t) == Hyp(J,t) is %s', spec, t, equal)

	return HyperbolicCodes(F, E, hyp, equal)


def corlll_limit(q: int) -> float:
	"""Bound ``min((q^2 + q + 1) / 2, 4q + 1)`` which ``t`` must stay strictly below."""
	return min((q * q + q + 1) / 2, 4 * q + 1)


def corlll_inequality(q: int) -> bool:
	"""Whether ``(q^2 + q + 1) / 2 < q r(q) + 2q + 1``."""
	return q * q + q + 1 < 2 * (q * r_euclid(q) + 2 * q + 1)


def _default_metric(spec: VarietySpec, rule: str, metric: Optional[Metric]) -> Metric:
	if rule in EUCLIDEAN_RULES:
		expected = Metric.euclidean()
	elif rule in HERMITIAN_RULES:
		q = math.isqrt(spec.Q)
		if q * q != spec.Q:
			raise ValueError(f'{rule} requires Q to be a square, got {spec.Q}')
		expected = Metric.hermitian(q)
	else:
		return Metric.euclidean() if metric is None else metric

	if metric is not None and metric != expected:
		raise ValueError(f'{rule} uses the {expected} product, got {metric}')
	return expected


def _cor_bounds(spec: VarietySpec, metric: Metric) -> List[Tuple[int, int]]:
	"""Largest ``t`` admitted by each alternative of the bivariate corollaries, per coordinate."""
	J = spec.J
	caps = [window(spec, i, metric).cap for i in range(2)]
	if not J:
		slack = (2, 2)
	elif J == {1}:
		slack = (1, 2)
	elif J == {2}:
		slack = (2, 1)
	else:
		slack = (1, 1)
	return [(i, caps[i] + slack[i]) for i in range(2)]


@attrs()
class MultivariateResult:
	"""Outcome of :func:`design_multivariate`.

	Attributes
	----------
	spec
	t
	rule
	metric
	monomials
		``N(J, t)`` as tuples of the shifted box.
	delta
		The same tuples mapped into ``H_J``.
	code
		The code ``F(J, t)``.
	certificate
		Gram certificate of ``code``.
	params
		Stabilizer code parameters, None if ``code`` is not self-orthogonal.
	trace
		Hypotheses checked.
	window
		Window containing ``N(J, t)``, if any.
	"""
	spec: VarietySpec = attrib()
	t: int = attrib()
	rule: str = attrib()
	metric: Metric = attrib()
	monomials: FrozenSet[ExponentTuple] = attrib(repr=False)
	delta: DeltaSet = attrib(repr=False)
	code: ClassicalCode = attrib(repr=False)
	certificate: GramCertificate = attrib(repr=False)
	params: Optional[StabilizerParams] = attrib()
	trace: HypothesisTrace = attrib(repr=False)
	window: Optional[MonomialWindow] = attrib(default=None, repr=False)

	@property
	def self_orthogonal(self) -> bool:
		return self.certificate.self_orthogonal


def design_multivariate(spec: VarietySpec,
                        t: int,
                        rule: str,
                        metric: Optional[Metric] = None,
                        strict: bool = True,
                        ) -> MultivariateResult:
	"""Design a stabilizer code from the hyperbolic code ``Hyp(J, t)``.

	Parameters
	----------
	spec
	t
		Designed distance, at least 2.
	rule
		One of :data:`MULTIVARIATE_RULES`. ``DirectCheck`` skips the window hypotheses and relies
		on the Gram matrix alone.
	metric
		Inner product. Determined by the rule except for ``DirectCheck``, where it defaults to the
		Euclidean product.
	strict
		Raise on failed hypotheses instead of recording them.

	Raises
	------
	qvariety.errors.HypothesisError
		If a hypothesis of the rule fails and ``strict`` is set.
	qvariety.errors.CertificationError
		If the hypotheses hold but ``F(J, t)`` is not self-orthogonal.
	ValueError
		For an unknown rule, an invalid ``t`` or a rule which does not apply to the variety.
	"""
	if rule not in MULTIVARIATE_RULES:
		raise ValueError(f'Unknown multivariate rule {rule!r}')
	_check_t(spec, t)
	if t < 2:
		raise ValueError('t = 1 gives an empty monomial set')

	metric = _default_metric(spec, rule, metric)
	trace = HypothesisTrace(rule, strict)

	monomials = n_set(spec, t)
	delta = DeltaSet(spec, (to_box(spec, b) for b in monomials))

	divisible = trace.check('divisibility', divides_outside_J(spec), f'p = {spec.p} must divide N_j for j not in J')

	found = None
	if rule in ('CorL', 'CorLL'):
		if spec.m != 2:
			raise ValueError(f'{rule} applies to bivariate varieties only')
		bounds = _cor_bounds(spec, metric)
		trace.check('t bound', any(t <= b for _, b in bounds),
		            ' or '.join(f't <= {b}' for _, b in bounds))

	elif rule == 'CorLLL':
		q = metric.q
		trace.check('variety', not spec.J and spec.N == (q * q, q), f'requires J empty and N = ({q * q}, {q})')
		limit = corlll_limit(q)
		trace.check('t bound', t < limit, f't = {t} < {limit}')

	if rule in EUCLIDEAN_RULES + ('ThmFF', 'CorLL'):
		windows = [window(spec, i, metric) for i in range(spec.m)]
		found = next((w for w in windows if w.includes(monomials)), None)
		trace.check('window', found is not None, f'N(J,{t}) is not contained in any of ' +
		            ', '.join(f'{w.label} (cap {w.cap})' for w in windows))

	code = build_code(spec, delta)
	certificate = certify_self_orthogonal(code, metric)

	params = None
	if not certificate.self_orthogonal:
		if rule != DIRECT_CHECK and trace.ok:
			raise CertificationError(
				f'{rule}: F(J,{t}) is not self-orthogonal under {metric} although the hypotheses hold'
			)
		logger.info('%s t=%d: F(J,t) is not self-orthogonal under %s', rule, t, metric)

	else:
		params = css_params(code, t, metric, certificate, rule=rule)
		if rule != DIRECT_CHECK and trace.ok:
			detail = f'N(J,{t}) in {found.label}' if found is not None else f'{rule} bounds hold'
			params.add('hypothesis', 'certified', detail)
		if divisible:
			params.add('footprint', 'certified', f'Hyp(J,{t}) = E(J,{t}) has distance >= {t}')
		else:
			params.add('footprint', 'unverified', 'p does not divide every N_j outside of J')
		params.notes.extend(trace.warnings)
		logger.debug('%s t=%d: %s', rule, t, params)

	return MultivariateResult(
		spec=spec,
		t=t,
		rule=rule,
		metric=metric,
		monomials=monomials,
		delta=delta,
		code=code,
		certificate=certificate,
		params=params,
		trace=trace,
		window=found,
	)


def enlarge(outer: MultivariateResult, inner: MultivariateResult, strict: bool = True) -> StabilizerParams:
	"""Parameters of the enlargement of two nested hyperbolic designs.

	Raises
	------
	ValueError
		If the designs are on different varieties or products, are not nested or either one is not
		self-orthogonal.
	qvariety.errors.HypothesisError
		If the gap inequality fails and ``strict`` is set.
	"""
	if outer.spec != inner.spec or outer.metric != inner.metric:
		raise ValueError('Designs must share the variety and the inner product')
	if outer.params is None or inner.params is None:
		raise ValueError('Both designs must be self-orthogonal')
	if not inner.monomials < outer.monomials:
		raise ValueError(f'N(J,{inner.t}) is not a proper subset of N(J,{outer.t})')

	rule = f'{outer.rule}+Hamada'
	trace = HypothesisTrace(rule, strict)
	q = outer.params.q
	d1, d2 = outer.t, inner.t
	bound = enlarged_distance(d1, d2, q)

	params = enlargement_params(outer.spec.n, len(outer.delta), len(inner.delta), d1, q, rule)
	params.add('gram', 'certified', f'{outer.metric} Gram matrices of both codes are zero')
	if trace.check('gap', bound >= d1, f'{d1} <= ceil(({q}+1)*{d2}/{q}) = {bound}'):
		params.add('witness', 'certified', f'enlargement of distances {d1} and {d2}')
	else:
		params.add('witness', 'unverified', f'enlargement only guarantees distance {bound}')
		params.notes.append(f'gap inequality fails, enlargement bound is {bound}')
	if not all(c.ok for c in outer.params.chain if c.kind == 'footprint'):
		params.add('footprint', 'unverified', f'distance of Hyp(J,{d1}) not backed')
	return params


@attrs()
class GeneralMonomialResult:
	"""Outcome of :func:`design_general_monomials`.

	Attributes
	----------
	spec
	metric
	monomials
		The monomial set as tuples of the shifted box.
	delta
		The same tuples mapped into ``H_J``.
	dual_exponents
		Leading exponents of a basis of the dual code.
	delta_bound
		Minimum footprint over ``dual_exponents``.
	window
		Window containing the monomial set.
	code
	certificate
	params
	"""
	spec: VarietySpec = attrib()
	metric: Metric = attrib()
	monomials: FrozenSet[ExponentTuple] = attrib(repr=False)
	delta: DeltaSet = attrib(repr=False)
	dual_exponents: FrozenSet[ExponentTuple] = attrib(repr=False)
	delta_bound: int = attrib()
	window: MonomialWindow = attrib(repr=False)
	code: ClassicalCode = attrib(repr=False)
	certificate: GramCertificate = attrib(repr=False)
	params: StabilizerParams = attrib()


def _extreme_split(spec: VarietySpec, monomials, w: int, o: int):
	"""Values of coordinate ``w`` of the monomials whose coordinate ``o`` is 0 and ``N_o - 1``."""
	low = {b[w] for b in monomials if b[o] == 0}
	high = {b[w] for b in monomials if b[o] == spec.N[o] - 1}
	return low, high


def _pair_name(o: int, w: int, bw: int, bo: int) -> str:
	b = [0, 0]
	b[w], b[o] = bw, bo
	return f'X^{tuple(b)}'


def check_admissible(spec: VarietySpec, monomials, metric: Metric) -> MonomialWindow:
	"""Check the admissibility conditions of a bivariate monomial set.

	The set must lie in a window ``R_w(J)``. For ``J = {w}`` the window coordinate is forced; for
	``J`` empty it must be a coordinate with ``p | N_w``. When ``p`` does not divide ``N_o`` for the
	other coordinate ``o`` outside of ``J``, monomials with exponent 0 and ``N_o - 1`` in
	coordinate ``o`` must pair up.

	Parameters
	----------
	spec
	monomials
		Tuples of the shifted box ``Hbar_J``.
	metric

	Returns
	-------
	.MonomialWindow
		A window containing the set.

	Raises
	------
	qvariety.errors.AdmissibilityError
	"""
	if spec.m != 2:
		raise AdmissibilityError(f'{GENERAL_RULE}: only bivariate varieties are supported, got m = {spec.m}')

	p = spec.p
	J = spec.J

	if J == {1, 2}:
		candidates = [0, 1]
	elif len(J) == 1:
		candidates = [min(J) - 1]
	else:
		candidates = [j for j in range(2) if spec.N[j] % p == 0]
		if not candidates:
			raise AdmissibilityError(f'{GENERAL_RULE}: p = {p} must divide N_1 or N_2 when J is empty')

	windows = [window(spec, i, metric) for i in candidates]
	inside = [w for w in windows if w.includes(monomials)]
	if not inside:
		raise AdmissibilityError(
			f'{GENERAL_RULE}: monomials are not contained in ' + ' or '.join(f'{w.label} (cap {w.cap})' for w in windows)
		)

	errors = []
	for win in inside:
		w = win.i
		o = 1 - w
		if spec.in_J(o) or spec.N[o] % p == 0:
			return win

		low, high = _extreme_split(spec, monomials, w, o)
		top = spec.N[o] - 1
		if J:
			bad = [(b, b2) for b in sorted(low) for b2 in sorted(high) if b != b2]
			if not bad:
				return win
			b, b2 = bad[0]
			errors.append(f'{_pair_name(o, w, b, 0)} and {_pair_name(o, w, b2, top)}')
		else:
			bad = sorted(high - low)
			if not bad:
				return win
			errors.append(f'{_pair_name(o, w, bad[0], top)} without {_pair_name(o, w, bad[0], 0)}')

	raise AdmissibilityError(f'{GENERAL_RULE}: forbidden monomial pair ' + '; '.join(errors))


def dual_exponents(spec: VarietySpec, monomials, metric: Metric) -> FrozenSet[ExponentTuple]:
	"""Leading exponents of the dual of the code of an admissible monomial set.

	Each monomial ``b`` removes the tuple with coordinates ``N_j - 1 - c b_j`` modulo ``N_j - 1``,
	where ``c`` is the conjugation exponent of the product and the exponent 0 maps to ``N_j - 1``.
	"""
	c = metric.conj_exp
	removed = {
		tuple(M if x == 0 else (M - c * x) % M for x, M in zip(b, spec.moduli))
		for b in monomials
	}
	return frozenset(a for a in spec.box() if a not in removed)


def design_general_monomials(spec: VarietySpec, monomials, metric: Optional[Metric] = None) -> GeneralMonomialResult:
	"""Design a stabilizer code from an admissible set of bivariate monomials.

	Parameters
	----------
	spec
	monomials
		Exponent tuples. Coordinates in ``J`` may be given as 0 or ``N_j - 1``.
	metric
		Defaults to the Euclidean product.

	Raises
	------
	qvariety.errors.AdmissibilityError
		If the set violates the admissibility conditions.
	qvariety.errors.CertificationError
		If the set is admissible but its code is not self-orthogonal.
	ValueError
		If the set is empty or contains tuples outside of the exponent box.
	"""
	metric = Metric.euclidean() if metric is None else metric
	box_tuples = DeltaSet(spec, (to_box(spec, b) for b in monomials))
	if not box_tuples.tuples:
		raise ValueError('Monomial set must not be empty')
	bar = frozenset(to_bar(spec, a) for a in box_tuples)

	win = check_admissible(spec, bar, metric)

	dual = dual_exponents(spec, bar, metric)
	if not dual:
		raise ValueError('Monomial set leaves no exponents for the dual code')
	delta_bound = min(footprint(spec, a) for a in dual)

	code = build_code(spec, box_tuples)
	certificate = certify_self_orthogonal(code, metric)
	if not certificate.self_orthogonal:
		raise CertificationError(
			f'{GENERAL_RULE}: admissible monomial set is not self-orthogonal under {metric} '
			f'({len(certificate.violations)} nonzero products)'
		)

	params = css_params(code, delta_bound, metric, certificate, rule=GENERAL_RULE)
	params.add('hypothesis', 'certified', f'admissible in {win.label} (cap {win.cap})')
	params.add('footprint', 'certified', f'minimum footprint over {len(dual)} dual exponents is {delta_bound}')

	return GeneralMonomialResult(
		spec=spec,
		metric=metric,
		monomials=bar,
		delta=box_tuples,
		dual_exponents=dual,
		delta_bound=delta_bound,
		window=win,
		code=code,
		certificate=certificate,
		params=params,
	)


@attrs()
class SubfieldMultivariateResult:
	"""Outcome of :func:`design_subfield_multivariate`.

	Attributes
	----------
	spec
	t
	sub_exp
		The quantum code is over GF(p^sub_exp).
	rule
	metric
		Product on the alphabet of the subfield-subcode.
	monomials
		``N(J, t)`` as tuples of the shifted box.
	representatives
		Cyclotomic representatives in ``N(J, t)``.
	delta
		Union of the cyclotomic sets of ``representatives``.
	code
		The subfield-subcode.
	certificate
	params
	trace
	a_max
		Largest admissible univariate representative in corollary mode.
	"""
	spec: VarietySpec = attrib()
	t: int = attrib()
	sub_exp: int = attrib()
	rule: str = attrib()
	metric: Metric = attrib()
	monomials: FrozenSet[ExponentTuple] = attrib(repr=False)
	representatives: List[ExponentTuple] = attrib(repr=False)
	delta: DeltaSet = attrib(repr=False)
	code: ClassicalCode = attrib(repr=False)
	certificate: GramCertificate = attrib(repr=False)
	params: StabilizerParams = attrib()
	trace: HypothesisTrace = attrib(repr=False)
	a_max: Optional[int] = attrib(default=None)


def subfield_rule(metric: Metric, corollary: bool = False) -> str:
	if corollary:
		return 'CorCS' if metric.is_hermitian else 'CorAS'
	return 'ThmCS' if metric.is_hermitian else 'ThmAS'


def _collision_witness(spec, set_a, set_b, product: Metric):
	for x in set_a:
		for y in set_b:
			if not monomials_orthogonal(spec, x, y, product):
				return x, y
	return None


def corollary_bound(spec: VarietySpec, base: int) -> Tuple[int, int]:
	"""Largest admissible univariate representative ``a`` and the resulting bound on ``t``.

	The representatives are taken modulo ``N_1 - 1 = p^R - 1`` and must lie in
	:func:`qvariety.cyclo.lemma_bound_range`.
	"""
	p, R = spec.p, spec.field.e
	allowed = lemma_bound_range(p, R)
	a_max = max(a for a in univariate_representatives(spec.moduli[0], base) if a in allowed)
	relaxed = spec.m == 2 and spec.J in (frozenset(), frozenset({2}))
	return a_max, a_max + (2 if relaxed else 1)


def design_subfield_multivariate(spec: VarietySpec,
                                 t: int,
                                 sub_exp: int,
                                 metric: Optional[Metric] = None,
                                 corollary: bool = False,
                                 strict: bool = True,
                                 ) -> SubfieldMultivariateResult:
	"""Design a stabilizer code from the subfield-subcode of the closure of ``N(J, t)``.

	With the Euclidean product the cyclotomic sets are taken with respect to ``p^s`` and the
	subfield-subcode is over GF(p^s). With the Hermitian product they are taken with respect to
	``p^(2s)`` and the subfield-subcode is over GF(p^(2s)). In both cases ``s = sub_exp`` and the
	quantum code is over GF(p^s).

	Parameters
	----------
	spec
	t
		Designed distance, at least 2.
	sub_exp
	metric
		Euclidean or Hermitian product. Only the kind is used. Defaults to Euclidean.
	corollary
		Check the bound on ``t`` derived from the first coordinate instead of relying on the
		companion condition alone. Requires ``N_1 = Q``.
	strict
		Raise on failed hypotheses instead of recording them.

	Raises
	------
	qvariety.errors.CompanionCollisionError
		If two representatives collide with each other's companions and ``strict`` is set.
	qvariety.errors.HypothesisError
		If another hypothesis fails and ``strict`` is set.
	qvariety.errors.CertificationError
		If the subfield-subcode does not have the expected dimension or is not self-orthogonal.
	"""
	_check_t(spec, t)
	if t < 2:
		raise ValueError('t = 1 gives an empty monomial set')

	hermitian = metric is not None and metric.is_hermitian
	p = spec.p
	alphabet_exp = 2 * sub_exp if hermitian else sub_exp
	if sub_exp < 1 or spec.field.e % alphabet_exp != 0:
		raise ValueError(f'GF({p}^{alphabet_exp}) is not a subfield of {spec.field}')

	q = p ** sub_exp
	metric = Metric.hermitian(q) if hermitian else Metric.euclidean()
	product = Metric.twisted(q) if hermitian else metric
	multiplier = -q if hermitian else -1
	base = p ** alphabet_exp

	rule = subfield_rule(metric, corollary)
	trace = HypothesisTrace(rule, strict)
	divisible = trace.check('divisibility', divides_outside_J(spec), f'p = {p} must divide N_j for j not in J')

	a_max = None
	if corollary:
		if trace.check('length', spec.N[0] == spec.Q, f'N_1 = {spec.N[0]} must equal Q = {spec.Q}'):
			a_max, limit = corollary_bound(spec, base)
			trace.check('t bound', t <= limit, f't = {t} <= {limit} with a = {a_max}')

	monomials = n_set(spec, t)
	in_box = {to_box(spec, b) for b in monomials}
	partition = cyclotomic_partition(spec.moduli, base, spec.zero_fixed)

	reps = sorted(a for a in in_box if partition.set_of(a).representative == a)
	exps = set()
	for a in reps:
		exps.update(partition.set_with_rep(a).elements)
	delta = DeltaSet(spec, exps)
	covered = in_box <= exps

	for a in reps:
		image = companion(partition.set_with_rep(a), multiplier, partition)
		for b in reps:
			if image.representative != partition.set_with_rep(b).representative:
				continue
			witness = _collision_witness(spec, partition.set_with_rep(a), partition.set_with_rep(b), product)
			trace.check(
				'companions', witness is None,
				f'I_{b} is the companion of I_{a}, witnessed by {witness}',
				exc=CompanionCollisionError,
			)

	code = subfield_subcode(build_code(spec, delta), alphabet_exp)
	if code.dimension != len(delta):
		raise CertificationError(f'{rule}: subfield-subcode has dimension {code.dimension}, expected {len(delta)}')
	certificate = certify_self_orthogonal(code, metric)
	if not certificate.self_orthogonal:
		raise CertificationError(
			f'{rule}: subfield-subcode is not self-orthogonal ({len(certificate.violations)} nonzero products)'
		)

	params = css_params(code, t, metric, certificate, rule=rule)
	if divisible and covered:
		params.add('footprint', 'certified', f'N(J,{t}) is contained in Delta')
	elif not covered:
		params.add('footprint', 'unverified', f'N(J,{t}) is not contained in Delta')
	else:
		params.add('footprint', 'unverified', 'p does not divide every N_j outside of J')
	params.notes.extend(trace.warnings)

	logger.debug('%s t=%d: %s (%s)', rule, t, params, params.certified)

	return SubfieldMultivariateResult(
		spec=spec,
		t=t,
		sub_exp=sub_exp,
		rule=rule,
		metric=metric,
		monomials=monomials,
		representatives=reps,
		delta=delta,
		code=code,
		certificate=certificate,
		params=params,
		trace=trace,
		a_max=a_max,
	)
