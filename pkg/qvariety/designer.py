"""Univariate designs of self-orthogonal subfield-subcodes.

Each design picks the first ``t`` minimal cyclotomic sets ``I_{a_1}, ..., I_{a_t}`` modulo ``N - 1``
and builds the subfield-subcode of the corresponding evaluation code. The rules differ in the
inner product, the base of the cyclotomic sets and the hypothesis guaranteeing self-orthogonality:

=======  ==========  ===========  ==================================================
Rule     Product     Base         Hypothesis
=======  ==========  ===========  ==================================================
PropA    Euclidean   ``p^s``      ``N = p^r``, ``a_t`` below the lemma representative
ThmC     Euclidean   ``p^s``      ``a_t`` below every companion under ``-1``
PropD    Hermitian   ``p^(2s)``   ``N - 1 = p^(2r) - 1``, ``a_t < p^r - 1``
ThmZ     Hermitian   ``p^(2s)``   ``N - 1 | p^(4s) - 1``, ``a_t < (N - 1) / (p^s + 1)``
PropY    Hermitian   ``p^(2s)``   ``a_t < (N - 1) / (p^(2(r/s - 1)s) + 1)``
ThmE     Hermitian   ``p^(2s)``   ``a_t`` below every companion under ``-p^s``
=======  ==========  ===========  ==================================================

With the ``RemarkN`` modifier the variety also contains zero (``J`` empty, requires ``p | N``), the
set ``I_0`` is included and the codes have length ``N``.

Every design is checked exactly: the subfield-subcode is built and its Gram matrix computed.
"""

import logging
import math
from typing import Optional, List, Sequence, Tuple

import galois
from attr import attrs, attrib, evolve

from qvariety.field import make_field, working_exponent, FieldSpec
from qvariety.cyclo import cyclotomic_partition, univariate_representatives, companion, lemma_representative
from qvariety.affine import VarietySpec, DeltaSet, ClassicalCode, build_code, subfield_subcode
from qvariety.ortho import Metric, GramCertificate, certify_self_orthogonal
from qvariety.quantum import StabilizerParams, css_params, enlargement_params, enlarged_distance
from qvariety.errors import HypothesisError, CertificationError


logger = logging.getLogger(__name__)


EUCLIDEAN_RULES = ('PropA', 'ThmC')
HERMITIAN_RULES = ('PropD', 'ThmZ', 'PropY', 'ThmE')
UNIVARIATE_RULES = EUCLIDEAN_RULES + HERMITIAN_RULES

AFFINE_ZERO = 'RemarkN'


def _exact_log(value: int, p: int) -> Optional[int]:
	"""``r`` with ``p ** r == value``, or None."""
	r = 0
	while value > 1 and value % p == 0:
		value //= p
		r += 1
	return r if value == 1 else None


@attrs()
class HypothesisCheck:
	"""Outcome of checking one hypothesis of a construction."""
	name: str = attrib()
	holds: bool = attrib()
	detail: str = attrib(default='')


@attrs()
class HypothesisTrace:
	"""Record of the hypotheses checked for a design.

	Attributes
	----------
	rule
		Construction name used in messages.
	strict
		If true a failed check raises :exc:`qvariety.errors.HypothesisError`, otherwise it is
		recorded in ``warnings``.
	checks
	warnings
	"""
	rule: str = attrib()
	strict: bool = attrib(default=True)
	checks: List[HypothesisCheck] = attrib(factory=list)
	warnings: List[str] = attrib(factory=list)

	def check(self, name: str, holds: bool, detail: str, exc=HypothesisError) -> bool:
		holds = bool(holds)
		self.checks.append(HypothesisCheck(name, holds, detail))
		if not holds:
			msg = f'{self.rule}: {name} fails: {detail}'
			if self.strict:
				raise exc(msg)
			logger.warning(msg)
			self.warnings.append(msg)
		return holds

	@property
	def ok(self) -> bool:
		return all(c.holds for c in self.checks)

	def failed(self, name: str) -> bool:
		return any(c.name == name and not c.holds for c in self.checks)


@attrs(frozen=True)
class UnivariateDesign:
	"""Parameters of a univariate design.

	Attributes
	----------
	rule
		One of :data:`UNIVARIATE_RULES`.
	p
		Characteristic.
	s
		The quantum code is over GF(p^s).
	N
		The classical codes have length ``N - 1``, or ``N`` with ``affine_zero``.
	t
		Number of nonzero cyclotomic sets used.
	t2
		If given, the inner code of an enlargement uses the first ``t2`` sets.
	r
		Exponent appearing in the hypothesis of the rule. Inferred when not given.
	affine_zero
		Include zero in the variety and ``I_0`` in the exponent set.
	strict
		Raise on failed hypotheses instead of recording them.
	extended
		For PropD with ``r/s`` odd, allow ``a_t = p^r - 1``.
	"""
	rule: str = attrib()
	p: int = attrib()
	s: int = attrib()
	N: int = attrib()
	t: int = attrib()
	t2: Optional[int] = attrib(default=None)
	r: Optional[int] = attrib(default=None)
	affine_zero: bool = attrib(default=False)
	strict: bool = attrib(default=True)
	extended: bool = attrib(default=False)

	@rule.validator
	def _validate_rule(self, attribute, value):
		if value not in UNIVARIATE_RULES:
			raise ValueError(f'Unknown univariate rule {value!r}')

	@t.validator
	def _validate_t(self, attribute, value):
		if value < (0 if self.affine_zero else 1):
			raise ValueError(f'Invalid number of cyclotomic sets t = {value}')

	@t2.validator
	def _validate_t2(self, attribute, value):
		if value is None:
			return
		if not (0 if self.affine_zero else 1) <= value < self.t:
			raise ValueError(f'Enlargement requires t2 < t and a nonempty inner set, got t2 = {value}')

	@classmethod
	def parse(cls, rule: str, **kw) -> 'UnivariateDesign':
		"""Create from a rule string such as ``'ThmZ+RemarkN'``.

		The bare modifier ``'RemarkN'`` means ``'ThmC+RemarkN'``.
		"""
		parts = rule.split('+')
		affine_zero = AFFINE_ZERO in parts
		parts = [part for part in parts if part not in (AFFINE_ZERO, 'Hamada')]
		if not parts:
			parts = ['ThmC']
		if len(parts) != 1:
			raise ValueError(f'Cannot parse rule {rule!r}')
		kw.setdefault('affine_zero', affine_zero)
		return cls(parts[0], **kw)

	@property
	def hermitian(self) -> bool:
		return self.rule in HERMITIAN_RULES

	@property
	def alphabet_exp(self) -> int:
		"""Degree ``S`` of the classical alphabet GF(p^S)."""
		return 2 * self.s if self.hermitian else self.s

	@property
	def base(self) -> int:
		return self.p ** self.alphabet_exp

	@property
	def q(self) -> int:
		return self.p ** self.s

	@property
	def companion_multiplier(self) -> int:
		return -self.q if self.hermitian else -1

	@property
	def metric(self) -> Metric:
		return Metric.hermitian(self.q) if self.hermitian else Metric.euclidean()

	@property
	def label(self) -> str:
		label = self.rule
		if self.affine_zero:
			label += '+' + AFFINE_ZERO
		if self.t2 is not None:
			label += '+Hamada'
		return label


@attrs()
class UnivariateResult:
	"""Outcome of :func:`design_univariate`.

	Attributes
	----------
	design
	field
		Working field the evaluation codes were built over.
	delta
		Exponent set of the (outer) self-orthogonal code.
	code
		The self-orthogonal subfield-subcode.
	certificate
		Gram certificate of ``code``.
	designed_distance
		Distance of the dual of ``code`` guaranteed by the consecutive run in ``delta``.
	params
	trace
		Hypotheses checked.
	delta2, code2
		Exponent set and code of the inner code of an enlargement.
	"""
	design: UnivariateDesign = attrib()
	field: FieldSpec = attrib(repr=False)
	delta: DeltaSet = attrib(repr=False)
	code: ClassicalCode = attrib(repr=False)
	certificate: GramCertificate = attrib(repr=False)
	designed_distance: int = attrib()
	params: StabilizerParams = attrib()
	trace: HypothesisTrace = attrib(repr=False)
	delta2: Optional[DeltaSet] = attrib(default=None, repr=False)
	code2: Optional[ClassicalCode] = attrib(default=None, repr=False)

	@property
	def warnings(self) -> List[str]:
		return self.trace.warnings


def _check_rule(design: UnivariateDesign, reps: List[int], t: int, partition, trace: HypothesisTrace):
	"""Check the rule-specific hypotheses for the first ``t`` sets."""
	p, s, N, M = design.p, design.s, design.N, design.N - 1
	a_t = reps[t] if t > 0 else 0

	def companion_reps():
		return [companion(partition.set_with_rep((reps[i],)), design.companion_multiplier, partition).representative[0]
		        for i in range(1, t + 1)]

	if design.rule == 'PropA':
		r = design.r if design.r is not None else _exact_log(N, p)
		if not trace.check('length', r is not None and p ** r == N, f'N = {N} must equal p^r'):
			return
		if r % 2 == 0:
			trace.check('divisibility', (r // 2) % s == 0, f's = {s} must divide r/2 = {r // 2}')
		else:
			trace.check('divisibility', s == 1, f'odd r = {r} requires s = 1')
		bound = lemma_representative(p, r)
		trace.check('representative bound', a_t < bound, f'a_t = {a_t} < {bound}')

	elif design.rule == 'ThmC':
		r = design.r if design.r is not None else working_exponent(p, M, s)
		trace.check('divisibility', r % s == 0 and (p ** r - 1) % M == 0, f'N - 1 = {M} | p^{r} - 1 with s | r')
		others = companion_reps()
		if others:
			trace.check('companions', a_t < min(others), f'a_t = {a_t} < min companion representative {min(others)}')

	elif design.rule == 'PropD':
		r2 = 2 * design.r if design.r is not None else _exact_log(N, p)
		if not trace.check('length', r2 is not None and r2 % 2 == 0 and p ** r2 == N, f'N - 1 = {M} must equal p^(2r) - 1'):
			return
		r = r2 // 2
		trace.check('divisibility', r % s == 0, f's = {s} must divide r = {r}')
		reps_s = univariate_representatives(M, p ** s)
		trace.check('representative', a_t in reps_s, f'a_t = {a_t} is a representative with respect to p^s')
		bound = p ** r - 1
		if design.extended and (r // s) % 2 == 1:
			trace.check('representative bound', a_t <= bound, f'a_t = {a_t} <= {bound}')
		else:
			trace.check('representative bound', a_t < bound, f'a_t = {a_t} < {bound}')

	elif design.rule == 'ThmZ':
		q = p ** s
		trace.check('divisibility', (p ** (4 * s) - 1) % M == 0, f'N - 1 = {M} | p^(4s) - 1')
		trace.check('representative bound', a_t * (q + 1) < M, f'a_t = {a_t} < {M}/{q + 1}')

	elif design.rule == 'PropY':
		r = design.r if design.r is not None else working_exponent(p, M, 2 * s) // 2
		trace.check('divisibility', r % s == 0 and r > s and (p ** (2 * r) - 1) % M == 0,
		            f's | r, r > s and N - 1 = {M} | p^(2r) - 1 with r = {r}')
		denom = p ** (2 * (r // s - 1) * s) + 1
		trace.check('representative bound', a_t * denom < M, f'a_t = {a_t} < {M}/{denom}')

	elif design.rule == 'ThmE':
		others = companion_reps()
		if others:
			trace.check('companions', a_t < min(others), f'a_t = {a_t} < min companion representative {min(others)}')


def _exponent_set(design: UnivariateDesign, spec: VarietySpec, reps: List[int], t: int, partition) -> DeltaSet:
	exps = set()
	if design.affine_zero:
		exps.add((0,))
	for i in range(1, t + 1):
		exps.update(partition.set_with_rep((reps[i],)).elements)
	return DeltaSet(spec, exps)


def _designed_distance(design: UnivariateDesign, reps: List[int], t: int) -> int:
	return reps[t + 1] + (1 if design.affine_zero else 0)


def _self_orthogonal_subcode(design: UnivariateDesign, spec: VarietySpec, delta: DeltaSet) -> Tuple[ClassicalCode, GramCertificate]:
	code = subfield_subcode(build_code(spec, delta), design.alphabet_exp)
	if code.dimension != len(delta):
		raise CertificationError(
			f'{design.label}: subfield-subcode has dimension {code.dimension}, expected {len(delta)}'
		)
	certificate = certify_self_orthogonal(code, design.metric)
	if not certificate.self_orthogonal:
		raise CertificationError(
			f'{design.label}: subfield-subcode is not self-orthogonal ({len(certificate.violations)} nonzero products)'
		)
	return code, certificate


def design_univariate(design: UnivariateDesign) -> UnivariateResult:
	"""Build, check and certify a univariate design.

	Raises
	------
	qvariety.errors.HypothesisError
		If a hypothesis of the rule fails and ``design.strict`` is set.
	qvariety.errors.CertificationError
		If the Gram matrix of the constructed code is not zero or the consecutive-run witness is
		missing.
	ValueError
		If there are fewer than ``t + 2`` cyclotomic sets.
	"""
	p, N, M = design.p, design.N, design.N - 1
	if not galois.is_prime(p):
		raise ValueError(f'{p} is not prime')
	if M < 1 or M % p == 0:
		raise ValueError(f'N - 1 = {M} must be positive and prime to p = {p}')

	trace = HypothesisTrace(design.label, design.strict)

	reps = univariate_representatives(M, design.base)
	if design.t + 1 >= len(reps):
		raise ValueError(f'Only {len(reps) - 1} nonzero cyclotomic sets modulo {M}, cannot use t = {design.t}')
	partition = cyclotomic_partition((M,), design.base)

	if design.affine_zero:
		trace.check('affine zero', N % p == 0, f'p = {p} must divide N = {N}')

	_check_rule(design, reps, design.t, partition, trace)

	R = working_exponent(p, M, design.alphabet_exp)
	field = make_field(p, R)
	J = [] if design.affine_zero else [1]
	spec = VarietySpec(field, (N,), J)

	delta = _exponent_set(design, spec, reps, design.t, partition)
	code, certificate = _self_orthogonal_subcode(design, spec, delta)

	if design.rule == 'ThmZ':
		nonzero = len(delta) - (1 if design.affine_zero else 0)
		trace.check('dimension', nonzero <= 2 * design.t, f'card = {nonzero} <= 4t/2 = {2 * design.t}')
		if math.gcd(M, design.q - 1) == 1:
			trace.check('dimension equality', nonzero == 2 * design.t, f'card = {nonzero} == {2 * design.t}')

	d1 = _designed_distance(design, reps, design.t)
	start = 0 if design.affine_zero else 1
	run = set((a,) for a in range(start, d1 - (1 if design.affine_zero else 0)))
	if not run <= delta.tuples:
		raise CertificationError(f'{design.label}: exponent set does not contain the run {start}..{d1 - 1}')

	delta2 = code2 = None

	if design.t2 is None:
		params = css_params(code, d1, design.metric, certificate, rule=design.label)
		params.add('witness', 'certified', f'consecutive exponents {start}..{reps[design.t + 1] - 1}')

	else:
		delta2 = _exponent_set(design, spec, reps, design.t2, partition)
		code2, _ = _self_orthogonal_subcode(design, spec, delta2)
		d2 = _designed_distance(design, reps, design.t2)
		bound = enlarged_distance(d1, d2, design.q)

		params = enlargement_params(N if design.affine_zero else M, len(delta), len(delta2), d1, design.q, design.label)
		params.add('gram', 'certified', f'{design.metric} Gram matrices of both codes are zero')
		gap = trace.check(
			'gap', bound >= d1,
			f'{d1} <= ceil(({design.q}+1)*{d2}/{design.q}) = {bound}',
		)
		if gap:
			params.add('witness', 'certified', f'enlargement of distances {d1} and {d2}')
		else:
			params.add('witness', 'unverified', f'enlargement only guarantees distance {bound}')
			params.notes.append(f'gap inequality fails, enlargement bound is {bound}')

	for warning in trace.warnings:
		params.notes.append(warning)

	logger.debug('%s t=%d: %s (%s)', design.label, design.t, params, params.certified)

	return UnivariateResult(
		design=design,
		field=field,
		delta=delta,
		code=code,
		certificate=certificate,
		designed_distance=d1,
		params=params,
		trace=trace,
		delta2=delta2,
		code2=code2,
	)


def design_ladder(design: UnivariateDesign, ts: Sequence[int]) -> List[UnivariateResult]:
	"""Run the same rule for several values of ``t``."""
	return [design_univariate(evolve(design, t=t)) for t in ts]
