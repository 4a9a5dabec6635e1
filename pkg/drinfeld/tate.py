"""
:summary: Laurent series at a degree-1 prime and truncated lattice exponentials

Series carry a guaranteed absolute precision: every coefficient below ``prec`` is known and
nothing above it is. Exact series have infinite precision. Inverting a series keeps at most
the ring's relative working precision.

:license: Apache License, Version 2.0
"""
__docformat__ = "restructuredtext en"

import logging

from .defaults import (
    DEFAULT_CUTOFF,
    DEFAULT_GAMMA_VALUATION,
    DEFAULT_PRECISION,
    DEFAULT_SEED,
    EXACT_PRECISION,
    MAX_CUTOFF,
    UNIFORMIZER_LETTER,
    )
from .exceptions import (
    BudgetExceeded,
    FieldMismatch,
    IndexOutOfRange,
    PrecisionExhausted,
    )
from .gfq import FqElem, FqPoly, PrimeOfA, roots
from .tau import TauPoly, tau_eval

log = logging.getLogger(__name__)


class LaurentSeries(object):
    """sum(c_k u^k) for start <= k < prec, with u the uniformizer of the prime

    :Ivariables:
        ring : :class:`LaurentSeriesRing`
        start : int
            exponent of coeffs[0]; coeffs[0] is nonzero unless coeffs is empty
        coeffs : tuple of :class:`~drinfeld.gfq.FqElem`
        prec : int or float
            guaranteed absolute precision, ``EXACT_PRECISION`` when exact
    """
    __slots__ = ('ring', 'start', 'coeffs', 'prec')

    def __init__(self, ring, start, coeffs, prec=EXACT_PRECISION):
        field = ring.field
        coeffs = [c if isinstance(c, FqElem) and c.field is field else field(c) for c in coeffs]
        coeffs = coeffs[:max(0, prec - start)] if prec != EXACT_PRECISION else coeffs
        lead = 0
        while lead < len(coeffs) and coeffs[lead].is_zero():
            lead += 1
        coeffs = coeffs[lead:]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.ring = ring
        self.start = start + lead if coeffs else prec
        self.coeffs = tuple(coeffs)
        self.prec = prec

    @property
    def field(self):
        return self.ring.field

    def is_exact(self):
        return self.prec == EXACT_PRECISION

    def is_zero(self):
        """True when no known coefficient is nonzero"""
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    __nonzero__ = __bool__

    def valuation(self):
        """:raises PrecisionExhausted: when no known coefficient is nonzero"""
        if not self.coeffs:
            raise PrecisionExhausted('series is O({0}^{1})'.format(UNIFORMIZER_LETTER, self.prec))
        return self.start

    def lowest(self):
        """A lower bound for the valuation that is exact for nonzero series"""
        return self.start if self.coeffs else self.prec

    def relative_precision(self):
        return self.prec - self.lowest()

    def coefficient(self, k):
        if k >= self.prec:
            raise PrecisionExhausted('u^{0} is beyond the precision {1}'.format(k, self.prec))
        i = k - self.start
        if self.coeffs and 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def _body(self, shift=0):
        """The known coefficients as a polynomial in u, multiplied by u^shift"""
        field = self.field
        return FqPoly._raw(field, [field.zero] * shift + list(self.coeffs), UNIFORMIZER_LETTER)

    def residue(self):
        """Constant coefficient of a series of valuation >= 0"""
        return self.coefficient(0)

    def _coerce(self, other):
        if isinstance(other, LaurentSeries):
            if other.field == self.field:
                return self, other
            if other.field in self.field.chain:
                return self, other.lift(self.ring)
            if self.field in other.field.chain:
                return self.lift(other.ring), other
            raise FieldMismatch('{0} and {1} are unrelated fields'.format(self.field, other.field))
        if isinstance(other, FqElem) and self.field in other.field.chain and \
                other.field != self.field:
            ring = self.ring.over(other.field)
            return self.lift(ring), ring(other)
        if isinstance(other, (int, FqElem)):
            return self, self.ring(other)
        return None, None

    def __add__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        prec = min(a.prec, b.prec)
        if not a.coeffs:
            return LaurentSeries(a.ring, b.start, b.coeffs, prec)
        if not b.coeffs:
            return LaurentSeries(a.ring, a.start, a.coeffs, prec)
        start = min(a.start, b.start)
        total = a._body(a.start - start) + b._body(b.start - start)
        return LaurentSeries(a.ring, start, total.coeffs, prec)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries(self.ring, self.start, [-c for c in self.coeffs], self.prec)

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return b + (-a)

    def __mul__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        prec = min(a.lowest() + b.prec, b.lowest() + a.prec)
        if not a.coeffs or not b.coeffs:
            return LaurentSeries(a.ring, 0, (), prec)
        start = a.start + b.start
        n = len(a.coeffs) + len(b.coeffs) - 1
        if prec != EXACT_PRECISION:
            n = min(n, prec - start)
        if n <= 0:
            return LaurentSeries(a.ring, 0, (), prec)
        product = a._body().truncate(n) * b._body().truncate(n)
        return LaurentSeries(a.ring, start, product.coeffs, prec)

    __rmul__ = __mul__

    def inverse(self):
        """1/self, keeping at most the ring's relative working precision

        :raises PrecisionExhausted: when self has no known nonzero coefficient
        """
        v = self.valuation()
        a = self.coeffs
        inv0 = a[0].inverse()
        if len(a) == 1 and self.is_exact():
            return LaurentSeries(self.ring, -v, (inv0,))
        rel = min(self.prec - v, self.ring.precision)
        modulus = FqPoly.monomial(self.field, rel, var=UNIFORMIZER_LETTER)
        s = self._body().truncate(rel).inverse_mod(modulus)
        return LaurentSeries(self.ring, -v, s.coeffs, -v + rel)

    def __truediv__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return b * a.inverse()

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        base = self
        if e < 0:
            base, e = self.inverse(), -e
        result = self.ring.one
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def frobenius(self, q):
        """self^q computed coefficient-wise, q a power of the characteristic"""
        if not self.coeffs:
            return LaurentSeries(self.ring, 0, (), self.prec * q)
        power = self._body().frobenius(q)
        return LaurentSeries(self.ring, self.start * q, power.coeffs, self.prec * q)

    def lift(self, ring):
        """The same series with coefficients embedded into ring.field"""
        if ring.field == self.field:
            return self
        field = ring.field
        return LaurentSeries(ring, self.start, [field.embed(c) for c in self.coeffs], self.prec)

    def agrees_with(self, other):
        """Equality of all coefficients known on both sides"""
        return (self - other).is_zero()

    def with_precision(self, prec):
        """Truncation to a lower absolute precision"""
        return LaurentSeries(self.ring, self.start, self.coeffs, min(prec, self.prec))

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.field == other.field and self.start == other.start
                and self.coeffs == other.coeffs and self.prec == other.prec)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.start, tuple(c.raw for c in self.coeffs), self.prec))

    def __str__(self):
        u = self.ring.var
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            k = self.start + i
            monomial = '' if k == 0 else (u if k == 1 else '{0}^{1}'.format(u, k))
            text = str(c)
            if not monomial:
                terms.append(text)
            elif text == '1':
                terms.append(monomial)
            else:
                if '+' in text:
                    text = '({0})'.format(text)
                terms.append('{0}*{1}'.format(text, monomial))
        if not self.is_exact():
            terms.append('O({0}^{1})'.format(u, self.prec))
        return '+'.join(terms) if terms else '0'

    def __repr__(self):
        return 'LaurentSeries({0!r})'.format(str(self))


class LaurentSeriesRing(object):
    """k((u)) for a finite field k, with a relative working precision for inverses

    Serves as a :class:`~drinfeld.tau.TauPoly` coefficient domain.
    """
    def __init__(self, field, q, precision=DEFAULT_PRECISION, var=UNIFORMIZER_LETTER):
        self.field = field
        self.q = q
        self.precision = precision
        self.var = var

    @property
    def zero(self):
        return LaurentSeries(self, 0, ())

    @property
    def one(self):
        return LaurentSeries(self, 0, (self.field.one,))

    @property
    def uniformizer(self):
        return self.monomial(1)

    def monomial(self, k, c=1):
        return LaurentSeries(self, k, (c,))

    def from_poly(self, f):
        """A polynomial in u as an exact series"""
        return LaurentSeries(self, 0, f.coeffs)

    def over(self, field):
        """The same ring over an extension of the coefficient field"""
        return LaurentSeriesRing(field, self.q, self.precision, self.var)

    def __call__(self, value):
        if isinstance(value, LaurentSeries):
            if value.field != self.field:
                return value.lift(self)
            return value
        return LaurentSeries(self, 0, (self.field(value),))

    def frobenius(self, a, q):
        return a.frobenius(q)

    def is_zero(self, a):
        return a.is_zero()

    def __eq__(self, other):
        return (isinstance(other, LaurentSeriesRing) and self.field == other.field
                and self.q == other.q and self.precision == other.precision)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.field, self.q, self.precision))

    def __str__(self):
        return '{0}(({1}))'.format(self.field, self.var)


class LatticeDatum(object):
    """A rank-1 lattice F_q[T]-generated by gamma = u^-e for the Carlitz-type module
    varphi_T = gamma(T) + tau at a degree-1 prime l = T - c, c != 0, where gamma(T) = c + u

    :Parameters:
        prime : :class:`~drinfeld.gfq.PrimeOfA`
            a degree-1 prime other than (T)
        gamma_val : int
            e > 0, so that v(gamma) = -e
        cutoff : int
            N, the lattice is truncated to {varphi_a(gamma) : deg a <= N}
        precision : int
            relative working precision M
    """
    def __init__(self, prime, gamma_val=DEFAULT_GAMMA_VALUATION, cutoff=DEFAULT_CUTOFF,
                 precision=DEFAULT_PRECISION):
        if prime.degree != 1 or prime.is_T:
            raise ValueError('lattice data live at degree-1 primes other than (T), not {0}'.format(
                prime))
        if gamma_val < 1:
            raise ValueError('v(gamma) must be negative, got {0}'.format(-gamma_val))
        if not 0 <= cutoff <= MAX_CUTOFF:
            raise IndexOutOfRange('cutoff {0} outside 0..{1}'.format(cutoff, MAX_CUTOFF))
        field = prime.field
        self.prime = prime
        self.q = field.order
        self.gamma_val = gamma_val
        self.cutoff = cutoff
        self.ring = LaurentSeriesRing(field, self.q, precision)
        self.c = -prime.gen.coeffs[0]
        self.gamma_T = LaurentSeries(self.ring, 0, (self.c, field.one))
        self.b = self.ring.one
        self.gamma = self.ring.monomial(-gamma_val)
        self.varphi_T = TauPoly._raw([self.gamma_T, self.b], self.ring, self.q)
        basis = [self.gamma]
        for _ in range(cutoff):
            basis.append(tau_eval(self.varphi_T, basis[-1]))
        self.basis = basis

    @property
    def precision(self):
        return self.ring.precision

    @property
    def size(self):
        return self.q ** (self.cutoff + 1)

    def points(self):
        """All q^(N+1) lattice points, zero first, ordered by coefficient indices"""
        points = [self.ring.zero]
        for lam in self.basis:
            points = [x + c * lam for c in self.ring.field.elements() for x in points]
        return points

    def nonzero_points(self):
        return [lam for lam in self.points() if lam]

    def phi_T(self, x, ring=None):
        return tau_eval(self.varphi_T, x, ring or _ring_of(x, self.ring))

    def __repr__(self):
        return 'LatticeDatum(prime={0}, e={1}, N={2}, M={3})'.format(
            self.prime, self.gamma_val, self.cutoff, self.precision)


def _ring_of(x, default):
    return x.ring if isinstance(x, LaurentSeries) else default


def lattice_points(datum):
    return datum.points()


def evaluate(e, x):
    """e(x) for a skew polynomial e over Laurent series and a series x"""
    return tau_eval(e, x, _ring_of(x, e.ring))


def exp_truncated(datum):
    """x * prod(1 - x/lambda) over the nonzero points of the truncated lattice, built one basis
    vector at a time as e' = (1 - e(lambda)^(1-q) tau) e, so that only q-power terms occur

    :rtype: :class:`~drinfeld.tau.TauPoly`
    :raises PrecisionExhausted: when some e(lambda) has no known nonzero digit
    """
    ring, q = datum.ring, datum.q
    e = TauPoly._raw([ring.one], ring, q)
    for i, lam in enumerate(datum.basis):
        value = evaluate(e, lam)
        if value.is_zero():
            raise PrecisionExhausted('e(lambda_{0}) is lost below u^{1}'.format(i, value.prec))
        alpha = value ** (1 - q)
        e = TauPoly._raw([ring.one, -alpha], ring, q) * e
        log.debug('lattice step %d: v(e(lambda))=%d', i, value.valuation())
    return e


def expand_product(datum):
    """Dense coefficients of x * prod(1 - x/lambda) multiplied out directly, indexed by the
    exponent of x; limited to cutoff <= 1

    :rtype: list of :class:`LaurentSeries`
    """
    if datum.cutoff > 1:
        raise BudgetExceeded('direct product expansion is limited to cutoff 1')
    ring = datum.ring
    poly = [ring.one]
    for lam in datum.nonzero_points():
        inv = lam.inverse()
        poly = [(poly[k] if k < len(poly) else ring.zero) -
                (poly[k - 1] * inv if k else ring.zero)
                for k in range(len(poly) + 1)]
    return [ring.zero] + poly


def elementary_symmetric(values, k, ring):
    """e_k(values) by the usual recurrence"""
    table = [ring.one] + [ring.zero] * k
    for y in values:
        for j in range(k, 0, -1):
            table[j] = table[j] + table[j - 1] * y
    return table[k]


class CoefficientReadings(object):
    """The coefficient of x^(q^i) of the exponential next to two closed forms over the inverse
    nonzero lattice points: the elementary symmetric function e_(q^i - 1) (distinct points) and
    the sum over ordered tuples with repetition, which collapses to (sum 1/lambda)^(q^i - 1)
    """
    def __init__(self, i, coefficient, symmetric, literal):
        self.i = i
        self.coefficient = coefficient
        self.symmetric = symmetric
        self.literal = literal

    @property
    def symmetric_agrees(self):
        return self.coefficient.agrees_with(self.symmetric)

    @property
    def literal_agrees(self):
        return self.coefficient.agrees_with(self.literal)

    def as_dict(self):
        return {
            'i': self.i,
            'coefficient': str(self.coefficient),
            'symmetric': str(self.symmetric),
            'literal': str(self.literal),
            'symmetric_agrees': self.symmetric_agrees,
            'literal_agrees': self.literal_agrees,
            }


def coefficient_formula_readings(datum, i, e=None):
    """:rtype: :class:`CoefficientReadings`
    :raises IndexOutOfRange: unless 0 <= i <= N + 1
    """
    if not 0 <= i <= datum.cutoff + 1:
        raise IndexOutOfRange('coefficient index {0} outside 0..{1}'.format(i, datum.cutoff + 1))
    e = exp_truncated(datum) if e is None else e
    ring, q = datum.ring, datum.q
    k = q ** i - 1
    inverses = [lam.inverse() for lam in datum.nonzero_points()]
    sign = -1 if k % 2 else 1
    symmetric = elementary_symmetric(inverses, k, ring) * sign
    total = ring.zero
    for y in inverses:
        total = total + y
    literal = total ** k * (-1 if i % 2 else 1)
    return CoefficientReadings(i, e.coefficient(i), symmetric, literal)


def check_coefficient_formula(datum, i, e=None):
    """Whether the x^(q^i) coefficient equals the signed elementary symmetric function of the
    inverse nonzero lattice points
    """
    return coefficient_formula_readings(datum, i, e).symmetric_agrees


def unit_torsion_points(datum, seed=DEFAULT_SEED):
    """The q - 1 nonzero roots of varphi_T(x) = gamma(T) x + b x^q, all units, over the least
    unramified extension containing them; each is w0 * s with w0^(q-1) = -c/b(0) in the
    residue field and s^(q-1) = 1 + u/c Newton-lifted to the working precision

    :rtype: list of :class:`LaurentSeries`
    """
    ring, q = datum.ring, datum.q
    h = -datum.gamma_T / datum.b
    h0 = h.residue()
    y = h * h0.inverse()

    s = ring.one
    for _ in range(datum.precision.bit_length() + 2):
        step = (s ** (q - 1) - y) / (s ** (q - 2) * (q - 1))
        s_next = s - step
        if s_next.agrees_with(s) and not s.is_exact():
            s = s_next
            break
        s = s_next
    s = s.with_precision(ring.precision)

    m = 1
    while h0 ** m != 1:
        m += 1
    ext = ring.field.extension(m)
    ext_ring = ring.over(ext)
    f = FqPoly(ext, [-ext.embed(h0)] + [0] * (q - 2) + [1])
    lifted = s.lift(ext_ring)
    return [lifted * w0 for w0 in roots(f, seed)]


class FunctionalEquationReport(object):
    """Outcome of the kernel, T-shift and valuation checks on a truncated exponential

    :Ivariables:
        kernel : list of bool
            e(lambda) vanishes for every lattice point
        shift : list of bool
            e(varphi_T(lambda)) and varphi_T(e(lambda)) vanish for lambda in the smaller lattice
        torsion : list of (int, int)
            (v(w), v(e(w))) over the unit torsion points of varphi
        checks : list of (int, int)
            (v(z), v(e(z))) over non-lattice points with v(z) > -e
    """
    def __init__(self, kernel, shift, torsion, checks):
        self.kernel = kernel
        self.shift = shift
        self.torsion = torsion
        self.checks = checks

    @property
    def ok(self):
        return (all(self.kernel) and all(self.shift)
                and all(a == b for a, b in self.torsion)
                and all(a == b for a, b in self.checks))

    def as_dict(self):
        return {
            'kernel': all(self.kernel),
            'shift': all(self.shift),
            'torsion': [list(pair) for pair in self.torsion],
            'checks': [list(pair) for pair in self.checks],
            'ok': self.ok,
            }


def vanishes(value, scale):
    """value is zero to a precision beyond the valuation scale of its input

    :raises PrecisionExhausted: when the guaranteed precision does not reach past scale
    """
    if value.prec <= scale:
        raise PrecisionExhausted('only O(u^{0}) is known, below u^{1}'.format(value.prec, scale))
    return value.is_zero()


def check_points(datum, top=2):
    """Non-lattice points u^k (1 + u) for -e < k <= top"""
    ring = datum.ring
    return [ring.monomial(k) * (ring.one + ring.uniformizer)
            for k in range(1 - datum.gamma_val, top + 1)]


def check_functional_equation(datum, e=None, seed=DEFAULT_SEED):
    """:rtype: :class:`FunctionalEquationReport`
    :raises IndexOutOfRange: for cutoff 0
    :raises PrecisionExhausted: when a check runs out of guaranteed digits
    """
    if datum.cutoff < 1:
        raise IndexOutOfRange('the T-shift check needs cutoff >= 1')
    e = exp_truncated(datum) if e is None else e
    points = datum.points()
    kernel = [vanishes(evaluate(e, lam), lam.lowest()) for lam in points if lam]

    smaller = points[:datum.size // datum.q]
    shift = []
    for lam in smaller:
        if not lam:
            continue
        image = datum.phi_T(lam)
        shift.append(vanishes(evaluate(e, image), image.lowest()))
        shift.append(vanishes(datum.phi_T(evaluate(e, lam)), lam.lowest()))

    torsion = []
    for w in unit_torsion_points(datum, seed):
        torsion.append((w.valuation(), evaluate(e, w).valuation()))
    checks = [(z.valuation(), evaluate(e, z).valuation()) for z in check_points(datum)]
    report = FunctionalEquationReport(kernel, shift, torsion, checks)
    log.info('functional equation at %s: %s', datum.prime, 'ok' if report.ok else 'failed')
    return report
