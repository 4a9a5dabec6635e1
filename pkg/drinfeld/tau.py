"""
:summary: Skew polynomials C{tau} with tau * c = c^q * tau

Coefficient domains are :class:`~drinfeld.gfq.FiniteField`, :class:`~drinfeld.gfq.PolyRing`
or :class:`~drinfeld.tate.LaurentSeriesRing`; each provides ``zero``, ``one``, ``is_zero``,
coercion by call and ``frobenius(a, q)`` for the q-power map.

:license: Apache License, Version 2.0
"""
__docformat__ = "restructuredtext en"

import re

from .defaults import TAU_LETTER, TORSION_VARIABLE
from .exceptions import FieldMismatch, ZeroPolynomialError, ParseError
from .gfq import FqPoly, NEG_INF, FiniteField


def _needs_parens(text):
    return '+' in text or text.startswith('-')


class TauPoly(object):
    """sum(c_i tau^i), coefficients ascending with no trailing zeros. Immutable.

    :Parameters:
        coeffs : sequence
            coefficients c_0, c_1, ... (anything the ring coerces)
        ring : coefficient domain
            the coefficient ring
        q : int
            the size of the constant field; tau acts on coefficients by c -> c^q
    """
    __slots__ = ('ring', 'q', 'coeffs')

    def __init__(self, coeffs, ring, q):
        coeffs = [ring(c) for c in coeffs]
        while coeffs and ring.is_zero(coeffs[-1]):
            coeffs.pop()
        self.ring = ring
        self.q = q
        self.coeffs = tuple(coeffs)

    @classmethod
    def _raw(cls, coeffs, ring, q):
        while coeffs and ring.is_zero(coeffs[-1]):
            coeffs.pop()
        poly = cls.__new__(cls)
        poly.ring = ring
        poly.q = q
        poly.coeffs = tuple(coeffs)
        return poly

    @classmethod
    def tau(cls, ring, q, k=1):
        return cls._raw([ring.zero] * k + [ring.one], ring, q)

    def _check(self, other):
        if self.ring != other.ring or self.q != other.q:
            raise FieldMismatch('skew polynomials over {0} and {1}'.format(self.ring, other.ring))

    def _coerce(self, other):
        if isinstance(other, TauPoly):
            self._check(other)
            return other
        try:
            return TauPoly._raw([self.ring(other)], self.ring, self.q)
        except (TypeError, FieldMismatch):
            return None

    def degree(self):
        """tau-degree, or NEG_INF for zero"""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def height(self):
        """Least i with c_i nonzero"""
        for i, c in enumerate(self.coeffs):
            if not self.ring.is_zero(c):
                return i
        raise ZeroPolynomialError('the zero skew polynomial has no height')

    def height_degree(self):
        if not self.coeffs:
            raise ZeroPolynomialError('the zero skew polynomial has no height or degree')
        return self.height(), self.degree()

    def x_degree(self):
        """Degree of the commutative image, q^deg"""
        if not self.coeffs:
            return NEG_INF
        return self.q ** self.degree()

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    __nonzero__ = __bool__

    def coefficient(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.zero

    def leading(self):
        if not self.coeffs:
            raise ZeroPolynomialError('the zero skew polynomial has no leading coefficient')
        return self.coeffs[-1]

    def derivative(self):
        """The constant coefficient c_0"""
        return self.coefficient(0)

    def is_separable(self):
        return bool(self.coeffs) and not self.ring.is_zero(self.coeffs[0])

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        coeffs = [x + y for x, y in zip(a, b)] + list(a[len(b):])
        return TauPoly._raw(coeffs, self.ring, self.q)

    __radd__ = __add__

    def __neg__(self):
        return TauPoly._raw([-c for c in self.coeffs], self.ring, self.q)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return tau_mul(self, other)

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return tau_mul(other, self)

    compose = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = TauPoly._raw([self.ring.one], self.ring, self.q)
        base = self
        while e:
            if e & 1:
                result = tau_mul(result, base)
            e >>= 1
            if e:
                base = tau_mul(base, base)
        return result

    def __eq__(self, other):
        if not isinstance(other, TauPoly):
            return NotImplemented
        return self.ring == other.ring and self.q == other.q and self.coeffs == other.coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.q, self.coeffs))

    def __call__(self, x, ring=None):
        return tau_eval(self, x, ring)

    def map(self, func, ring):
        """Applies func to every coefficient, landing in another coefficient ring"""
        return TauPoly._raw([func(c) for c in self.coeffs], ring, self.q)

    def to_commutative(self):
        """sum(c_i x^(q^i)) as a sparse polynomial

        :rtype: :class:`LinearizedPoly`
        """
        return LinearizedPoly(self)

    def __str__(self):
        return _format_tau(
            [(i, c) for i, c in enumerate(self.coeffs) if not self.ring.is_zero(c)],
            lambda i: TAU_LETTER if i == 1 else '{0}^{1}'.format(TAU_LETTER, i))

    def __repr__(self):
        return 'TauPoly({0!r})'.format(str(self))


def _format_tau(terms, monomial):
    if not terms:
        return '0'
    parts = []
    for i, c in reversed(terms):
        text = str(c)
        if i == 0:
            parts.append(text)
            continue
        if text == '1':
            parts.append(monomial(i))
            continue
        if _needs_parens(text):
            text = '({0})'.format(text)
        parts.append('{0}*{1}'.format(text, monomial(i)))
    return '+'.join(parts)


def tau_mul(f, g):
    """(a tau^i)(b tau^j) = a b^(q^i) tau^(i+j)

    :rtype: :class:`TauPoly`
    """
    f._check(g)
    if not f.coeffs or not g.coeffs:
        return TauPoly._raw([], f.ring, f.q)
    ring, q = f.ring, f.q
    result = [ring.zero] * (len(f.coeffs) + len(g.coeffs) - 1)
    twisted = list(g.coeffs)
    for i, a in enumerate(f.coeffs):
        if i:
            twisted = [ring.frobenius(b, q) for b in twisted]
        if ring.is_zero(a):
            continue
        for j, b in enumerate(twisted):
            result[i + j] = result[i + j] + a * b
    return TauPoly._raw(result, ring, q)


def tau_eval(f, x, ring=None):
    """sum(c_i x^(q^i)) for x in an algebra over the coefficient ring

    :Parameters:
        f : :class:`TauPoly`
            the skew polynomial
        x : ring element
            the evaluation point
        ring : coefficient domain
            the domain x lives in, providing its q-power map (default: f.ring)
    """
    ring = f.ring if ring is None else ring
    result = ring.zero
    power = x
    for i, c in enumerate(f.coeffs):
        if i:
            power = ring.frobenius(power, f.q)
        if not f.ring.is_zero(c):
            result = result + c * power
    return result


class LinearizedPoly(object):
    """The commutative polynomial sum(c_i x^(q^i)) of a skew polynomial"""
    def __init__(self, tau_poly, var=TORSION_VARIABLE):
        self.tau_poly = tau_poly
        self.var = var

    @property
    def q(self):
        return self.tau_poly.q

    def degree(self):
        return self.tau_poly.x_degree()

    def coefficient(self, e):
        """Coefficient of x^e"""
        i, power = 0, 1
        while power < e:
            power *= self.q
            i += 1
        if power != e:
            return self.tau_poly.ring.zero
        return self.tau_poly.coefficient(i)

    def terms(self):
        """(exponent, coefficient) pairs with nonzero coefficient, ascending"""
        ring = self.tau_poly.ring
        return [(self.q ** i, c) for i, c in enumerate(self.tau_poly.coeffs)
                if not ring.is_zero(c)]

    def __call__(self, x, ring=None):
        return tau_eval(self.tau_poly, x, ring)

    def dense(self, var=None):
        """Dense :class:`~drinfeld.gfq.FqPoly` when the coefficients lie in a finite field"""
        ring = self.tau_poly.ring
        if not isinstance(ring, FiniteField):
            raise TypeError('dense form needs finite field coefficients, not {0}'.format(ring))
        coeffs = [ring.zero] * (self.degree() + 1) if self.tau_poly.coeffs else []
        for e, c in self.terms():
            coeffs[e] = c
        return FqPoly(ring, coeffs, var or self.var)

    def __str__(self):
        var = self.var
        return _format_tau(
            [(e, c) for e, c in self.terms()],
            lambda e: var if e == 1 else '{0}^{1}'.format(var, e))

    def __repr__(self):
        return 'LinearizedPoly({0!r})'.format(str(self))


def _split_terms(text):
    """Top-level signed terms of text, respecting parentheses"""
    terms, depth, start, sign = [], 0, 0, 1
    for i, ch in enumerate(text):
        if ch == '(':
            depth += 1
        elif ch == ')':
            depth -= 1
            if depth < 0:
                raise ParseError('unbalanced parentheses in {0!r}'.format(text))
        elif ch in '+-' and depth == 0:
            chunk = text[start:i].strip()
            if chunk:
                terms.append((sign, chunk))
            elif i and ch == '-' and terms:
                raise ParseError('dangling operator in {0!r}'.format(text))
            sign = -1 if ch == '-' else 1
            start = i + 1
    if depth:
        raise ParseError('unbalanced parentheses in {0!r}'.format(text))
    chunk = text[start:].strip()
    if not chunk:
        raise ParseError('dangling operator in {0!r}'.format(text))
    terms.append((sign, chunk))
    return terms

_TAU_TERM = re.compile(r'^(?:(.*)\*)?\s*' + TAU_LETTER + r'(?:\s*\^\s*(\d+))?$')


def parse_tau(text, ring, q):
    """Parses canonical skew polynomial text, e.g. ``(T+1)*t^2+t+T``

    :rtype: :class:`TauPoly`
    """
    if not text or not text.strip():
        raise ParseError('empty skew polynomial text')
    coeffs = {}
    for sign, term in _split_terms(text.replace(' ', '')):
        match = _TAU_TERM.match(term)
        if match:
            coeff_text = match.group(1) or '1'
            exponent = int(match.group(2) or 1)
        else:
            coeff_text, exponent = term, 0
        coeff = ring(coeff_text)
        if sign < 0:
            coeff = -coeff
        coeffs[exponent] = coeffs[exponent] + coeff if exponent in coeffs else coeff
    top = max(coeffs)
    return TauPoly([coeffs.get(i, ring.zero) for i in range(top + 1)], ring, q)
