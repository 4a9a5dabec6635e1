"""
:summary: Finite fields F_q, the polynomial ring A = F_q[T] and its primes

Field and polynomial arithmetic run on :mod:`galois`. Every field is an absolute galois field
and raw element values are galois integer representations; an extension field also keeps its
presentation over the base field, which fixes the canonical element order and printed form.

:license: Apache License, Version 2.0
"""
__docformat__ = "restructuredtext en"

import logging
import random
import re

import galois
import numpy as np
from sympy import divisors, factorint, isprime

from .defaults import (
    FIELD_MODULI,
    GENERATOR_LETTER,
    POLY_VARIABLE,
    EXTENSION_LETTER,
    DEFAULT_SEED,
    )
from .exceptions import (
    InvalidFieldSpec,
    FieldMismatch,
    ZeroPolynomialError,
    ParseError,
    )
from .util import memoize

log = logging.getLogger(__name__)

# exponents handed to galois stay below one machine word
_WORD = 2 ** 32


class _NegativeInfinity(object):
    """Degree of the zero polynomial. Compares below every integer and refuses arithmetic."""
    __slots__ = ()

    def __lt__(self, other):
        return not isinstance(other, _NegativeInfinity)

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return isinstance(other, _NegativeInfinity)

    def __eq__(self, other):
        return isinstance(other, _NegativeInfinity)

    def __hash__(self):
        return hash('-inf')

    def __repr__(self):
        return '-inf'

    __str__ = __repr__

NEG_INF = _NegativeInfinity()


def mobius(n):
    """Moebius function of the positive integer n

    :rtype: int
    """
    exponents = factorint(n)
    if any(e > 1 for e in exponents.values()):
        return 0
    return -1 if len(exponents) % 2 else 1


def count_irreducibles(n, q):
    """Number c_n of monic irreducible polynomials of degree n over F_q

    :Parameters:
        n : int
            the degree, n >= 1
        q : int
            the field size

    :rtype: int
    """
    if n < 1:
        raise ValueError('degree must be positive: {0}'.format(n))
    total = sum(mobius(d) * q ** (n // d) for d in divisors(n))
    return total // n


@memoize
def galois_field(p, degree, modulus=None):
    """The galois field class of order p^degree. modulus holds the ascending F_p coefficients
    of the defining polynomial; without it the Conway polynomial is used when tabulated and
    the least irreducible polynomial otherwise.

    :rtype: type[galois.FieldArray]
    """
    if degree == 1:
        return galois.GF(p)
    if modulus is not None:
        irreducible = galois.Poly(list(modulus), field=galois.GF(p), order='asc')
    else:
        try:
            irreducible = galois.conway_poly(p, degree)
        except LookupError:
            irreducible = galois.irreducible_poly(p, degree, method='min')
    log.debug('building GF(%d^%d) modulo %s', p, degree, irreducible)
    return galois.GF(p ** degree, irreducible_poly=irreducible)


def _digits(n, p, length):
    """Base-p digits of a galois integer representation, lowest first"""
    digits = []
    for _ in range(length):
        n, d = divmod(n, p)
        digits.append(d)
    return digits


def _undigits(digits, p):
    n = 0
    for d in reversed(digits):
        n = n * p + int(d)
    return n


def _power(x, e):
    """x ** e for a galois scalar or polynomial and any e >= 0"""
    if e < _WORD:
        return x ** e
    high, low = divmod(e, _WORD)
    return _power(x, high) ** _WORD * x ** low


def _pow_mod(g, e, modulus):
    """pow(g, e, modulus) for galois polynomials and any e >= 0"""
    if e < _WORD:
        return pow(g, e, modulus)
    high, low = divmod(e, _WORD)
    return pow(_pow_mod(g, high, modulus), _WORD, modulus) * pow(g, low, modulus) % modulus


def _is_zero_poly(g):
    return g.degree == 0 and g.coeffs[0] == 0


def _monic(g):
    return g // galois.Poly(g.coeffs[:1], field=g.field)


def _linear_part(g):
    """gcd(g, x^Q - x) for a monic galois polynomial g over GF(Q): the product of its distinct
    linear factors
    """
    x = galois.Poly.Identity(g.field)
    if g.degree == 1:
        return g
    return _monic(galois.gcd(g, _pow_mod(x, g.field.order, g) - x))


def _split(g, d, rng):
    """Monic irreducible factors of a monic squarefree galois polynomial g whose irreducible
    factors all have degree d, split at random elements drawn from rng
    """
    if g.degree == d:
        return [g]
    gf = g.field
    one = galois.Poly.One(gf)
    exponent = (gf.order ** d - 1) // 2
    while True:
        r = galois.Poly([rng.randrange(gf.order) for _ in range(g.degree)], field=gf,
                        order='asc')
        if r.degree < 1:
            continue
        h = galois.gcd(g, _pow_mod(r, exponent, g) - one)
        if 0 < h.degree < g.degree:
            h = _monic(h)
            return _split(h, d, rng) + _split(g // h, d, rng)


def _least_root(g):
    """Smallest root, by integer representation, of a galois polynomial that has one"""
    linear = _linear_part(_monic(g))
    if linear.degree < 1:
        raise InvalidFieldSpec('{0} has no root in {1}'.format(g, g.field.name))
    factors = _split(linear, 1, random.Random(DEFAULT_SEED))
    return min(int(-h.coeffs[-1]) for h in factors)


def _format_terms(terms, var):
    """Canonical text of sum(c * var^k) for (k, c) pairs in descending k with c nonzero"""
    if not terms:
        return '0'
    parts = []
    for k, c in terms:
        if c.in_prime_field():
            coeff = str(c.prime_value())
        else:
            coeff = '({0})'.format(c)
        if k == 0:
            parts.append(coeff)
            continue
        monomial = var if k == 1 else '{0}^{1}'.format(var, k)
        parts.append(monomial if coeff == '1' else '{0}*{1}'.format(coeff, monomial))
    return '+'.join(parts)


class FiniteField(object):
    """A finite field of odd characteristic computing in the galois field class ``gf``.
    Elements are :class:`FqElem` wrapping the galois integer representation.
    """
    p = None
    degree = None
    order = None
    base = None
    var = None
    gf = None

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self is other or self.key == other.key)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.key)

    def __call__(self, value):
        """Coerces an int, a subfield element or canonical text into this field"""
        if isinstance(value, FqElem):
            return self.embed(value)
        if isinstance(value, int):
            return FqElem(self, self._from_int(value))
        if isinstance(value, str):
            return parse_element(value, self)
        raise TypeError('cannot coerce {0!r} into {1}'.format(value, self))

    def __iter__(self):
        return self.elements()

    @property
    def zero(self):
        return FqElem(self, 0)

    @property
    def one(self):
        return FqElem(self, 1)

    @property
    def chain(self):
        """This field followed by its base fields down to the prime field"""
        field, fields = self, []
        while field is not None:
            fields.append(field)
            field = field.base
        return fields

    def elements(self):
        """Iterates all elements in canonical index order"""
        for i in range(self.order):
            yield FqElem(self, self._from_index(i))

    def nonzero_elements(self):
        for i in range(1, self.order):
            yield FqElem(self, self._from_index(i))

    def from_index(self, index):
        if not 0 <= index < self.order:
            raise ValueError('element index out of range: {0}'.format(index))
        return FqElem(self, self._from_index(index))

    def random_element(self, rng):
        return FqElem(self, self._from_index(rng.randrange(self.order)))

    def frobenius(self, a, q):
        """The q-power map, used when the field is a skew-polynomial coefficient domain"""
        return a ** q

    def is_zero(self, a):
        return a.is_zero()

    def embed(self, elem):
        """Maps an element of this field or of one of its base fields into this field"""
        if elem.field == self:
            return elem
        raise FieldMismatch('{0} is not a subfield of {1}'.format(elem.field, self))

    def extension(self, degree):
        """The extension of this field of the given degree, presented by the first irreducible
        polynomial in canonical order. Memoized per field and degree.

        :rtype: :class:`ExtensionField`
        """
        if degree == 1:
            return self
        return _extension(self, degree)

    def poly(self, coeffs, var=POLY_VARIABLE):
        return FqPoly(self, coeffs, var)

    def array(self, raws):
        """The raw values as a galois array"""
        return self.gf(list(raws))

    def _add(self, a, b):
        return int(self.gf(a) + self.gf(b))

    def _sub(self, a, b):
        return int(self.gf(a) - self.gf(b))

    def _neg(self, a):
        return int(-self.gf(a))

    def _mul(self, a, b):
        return int(self.gf(a) * self.gf(b))

    def _inv(self, a):
        if not a:
            raise ZeroDivisionError('zero has no inverse in {0}'.format(self))
        return int(self.gf(1) / self.gf(a))

    def _pow(self, a, e):
        if not a:
            return 0 if e else 1
        if e:
            e = (e - 1) % (self.order - 1) + 1
        return int(_power(self.gf(a), e))

    def _from_int(self, k):
        return k % self.p

    def _in_prime(self, a):
        return a < self.p

    def _prime_value(self, a):
        return a

    def __str__(self):
        return 'F_{0}'.format(self.order)

    __repr__ = __str__


class PrimeField(FiniteField):
    """F_p, whose raw values are the residues 0..p-1"""
    def __init__(self, p):
        if p % 2 == 0 or not isprime(p):
            raise InvalidFieldSpec('characteristic must be an odd prime: {0}'.format(p))
        self.p = p
        self.degree = 1
        self.order = p
        self.base = None
        self.gf = galois_field(p, 1)
        self.key = ('prime', p)

    def __reduce__(self):
        return PrimeField, (self.p,)

    # residues mod p are the galois integer representation
    def _add(self, a, b):
        return (a + b) % self.p

    def _sub(self, a, b):
        return (a - b) % self.p

    def _neg(self, a):
        return -a % self.p

    def _mul(self, a, b):
        return a * b % self.p

    def _from_index(self, i):
        return i

    def _index(self, a):
        return a

    def _format(self, a):
        return str(a)


class ExtensionField(FiniteField):
    """base[var]/(modulus). Arithmetic is absolute; coordinates over the base are taken in the
    basis 1, y, .., y^(n-1) for y the least root of the modulus in ``gf``.

    :Parameters:
        base : :class:`FiniteField`
            the base field
        modulus : :class:`FqPoly`
            a monic irreducible polynomial over base
        var : str
            the letter printed for the class of the polynomial variable
        gf_modulus : tuple of int | None
            ascending F_p coefficients of the absolute defining polynomial (default: Conway)
    """
    def __init__(self, base, modulus, var=GENERATOR_LETTER, gf_modulus=None):
        if modulus.field != base:
            raise FieldMismatch('modulus lives over {0}, not {1}'.format(modulus.field, base))
        n = modulus.degree()
        if n < 1 or not modulus.is_monic():
            raise InvalidFieldSpec('modulus must be monic of positive degree: {0}'.format(modulus))
        self.base = base
        self.modulus = modulus.with_var(var)
        self.var = var
        self.n = n
        self.p = base.p
        self.degree = base.degree * n
        self.order = base.order ** n
        self.gf_modulus = gf_modulus
        self.gf = galois_field(self.p, self.degree, gf_modulus)
        self.key = ('ext', base.key, tuple(c.raw for c in modulus.coeffs))
        self._images = {}
        self._beta = None
        if base.base is not None:
            irreducible = [int(c) for c in base.gf.irreducible_poly.coeffs]
            self._beta = self.gf(_least_root(galois.Poly(irreducible, field=self.gf)))
        lifted = [self._embed_raw(c.raw) for c in reversed(modulus.coeffs)]
        self._y = _least_root(galois.Poly(lifted, field=self.gf))
        self._aligned = base.base is None and self._y == self.p
        if not self._aligned:
            self._build_basis()

    def __reduce__(self):
        return ExtensionField, (self.base, self.modulus, self.var, self.gf_modulus)

    def _build_basis(self):
        """F_p-matrices between absolute digits and base coordinates"""
        gfp = galois_field(self.p, 1)
        y = self.gf(self._y)
        columns = []
        for i in range(self.n):
            for j in range(self.base.degree):
                power = y ** i if self._beta is None else self._beta ** j * y ** i
                columns.append(_digits(int(power), self.p, self.degree))
        self._from_basis = gfp(np.array(columns, dtype=np.int64).T)
        self._to_basis = np.linalg.inv(self._from_basis)

    def _embed_raw(self, b):
        """Image of a raw value of the base field"""
        if self._beta is None:
            return b
        image = self._images.get(b)
        if image is None:
            digits = _digits(b, self.p, self.base.degree)
            image = int(galois.Poly(digits, field=self.gf, order='asc')(self._beta))
            self._images[b] = image
        return image

    def _coords(self, a):
        """Base raw coordinates of a"""
        if self._aligned:
            return _digits(a, self.p, self.n)
        gfp = galois_field(self.p, 1)
        w = self._to_basis @ gfp(_digits(a, self.p, self.degree))
        digits = [int(x) for x in w]
        size = self.base.degree
        return [_undigits(digits[i * size:(i + 1) * size], self.p) for i in range(self.n)]

    def _from_coords(self, raws):
        if self._aligned:
            return _undigits(raws, self.p)
        gfp = galois_field(self.p, 1)
        digits = []
        for b in raws:
            digits.extend(_digits(b, self.p, self.base.degree))
        return _undigits(self._from_basis @ gfp(digits), self.p)

    @property
    def gen(self):
        """The class of var"""
        return FqElem(self, self._y)

    def _from_index(self, i):
        if self._aligned:
            return i
        raws = []
        for _ in range(self.n):
            i, d = divmod(i, self.base.order)
            raws.append(self.base._from_index(d))
        return self._from_coords(raws)

    def _index(self, a):
        if self._aligned:
            return a
        index = 0
        for b in reversed(self._coords(a)):
            index = index * self.base.order + self.base._index(b)
        return index

    def _format(self, a):
        terms = [(k, FqElem(self.base, b)) for k, b in reversed(list(enumerate(self._coords(a))))
                 if b]
        return _format_terms(terms, self.var)

    def embed(self, elem):
        field = elem.field
        if field == self:
            return elem
        if field == self.base:
            return FqElem(self, self._embed_raw(elem.raw))
        if field in self.base.chain:
            return self.embed(self.base.embed(elem))
        raise FieldMismatch('{0} is not a subfield of {1}'.format(field, self))

    def coordinates(self, elem):
        """Coordinates of elem over the base field in the basis 1, var, var^2, ...

        :rtype: list of :class:`FqElem`
        """
        return [FqElem(self.base, b) for b in self._coords(self.embed(elem).raw)]

    def from_coordinates(self, coords):
        coords = [self.base(c) for c in coords]
        if len(coords) != self.n:
            raise ValueError('expected {0} coordinates, got {1}'.format(self.n, len(coords)))
        return FqElem(self, self._from_coords([c.raw for c in coords]))

    def __str__(self):
        return 'F_{0}[{1}]/({2})'.format(self.base.order, self.var, self.modulus)

    __repr__ = __str__


class FieldSpec(object):
    """F_q presented as F_p[w]/(modulus)

    :Parameters:
        p : int
            odd prime characteristic
        n : int
            degree over F_p
        modulus : tuple of int
            ascending coefficients of a monic irreducible polynomial of degree n over F_p
    """
    def __init__(self, p, n, modulus):
        if not isinstance(p, int) or p < 3 or not isprime(p):
            raise InvalidFieldSpec('p must be an odd prime: {0!r}'.format(p))
        if not isinstance(n, int) or n < 1:
            raise InvalidFieldSpec('n must be a positive integer: {0!r}'.format(n))
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise InvalidFieldSpec('modulus must be monic of degree {0}: {1}'.format(n, modulus))
        if not galois.Poly(list(modulus), field=galois_field(p, 1), order='asc').is_irreducible():
            raise InvalidFieldSpec('modulus is reducible over F_{0}: {1}'.format(p, modulus))
        self.p = p
        self.n = n
        self.modulus = modulus
        self._field = None

    @classmethod
    def for_q(cls, q):
        if q not in FIELD_MODULI:
            raise InvalidFieldSpec(
                'unsupported field size {0}; choose from {1}'.format(q, sorted(FIELD_MODULI)))
        return cls(*FIELD_MODULI[q])

    @property
    def q(self):
        return self.p ** self.n

    @property
    def field(self):
        if self._field is None:
            prime = PrimeField(self.p)
            if self.n == 1:
                self._field = prime
            else:
                self._field = ExtensionField(
                    prime, FqPoly(prime, self.modulus, GENERATOR_LETTER), GENERATOR_LETTER,
                    self.modulus)
        return self._field

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.p, self.n, self.modulus) == \
            (other.p, other.n, other.modulus)

    def __hash__(self):
        return hash((self.p, self.n, self.modulus))

    def __repr__(self):
        return 'FieldSpec(p={0}, n={1}, modulus={2})'.format(self.p, self.n, self.modulus)


@memoize
def field_for(q):
    """The F_q used throughout the package for a supported q

    :rtype: :class:`FiniteField`
    """
    return FieldSpec.for_q(q).field


class FqElem(object):
    """An element of a :class:`FiniteField`"""
    __slots__ = ('field', 'raw')

    def __init__(self, field, raw):
        self.field = field
        self.raw = raw

    def __reduce__(self):
        return FqElem, (self.field, self.raw)

    def _operands(self, other):
        if isinstance(other, int):
            return self, FqElem(self.field, self.field._from_int(other))
        if not isinstance(other, FqElem):
            return None, None
        if other.field is self.field or other.field == self.field:
            return self, other
        if other.field in self.field.chain:
            return self, self.field.embed(other)
        if self.field in other.field.chain:
            return other.field.embed(self), other
        raise FieldMismatch('{0} and {1} are unrelated fields'.format(self.field, other.field))

    def __add__(self, other):
        a, b = self._operands(other)
        if a is None:
            return NotImplemented
        return FqElem(a.field, a.field._add(a.raw, b.raw))

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._operands(other)
        if a is None:
            return NotImplemented
        return FqElem(a.field, a.field._sub(a.raw, b.raw))

    def __rsub__(self, other):
        a, b = self._operands(other)
        if a is None:
            return NotImplemented
        return FqElem(a.field, a.field._sub(b.raw, a.raw))

    def __neg__(self):
        return FqElem(self.field, self.field._neg(self.raw))

    def __mul__(self, other):
        a, b = self._operands(other)
        if a is None:
            return NotImplemented
        return FqElem(a.field, a.field._mul(a.raw, b.raw))

    __rmul__ = __mul__

    def __truediv__(self, other):
        a, b = self._operands(other)
        if a is None:
            return NotImplemented
        return FqElem(a.field, a.field._mul(a.raw, a.field._inv(b.raw)))

    def __rtruediv__(self, other):
        a, b = self._operands(other)
        if a is None:
            return NotImplemented
        return FqElem(a.field, a.field._mul(b.raw, a.field._inv(a.raw)))

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        raw = self.raw
        if e < 0:
            raw, e = self.field._inv(raw), -e
        return FqElem(self.field, self.field._pow(raw, e))

    def inverse(self):
        return FqElem(self.field, self.field._inv(self.raw))

    def is_zero(self):
        return not self.raw

    def __bool__(self):
        return bool(self.raw)

    __nonzero__ = __bool__

    def __eq__(self, other):
        if isinstance(other, int):
            return self.raw == self.field._from_int(other)
        if not isinstance(other, FqElem):
            return NotImplemented
        return self.raw == other.raw and self.field == other.field

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.field.key, self.raw))

    @property
    def index(self):
        """Position in the canonical enumeration of the field"""
        return self.field._index(self.raw)

    @property
    def coeffs(self):
        """Coordinates over the base field"""
        if self.field.base is None:
            return [self]
        return self.field.coordinates(self)

    def in_prime_field(self):
        return self.field._in_prime(self.raw)

    def prime_value(self):
        """The residue in 0..p-1 of an element of the prime subfield"""
        if not self.in_prime_field():
            raise ValueError('{0} is not in the prime field'.format(self))
        return self.field._prime_value(self.raw)

    def is_square(self):
        return bool(self.field.gf(self.raw).is_square())

    def multiplicative_order(self):
        if not self.raw:
            raise ZeroDivisionError('zero has no multiplicative order')
        return int(self.field.gf(self.raw).multiplicative_order())

    def __str__(self):
        return self.field._format(self.raw)

    def __repr__(self):
        return 'FqElem({0!r})'.format(str(self))


class FqPoly(object):
    """A univariate polynomial over a :class:`FiniteField`, coefficients ascending with no
    trailing zeros. Immutable; arithmetic goes through an attached :class:`galois.Poly`.
    """
    __slots__ = ('field', 'coeffs', 'var', '_poly')

    def __init__(self, field, coeffs=(), var=POLY_VARIABLE):
        coeffs = [c if isinstance(c, FqElem) and c.field is field else field(c) for c in coeffs]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)
        self.var = var
        self._poly = None

    def __reduce__(self):
        return _poly_from_raws, (self.field, [c.raw for c in self.coeffs], self.var)

    @classmethod
    def _raw(cls, field, coeffs, var):
        """Builds from a list of FqElem already in field; takes ownership of the list"""
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        poly = cls.__new__(cls)
        poly.field = field
        poly.coeffs = tuple(coeffs)
        poly.var = var
        poly._poly = None
        return poly

    @classmethod
    def _from_galois(cls, field, g, var):
        raws = [int(c) for c in g.coeffs[::-1]]
        while raws and not raws[-1]:
            raws.pop()
        poly = cls._raw(field, [FqElem(field, a) for a in raws], var)
        poly._poly = g
        return poly

    def _galois(self):
        if self._poly is None:
            raws = [c.raw for c in reversed(self.coeffs)] or [0]
            self._poly = galois.Poly(raws, field=self.field.gf)
        return self._poly

    def _wrap(self, g):
        return FqPoly._from_galois(self.field, g, self.var)

    @classmethod
    def x(cls, field, var=POLY_VARIABLE):
        return cls(field, (0, 1), var)

    @classmethod
    def constant(cls, field, c, var=POLY_VARIABLE):
        return cls(field, (c,), var)

    @classmethod
    def monomial(cls, field, k, c=1, var=POLY_VARIABLE):
        return cls(field, [0] * k + [c], var)

    def with_var(self, var):
        return FqPoly._raw(self.field, list(self.coeffs), var)

    def degree(self):
        """Degree, or NEG_INF for the zero polynomial"""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    __nonzero__ = __bool__

    def is_one(self):
        return len(self.coeffs) == 1 and self.coeffs[0] == 1

    def is_constant(self):
        return len(self.coeffs) <= 1

    def leading(self):
        if not self.coeffs:
            raise ZeroPolynomialError('the zero polynomial has no leading coefficient')
        return self.coeffs[-1]

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self):
        return self * self.leading().inverse()

    def coefficient(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.field.zero

    def _coerce(self, other):
        if isinstance(other, FqPoly):
            if other.field != self.field:
                raise FieldMismatch('{0} and {1} differ'.format(self.field, other.field))
            return other
        if isinstance(other, (int, FqElem)):
            return FqPoly(self.field, (other,), self.var)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._wrap(self._galois() + other._galois())

    __radd__ = __add__

    def __neg__(self):
        return self._wrap(-self._galois())

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._wrap(self._galois() - other._galois())

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return FqPoly._raw(self.field, [], self.var)
        return self._wrap(self._galois() * other._galois())

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        return self._wrap(self._galois() ** e)

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.coeffs:
            raise ZeroPolynomialError('division by the zero polynomial')
        if len(self.coeffs) < len(other.coeffs):
            return FqPoly._raw(self.field, [], self.var), self
        quo, rem = divmod(self._galois(), other._galois())
        return self._wrap(quo), self._wrap(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other):
        return (other % self).is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, FqElem)):
            other = self._coerce(other)
        if not isinstance(other, FqPoly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.field.key, tuple(c.raw for c in self.coeffs)))

    def __call__(self, x):
        """Horner evaluation at x (a field element, or any ring element accepting scalars)"""
        result = None
        for c in reversed(self.coeffs):
            result = c if result is None else result * x + c
        return self.field.zero if result is None else result

    evaluate = __call__

    def derivative(self):
        if len(self.coeffs) < 2:
            return FqPoly._raw(self.field, [], self.var)
        return self._wrap(self._galois().derivative())

    def frobenius(self, q):
        """self^q, computed as sum(c^q T^(iq)) since q is a power of the characteristic"""
        field = self.field
        if not self.coeffs:
            return self
        raws = [c.raw for c in self.coeffs]
        if field.order != q:
            raws = [int(a) for a in _power(field.array(raws), q)]
        coeffs = [field.zero] * (q * (len(raws) - 1) + 1)
        for i, a in enumerate(raws):
            coeffs[i * q] = FqElem(field, a)
        return FqPoly._raw(field, coeffs, self.var)

    def powmod(self, e, modulus):
        return self._wrap(_pow_mod(self._galois() % modulus._galois(), e, modulus._galois()))

    def inverse_mod(self, modulus):
        """The inverse of self modulo a coprime modulus

        :raises ZeroDivisionError: when self and modulus share a factor
        """
        d, s, _ = galois.egcd(self._galois(), modulus._galois())
        if d.degree != 0 or _is_zero_poly(d):
            raise ZeroDivisionError('{0} is not invertible modulo {1}'.format(self, modulus))
        return self._wrap((s // d) % modulus._galois())

    def truncate(self, n):
        """Reduction modulo var^n"""
        return FqPoly._raw(self.field, list(self.coeffs[:n]), self.var)

    def lift(self, field):
        """The same polynomial with coefficients embedded into an extension field"""
        return FqPoly._raw(field, [field.embed(c) for c in self.coeffs], self.var)

    def sort_key(self):
        """Canonical order: by degree, then coefficients compared from the top"""
        return (len(self.coeffs), tuple(c.index for c in reversed(self.coeffs)))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        terms = [(k, c) for k, c in reversed(list(enumerate(self.coeffs))) if c]
        return _format_terms(terms, self.var)

    def __repr__(self):
        return 'FqPoly({0!r})'.format(str(self))


def _poly_from_raws(field, raws, var):
    return FqPoly._raw(field, [FqElem(field, a) for a in raws], var)


def gcd(a, b):
    """Monic greatest common divisor; gcd(0, 0) = 0"""
    if not b:
        return a.monic() if a else a
    if not a:
        return b.monic()
    return a._wrap(_monic(galois.gcd(a._galois(), b._galois())))


class PolyRing(object):
    """A = F_q[T] as a coefficient domain for skew polynomials"""
    def __init__(self, field, var=POLY_VARIABLE):
        self.field = field
        self.var = var

    @property
    def zero(self):
        return FqPoly(self.field, (), self.var)

    @property
    def one(self):
        return FqPoly(self.field, (1,), self.var)

    @property
    def gen(self):
        return FqPoly.x(self.field, self.var)

    def __call__(self, value):
        if isinstance(value, FqPoly):
            if value.field != self.field:
                raise FieldMismatch('{0} is not over {1}'.format(value, self.field))
            return value
        if isinstance(value, str):
            return parse_poly(value, self.field, self.var)
        return FqPoly(self.field, (value,), self.var)

    def frobenius(self, a, q):
        return a.frobenius(q)

    def is_zero(self, a):
        return a.is_zero()

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.field == other.field

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(('poly', self.field.key))

    def __str__(self):
        return '{0}[{1}]'.format(self.field, self.var)


_TOKEN = re.compile(r'\s*(?:(\d+)|([A-Za-z])|(.))')


def _tokenize(text):
    tokens = []
    for number, name, symbol in _TOKEN.findall(text):
        if number:
            tokens.append(('int', int(number)))
        elif name:
            tokens.append(('name', name))
        elif symbol.strip():
            if symbol not in '+-*^()':
                raise ParseError('unexpected character {0!r} in {1!r}'.format(symbol, text))
            tokens.append((symbol, symbol))
    return tokens


class _Parser(object):
    """Recursive descent over +, -, *, ^ and parentheses, evaluating into FqPoly"""
    def __init__(self, text, field, var):
        self.text = text
        self.field = field
        self.var = var
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def take(self, kind=None):
        if self.pos >= len(self.tokens):
            raise ParseError('unexpected end of {0!r}'.format(self.text))
        token = self.tokens[self.pos]
        if kind is not None and token[0] != kind:
            raise ParseError('expected {0!r} in {1!r}'.format(kind, self.text))
        self.pos += 1
        return token

    def parse(self):
        if not self.tokens:
            raise ParseError('empty polynomial text')
        value = self.expr()
        if self.pos != len(self.tokens):
            raise ParseError('trailing input in {0!r}'.format(self.text))
        return value

    def expr(self):
        sign = 1
        if self.peek() in ('+', '-'):
            sign = -1 if self.take()[0] == '-' else 1
        value = self.term()
        value = -value if sign < 0 else value
        while self.peek() in ('+', '-'):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == '+' else value - rhs
        return value

    def term(self):
        value = self.power()
        while self.peek() == '*':
            self.take()
            value = value * self.power()
        return value

    def power(self):
        value = self.atom()
        if self.peek() == '^':
            self.take()
            value = value ** self.take('int')[1]
        return value

    def atom(self):
        kind, value = self.take()
        if kind == 'int':
            return FqPoly(self.field, (value,), self.var)
        if kind == '(':
            inner = self.expr()
            self.take(')')
            return inner
        if kind == 'name':
            if value == self.var:
                return FqPoly.x(self.field, self.var)
            for field in self.field.chain:
                if field.base is not None and field.var == value:
                    return FqPoly(self.field, (self.field.embed(field.gen),), self.var)
        raise ParseError('unexpected token {0!r} in {1!r}'.format(value, self.text))


def parse_poly(text, field, var=POLY_VARIABLE):
    """Parses canonical polynomial text (spaces allowed), e.g. ``T^3+(w+1)*T+2``

    :Parameters:
        text : str
            the polynomial
        field : :class:`FiniteField`
            the coefficient field
        var : str
            the polynomial variable (default: T)

    :rtype: :class:`FqPoly`
    """
    return _Parser(text, field, var).parse()


def parse_element(text, field):
    """Parses a field element written as a polynomial in the generator letters"""
    poly = _Parser(text, field, None).parse()
    if poly.degree() > 0:
        raise ParseError('{0!r} is not a field element'.format(text))
    return poly.coefficient(0)


def valuation(f, l):
    """Multiplicity of the prime l in the nonzero polynomial f

    :rtype: int
    """
    if not f:
        raise ZeroPolynomialError('valuation of the zero polynomial is infinite')
    gen = l.gen if isinstance(l, PrimeOfA) else l
    v = 0
    quo, rem = divmod(f, gen)
    while not rem:
        v += 1
        f = quo
        quo, rem = divmod(f, gen)
    return v


def squarefree_decomposition(f):
    """Monic squarefree factors with multiplicities, for monic f of positive degree

    :rtype: list of (FqPoly, int)
    """
    if f.degree() < 1:
        return []
    factors, multiplicities = f._galois().square_free_factors()
    return [(f._wrap(g), int(e)) for g, e in zip(factors, multiplicities)]


def distinct_degree(f):
    """Splits a monic squarefree f into products of irreducibles of equal degree

    :rtype: list of (FqPoly, int)
    """
    if f.degree() < 1:
        return []
    factors, degrees = f._galois().distinct_degree_factors()
    return [(f._wrap(g), int(d)) for g, d in zip(factors, degrees)]


def equal_degree(f, d, rng):
    """Irreducible factors of a monic squarefree f whose factors all have degree d, splitting
    at random polynomials drawn from rng
    """
    return [f._wrap(g) for g in _split(f._galois(), d, rng)]


def factor(f, seed=DEFAULT_SEED):
    """Factors f into monic irreducibles

    :Parameters:
        f : :class:`FqPoly`
            a nonzero polynomial
        seed : int
            seed of the equal-degree splitting

    :return: the leading coefficient and (factor, multiplicity) pairs in canonical order
    :rtype: tuple
    """
    lead = f.leading()
    f = f.monic()
    rng = random.Random(seed)
    factors = []
    for part, e in squarefree_decomposition(f):
        for block, d in distinct_degree(part):
            for g in equal_degree(block, d, rng):
                factors.append((g, e))
    factors.sort(key=lambda pair: (pair[0].sort_key(), pair[1]))
    return lead, factors


def is_irreducible(f):
    n = f.degree()
    if n == NEG_INF or n < 1:
        return False
    if n == 1:
        return True
    return bool(f.monic()._galois().is_irreducible())


def roots(f, seed=DEFAULT_SEED):
    """Distinct roots of f in its coefficient field, in index order

    :rtype: list of :class:`FqElem`
    """
    if not f:
        raise ZeroPolynomialError('every element is a root of the zero polynomial')
    if f.degree() < 1:
        return []
    linear = _linear_part(f.monic()._galois())
    if linear.degree < 1:
        return []
    found = [FqElem(f.field, int(-g.coeffs[-1]))
             for g in _split(linear, 1, random.Random(seed))]
    return sorted(found, key=lambda a: a.index)


@memoize
def _extension(field, degree):
    for gen in _monic_polys(field, degree):
        if is_irreducible(gen):
            return ExtensionField(field, gen, EXTENSION_LETTER)


def _decode(field, code, m):
    digits = []
    for _ in range(m):
        code, d = divmod(code, field.order)
        digits.append(FqElem(field, field._from_index(d)))
    return digits


def _monic_polys(field, m, var=POLY_VARIABLE):
    """Monic polynomials of degree m in canonical order"""
    for code in range(field.order ** m):
        yield FqPoly._raw(field, _decode(field, code, m) + [field.one], var)


@memoize
def _irreducible_raws(field, n):
    """Raw coefficient tuples, constant term first and leading 1 omitted, of the monic
    irreducibles of degree n: the minimal polynomials of the Frobenius orbits of size n in
    F_(q^n), in canonical order
    """
    q = field.order
    ext = field.extension(n)
    gf = ext.gf
    values = np.arange(ext.order, dtype=np.int64)
    frob = gf(values) ** q
    frob = np.asarray(frob.view(np.ndarray), dtype=np.int64)

    proper = np.zeros(ext.order, dtype=bool)
    for ell in factorint(n):
        image = values
        for _ in range(n // ell):
            image = frob[image]
        proper |= image == values
    least, image = values.copy(), values
    for _ in range(n - 1):
        image = frob[image]
        least = np.minimum(least, image)
    conjugate = values[(least == values) & ~proper]

    coeffs = gf.Zeros((len(conjugate), n + 1))
    coeffs[:, 0] = 1
    for _ in range(n):
        root = gf(conjugate)[:, np.newaxis]
        shifted = gf.Zeros(coeffs.shape)
        shifted[:, 1:] = coeffs[:, :-1]
        coeffs = shifted - coeffs * root
        conjugate = frob[conjugate]

    table = coeffs.view(np.ndarray)[:, :n].tolist()
    if ext is not field:
        back = {ext._embed_raw(b): b for b in range(field.order)}
        table = [[back[a] for a in row] for row in table]
    rows = [tuple(int(a) for a in row) for row in table]
    rows.sort(key=lambda row: tuple(field._index(a) for a in reversed(row)))
    log.debug('%d irreducibles of degree %d over %s', len(rows), n, field)
    return rows


def enumerate_irreducibles(field, n, var=POLY_VARIABLE):
    """Monic irreducible polynomials of degree n in canonical order

    :rtype: generator of :class:`FqPoly`
    """
    if n < 1:
        raise ValueError('degree must be positive: {0}'.format(n))
    for row in _irreducible_raws(field, n):
        yield FqPoly._raw(field, [FqElem(field, a) for a in row] + [field.one], var)


class PrimeOfA(object):
    """A finite prime of A = F_q[T], given by its monic irreducible generator"""
    def __init__(self, gen, check=True):
        if check and not (gen.is_monic() and is_irreducible(gen)):
            raise ValueError('{0} is not a monic irreducible polynomial'.format(gen))
        self.gen = gen
        self.field = gen.field
        self.degree = gen.degree()
        self._residue_field = None

    def __reduce__(self):
        return PrimeOfA, (self.gen, False)

    @classmethod
    def parse(cls, text, field):
        return cls(parse_poly(text, field))

    @property
    def q_l(self):
        """Size of the residue field"""
        return self.field.order ** self.degree

    @property
    def is_T(self):
        return self.degree == 1 and not self.gen.coeffs[0]

    @property
    def residue_field(self):
        """k_l = F_q[T]/(l)"""
        if self._residue_field is None:
            self._residue_field = ExtensionField(self.field, self.gen, self.gen.var)
        return self._residue_field

    def reduce(self, a):
        """Image of a in the residue field"""
        rem = a % self.gen
        return self.residue_field.from_coordinates(
            [rem.coefficient(i) for i in range(self.degree)])

    def valuation(self, a):
        return valuation(a, self.gen)

    def __eq__(self, other):
        return isinstance(other, PrimeOfA) and self.gen == other.gen

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.gen)

    def sort_key(self):
        return self.gen.sort_key()

    def __str__(self):
        return str(self.gen)

    def __repr__(self):
        return 'PrimeOfA({0!r})'.format(str(self.gen))


def primes_up_to(field, max_degree):
    """All primes of A of degree <= max_degree in canonical order

    :rtype: list of :class:`PrimeOfA`
    """
    return [PrimeOfA(gen, check=False)
            for d in range(1, max_degree + 1)
            for gen in enumerate_irreducibles(field, d)]
