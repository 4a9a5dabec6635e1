"""
:summary: Drinfeld modules over A = F_q[T] given by phi_T = T + g_1 tau + ... + g_r tau^r

:license: Apache License, Version 2.0
"""
__docformat__ = "restructuredtext en"

import json

from .defaults import FIELD_MODULI, ReductionClass
from .exceptions import (
    DrinfeldError,
    InvalidModuleDescriptor,
    ZeroPolynomialError,
    )
from .gfq import FqPoly, FiniteField, PolyRing, PrimeOfA, field_for
from .tau import TauPoly


class ReductionInfo(object):
    """How phi reduces at a prime P

    :Ivariables:
        prime : :class:`~drinfeld.gfq.PrimeOfA`
        reduction_rank : int
            max{i : v_P(g_i) = 0}, or 0 when every g_i vanishes at P
        cls : str
            a :data:`~drinfeld.defaults.ReductionClass` value
        integral : bool
            always True, the coefficients lie in A
    """
    def __init__(self, prime, reduction_rank, cls, integral=True):
        self.prime = prime
        self.reduction_rank = reduction_rank
        self.cls = cls
        self.integral = integral

    def __repr__(self):
        return 'ReductionInfo(prime={0}, reduction_rank={1}, cls={2})'.format(
            self.prime, self.reduction_rank, self.cls)


class ReducedModule(object):
    """phi reduced modulo P, a Drinfeld module over k_P = A/P of rank reduction_rank"""
    def __init__(self, prime, phi_T):
        self.prime = prime
        self.field = prime.residue_field
        self.q = phi_T.q
        self.phi_T = phi_T
        self._powers = [TauPoly._raw([self.field.one], self.field, self.q), phi_T]

    @property
    def rank(self):
        return self.phi_T.degree()

    @property
    def gamma(self):
        """Image of T in k_P"""
        return self.phi_T.coefficient(0)

    def phi_T_power(self, k):
        while len(self._powers) <= k:
            self._powers.append(self._powers[-1] * self.phi_T)
        return self._powers[k]

    def phi(self, a):
        """phi_a over k_P for a in A"""
        result = TauPoly._raw([], self.field, self.q)
        for i, c in enumerate(a.coeffs):
            if c:
                result = result + self.phi_T_power(i) * self.field.embed(c)
        return result

    def torsion_poly(self, a):
        """Dense phi_a(x) over k_P"""
        return self.phi(a).to_commutative().dense()


class DrinfeldModule(object):
    """A rank-r Drinfeld module phi over A = F_q[T] with generic characteristic

    :Parameters:
        field : :class:`~drinfeld.gfq.FiniteField` | int
            the constant field F_q, or the supported q
        g : sequence
            the coefficients g_1..g_r as :class:`~drinfeld.gfq.FqPoly` or canonical text
    """
    def __init__(self, field, g):
        if isinstance(field, int):
            field = field_for(field)
        if not isinstance(field, FiniteField):
            raise InvalidModuleDescriptor('not a finite field: {0!r}'.format(field))
        self.field = field
        self.q = field.order
        self.ring = PolyRing(field)
        try:
            self.g = tuple(self.ring(c) for c in g)
        except DrinfeldError as e:
            raise InvalidModuleDescriptor('bad coefficient: {0}'.format(e))
        if not self.g:
            raise InvalidModuleDescriptor('rank must be at least 1')
        if not self.g[-1]:
            raise InvalidModuleDescriptor('leading coefficient g_r must be nonzero')
        self.phi_T = TauPoly([self.ring.gen] + list(self.g), self.ring, self.q)
        self._powers = [TauPoly._raw([self.ring.one], self.ring, self.q), self.phi_T]

    @property
    def r(self):
        return len(self.g)

    @classmethod
    def from_descriptor(cls, descriptor):
        """Builds a module from ``{"q": 3, "r": 2, "g": ["1", "T+1"]}`` given as a dict or JSON text

        :raises InvalidModuleDescriptor: on malformed input or a violated invariant
        """
        if isinstance(descriptor, str):
            try:
                descriptor = json.loads(descriptor)
            except ValueError as e:
                raise InvalidModuleDescriptor('descriptor is not JSON: {0}'.format(e))
        if not isinstance(descriptor, dict):
            raise InvalidModuleDescriptor('descriptor must be an object')
        missing = [key for key in ('q', 'g') if key not in descriptor]
        if missing:
            raise InvalidModuleDescriptor('descriptor lacks {0}'.format(', '.join(missing)))
        q, g = descriptor['q'], descriptor['g']
        if not isinstance(q, int) or q not in FIELD_MODULI:
            raise InvalidModuleDescriptor(
                'unsupported q={0}; choose from {1}'.format(q, sorted(FIELD_MODULI)))
        if not isinstance(g, list) or not all(isinstance(c, (str, int)) for c in g):
            raise InvalidModuleDescriptor('g must be a list of polynomial strings')
        r = descriptor.get('r', len(g))
        if r != len(g):
            raise InvalidModuleDescriptor('r={0} but {1} coefficients given'.format(r, len(g)))
        return cls(field_for(q), [str(c) for c in g])

    def to_descriptor(self):
        return {'q': self.q, 'r': self.r, 'g': [str(c) for c in self.g]}

    def descriptor_json(self):
        return json.dumps(self.to_descriptor(), sort_keys=True)

    def phi_T_power(self, k):
        while len(self._powers) <= k:
            self._powers.append(self._powers[-1] * self.phi_T)
        return self._powers[k]

    def phi(self, a):
        """phi_a = sum(a_i phi_T^i), the image of a in A{tau}

        :rtype: :class:`~drinfeld.tau.TauPoly`
        """
        a = self.ring(a)
        result = TauPoly._raw([], self.ring, self.q)
        for i, c in enumerate(a.coeffs):
            if c:
                result = result + self.phi_T_power(i) * FqPoly(self.field, (c,))
        return result

    def torsion_poly(self, a):
        """The commutative polynomial phi_a(x) of x-degree q^(r deg a)

        :rtype: :class:`~drinfeld.tau.LinearizedPoly`
        """
        a = self.ring(a)
        if not a:
            raise ZeroPolynomialError('phi[0] is not a finite group scheme')
        return self.phi(a).to_commutative()

    @property
    def delta(self):
        """(-1)^(r-1) g_r"""
        return self.g[-1] if self.r % 2 else -self.g[-1]

    def det_module(self):
        """The rank-one module psi_T = T + delta tau"""
        return DrinfeldModule(self.field, [self.delta])

    def _prime(self, prime):
        if isinstance(prime, PrimeOfA):
            return prime
        return PrimeOfA(self.ring(prime))

    def reduce_at(self, prime):
        """Classifies the reduction of phi at a prime

        :rtype: :class:`ReductionInfo`
        """
        prime = self._prime(prime)
        rank = 0
        for i, c in enumerate(self.g, 1):
            if c % prime.gen:
                rank = i
        if rank == self.r:
            cls = ReductionClass.GOOD
        elif rank >= 1:
            cls = ReductionClass.STABLE
        else:
            cls = ReductionClass.UNCLASSIFIED
        return ReductionInfo(prime, rank, cls)

    def is_good_at(self, prime):
        """Good reduction away from the characteristic (T)"""
        prime = self._prime(prime)
        return not prime.is_T and bool(self.g[-1] % prime.gen)

    def reduced(self, prime):
        """phi_T modulo P as a skew polynomial over k_P

        :rtype: :class:`ReducedModule`
        """
        prime = self._prime(prime)
        k = prime.residue_field
        coeffs = [prime.reduce(c) for c in (self.ring.gen,) + self.g]
        return ReducedModule(prime, TauPoly(coeffs, k, self.q))

    def __eq__(self, other):
        return isinstance(other, DrinfeldModule) and self.field == other.field and \
            self.g == other.g

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.field.key, self.g))

    def __str__(self):
        return str(self.phi_T)

    def __repr__(self):
        return 'DrinfeldModule({0})'.format(self.descriptor_json())
