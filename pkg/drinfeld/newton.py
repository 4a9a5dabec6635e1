"""
:summary: l-adic Newton polygons of phi_{T^k} and ramification checks at Pi_r witnesses

:license: Apache License, Version 2.0
"""
__docformat__ = "restructuredtext en"

import logging
from fractions import Fraction

from .exceptions import ConsistencyFailure, NotAWitness, ZeroPolynomialError
from .gfq import PrimeOfA, valuation
from .util import p_part

log = logging.getLogger(__name__)


class ValuedCoeffs(object):
    """Points (q^i, v_l(c_i)) of a skew polynomial at l, over its nonzero coefficients"""
    def __init__(self, prime, points):
        self.prime = prime
        self.points = points

    def __iter__(self):
        return iter(self.points)


def valued_coeffs(tau_poly, prime):
    """:rtype: :class:`ValuedCoeffs`"""
    if not tau_poly:
        raise ZeroPolynomialError('the zero skew polynomial has no Newton polygon')
    q = tau_poly.q
    points = [(q ** i, valuation(c, prime.gen))
              for i, c in enumerate(tau_poly.coeffs) if c]
    return ValuedCoeffs(prime, points)


class NewtonPolygon(object):
    """Lower convex hull of integer points with strictly increasing slopes

    :Ivariables:
        vertices : list of (int, int)
        segments : list of (Fraction, int)
            (slope, horizontal length) from left to right
    """
    def __init__(self, vertices):
        self.vertices = vertices
        self.segments = [(Fraction(y1 - y0, x1 - x0), x1 - x0)
                         for (x0, y0), (x1, y1) in zip(vertices, vertices[1:])]

    def slopes(self):
        return [s for s, _ in self.segments]

    def root_valuations(self):
        """(valuation, count) of the roots, one entry per segment"""
        return [(-s, length) for s, length in self.segments]

    def segment_over(self, x0, x1):
        """The segment whose horizontal extent covers [x0, x1], or None"""
        for (a, _), (b, _), seg in zip(self.vertices, self.vertices[1:], self.segments):
            if a <= x0 and x1 <= b:
                return seg
        return None

    def __repr__(self):
        return 'NewtonPolygon({0})'.format(self.vertices)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def newton_polygon(points):
    """Lower hull by a monotone chain scan; collinear interior points are dropped

    :Parameters:
        points : iterable of (int, int)
            points with distinct abscissae

    :rtype: :class:`NewtonPolygon`
    """
    hull = []
    for p in sorted(points):
        while len(hull) > 1 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    return NewtonPolygon(hull)


def witness_data(phi, prime):
    """e = v_l(g_r) for a prime l witnessing Pi_r

    :raises NotAWitness: unless l != T, v_l(g_{r-1}) = 0, v_l(g_r) >= 1 and p does not divide it
    """
    if phi.r < 2:
        raise NotAWitness('Pi_r witnesses need rank at least 2')
    if prime.is_T:
        raise NotAWitness('(T) is excluded as a witness')
    e = valuation(phi.g[-1], prime.gen)
    if e == 0 or e % phi.field.p == 0 or phi.g[-2] % prime.gen == 0:
        raise NotAWitness('{0} does not witness Pi_r: v(g_r)={1}'.format(prime, e))
    return e


class VzReport(object):
    """Outcome of comparing the Newton slope of phi_{T^2} with -e/((q-1) q^(2(r-1)))"""
    def __init__(self, prime, e, predicted, computed, polygon, ramification, required):
        self.prime = prime
        self.e = e
        self.predicted = predicted
        self.computed = computed
        self.polygon = polygon
        self.ramification = ramification
        self.required = required

    @property
    def ok(self):
        return self.computed == self.predicted and self.ramification >= self.required

    def as_dict(self):
        return {
            'prime': str(self.prime),
            'e': self.e,
            'predicted': str(self.predicted),
            'computed': None if self.computed is None else str(self.computed),
            'ramification': self.ramification,
            'vertices': [list(v) for v in self.polygon.vertices],
            'ok': self.ok,
            }


def verify_vz_formula(phi, prime):
    """Checks that a root z of phi_{T^2} outside phi[T] has v_l(z) = -e/((q-1) q^(2(r-1)))
    and that its denominator carries ramification at least q^(2(r-1))

    :Parameters:
        phi : :class:`~drinfeld.module.DrinfeldModule`
        prime : :class:`~drinfeld.gfq.PrimeOfA`
            a Pi_r witness

    :rtype: :class:`VzReport`
    :raises NotAWitness: when prime does not witness Pi_r
    :raises ConsistencyFailure: when the polygon disagrees with the prediction
    """
    if not isinstance(prime, PrimeOfA):
        prime = PrimeOfA(phi.ring(prime))
    e = witness_data(phi, prime)
    q, r = phi.q, phi.r
    left, right = q ** (2 * (r - 1)), q ** (2 * r - 1)
    predicted = Fraction(-e, (q - 1) * left)

    polygon = newton_polygon(valued_coeffs(phi.phi_T_power(2), prime))
    segment = polygon.segment_over(left, right)
    computed = None if segment is None else -segment[0]
    ramification = 0 if computed is None else p_part(computed.denominator, phi.field.p)
    report = VzReport(prime, e, predicted, computed, polygon, ramification, left)
    if not report.ok:
        raise ConsistencyFailure(
            'Newton slope at {0} is {1}, expected {2}'.format(prime, computed, predicted),
            report=report)
    log.debug('v_z at %s is %s', prime, computed)
    return report


class LongEquationReport(object):
    def __init__(self, prime, lhs, rhs):
        self.prime = prime
        self.lhs = lhs
        self.rhs = rhs

    @property
    def ok(self):
        return self.lhs == self.rhs


def check_long_equation(phi, prime, k=2):
    """The valuations of the nonzero roots of phi_{T^k} sum to v(T^k) - (1 + q^r + ...) v(g_r)

    :rtype: :class:`LongEquationReport`
    """
    if not isinstance(prime, PrimeOfA):
        prime = PrimeOfA(phi.ring(prime))
    q, r = phi.q, phi.r
    polygon = newton_polygon(valued_coeffs(phi.phi_T_power(k), prime))
    lhs = sum((v * n for v, n in polygon.root_valuations()), Fraction(0))
    norm_exponent = sum(q ** (r * j) for j in range(k))
    rhs = Fraction(k if prime.is_T else 0) - norm_exponent * valuation(phi.g[-1], prime.gen)
    return LongEquationReport(prime, lhs, rhs)


def torsion_layer_valuation(phi, prime, k):
    """-e/((q-1) q^(k(r-1))), the valuation of a root of phi_{T^k} outside phi[T^(k-1)]

    :rtype: Fraction
    """
    if not isinstance(prime, PrimeOfA):
        prime = PrimeOfA(phi.ring(prime))
    if k < 1:
        raise ValueError('layer must be positive: {0}'.format(k))
    e = witness_data(phi, prime)
    return Fraction(-e, (phi.q - 1) * phi.q ** (k * (phi.r - 1)))
