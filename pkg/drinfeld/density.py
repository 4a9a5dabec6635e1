"""
:summary: The Pi_r predicate, box sweeps and Euler-product density bounds

:license: Apache License, Version 2.0
"""
__docformat__ = "restructuredtext en"

import logging
from fractions import Fraction
from itertools import product

import mpmath

from .defaults import SWEEP_BUDGET, POLY_VARIABLE, DEFAULT_SEED
from .exceptions import BadReduction, BudgetExceeded
from .gfq import (
    FqPoly,
    PrimeOfA,
    count_irreducibles,
    factor,
    field_for,
    parse_poly,
    primes_up_to,
    valuation,
    )
from .util import memoize, ordered_map

log = logging.getLogger(__name__)


def box_count(q, r, X):
    """Number of tuples (g_1..g_r) with deg g_i < X and g_r nonzero"""
    return q ** (r * X) - q ** ((r - 1) * X)


def polys_below(field, X):
    """All polynomials of degree < X in canonical order, zero first"""
    yield FqPoly(field, ())
    elements = list(field.elements())
    for n in range(X):
        for lead in elements[1:]:
            for rest in product(elements, repeat=n):
                yield FqPoly._raw(field, list(reversed(rest)) + [lead], POLY_VARIABLE)


def enumerate_box(field, r, X):
    """Tuples (g_1..g_r) with deg g_i < X and g_r nonzero, lexicographic in canonical order

    :raises BudgetExceeded: beyond the desk-scale budget
    """
    total = box_count(field.order, r, X)
    if total > SWEEP_BUDGET:
        raise BudgetExceeded('{0} tuples exceed the budget of {1}'.format(total, SWEEP_BUDGET))
    polys = list(polys_below(field, X))
    for combo in product(polys, repeat=r):
        if combo[-1]:
            yield combo


@memoize
def pi_candidates(g_r, seed=DEFAULT_SEED):
    """Primes l != T with v_l(g_r) >= 1 not divisible by p, as (prime generator, valuation).
    Cached per g_r; :func:`density_sweep` empties the cache when it finishes.
    """
    p = g_r.field.p
    _, factors = factor(g_r, seed)
    return tuple((l, e) for l, e in factors if e % p and l.coeffs[0])


class PiMembership(object):
    """Whether a tuple lies in Pi_r, with the least witness prime in canonical order"""
    def __init__(self, member, witness=None, e=None):
        self.member = member
        self.witness = witness
        self.e = e

    def __bool__(self):
        return self.member

    __nonzero__ = __bool__

    def __repr__(self):
        return 'PiMembership(member={0}, witness={1})'.format(self.member, self.witness)


def pi_r_membership(g, seed=DEFAULT_SEED):
    """Pi_r test for (g_1..g_r): some prime l != T has v_l(g_{r-1}) = 0 and
    v_l(g_r) >= 1 with p not dividing v_l(g_r)

    :rtype: :class:`PiMembership`
    """
    g = tuple(g)
    if len(g) < 2:
        raise ValueError('Pi_r is defined for rank at least 2')
    g_prev, g_r = g[-2], g[-1]
    witnesses = [(l, e) for l, e in pi_candidates(g_r, seed) if g_prev % l]
    if not witnesses:
        return PiMembership(False)
    l, e = min(witnesses, key=lambda pair: pair[0].sort_key())
    return PiMembership(True, PrimeOfA(l, check=False), e)


def in_omega(g, primes, corrected=False):
    """Membership of (g_1..g_r) in Omega^S, or in the corrected Omega'^S that also admits
    v_l(g_{r-1}) > 0
    """
    p = g[-1].field.p
    for l in primes:
        v = valuation(g[-1], l.gen)
        if v == 0 or v >= p:
            continue
        if corrected and not g[-2] % l.gen:
            continue
        return False
    return True


def omega_S_density(primes, p):
    """prod over l in S of (1 - 1/q_l + 1/q_l^p)

    :rtype: Fraction
    :raises BadReduction: when (T) is in S
    """
    density = Fraction(1)
    for l in primes:
        if l.is_T:
            raise BadReduction('(T) cannot be among the primes of Omega^S')
        density *= 1 - Fraction(1, l.q_l) + Fraction(1, l.q_l ** p)
    return density


def omega_local_count(prime, r, p):
    """Residue tuples mod l^p with v_l(g_r) = 0 or v_l(g_r) >= p, counted exhaustively

    :return: (count, total)
    :rtype: tuple
    """
    field = prime.field
    modulus = prime.gen ** p
    good = 0
    for residue in polys_below(field, modulus.degree()):
        if not residue or residue % prime.gen:
            good += 1
    per_coefficient = prime.q_l ** p
    return good * per_coefficient ** (r - 1), per_coefficient ** r


class DensityRow(object):
    """Exact counts over the box of height X"""
    def __init__(self, X, total, pi_count, omega_count, omega_corrected_count):
        self.X = X
        self.total = total
        self.pi_count = pi_count
        self.omega_count = omega_count
        self.omega_corrected_count = omega_corrected_count

    @property
    def pi_ratio(self):
        return Fraction(self.pi_count, self.total)

    @property
    def complement_count(self):
        return self.total - self.pi_count


def _shard_worker(args):
    """Counts over the tuples sharing one g_r"""
    q, r, X, g_r_text, seed = args
    field = field_for(q)
    g_r = parse_poly(g_r_text, field)
    S = [l for l in primes_up_to(field, 1) if not l.is_T]
    free = q ** (X * (r - 2))
    candidates = pi_candidates(g_r, seed)
    pi = omega = omega_corrected = 0
    literal = in_omega((g_r,), S)
    for g_prev in polys_below(field, X):
        if any(g_prev % l for l, _ in candidates):
            pi += free
        if literal:
            omega += free
        if in_omega((g_prev, g_r), S, corrected=True):
            omega_corrected += free
    return pi, omega, omega_corrected


def density_sweep(q, r, X_values, threads=1, seed=DEFAULT_SEED):
    """Exact Pi_r and Omega^S counts over boxes deg g_i < X, sharded by g_r

    :Parameters:
        q : int
            field size
        r : int
            rank, at least 2
        X_values : iterable of int
            box heights
        threads : int
            worker processes (default: 1)
        seed : int
            seed of the factorizations of g_r

    :rtype: list of :class:`DensityRow`
    """
    if r < 2:
        raise ValueError('Pi_r is defined for rank at least 2')
    field = field_for(q)
    rows = []
    try:
        for X in X_values:
            total = box_count(q, r, X)
            if total > SWEEP_BUDGET:
                raise BudgetExceeded(
                    '{0} tuples exceed the budget of {1}'.format(total, SWEEP_BUDGET))
            shards = [(q, r, X, str(g_r), seed) for g_r in polys_below(field, X) if g_r]
            counts = ordered_map(_shard_worker, shards, threads)
            pi, omega, omega_corrected = (sum(c[i] for c in counts) for i in range(3))
            log.info('X=%d: %d of %d tuples in Pi_%d', X, pi, total, r)
            rows.append(DensityRow(X, total, pi, omega, omega_corrected))
    finally:
        pi_candidates.cache.clear()
    return rows


class EulerRow(object):
    """Partial Euler product over primes of degree <= B

    :Ivariables:
        B : int
        c_B : int
            number of monic irreducibles of degree B
        partial : Fraction
            prod over n <= B of (1 - q^-n + q^-(np))^(c_n)
        log_sum : mpmath.mpf
            sum of c_n log(1 - q^-n + q^-(np))
        linear_bound : Fraction
            sum of c_n (q^-n - q^-(np)), with partial <= exp(-linear_bound)
        harmonic : Fraction
            sum of c_n q^-n
    """
    def __init__(self, B, c_B, partial, log_sum, linear_bound, harmonic):
        self.B = B
        self.c_B = c_B
        self.partial = partial
        self.log_sum = log_sum
        self.linear_bound = linear_bound
        self.harmonic = harmonic

    @property
    def partial_float(self):
        return float(self.partial)

    @property
    def exp_log_sum(self):
        return float(mpmath.exp(self.log_sum))


def euler_product_partial(q, p, max_degree):
    """Rows B = 1..max_degree of the Euler product bounding the density of the complement of Pi_r

    :rtype: list of :class:`EulerRow`
    """
    rows = []
    partial = Fraction(1)
    linear = harmonic = Fraction(0)
    log_sum = mpmath.mpf(0)
    with mpmath.workdps(40):
        for n in range(1, max_degree + 1):
            c_n = count_irreducibles(n, q)
            local = 1 - Fraction(1, q ** n) + Fraction(1, q ** (n * p))
            partial *= local ** c_n
            log_sum += c_n * mpmath.log(mpmath.mpf(local.numerator) / local.denominator)
            linear += c_n * (Fraction(1, q ** n) - Fraction(1, q ** (n * p)))
            harmonic += Fraction(c_n, q ** n)
            rows.append(EulerRow(n, c_n, partial, +log_sum, linear, harmonic))
    return rows
