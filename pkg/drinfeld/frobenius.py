"""
:summary: Torsion bases and Frobenius actions at primes of good reduction

:license: Apache License, Version 2.0
"""
__docformat__ = "restructuredtext en"

import logging

from .defaults import MAX_SPLITTING_DEGREE, CHARPOLY_VARIABLE, DEFAULT_SEED
from .exceptions import (
    BadReduction,
    ConsistencyFailure,
    SingularSystem,
    SplittingFieldTooLarge,
    )
from .gfq import FqPoly, PrimeOfA, primes_up_to, roots
from .linalg import (
    charpoly,
    columns_to_matrix,
    determinant,
    kernel,
    rank,
    solve,
    vectors,
    )
from .tau import TauPoly
from .util import ordered_map

log = logging.getLogger(__name__)


def splitting_degree(f, q, d, cap=MAX_SPLITTING_DEGREE):
    """Least m <= cap such that the separable f over k_P splits over F_(q^(dm)), found by
    iterating x -> x^q modulo f until x^(q^(dm)) = x mod f.

    :raises SplittingFieldTooLarge: when m would exceed cap
    """
    x = FqPoly.x(f.field, f.var)
    h = x
    for j in range(1, d * cap + 1):
        h = h.frobenius(q) % f
        if j % d == 0 and h == x:
            return j // d
    raise SplittingFieldTooLarge(
        'torsion polynomial of degree {0} does not split in degree {1} over k_P'.format(
            f.degree(), cap))


class _Coordinates(object):
    """F_q-coordinates of an extension field that may be F_q itself"""
    def __init__(self, ext, field):
        self.ext = ext
        self.field = field
        self.dim = 1 if ext == field else ext.n

    def basis(self):
        if self.dim == 1:
            return [self.ext.one]
        return [self.ext.from_coordinates([self.field.one if i == j else self.field.zero
                                           for i in range(self.dim)])
                for j in range(self.dim)]

    def of(self, x):
        if self.dim == 1:
            return [x]
        return self.ext.coordinates(x)

    def element(self, v):
        if self.dim == 1:
            return v[0]
        return self.ext.from_coordinates(v)


class TorsionBasis(object):
    """A basis of phi[T^k] over A/(T^k), realised inside F_(q^(dm))

    :Ivariables:
        phi : :class:`~drinfeld.module.DrinfeldModule`
        prime : :class:`~drinfeld.gfq.PrimeOfA`
        level : int
            k
        ext_degree : int
            m, so the points live in F_(q^(dm))
        field : :class:`~drinfeld.gfq.FiniteField`
            F_(q^(dm))
        basis : list
            b_1..b_r
        fq_basis : list
            the F_q-basis ordered b_1, T b_1, ..., b_r, T b_r (level 2) or b_1..b_r (level 1)
    """
    def __init__(self, phi, prime, level, ext_degree, field, basis, fq_basis, embed, phi_T):
        self.phi = phi
        self.prime = prime
        self.level = level
        self.ext_degree = ext_degree
        self.field = field
        self.basis = basis
        self.fq_basis = fq_basis
        self.embed = embed
        self.phi_T = phi_T
        self._coords = _Coordinates(field, phi.field)
        self._matrix = columns_to_matrix([self._coords.of(b) for b in fq_basis])

    @property
    def points(self):
        return self.basis

    def act_T(self, x):
        """phi_T(x) for x in F_(q^(dm))"""
        return self.phi_T(x, self.field)

    def coordinates(self, x):
        """F_q-coordinates of a point of phi[T^k] in fq_basis"""
        return solve(self._matrix, self._coords.of(x), self.phi.field)


def torsion_basis(phi, prime, level=1, cap=MAX_SPLITTING_DEGREE, seed=DEFAULT_SEED):
    """Computes a basis of phi[T^level] over the prime P of good reduction

    :Parameters:
        phi : :class:`~drinfeld.module.DrinfeldModule`
            the module
        prime : :class:`~drinfeld.gfq.PrimeOfA` | str
            a prime with P != (T) and P not dividing g_r
        level : int
            1 or 2
        cap : int
            largest extension degree m tried
        seed : int
            seed of the root finding that picks the image of T mod P

    :rtype: :class:`TorsionBasis`
    :raises BadReduction: at (T) or at primes dividing g_r
    :raises SplittingFieldTooLarge: when the points need m > cap
    """
    if level not in (1, 2):
        raise ValueError('level must be 1 or 2: {0}'.format(level))
    if not isinstance(prime, PrimeOfA):
        prime = PrimeOfA(phi.ring(prime))
    if not phi.is_good_at(prime):
        raise BadReduction('{0} is not a prime of good reduction away from (T)'.format(prime))
    field, q, r, d = phi.field, phi.q, phi.r, prime.degree

    reduced = phi.reduced(prime)
    phi_Tk = reduced.phi_T_power(level)
    f = phi_Tk.to_commutative().dense()
    m = splitting_degree(f, q, d, cap)

    ext = field.extension(d * m)
    theta = roots(prime.gen.lift(ext), seed)[0]
    theta_powers = [ext.one]
    for _ in range(1, d):
        theta_powers.append(theta_powers[-1] * theta)

    def embed(c):
        total = ext.zero
        for coeff, power in zip(c.field.coordinates(c), theta_powers):
            total = total + coeff * power
        return total

    L = phi_Tk.map(embed, ext)
    phi_T = reduced.phi_T.map(embed, ext)
    coords = _Coordinates(ext, field)
    images = [coords.of(L(e, ext)) for e in coords.basis()]
    null = kernel(columns_to_matrix(images), field)
    if len(null) != r * level:
        raise ConsistencyFailure(
            'phi[T^{0}] has F_q-dimension {1}, expected {2}'.format(level, len(null), r * level))
    points = [coords.element(v) for v in null]
    log.debug('phi[T^%d] at %s splits over F_(q^%d)', level, prime, d * m)

    if level == 1:
        basis, fq_basis = points, points
    else:
        basis, fq_basis = _level_two_basis(points, phi_T, ext, field, r)
    return TorsionBasis(phi, prime, level, m, ext, basis, fq_basis, embed, phi_T)


def _level_two_basis(points, phi_T, ext, field, r):
    """Greedy choice of b_1..b_r with {b_i, phi_T b_i} independent, scanning phi[T^2] in
    lexicographic coordinate order
    """
    coords = _Coordinates(ext, field)
    frame = columns_to_matrix([coords.of(p) for p in points])
    action = columns_to_matrix([solve(frame, coords.of(phi_T(p, ext)), field) for p in points])

    def act(v):
        return [sum((a * x for a, x in zip(row, v)), field.zero) for row in action]

    chosen = []
    for v in vectors(field, len(points)):
        if not any(v):
            continue
        trial = chosen + [v, act(v)]
        if rank(trial, field) == len(trial):
            chosen = trial
            if len(chosen) == 2 * r:
                break

    def element(v):
        total = ext.zero
        for c, p in zip(v, points):
            total = total + c * p
        return total

    fq_basis = [element(v) for v in chosen]
    return fq_basis[0::2], fq_basis


def frobenius_matrix(tb):
    """Matrix of x -> x^(q^d) on phi[T^k] in the basis of tb; column j is the image of b_j.
    Level-1 entries lie in F_q, level-2 entries are alpha + beta T in A/(T^2).

    :rtype: list of lists
    """
    field = tb.phi.field
    exponent = tb.phi.q ** tb.prime.degree
    columns = [tb.coordinates(b ** exponent) for b in tb.basis]
    if tb.level == 1:
        return columns_to_matrix(columns)
    r = len(tb.basis)
    return [[FqPoly(field, (columns[j][2 * i], columns[j][2 * i + 1]))
             for j in range(r)] for i in range(r)]


class FrobCharPoly(object):
    """X^r + c_{r-1} X^(r-1) + ... + c_0 with c_i in A, the characteristic polynomial of the
    Frobenius endomorphism tau^d of phi mod P
    """
    def __init__(self, prime, coeffs):
        self.prime = prime
        self.coeffs = coeffs

    @property
    def r(self):
        return len(self.coeffs)

    def mod_T(self, var=CHARPOLY_VARIABLE):
        """The reduction X^r + sum c_i(0) X^i over F_q"""
        field = self.coeffs[0].field
        return FqPoly(field, [c.coefficient(0) for c in self.coeffs] + [field.one], var)

    def __str__(self):
        parts = ['X^{0}'.format(self.r)]
        for i in range(self.r - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            monomial = '' if i == 0 else ('*X' if i == 1 else '*X^{0}'.format(i))
            parts.append('({0}){1}'.format(c, monomial))
        return '+'.join(parts)

    def __repr__(self):
        return 'FrobCharPoly({0!r})'.format(str(self))


def _flatten(tau_poly, size, kP):
    values = []
    for i in range(size):
        values.extend(kP.coordinates(tau_poly.coefficient(i)))
    return values


def frob_charpoly(phi, prime):
    """Solves tau^(rd) + sum phi_{c_i} tau^(id) = 0 in k_P{tau} for c_i in A with
    deg c_i <= ceil((r-i)d/r)

    :rtype: :class:`FrobCharPoly`
    :raises BadReduction: at primes that are not of good reduction
    :raises SingularSystem: when the solution is not unique
    """
    if not isinstance(prime, PrimeOfA):
        prime = PrimeOfA(phi.ring(prime))
    if not phi.is_good_at(prime):
        raise BadReduction('{0} is not a prime of good reduction away from (T)'.format(prime))
    field, r, d = phi.field, phi.r, prime.degree
    reduced = phi.reduced(prime)
    kP = prime.residue_field

    bounds = [-(-(r - i) * d // r) for i in range(r)]
    size = max([r * d] + [r * bounds[i] + i * d for i in range(r)]) + 1
    columns, labels = [], []
    for i in range(r):
        for j in range(bounds[i] + 1):
            shifted = TauPoly._raw([kP.zero] * (i * d) + list(reduced.phi_T_power(j).coeffs),
                                   kP, phi.q)
            columns.append(_flatten(shifted, size, kP))
            labels.append((i, j))
    rhs = [-x for x in _flatten(TauPoly.tau(kP, phi.q, r * d), size, kP)]
    solution = solve(columns_to_matrix(columns), rhs, field)

    coeffs = [[field.zero] * (bounds[i] + 1) for i in range(r)]
    for (i, j), value in zip(labels, solution):
        coeffs[i][j] = value
    return FrobCharPoly(prime, [FqPoly(field, c) for c in coeffs])


def psi_frobenius_scalar(phi, prime, seed=DEFAULT_SEED):
    """Frobenius at P acting on psi[T] for the determinant module psi

    :rtype: :class:`~drinfeld.gfq.FqElem`
    """
    psi = phi.det_module()
    tb = torsion_basis(psi, prime, 1, seed=seed)
    return frobenius_matrix(tb)[0][0]


class FrobSample(object):
    """Frobenius data at one prime

    :Ivariables:
        prime : :class:`~drinfeld.gfq.PrimeOfA`
        d : int
            deg P
        matrix_modT : list of lists | None
            Frobenius on phi[T], None when only the characteristic polynomial is known
        matrix_modT2 : list of lists | None
            Frobenius on phi[T^2], None when not computed
        charpoly_modT : :class:`~drinfeld.gfq.FqPoly`
        det_modT : :class:`~drinfeld.gfq.FqElem`
        ext_degree : int | None
            m of the level used for matrix_modT
    """
    def __init__(self, prime, matrix_modT, matrix_modT2=None, ext_degree=None,
                 charpoly_modT=None):
        self.prime = prime
        self.d = prime.degree
        self.matrix_modT = matrix_modT
        self.matrix_modT2 = matrix_modT2
        self.ext_degree = ext_degree
        if matrix_modT is not None:
            self.charpoly_modT = charpoly(matrix_modT, matrix_modT[0][0].field)
            self.det_modT = determinant(matrix_modT)
        elif charpoly_modT is not None:
            self.charpoly_modT = charpoly_modT
            r = charpoly_modT.degree()
            self.det_modT = charpoly_modT.coefficient(0) * (-1) ** r
        else:
            raise ValueError('a sample needs a Frobenius matrix or its characteristic polynomial')

    @classmethod
    def from_charpoly(cls, prime, frob):
        """A sample carrying only the reduction mod T of a :class:`FrobCharPoly`"""
        return cls(prime, None, charpoly_modT=frob.mod_T())

    @property
    def trace_modT(self):
        r = self.charpoly_modT.degree()
        return -self.charpoly_modT.coefficient(r - 1)

    def __repr__(self):
        return 'FrobSample(prime={0}, charpoly={1})'.format(self.prime, self.charpoly_modT)


def frob_sample(phi, prime, levels=(1,), seed=DEFAULT_SEED):
    """Frobenius at one prime of good reduction; level 2 falls back to level 1 when its
    splitting field is too large

    :rtype: :class:`FrobSample`
    :raises SplittingFieldTooLarge: when even phi[T] needs m > the maximal splitting degree
    """
    if not isinstance(prime, PrimeOfA):
        prime = PrimeOfA(phi.ring(prime))
    if 2 in levels:
        try:
            tb = torsion_basis(phi, prime, 2, seed=seed)
        except SplittingFieldTooLarge as e:
            log.info('level 2 at %s skipped: %s', prime, e)
        else:
            m2 = frobenius_matrix(tb)
            m1 = [[entry.coefficient(0) for entry in row] for row in m2]
            return FrobSample(prime, m1, m2, tb.ext_degree)
    tb = torsion_basis(phi, prime, 1, seed=seed)
    return FrobSample(prime, frobenius_matrix(tb), None, tb.ext_degree)


def _sample_worker(args):
    phi, prime, levels, seed = args
    try:
        return frob_sample(phi, prime, levels, seed)
    except SplittingFieldTooLarge as e:
        log.info('torsion at %s is out of reach (%s); sampling the characteristic polynomial',
                 prime, e)
    try:
        return FrobSample.from_charpoly(prime, frob_charpoly(phi, prime))
    except SingularSystem as e:
        log.warning('no sample at %s: %s', prime, e)
        return None


def good_primes(phi, max_degree):
    """Primes P != (T) of degree <= max_degree not dividing g_r, in canonical order"""
    return [P for P in primes_up_to(phi.field, max_degree) if phi.is_good_at(P)]


def sample_primes(phi, max_degree, threads=1, levels=(1,), seed=DEFAULT_SEED):
    """Frobenius samples at every good prime of degree <= max_degree, in canonical prime order.
    Where the torsion needs more than the maximal splitting degree the sample carries the
    characteristic polynomial of Frobenius reduced mod T, without a matrix.

    :rtype: list of :class:`FrobSample`
    """
    primes = good_primes(phi, max_degree)
    log.info('sampling Frobenius at %d primes of degree <= %d', len(primes), max_degree)
    work = [(phi, P, tuple(levels), seed) for P in primes]
    results = ordered_map(_sample_worker, work, threads)
    return [s for s in results if s is not None]
