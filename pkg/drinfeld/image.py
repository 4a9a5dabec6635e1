"""
:summary: Certification of surjectivity of the T-adic Galois image

The mod-T leg excludes each maximal full-determinant subgroup of GL_2(F_q) by finding a sampled
Frobenius characteristic polynomial that no element of that subgroup has.

:license: Apache License, Version 2.0
"""
__docformat__ = "restructuredtext en"

import logging
from itertools import product
from math import gcd

from .defaults import (
    Certification,
    DICKSON_FIELDS,
    MIN_CERTIFY_Q,
    ObstructionKind,
    OBSTRUCTION_ORDER,
    Verdict,
    CHARPOLY_VARIABLE,
    DEFAULT_SEED,
    POLY_VARIABLE,
    )
from .density import pi_r_membership
from .exceptions import CertificationRefused
from .frobenius import sample_primes
from .gfq import FqPoly
from .linalg import gl_order
from .newton import verify_vz_formula

log = logging.getLogger(__name__)


def quadratic(field, t, delta, var=CHARPOLY_VARIABLE):
    """x^2 - t x + delta"""
    return FqPoly(field, (delta, -t, 1), var)


class SubgroupObstruction(object):
    """A maximal full-determinant subgroup type and the charpolys its elements realise"""
    def __init__(self, kind, realized_charpolys):
        self.kind = kind
        self.realized_charpolys = frozenset(realized_charpolys)

    def excludes(self, charpoly):
        """True when no element of the subgroup has this characteristic polynomial"""
        return charpoly not in self.realized_charpolys

    def __repr__(self):
        return 'SubgroupObstruction({0}, {1} charpolys)'.format(
            self.kind, len(self.realized_charpolys))


def _s4_present(q):
    return q > 3 and q % 8 in (3, 5)


def dickson_tables(field):
    """Obstruction tables of GL_2(F_q) in certification order; the A4 and A5 types never have
    full determinant and S4 only does for q = +-3 mod 8, q > 3

    :rtype: list of :class:`SubgroupObstruction`
    """
    q = field.order
    rules = {
        ObstructionKind.BOREL: lambda t, delta, disc: disc.is_square(),
        ObstructionKind.SPLIT_CARTAN: lambda t, delta, disc: disc.is_square() or not t,
        ObstructionKind.NONSPLIT_CARTAN:
            lambda t, delta, disc: not disc.is_square() or not disc or not t,
        ObstructionKind.EXCEPTIONAL_A4: lambda t, delta, disc: False,
        ObstructionKind.EXCEPTIONAL_S4:
            lambda t, delta, disc: _s4_present(q) and (
                not disc or not t or t * t == delta or t * t == 2 * delta),
        ObstructionKind.EXCEPTIONAL_A5: lambda t, delta, disc: False,
        }
    tables = []
    for kind in OBSTRUCTION_ORDER:
        rule = rules[kind]
        realized = [quadratic(field, t, delta)
                    for t, delta in product(field.elements(), field.nonzero_elements())
                    if rule(t, delta, t * t - 4 * delta)]
        tables.append(SubgroupObstruction(kind, realized))
    return tables


class CertificationResult(object):
    """State of one certification leg

    :Ivariables:
        state : str
            a :data:`~drinfeld.defaults.Certification` value
        unexcluded : list of str
            obstruction kinds no sample rules out
        witnesses : dict
            kind -> prime whose Frobenius excludes it
        reason : str | None
        report : object | None
            supporting data, e.g. a :class:`~drinfeld.newton.VzReport`
    """
    def __init__(self, state, unexcluded=None, witnesses=None, reason=None, report=None,
                 witness=None):
        self.state = state
        self.unexcluded = unexcluded or []
        self.witnesses = witnesses or {}
        self.reason = reason
        self.report = report
        self.witness = witness

    @property
    def certified(self):
        return self.state == Certification.CERTIFIED

    def as_dict(self):
        data = {'state': self.state}
        if self.unexcluded:
            data['unexcluded'] = list(self.unexcluded)
        if self.witnesses:
            data['witnesses'] = {kind: str(p) for kind, p in self.witnesses.items()}
        if self.reason:
            data['reason'] = self.reason
        if self.witness is not None:
            data['witness'] = str(self.witness)
        if self.report is not None and hasattr(self.report, 'as_dict'):
            data['report'] = self.report.as_dict()
        return data

    def __repr__(self):
        return 'CertificationResult({0}, unexcluded={1})'.format(self.state, self.unexcluded)


def multiplicative_order(a):
    """Order of a nonzero field element"""
    return a.multiplicative_order()


def generates_units(elements, field):
    """Whether the elements generate the cyclic group F_q^x"""
    target = field.order - 1
    order = 1
    for a in elements:
        if not a:
            continue
        k = multiplicative_order(a)
        order = order * k // gcd(order, k)
        if order == target:
            return True
    return order == target


def certify_det(samples, field):
    """Certified when the sampled determinants generate F_q^x

    :rtype: :class:`CertificationResult`
    """
    if generates_units([s.det_modT for s in samples], field):
        return CertificationResult(Certification.CERTIFIED)
    return CertificationResult(Certification.UNKNOWN,
                               reason='sampled determinants do not generate F_q^x')


def certify_modT(samples, field, r=2):
    """Certified when the determinants are onto and every obstruction table is escaped by some
    sampled charpoly. Ranks other than 2 have no tables and stay unknown.

    :rtype: :class:`CertificationResult`
    """
    if r != 2:
        return CertificationResult(Certification.UNKNOWN, reason='evidence mode only')
    if field.order not in DICKSON_FIELDS:
        return CertificationResult(
            Certification.UNKNOWN, reason='no obstruction tables for q={0}'.format(field.order))
    witnesses, unexcluded = {}, []
    for obstruction in dickson_tables(field):
        if not obstruction.realized_charpolys:
            continue
        for sample in samples:
            if obstruction.excludes(sample.charpoly_modT):
                witnesses[obstruction.kind] = sample.prime
                break
        else:
            unexcluded.append(obstruction.kind)
    det = certify_det(samples, field)
    if not det.certified:
        return CertificationResult(Certification.UNKNOWN, unexcluded, witnesses, det.reason)
    if unexcluded:
        return CertificationResult(Certification.UNKNOWN, unexcluded, witnesses,
                                   'some obstructions are not excluded')
    return CertificationResult(Certification.CERTIFIED, [], witnesses)


def certify_modT2_nonscalar(phi, seed=DEFAULT_SEED):
    """Certified when phi has a Pi_r witness; the witness's Newton slope is checked as a
    consistency condition

    :rtype: :class:`CertificationResult`
    :raises ConsistencyFailure: when the witness's Newton polygon contradicts the prediction
    """
    if phi.r < 2:
        return CertificationResult(Certification.UNKNOWN, reason='rank below 2')
    membership = pi_r_membership(phi.g, seed)
    if not membership:
        return CertificationResult(Certification.UNKNOWN, reason='no Pi_r witness')
    report = verify_vz_formula(phi, membership.witness)
    return CertificationResult(Certification.CERTIFIED, witness=membership.witness, report=report)


class ImageCertificate(object):
    """Outcome of the three-leg surjectivity test"""
    def __init__(self, phi, max_degree, samples, modT, det, modT2):
        self.phi = phi
        self.max_degree = max_degree
        self.samples = samples
        self.modT = modT
        self.det = det
        self.modT2 = modT2

    @property
    def verdict(self):
        if self.modT.certified and self.det.certified and self.modT2.certified:
            return Verdict.SURJECTIVE
        return Verdict.UNKNOWN

    @property
    def modT_surjective(self):
        return self.modT.state

    @property
    def det_surjective(self):
        return self.det.state

    @property
    def modT2_nonscalar(self):
        return self.modT2.state

    def as_dict(self):
        return {
            'module': self.phi.to_descriptor(),
            'max_prime_degree': self.max_degree,
            'samples': len(self.samples),
            'modT_surjective': self.modT.as_dict(),
            'det_surjective': self.det.as_dict(),
            'modT2_nonscalar': self.modT2.as_dict(),
            'verdict': self.verdict,
            }


def pink_rutsche_verdict(phi, max_degree, threads=1, seed=DEFAULT_SEED):
    """Runs the three certification legs over Frobenius samples at good primes of degree
    <= max_degree. Primes whose torsion is out of reach still contribute the reduction mod T
    of their Frobenius characteristic polynomial.

    :rtype: :class:`ImageCertificate`
    :raises CertificationRefused: for q < 5 or rank below 2
    """
    if phi.q < MIN_CERTIFY_Q:
        raise CertificationRefused('surjectivity verdicts need q >= {0}'.format(MIN_CERTIFY_Q))
    if phi.r < 2:
        raise CertificationRefused('surjectivity verdicts need rank at least 2')
    samples = sample_primes(phi, max_degree, threads, seed=seed)
    modT = certify_modT(samples, phi.field, phi.r)
    det = certify_det(samples, phi.field)
    modT2 = certify_modT2_nonscalar(phi, seed)
    cert = ImageCertificate(phi, max_degree, samples, modT, det, modT2)
    log.info('verdict for %s: %s', phi.descriptor_json(), cert.verdict)
    return cert


def gl2_elements(field):
    """Elements of GL_2(F_q) as (a, b, c, d) tuples of field elements, rows (a b) and (c d)"""
    elements = list(field.elements())
    for a, b, c, d in product(elements, repeat=4):
        if a * d - b * c:
            yield (a, b, c, d)


def mulclose(gens, mul, limit=None):
    """Closure of gens under mul"""
    group = set(gens)
    frontier = list(group)
    while frontier:
        fresh = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in group:
                    group.add(y)
                    fresh.append(y)
        frontier = fresh
        if limit is not None and len(group) > limit:
            break
    return group


class FiltrationShape(object):
    """Sizes in the congruence filtration G^i = Id + T^i M_r(F_q[[T]]) and of the groups
    U_n (identity in the first r-1 columns, a unit in the corner) and W = ker(U_2 -> U_1)
    """
    def __init__(self, q, r):
        self.q = q
        self.r = r

    def graded_order(self, i):
        """|G^[i]|: GL_r(F_q) for i = 0, M_r(F_q) otherwise"""
        return gl_order(self.r, self.q) if i == 0 else self.q ** (self.r * self.r)

    def u_order(self, n):
        return self.q ** (n * (self.r - 1)) * (self.q - 1) * self.q ** (n - 1)

    @property
    def w_order(self):
        return self.q ** self.r


def truncated_ring(field, n):
    """A/(T^n) as the polynomials of degree < n"""
    elements = list(field.elements())
    for digits in product(elements, repeat=n):
        yield FqPoly(field, digits, POLY_VARIABLE)


def phi_n(column, n):
    """The U_n matrix with identity in the first r-1 columns and last column
    (m_1, .., m_r), entries reduced mod T^n, as a tuple of rows
    """
    r = len(column)
    field = column[0].field
    zero, one = FqPoly(field, ()), FqPoly(field, (1,))
    rows = []
    for i in range(r):
        row = [one if i == j else zero for j in range(r - 1)]
        row.append(column[i].truncate(n))
        rows.append(tuple(row))
    return tuple(rows)


def in_u(matrix, n):
    """Whether a matrix over A/(T^n) has the U_n shape"""
    r = len(matrix)
    for i in range(r):
        for j in range(r - 1):
            expected = 1 if i == j else 0
            if matrix[i][j] != expected:
                return False
    return bool(matrix[r - 1][r - 1].coefficient(0))


def enumerate_u(field, r, n):
    """U_n as the image of Phi_n"""
    ring = list(truncated_ring(field, n))
    units = [m for m in ring if m.coefficient(0)]
    for head in product(ring, repeat=r - 1):
        for corner in units:
            yield phi_n(list(head) + [corner], n)


def enumerate_w(field, r):
    """Elements of U_2 that reduce to the identity mod T"""
    for matrix in enumerate_u(field, r, 2):
        if all(matrix[i][r - 1].coefficient(0) == (1 if i == r - 1 else 0) for i in range(r)):
            yield matrix


def is_scalar(matrix):
    r = len(matrix)
    return all(matrix[i][j] == (matrix[0][0] if i == j else 0)
               for i in range(r) for j in range(r))
