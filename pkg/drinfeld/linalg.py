"""
:summary: Dense linear algebra over finite fields on :mod:`galois` arrays

Matrices cross the API as lists of rows of :class:`~drinfeld.gfq.FqElem`; elimination,
products, inverses, determinants and characteristic polynomials run on the field's galois
array class.

:license: Apache License, Version 2.0
"""
__docformat__ = "restructuredtext en"

import logging
from itertools import product

import numpy as np

from .defaults import CHARPOLY_VARIABLE
from .exceptions import SingularSystem
from .gfq import FqElem, FqPoly

log = logging.getLogger(__name__)


def to_array(rows, field):
    """The matrix as a 2-d array of field.gf, entries coerced into field"""
    return field.gf([[field(x).raw for x in row] for row in rows])


def from_array(array, field):
    return [[FqElem(field, int(x)) for x in row] for row in array]


def _field_of(rows):
    return rows[0][0].field


def identity(n, field):
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def transpose(rows):
    return [list(col) for col in zip(*rows)]


def columns_to_matrix(columns):
    return transpose(columns)


def mat_mul(a, b):
    field = _field_of(a)
    return from_array(to_array(a, field) @ to_array(b, field), field)


def mat_vec(a, v):
    field = _field_of(a)
    return [FqElem(field, int(x)) for x in to_array(a, field) @ field.array(
        field(x).raw for x in v)]


def row_reduce(rows, field):
    """Reduced row echelon form

    :return: the reduced rows (zero rows dropped) and the pivot columns
    :rtype: tuple
    """
    if not rows:
        return [], []
    reduced = to_array(rows, field).row_reduce()
    kept, pivots = [], []
    for row in reduced:
        nonzero = np.flatnonzero(row.view(np.ndarray))
        if not nonzero.size:
            break
        kept.append(row)
        pivots.append(int(nonzero[0]))
    return from_array(kept, field), pivots


def rank(rows, field):
    if not rows:
        return 0
    return int(np.linalg.matrix_rank(to_array(rows, field)))


def kernel(rows, field):
    """Basis of {v : rows * v = 0}, one vector per free column in increasing order"""
    n = len(rows[0])
    reduced, pivots = row_reduce(rows, field)
    basis = []
    for free in range(n):
        if free in pivots:
            continue
        v = [field.zero] * n
        v[free] = field.one
        for row, pivot in zip(reduced, pivots):
            v[pivot] = -row[free]
        basis.append(v)
    return basis


def solve(rows, rhs, field):
    """The unique v with rows * v = rhs; rows need not be square

    :raises SingularSystem: when there is no solution or more than one
    """
    n = len(rows[0])
    augmented = [list(row) + [b] for row, b in zip(rows, rhs)]
    reduced, pivots = row_reduce(augmented, field)
    if n in pivots:
        raise SingularSystem('the system is inconsistent')
    if len(pivots) < n:
        raise SingularSystem('the system has {0} free unknowns'.format(n - len(pivots)))
    v = [field.zero] * n
    for row, pivot in zip(reduced, pivots):
        v[pivot] = row[n]
    return v


def inverse(rows, field):
    if len(rows) != len(rows[0]):
        raise SingularSystem('a {0}x{1} matrix has no inverse'.format(len(rows), len(rows[0])))
    try:
        return from_array(np.linalg.inv(to_array(rows, field)), field)
    except np.linalg.LinAlgError:
        raise SingularSystem('the matrix is singular')


def determinant(rows):
    """Determinant of a square matrix over a finite field

    :rtype: :class:`~drinfeld.gfq.FqElem`
    """
    field = _field_of(rows)
    return FqElem(field, int(np.linalg.det(to_array(rows, field))))


def charpoly(rows, field, var=CHARPOLY_VARIABLE):
    """det(x I - M) as a polynomial over field

    :rtype: :class:`~drinfeld.gfq.FqPoly`
    """
    return FqPoly._from_galois(field, to_array(rows, field).characteristic_poly(), var)


def gl_order(r, q):
    """|GL_r(F_q)|"""
    order = 1
    for i in range(r):
        order *= q ** r - q ** i
    return order


def matrix_order(rows, field):
    """Multiplicative order of an invertible matrix"""
    a = to_array(rows, field)
    one = field.gf.Identity(len(rows))
    power, k = a, 1
    bound = gl_order(len(rows), field.order)
    while not np.array_equal(power, one):
        power = power @ a
        k += 1
        if k > bound:
            raise SingularSystem('the matrix is not invertible')
    log.debug('matrix of order %d over %s', k, field)
    return k


def vectors(field, n):
    """All vectors of F^n in lexicographic index order"""
    elements = list(field.elements())
    for combo in product(elements, repeat=n):
        yield list(combo)
