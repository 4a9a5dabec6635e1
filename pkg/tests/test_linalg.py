"""
:summary: Test drinfeld.linalg

:license: Apache License, Version 2.0

:requires: pytest
"""
__docformat__ = "restructuredtext en"

from itertools import product

import pytest

from drinfeld.exceptions import SingularSystem
from drinfeld.linalg import (
    charpoly,
    determinant,
    gl_order,
    identity,
    inverse,
    kernel,
    mat_mul,
    mat_vec,
    matrix_order,
    rank,
    row_reduce,
    solve,
    vectors,
    )

from tests import F3, F5, F9


def _matrix(field, rows):
    return [[field(x) for x in row] for row in rows]


def test_solve_and_inverse():
    a = _matrix(F5, [[1, 2], [3, 4]])
    v = solve(a, [F5(1), F5(0)], F5)
    assert mat_vec(a, v) == [1, 0], 'solution does not satisfy the system'
    inv = inverse(a, F5)
    assert mat_mul(a, inv) == identity(2, F5), 'a * a^-1 != 1'
    assert determinant(a) == 4 - 6, 'det [[1,2],[3,4]] = -2'


def test_singular_systems():
    a = _matrix(F5, [[1, 2], [2, 4]])
    with pytest.raises(SingularSystem):
        solve(a, [F5(1), F5(0)], F5)
    with pytest.raises(SingularSystem):
        solve(a, [F5(1), F5(2)], F5)
    with pytest.raises(SingularSystem):
        inverse(a, F5)
    assert rank(a, F5) == 1, 'rank of a rank-one matrix'


def test_kernel():
    a = _matrix(F3, [[1, 1, 1], [0, 1, 2]])
    null = kernel(a, F3)
    assert len(null) == 1, 'one-dimensional kernel'
    assert mat_vec(a, null[0]) == [0, 0], 'kernel vector is not annihilated'


def test_charpoly():
    a = _matrix(F5, [[1, 1], [0, 1]])
    assert str(charpoly(a, F5)) == 'x^2+3*x+1', '(x-1)^2 over F_5'
    b = _matrix(F3, [[0, 1], [1, 0]])
    assert str(charpoly(b, F3)) == 'x^2+2', 'x^2-1 over F_3'


def test_orders():
    assert gl_order(2, 5) == 480, '|GL_2(F_5)|'
    assert gl_order(2, 3) == 48, '|GL_2(F_3)|'
    assert matrix_order(_matrix(F3, [[0, 1], [1, 0]]), F3) == 2, 'a transposition has order 2'
    assert matrix_order(_matrix(F5, [[1, 1], [0, 1]]), F5) == 5, 'a transvection has order p'


def test_vectors():
    listed = list(vectors(F3, 2))
    assert len(listed) == 9 and listed[0] == [0, 0], 'F_3^2 in index order'


def test_matrix_order_divides_group_order():
    identity2 = identity(2, F3)
    invertible = 0
    for entries in product(range(3), repeat=4):
        a = _matrix(F3, [entries[:2], entries[2:]])
        if not determinant(a):
            continue
        k = matrix_order(a, F3)
        assert gl_order(2, 3) % k == 0, '{0} has order {1}'.format(entries, k)
        power = a
        for _ in range(k - 1):
            power = mat_mul(power, a)
        assert power == identity2, 'a^{0} is not the identity'.format(k)
        invertible += 1
    assert invertible == gl_order(2, 3), 'GL_2(F_3) enumeration'
    companion = _matrix(F3, [[0, 0, 2], [1, 0, 1], [0, 1, 0]])
    assert str(charpoly(companion, F3)) == 'x^3+2*x+1', 'companion charpoly'
    assert matrix_order(companion, F3) == 26, 'a root of x^3 - x + 1 generates F_27^x'


def test_row_reduce_over_f9():
    w = F9.gen
    a = [[w, w * w, F9.one], [w * w * w, w ** 4, w * w]]
    reduced, pivots = row_reduce(a, F9)
    assert pivots == [0] and len(reduced) == 1, 'the second row is w^2 times the first'
    assert reduced[0][0] == 1, 'pivots are normalised'
    null = kernel(a, F9)
    assert len(null) == 2 and all(mat_vec(a, v) == [0, 0] for v in null), 'kernel over F_9'
