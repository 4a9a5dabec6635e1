"""
:summary: Test drinfeld.tate

:license: Apache License, Version 2.0

:requires: pytest
"""
__docformat__ = "restructuredtext en"

import pytest

from drinfeld.client import DrinfeldClient
from drinfeld.defaults import DEFAULT_SEED
from drinfeld.exceptions import BudgetExceeded, IndexOutOfRange, PrecisionExhausted
from drinfeld.tate import (
    LatticeDatum,
    LaurentSeries,
    LaurentSeriesRing,
    check_coefficient_formula,
    check_functional_equation,
    coefficient_formula_readings,
    evaluate,
    exp_truncated,
    expand_product,
    check_points,
    unit_torsion_points,
    vanishes,
    )
from drinfeld.gfq import roots

from tests import F3, F5, F9, prime


def _datum(text='T+1', field=F3, gamma_val=1, cutoff=1, precision=60):
    return LatticeDatum(prime(text, field), gamma_val, cutoff, precision)


def test_series_arithmetic():
    ring = LaurentSeriesRing(F3, 3, 20)
    u = ring.uniformizer
    x = ring.one - u
    inv = x.inverse()
    assert all(inv.coefficient(k) == 1 for k in range(20)), '1/(1-u) = sum u^k'
    assert inv.prec == 20, 'relative working precision'
    assert (x * inv).agrees_with(ring.one), 'x / x = 1'
    assert (ring.one + u) ** 3 == (ring.one + u).frobenius(3), 'Frobenius is the q-th power'
    assert ring.monomial(-2).inverse() == ring.monomial(2), 'monomials invert exactly'
    assert str(ring.monomial(-1) + ring.one) == 'u^-1+1', 'exact text'
    assert str(LaurentSeries(ring, 0, (1,), 3)) == '1+O(u^3)', 'inexact text'
    assert (u ** -1 / u).valuation() == -2, 'division'


def test_series_precision_bookkeeping():
    ring = LaurentSeriesRing(F3, 3, 20)
    a = LaurentSeries(ring, 0, (1, 1), 5)
    b = LaurentSeries(ring, 2, (1,), 9)
    assert (a + b).prec == 5, 'a sum is known to the smaller precision'
    assert (a * b).prec == min(0 + 9, 2 + 5), 'product precision'
    lost = LaurentSeries(ring, 0, (), 5)
    assert lost.is_zero() and not lost, 'O(u^5) has no known digit'
    with pytest.raises(PrecisionExhausted):
        lost.valuation()
    with pytest.raises(PrecisionExhausted):
        lost.inverse()
    with pytest.raises(PrecisionExhausted):
        a.coefficient(5)
    with pytest.raises(PrecisionExhausted):
        vanishes(LaurentSeries(ring, 0, (), -3), -2)


def test_datum_validation():
    with pytest.raises(ValueError):
        _datum('T')
    with pytest.raises(ValueError):
        _datum('T^2+1')
    with pytest.raises(ValueError):
        _datum(gamma_val=0)
    with pytest.raises(IndexOutOfRange):
        _datum(cutoff=4)


def test_lattice_points():
    datum = _datum(cutoff=1)
    points = datum.points()
    assert len(points) == 9 and len(set(points)) == 9, 'q^(N+1) distinct points'
    assert not points[0], 'zero comes first'
    lam0, lam1 = datum.basis
    assert lam0.valuation() == -1 and lam1.valuation() == -3, 'v(lambda_i) = -e q^i'
    assert datum.phi_T(lam0) == lam1, 'lambda_1 = varphi_T(lambda_0)'


def test_cutoff_zero_shape():
    datum = _datum(cutoff=0)
    e = exp_truncated(datum)
    assert e.degree() == 1, 'one lattice vector gives a tau-degree 1 exponential'
    assert e.coefficient(0) == datum.ring.one, 'x coefficient is 1'
    assert e.coefficient(1) == -datum.ring.monomial(2), 'x - x^q / gamma^(q-1)'
    with pytest.raises(IndexOutOfRange):
        check_functional_equation(datum, e)


def test_exponential_is_linear():
    datum = _datum(cutoff=1)
    e = exp_truncated(datum)
    x, y = check_points(datum)[:2]
    assert evaluate(e, x + y).agrees_with(evaluate(e, x) + evaluate(e, y)), 'additive'
    assert evaluate(e, x * 2).agrees_with(evaluate(e, x) * 2), 'F_q-linear'


def test_direct_expansion_agrees():
    datum = _datum(cutoff=1)
    e = exp_truncated(datum)
    dense = expand_product(datum)
    assert len(dense) == 10, 'x times a product of q^2 - 1 linear factors'
    for k, c in enumerate(dense):
        if k in (1, 3, 9):
            i = (1, 3, 9).index(k)
            assert c.agrees_with(e.coefficient(i)), 'x^{0} coefficient differs'.format(k)
        else:
            assert c.is_zero(), 'x^{0} is not a q-power but has coefficient {1}'.format(k, c)
    with pytest.raises(BudgetExceeded):
        expand_product(_datum(cutoff=2))


def test_coefficient_readings():
    datum = _datum(cutoff=1)
    e = exp_truncated(datum)
    for i in range(3):
        assert check_coefficient_formula(datum, i, e), 'elementary symmetric reading at {0}'.format(i)
    first = coefficient_formula_readings(datum, 1, e)
    assert first.literal.is_zero(), 'the inverse points sum to zero'
    assert not first.literal_agrees, 'the power-sum reading fails at i=1'
    assert coefficient_formula_readings(datum, 0, e).literal_agrees, 'both readings give 1 at i=0'
    with pytest.raises(IndexOutOfRange):
        coefficient_formula_readings(datum, 3, e)


@pytest.mark.parametrize('text,field,gamma_val,cutoff', [
    ('T+1', F3, 1, 1),
    ('T+2', F3, 3, 1),
    ('T+1', F5, 1, 1),
    ('T+1', F3, 1, 2),
    ])
def test_functional_equation(text, field, gamma_val, cutoff):
    datum = _datum(text, field, gamma_val, cutoff)
    report = check_functional_equation(datum)
    assert all(report.kernel), 'e does not vanish on the lattice'
    assert all(report.shift), 'T-shift check failed'
    assert len(report.torsion) == field.order - 1, 'q - 1 nonzero torsion points'
    assert all(pair == (0, 0) for pair in report.torsion), report.torsion
    assert all(a == b for a, b in report.checks), report.checks
    assert report.ok and report.as_dict()['ok'], 'report is not ok'


def test_unit_torsion_points():
    datum = _datum('T+2', F3, 1, 1)
    points = unit_torsion_points(datum)
    assert len(points) == 2, 'two nonzero roots of varphi_T'
    assert points[0].field.order == 9, 'T+2 needs the square root of -1'
    for w in points:
        assert w.valuation() == 0, 'torsion points are units'
        assert vanishes(datum.phi_T(w), 0), 'varphi_T(w) = 0'


def test_precision_is_sound():
    coarse = exp_truncated(_datum(cutoff=1, precision=30))
    fine = exp_truncated(_datum(cutoff=1, precision=60))
    for a, b in zip(coarse.coeffs, fine.coeffs):
        assert a.agrees_with(b), 'coefficients at M and 2M disagree'


def test_series_inverse_and_frobenius_over_an_extension():
    ring = LaurentSeriesRing(F9, 3, 12)
    w = F9.gen
    x = LaurentSeries(ring, -1, (w, 1, w + 1), 8)
    inv = x.inverse()
    assert inv.lowest() == 1 and inv.prec == 10, 'relative precision 9 is kept'
    assert (x * inv).agrees_with(ring.one), 'x * x^-1 = 1 to the known digits'
    cube = x.frobenius(3)
    assert cube.lowest() == -3 and cube.prec == 24, 'Frobenius scales exponents'
    assert cube.coefficient(-3) == w ** 3 and cube.coefficient(3) == (w + 1) ** 3, 'c^3'
    assert (cube - x * x * x).is_zero(), 'Frobenius is the cube over F_9'


def test_seed_reaches_torsion_roots(monkeypatch):
    seen = []

    def recording_roots(f, seed=DEFAULT_SEED):
        seen.append(seed)
        return roots(f, seed)

    monkeypatch.setattr('drinfeld.tate.roots', recording_roots)
    data = DrinfeldClient(seed=5, precision=40).exp(3, 'T+1', 1, 1)
    assert data['functional_equation']['ok'], data['functional_equation']
    assert seen == [5], seen
