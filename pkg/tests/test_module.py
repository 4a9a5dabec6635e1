"""
:summary: Test drinfeld.module

:license: Apache License, Version 2.0

:requires: pytest, hypothesis
"""
__docformat__ = "restructuredtext en"

import json

import pytest
from hypothesis import given, settings, strategies as st

from drinfeld.defaults import ReductionClass
from drinfeld.exceptions import InvalidModuleDescriptor, ZeroPolynomialError
from drinfeld.gfq import FqPoly
from drinfeld.module import DrinfeldModule

from tests import F3, module, newton_descriptor, poly

small_polys = st.lists(st.integers(min_value=0, max_value=2), max_size=3).map(
    lambda c: FqPoly(F3, c))


def test_from_descriptor():
    phi = DrinfeldModule.from_descriptor(newton_descriptor)
    assert phi.q == 3 and phi.r == 2, 'q and r come from the descriptor'
    assert phi.to_descriptor() == newton_descriptor, 'descriptor round trips'
    same = DrinfeldModule.from_descriptor(json.dumps(newton_descriptor))
    assert same == phi, 'JSON text and dict descriptors agree'


@pytest.mark.parametrize('descriptor', [
    {'q': 3, 'r': 2, 'g': ['1', '0']},
    {'q': 3, 'r': 0, 'g': []},
    {'q': 4, 'r': 1, 'g': ['1']},
    {'q': 3, 'r': 3, 'g': ['1', 'T']},
    {'q': 3, 'g': ['1', 'T^']},
    {'q': 3, 'r': 1},
    '{"q": 3, "g": [',
    '[1, 2]',
    ])
def test_invalid_descriptors(descriptor):
    with pytest.raises(InvalidModuleDescriptor):
        DrinfeldModule.from_descriptor(descriptor)


def test_phi_T_shape():
    phi = module(3, '1', 'T+1')
    assert phi.phi_T.coefficient(0) == poly('T'), 'phi_T has constant term T'
    assert phi.phi_T.degree() == 2, 'deg_tau phi_T = r'
    assert phi.phi_T_power(2) == phi.phi_T * phi.phi_T, 'cached power'
    assert phi.phi('T') == phi.phi_T, 'phi_T from the general map'
    assert phi.phi('2') == phi.phi_T_power(0) * FqPoly(F3, (2,)), 'constants map to scalars'


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([('T', '2*T+1'), ('1', 'T', 'T+1')]), small_polys, small_polys)
def test_phi_is_a_ring_homomorphism(g, a, b):
    phi = module(3, *g)
    assert phi.phi(a * b) == phi.phi(a) * phi.phi(b), 'phi_ab != phi_a phi_b'
    assert phi.phi(a + b) == phi.phi(a) + phi.phi(b), 'phi_(a+b) != phi_a + phi_b'
    if a:
        assert phi.phi(a).degree() == phi.r * a.degree(), 'deg_tau phi_a = r deg a'


def test_torsion_poly():
    phi = module(3, '1', 'T+1')
    lin = phi.torsion_poly('T')
    assert lin.degree() == 9, 'phi_T(x) has x-degree q^r'
    assert lin.coefficient(1) == poly('T'), 'linear coefficient is T'
    with pytest.raises(ZeroPolynomialError):
        phi.torsion_poly('0')


def test_det_module():
    assert str(module(3, '1', 'T+1').delta) == '2*T+2', 'delta = -g_2 in rank 2'
    assert str(module(3, '1', 'T', 'T+1').delta) == 'T+1', 'delta = g_3 in rank 3'
    psi = module(3, '1', 'T+1').det_module()
    assert psi.r == 1 and str(psi.phi_T) == '(2*T+2)*t+T', str(psi.phi_T)


def test_reduction_classes():
    phi = module(3, 'T+1', 'T+2')
    good = phi.reduce_at('T+1')
    assert good.reduction_rank == 2 and good.cls == ReductionClass.GOOD, good
    stable = phi.reduce_at('T+2')
    assert stable.reduction_rank == 1 and stable.cls == ReductionClass.STABLE, stable
    bad = module(3, 'T+1', 'T+1').reduce_at('T+1')
    assert bad.reduction_rank == 0 and bad.cls == ReductionClass.UNCLASSIFIED, bad
    assert not phi.is_good_at('T'), '(T) is the characteristic'
    assert phi.is_good_at('T^2+1'), 'g_2 is a unit at T^2+1'


def test_reduced_module():
    reduced = module(3, 'T+1', '1').reduced('T+1')
    assert reduced.rank == 2, 'good reduction keeps the rank'
    assert str(reduced.phi_T) == 't^2+2', str(reduced.phi_T)


@settings(max_examples=50, deadline=None)
@given(small_polys)
def test_derivative_of_phi_is_a(a):
    phi = module(3, 'T', '2*T+1')
    assert phi.phi(a).derivative() == phi.ring(a), 'constant term of phi_a is a'
    if a:
        assert phi.phi(a).is_separable(), 'generic characteristic makes phi_a separable'


def test_phi_T_squared():
    phi = module(3, 'T', '2*T+1')
    square = phi.phi('T^2')
    assert square == phi.phi_T_power(2), 'phi_(T^2) = phi_T^2'
    assert square.coefficient(1) == poly('T^4+T^2'), 'tau coefficient is g_1 (T + T^q)'
    assert square.degree() == 4, 'deg_tau phi_(T^2) = 2r'


def test_torsion_poly_composes():
    phi = module(3, '1', 'T+1')
    a, b = poly('T+1'), poly('2*T')
    outer, inner = phi.torsion_poly(a), phi.torsion_poly(b)
    product_ = phi.torsion_poly(a * b)
    assert product_.degree() == outer.degree() * inner.degree(), 'x-degrees multiply'
    for x in ('1', 'T', 'T^2+2'):
        x = poly(x)
        assert product_(x) == outer(inner(x)), 'phi_ab(x) = phi_a(phi_b(x)) at {0}'.format(x)


def test_reduced_phi_is_inseparable_at_the_prime():
    reduced = module(3, 'T+1', '1').reduced('T+1')
    phi_p = reduced.phi(poly('T+1'))
    assert not phi_p.is_separable(), 'phi_P has no constant term over k_P'
    height, degree = phi_p.height_degree()
    assert 1 <= height <= degree == 2, (height, degree)
