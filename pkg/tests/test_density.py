"""
:summary: Test drinfeld.density

:license: Apache License, Version 2.0

:requires: pytest
"""
__docformat__ = "restructuredtext en"

from fractions import Fraction
from math import log

import pytest

from drinfeld.client import DrinfeldClient
from drinfeld.defaults import DEFAULT_SEED
from drinfeld.exceptions import BadReduction, BudgetExceeded
from drinfeld.density import (
    box_count,
    density_sweep,
    enumerate_box,
    euler_product_partial,
    in_omega,
    omega_S_density,
    omega_local_count,
    pi_candidates,
    pi_r_membership,
    polys_below,
    )
from drinfeld.gfq import factor, field_for, primes_up_to
from drinfeld.image import certify_modT2_nonscalar
from drinfeld.module import DrinfeldModule

from tests import F3, poly, prime, test_threads

S3 = [P for P in primes_up_to(F3, 1) if not P.is_T]


def test_box_counts():
    assert box_count(3, 2, 1) == 6 and box_count(3, 2, 2) == 72, 'q^(rX) - q^((r-1)X)'
    for q, r, X in ((3, 2, 1), (3, 2, 2), (5, 2, 1), (3, 3, 1), (3, 3, 2)):
        listed = list(enumerate_box(field_for(q), r, X))
        assert len(listed) == box_count(q, r, X), 'box ({0}, {1}, {2}) miscounted'.format(q, r, X)
        assert all(g[-1] for g in listed), 'g_r must be nonzero'
    assert [str(f) for f in polys_below(F3, 1)] == ['0', '1', '2'], 'constants in index order'


def test_budget():
    with pytest.raises(BudgetExceeded):
        list(enumerate_box(field_for(27), 3, 3))
    with pytest.raises(BudgetExceeded):
        density_sweep(27, 3, [3])


def test_membership_examples():
    assert not pi_r_membership((poly('1'), poly('(T+1)^3'))), 'p divides v(g_2)'
    member = pi_r_membership((poly('T+1'), poly('(T+1)*(T+2)')))
    assert member and str(member.witness) == 'T+2' and member.e == 1, member
    assert not pi_r_membership((poly('1'), poly('T'))), 'T is never a witness'
    assert not pi_r_membership((poly('T+1'), poly('T+1'))), 'g_1 shares the prime'
    with pytest.raises(ValueError):
        pi_r_membership((poly('T'),))


def test_omega_literal_counterexample():
    g = (poly('T+1'), poly('T+1'))
    assert not pi_r_membership(g), 'outside Pi_2'
    assert not in_omega(g, S3), 'outside the literal Omega^S'
    assert in_omega(g, S3, corrected=True), 'inside the corrected Omega\'^S'


def test_local_densities():
    assert omega_S_density([prime('T+1')], 3) == Fraction(19, 27), 'one prime of norm 3'
    assert omega_S_density([], 3) == 1, 'empty product'
    assert omega_S_density(S3, 3) == Fraction(361, 729), 'two primes of norm 3'
    count, total = omega_local_count(prime('T+1'), 2, 3)
    assert Fraction(count, total) == Fraction(19, 27), 'exhaustive residues mod l^p'


def test_omega_density_excludes_T():
    with pytest.raises(BadReduction):
        omega_S_density([prime('T')], 3)
    with pytest.raises(BadReduction):
        omega_S_density(primes_up_to(F3, 1), 3)


def test_sweep_counts():
    rows = density_sweep(3, 2, [1, 2, 3])
    assert [row.total for row in rows] == [6, 72, 702], 'box sizes'
    assert [row.pi_count for row in rows] == [0, 24, 408], 'Pi_2 counts over F_3'
    assert rows[1].pi_ratio == Fraction(1, 3), 'ratio at X=2'
    for row in rows:
        assert row.complement_count <= row.omega_corrected_count, \
            'complement of Pi_2 escapes the corrected sieve at X={0}'.format(row.X)


def test_sweep_threads():
    serial = density_sweep(3, 2, [1, 2, 3], threads=1)
    parallel = density_sweep(3, 2, [1, 2, 3], threads=test_threads)
    for a, b in zip(serial, parallel):
        assert (a.pi_count, a.omega_count, a.omega_corrected_count) == \
            (b.pi_count, b.omega_count, b.omega_corrected_count), 'worker count changes counts'


def test_sweep_matches_enumeration():
    rows = density_sweep(3, 3, [2])
    listed = list(enumerate_box(F3, 3, 2))
    assert rows[0].pi_count == sum(1 for g in listed if pi_r_membership(g)), 'rank 3 counts'


def test_membership_matches_nonscalar_leg():
    for g in enumerate_box(F3, 2, 2):
        phi = DrinfeldModule(F3, g)
        assert bool(pi_r_membership(g)) == certify_modT2_nonscalar(phi).certified, \
            'membership and certification disagree on {0}'.format(phi)


def test_euler_product():
    rows = euler_product_partial(3, 3, 10)
    assert [row.c_B for row in rows] == [3, 3, 8, 18, 48, 116, 312, 810, 2184, 5880], 'c_n'
    assert rows[0].partial == Fraction(19, 27) ** 3, 'B=1 factor'
    for a, b in zip(rows, rows[1:]):
        assert b.partial < a.partial, 'partial products decrease'
    assert 0.06 < rows[-1].partial_float < 0.067, rows[-1].partial_float
    for row in rows:
        assert abs(row.exp_log_sum - row.partial_float) < 1e-12, 'log sum disagrees'
        assert -float(row.log_sum) >= float(row.linear_bound), '-log(1-x) >= x'
        assert row.partial_float <= 2.718281828459045 ** -float(row.linear_bound) + 1e-15
    assert abs(float(rows[0].log_sum) - 3 * log(19.0 / 27)) < 1e-12, 'B=1 log sum'


def test_seed_reaches_factorisation(monkeypatch):
    seen = []

    def recording_factor(f, seed=DEFAULT_SEED):
        seen.append(seed)
        return factor(f, seed)

    monkeypatch.setattr('drinfeld.density.factor', recording_factor)
    rows = DrinfeldClient(seed=13, threads=1).density(3, 2, [1, 2])
    assert [row['pi_r_count'] for row in rows] == [0, 24], 'the seed changed the counts'
    assert seen and set(seen) == {13}, seen


def test_sweep_empties_the_candidate_cache():
    density_sweep(3, 2, [1, 2])
    assert not pi_candidates.cache, 'candidates outlive the sweep'
