"""
:summary: Python client for running Drinfeld module computations

:license: Apache License, Version 2.0
"""
__docformat__ = "restructuredtext en"

import logging

from .defaults import (
    DEFAULT_CUTOFF,
    DEFAULT_GAMMA_VALUATION,
    DEFAULT_MAX_PRIME_DEGREE,
    DEFAULT_PRECISION,
    DEFAULT_SEED,
    FIELD_MODULI,
    OutputFormat,
    )
from .density import density_sweep, euler_product_partial
from .exceptions import InvalidFieldSpec, NotAWitness
from .frobenius import frob_sample, sample_primes, torsion_basis
from .gfq import PrimeOfA, field_for
from .image import pink_rutsche_verdict
from .module import DrinfeldModule
from .newton import check_long_equation, newton_polygon, valued_coeffs, verify_vz_formula
from .tate import (
    LatticeDatum,
    check_functional_equation,
    coefficient_formula_readings,
    exp_truncated,
    )
from .transforms import transform
from .util import cull_kwargs, default_threads

log = logging.getLogger(__name__)

_CONFIG_KEYS = ('seed', 'threads', 'levels', 'precision', 'output')


class RunConfig(object):
    """Settings shared by every computation of a client

    :Keywords:
        seed : int
            seed of every randomised root finding and factorisation (default: ``DEFAULT_SEED``)
        threads : int
            worker processes (default: from the ``DRINFELD_THREADS`` environment variable)
        levels : tuple of int
            torsion levels sampled by Frobenius computations (default: (1,))
        precision : int
            relative working precision of Laurent series (default: ``DEFAULT_PRECISION``)
        output : str | None
            an :data:`~drinfeld.defaults.OutputFormat` value; None lets each command pick its
            own format
    """
    def __init__(self, **kwargs):
        settings = cull_kwargs(_CONFIG_KEYS, kwargs)
        if kwargs:
            raise TypeError('unknown settings: {0}'.format(', '.join(sorted(kwargs))))
        self.seed = settings.get('seed', DEFAULT_SEED)
        self.threads = settings.get('threads') or default_threads()
        self.levels = tuple(settings.get('levels', (1,)))
        self.precision = settings.get('precision', DEFAULT_PRECISION)
        self.output = settings.get('output')
        if self.output is not None and self.output not in OutputFormat.values:
            raise ValueError('unknown output format: {0}'.format(self.output))

    def __repr__(self):
        return 'RunConfig(seed={0}, threads={1}, levels={2}, precision={3}, output={4})'.format(
            self.seed, self.threads, self.levels, self.precision, self.output)


def _module(module):
    if isinstance(module, DrinfeldModule):
        return module
    return DrinfeldModule.from_descriptor(module)


class DrinfeldClient(object):

    def __init__(self, config=None, **kwargs):
        """Initialize a client

        :Parameters:
            config : RunConfig
                the settings; built from kwargs when omitted
        """
        self.config = config if config is not None else RunConfig(**kwargs)

    @transform('module_info')
    def inspect(self, module):
        """Validate a module descriptor and describe the module

        :Parameters:
            module : dict | str | DrinfeldModule
                a module descriptor
        :rtype: dict
        """
        return _module(module)

    @transform('torsion')
    def torsion(self, module, prime, level=1):
        """Basis of phi[T^level] at a prime of good reduction

        :rtype: dict
        """
        phi = _module(module)
        return torsion_basis(phi, PrimeOfA.parse(prime, phi.field), level,
                             seed=self.config.seed)

    @transform('frob_samples')
    def frobsample(self, module, max_degree=DEFAULT_MAX_PRIME_DEGREE, primes=None):
        """Frobenius samples at the given primes, or at every good prime of degree <= max_degree

        :rtype: list of dict
        """
        phi = _module(module)
        if primes:
            return [frob_sample(phi, PrimeOfA.parse(P, phi.field), self.config.levels,
                                self.config.seed) for P in primes]
        return sample_primes(phi, max_degree, self.config.threads, self.config.levels,
                             self.config.seed)

    @transform('certificate')
    def certify(self, module, max_degree=DEFAULT_MAX_PRIME_DEGREE):
        """Surjectivity certificate of the T-adic image

        :rtype: dict
        """
        return pink_rutsche_verdict(_module(module), max_degree, self.config.threads,
                                    self.config.seed)

    @transform('newton')
    def newton(self, module, prime, k=2):
        """Newton polygon of phi_(T^k) at a prime, with the witness check when it applies

        :rtype: dict
        """
        phi = _module(module)
        P = PrimeOfA.parse(prime, phi.field)
        polygon = newton_polygon(valued_coeffs(phi.phi_T_power(k), P))
        vz = None
        if k == 2:
            try:
                vz = verify_vz_formula(phi, P)
            except NotAWitness as e:
                log.info('%s', e)
        return P, k, polygon, vz, check_long_equation(phi, P, k)

    @transform('exponential')
    def exp(self, q, prime, gamma_val=DEFAULT_GAMMA_VALUATION, cutoff=DEFAULT_CUTOFF,
            check=True):
        """Truncated lattice exponential at a degree-1 prime with its coefficient and
        functional-equation checks

        :rtype: dict
        """
        if q not in FIELD_MODULI:
            raise InvalidFieldSpec('unsupported q={0}'.format(q))
        P = PrimeOfA.parse(prime, field_for(q))
        datum = LatticeDatum(P, gamma_val, cutoff, self.config.precision)
        e = exp_truncated(datum)
        readings = [coefficient_formula_readings(datum, i, e)
                    for i in range(min(cutoff, 1) + 2)]
        report = None
        if check and cutoff >= 1:
            report = check_functional_equation(datum, e, self.config.seed)
        return datum, e, readings, report

    @transform('density_rows')
    def density(self, q, r, X_values):
        """Exact Pi_r and sieve counts over boxes of height X

        :rtype: list of dict
        """
        if q not in FIELD_MODULI:
            raise InvalidFieldSpec('unsupported q={0}'.format(q))
        X_values = list(X_values)
        rows = density_sweep(q, r, X_values, self.config.threads, self.config.seed)
        euler = euler_product_partial(q, field_for(q).p, max(X_values)) if X_values else []
        return rows, euler

    @transform('euler_rows')
    def eulerprod(self, q, p, max_degree):
        """Partial Euler products over primes of degree <= B for B = 1..max_degree

        :rtype: list of dict
        """
        return euler_product_partial(q, p, max_degree)
