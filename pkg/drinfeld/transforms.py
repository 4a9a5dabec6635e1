"""
:summary: Transformations of result objects to simple dicts for consumption

:license: Apache License, Version 2.0
"""
__docformat__ = "restructuredtext en"

from functools import wraps

from .exceptions import DrinfeldError

DENSITY_COLUMNS = ('X', 'total', 'pi_r_count', 'pi_r_ratio', 'euler_bound_B', 'euler_partial')


def is_transform(func):
    """A simple decorator that marks a function as a "transform" which allows the transform
    decorator to only reference functions that are specifically intended to transform client
    method results.
    """
    func.__is_transform__ = True
    return func


def _matrix(rows):
    return [[str(x) for x in row] for row in rows]


@is_transform
def module_info(phi):
    return {
        'q': phi.q,
        'r': phi.r,
        'g': [str(c) for c in phi.g],
        'phi_T': str(phi.phi_T_power(1)),
        'delta': str(phi.delta),
        'det_module': phi.det_module().to_descriptor(),
        }


@is_transform
def torsion(tb):
    return {
        'P': str(tb.prime),
        'level': tb.level,
        'ext_degree': tb.ext_degree,
        'field': str(tb.field),
        'basis': [str(b) for b in tb.basis],
        }


@is_transform
def frob_sample(sample):
    data = {
        'P': str(sample.prime),
        'd': sample.d,
        'charpoly_modT': str(sample.charpoly_modT),
        'det': str(sample.det_modT),
        'trace': str(sample.trace_modT),
        'ext_degree': sample.ext_degree,
        }
    if sample.matrix_modT is not None:
        data['matrix_modT'] = _matrix(sample.matrix_modT)
    if sample.matrix_modT2 is not None:
        data['matrix_modT2'] = _matrix(sample.matrix_modT2)
    return data


@is_transform
def frob_samples(samples):
    return [frob_sample(s) for s in samples]


@is_transform
def certificate(cert):
    return cert.as_dict()


@is_transform
def newton(result):
    prime, k, polygon, vz, balance = result
    data = {
        'P': str(prime),
        'k': k,
        'vertices': [list(v) for v in polygon.vertices],
        'segments': [{'slope': str(s), 'length': n} for s, n in polygon.segments],
        'root_valuations': [[str(v), n] for v, n in polygon.root_valuations()],
        'balance': {'lhs': str(balance.lhs), 'rhs': str(balance.rhs), 'ok': balance.ok},
        }
    if vz is not None:
        data['vz'] = vz.as_dict()
    return data


def _series(x):
    return {'value': str(x), 'precision': None if x.is_exact() else x.prec}


@is_transform
def exponential(result):
    datum, e, readings, report = result
    data = {
        'P': str(datum.prime),
        'gamma_val': datum.gamma_val,
        'cutoff': datum.cutoff,
        'precision': datum.precision,
        'lattice_size': datum.size,
        'coefficients': [dict(_series(c), exponent=datum.q ** i) for i, c in enumerate(e.coeffs)],
        'readings': [r.as_dict() for r in readings],
        }
    if report is not None:
        data['functional_equation'] = report.as_dict()
    return data


@is_transform
def density_rows(result):
    rows, euler = result
    partial = {row.B: row for row in euler}
    data = []
    for row in rows:
        bound = partial.get(row.X)
        data.append({
            'X': row.X,
            'total': row.total,
            'pi_r_count': row.pi_count,
            'pi_r_ratio': str(row.pi_ratio),
            'euler_bound_B': row.X,
            'euler_partial': None if bound is None else bound.partial_float,
            'complement_count': row.complement_count,
            'omega_S_count': row.omega_count,
            'omega_prime_S_count': row.omega_corrected_count,
            })
    return data


@is_transform
def euler_rows(rows):
    return [{
        'B': row.B,
        'c_B': row.c_B,
        'partial': str(row.partial),
        'partial_float': row.partial_float,
        'log_sum': float(row.log_sum),
        'linear_bound': float(row.linear_bound),
        'harmonic': float(row.harmonic),
        } for row in rows]


_transforms = {obj_key: obj_val for obj_key, obj_val in locals().items()
               if hasattr(obj_val, '__is_transform__')}


def transform(result_type):
    """A decorator to take a result object and pass it through one of the is_transform marked
    functions above
    """

    def inner(func):

        @wraps(func)
        def wrapper(self, *args, **kwargs):
            results = func(self, *args, **kwargs)

            try:
                xform = _transforms[result_type]
            except KeyError:
                raise DrinfeldError('Transform does not exist for type: {0}'.format(result_type))
            else:
                results = xform(results)

            return results

        return wrapper

    return inner
