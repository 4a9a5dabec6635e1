"""
:summary: Exceptions

:license: Apache License, Version 2.0
"""
__docformat__ = "restructuredtext en"


class DrinfeldError(Exception):
    """Base class of every error raised by this package"""


class InvalidFieldSpec(DrinfeldError):
    """The field parameters do not describe a supported finite field"""


class FieldMismatch(DrinfeldError):
    """Operands live over different coefficient domains"""


class ZeroPolynomialError(DrinfeldError):
    """The operation is undefined for the zero polynomial"""


class ParseError(DrinfeldError):
    """The text is not in the canonical polynomial format"""


class InvalidModuleDescriptor(DrinfeldError):
    """The Drinfeld module descriptor is malformed or violates an invariant"""


class BadReduction(DrinfeldError):
    """The prime is not a prime of good reduction usable for torsion computations"""


class SplittingFieldTooLarge(DrinfeldError):
    """The torsion splits only beyond the supported extension degree"""


class SingularSystem(DrinfeldError):
    """The Frobenius linear system has no unique solution"""


class NotAWitness(DrinfeldError):
    """The prime does not satisfy v(g_{r-1}) = 0 and p does not divide v(g_r) > 0"""


class PrecisionExhausted(DrinfeldError):
    """A Laurent series lost all of its guaranteed digits"""


class IndexOutOfRange(DrinfeldError):
    """The requested coefficient index is outside the truncated lattice range"""


class BudgetExceeded(DrinfeldError):
    """The enumeration exceeds the desk-scale budget"""


class CertificationRefused(DrinfeldError):
    """A surjectivity verdict was requested outside the supported parameters"""


class ConsistencyFailure(DrinfeldError):
    """An internal cross-check between two independent computations failed"""
    def __init__(self, *args, **kwargs):
        self.report = kwargs.pop('report', None)
        super(ConsistencyFailure, self).__init__(*args)
