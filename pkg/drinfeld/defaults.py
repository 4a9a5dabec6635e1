"""
:summary: Default values

:license: Apache License, Version 2.0
"""
__docformat__ = "restructuredtext en"


def enum(name, *sequential, **named):
    values = dict(zip(sequential, range(len(sequential))), **named)
    values['values'] = list(values.values())
    values['keys'] = list(values.keys())
    return type(name, (), values)

Verdict = enum(
    'Verdict',
    SURJECTIVE='SURJECTIVE',
    UNKNOWN='UNKNOWN'
    )

Certification = enum(
    'Certification',
    CERTIFIED='certified',
    UNKNOWN='unknown'
    )

ReductionClass = enum(
    'ReductionClass',
    GOOD='good',
    STABLE='stable',
    UNCLASSIFIED='unclassified'
    )

ObstructionKind = enum(
    'ObstructionKind',
    BOREL='Borel',
    SPLIT_CARTAN='split-Cartan-normalizer',
    NONSPLIT_CARTAN='nonsplit-Cartan-normalizer',
    EXCEPTIONAL_A4='exceptional-A4',
    EXCEPTIONAL_S4='exceptional-S4',
    EXCEPTIONAL_A5='exceptional-A5'
    )

# certification order; reports list unexcluded kinds in this order
OBSTRUCTION_ORDER = (
    ObstructionKind.BOREL,
    ObstructionKind.SPLIT_CARTAN,
    ObstructionKind.NONSPLIT_CARTAN,
    ObstructionKind.EXCEPTIONAL_A4,
    ObstructionKind.EXCEPTIONAL_S4,
    ObstructionKind.EXCEPTIONAL_A5,
    )

OutputFormat = enum(
    'OutputFormat',
    TEXT='text',
    JSON='json',
    CSV='csv'
    )

# q -> (p, n, ascending coefficients over F_p of the monic modulus)
FIELD_MODULI = {
    3: (3, 1, (1, 1)),
    5: (5, 1, (3, 1)),
    7: (7, 1, (4, 1)),
    9: (3, 2, (2, 2, 1)),
    25: (5, 2, (2, 4, 1)),
    27: (3, 3, (1, 2, 0, 1)),
    }

# q values covered by the Dickson obstruction tables
DICKSON_FIELDS = (3, 5, 7, 9)

GENERATOR_LETTER = 'w'
POLY_VARIABLE = 'T'
TAU_LETTER = 't'
TORSION_VARIABLE = 'x'
CHARPOLY_VARIABLE = 'x'
EXTENSION_LETTER = 'y'
UNIFORMIZER_LETTER = 'u'

DEFAULT_SEED = 20240601
MAX_SPLITTING_DEGREE = 12
MIN_CERTIFY_Q = 5
DEFAULT_MAX_PRIME_DEGREE = 2

DEFAULT_PRECISION = 60
DEFAULT_CUTOFF = 1
MAX_CUTOFF = 3
# absolute precision of series known exactly
EXACT_PRECISION = float('inf')
DEFAULT_GAMMA_VALUATION = 1

SWEEP_BUDGET = 10 ** 8

THREADS_ENV_VAR = 'DRINFELD_THREADS'
DEFAULT_THREADS = 1

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNKNOWN = 2
