"""
:summary: Testing setup

:license: Apache License, Version 2.0
"""
__docformat__ = "restructuredtext en"

import os
import logging

from drinfeld.gfq import PrimeOfA, field_for, parse_poly
from drinfeld.module import DrinfeldModule
from drinfeld.transforms import _transforms as transforms

_DRINFELD_TEST_THREADS_VAR = 'DRINFELD_TEST_THREADS'

logger = logging.getLogger(__name__)
# logger = logging.getLogger('')  # for debugging
logger.setLevel(logging.INFO)
logger.addHandler(logging.StreamHandler())

test_threads = int(os.environ.get(_DRINFELD_TEST_THREADS_VAR, 2))

F3 = field_for(3)
F5 = field_for(5)
F9 = field_for(9)


def poly(text, field=F3):
    return parse_poly(text, field)


def prime(text, field=F3):
    return PrimeOfA.parse(text, field)


def module(q, *g):
    return DrinfeldModule(field_for(q), list(g))


# phi_T = T + tau + (T+1) tau^2 over F_3, the running Newton polygon example
newton_descriptor = {'q': 3, 'r': 2, 'g': ['1', 'T+1']}

# reduces to -1 + tau^2 at T+1, so phi[T] is all of F_9
split_descriptor = {'q': 3, 'r': 2, 'g': ['T+1', '1']}

certify_descriptor = {'q': 5, 'r': 2, 'g': ['1', 'T+1']}
