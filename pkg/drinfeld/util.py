"""
:summary: Utility functions for the package

:license: Apache License, Version 2.0
"""
__docformat__ = "restructuredtext en"

import os
from functools import wraps
from multiprocessing import Pool

from .defaults import THREADS_ENV_VAR, DEFAULT_THREADS


def memoize(obj):
    """Caches results keyed by the (hashable) positional and keyword arguments"""
    cache = obj.cache = {}

    @wraps(obj)
    def memoizer(*args, **kwargs):
        key = (args, tuple(sorted(kwargs.items())))
        if key not in cache:
            cache[key] = obj(*args, **kwargs)
        return cache[key]
    return memoizer


def cull_kwargs(keys, kwargs):
    """Pops the recognised setting names out of kwargs, leaving only unknown names behind for
    the caller to reject

    :rtype: dict
    """
    return {k: kwargs.pop(k) for k in keys if k in kwargs}


def default_threads():
    """Thread count from the environment, falling back to the package default

    :rtype: int
    """
    try:
        return max(1, int(os.environ.get(THREADS_ENV_VAR, DEFAULT_THREADS)))
    except ValueError:
        return DEFAULT_THREADS


def ordered_map(func, items, threads=1):
    """Maps func over items, in a worker pool when threads > 1. Results keep the input order
    so the merged output never depends on scheduling.

    :Parameters:
        func : callable
            a picklable module-level function
        items : iterable
            the work items
        threads : int
            number of worker processes (default: 1)

    :rtype: list
    """
    items = list(items)
    if threads is None or threads <= 1 or len(items) < 2:
        return [func(item) for item in items]

    with Pool(min(threads, len(items))) as pool:
        return pool.map(func, items)


def p_part(n, p):
    """Largest power of p dividing the nonzero integer n

    :rtype: int
    """
    n = abs(n)
    part = 1
    while n and n % p == 0:
        n //= p
        part *= p
    return part
