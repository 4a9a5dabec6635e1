"""
:summary: pytest configuration

:license: Apache License, Version 2.0
"""
__docformat__ = "restructuredtext en"

from hypothesis import settings

# the first call into galois JIT-compiles with numba, which blows the default per-example deadline
settings.register_profile('drinfeld', deadline=None)
settings.load_profile('drinfeld')
