"""
:summary: drinfeldrun package - exact Drinfeld module arithmetic over F_q[T]

:license: Apache License, Version 2.0
"""
__docformat__ = "restructuredtext en"

__VERSION__ = (0, 2, 0)
VERSION = '.'.join(map(str, __VERSION__))
