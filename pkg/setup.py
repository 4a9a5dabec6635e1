__docformat__ = "restructuredtext en"
"""
:summary: Setup script for drinfeldrun

:license: Apache License, Version 2.0
"""
import os
from setuptools import setup, find_packages
from drinfeld import VERSION

project = 'drinfeldrun'
install_requires = ['galois>=0.3', 'numpy>=1.21', 'sympy>=1.9', 'mpmath>=1.2']

with open(os.path.join(os.path.dirname(os.path.realpath(__file__)), 'README.rst'), 'r') as fp:
    long_description = fp.read()

setup(
    name=project,
    license='Apache License, Version 2.0',
    version=VERSION,
    packages=find_packages(exclude=["tests", "tests.*"]),
    description='Exact Drinfeld module arithmetic over F_q[T]',
    long_description=long_description,
    install_requires=install_requires,
    entry_points={
        'console_scripts': ['{0} = drinfeld.cli:main'.format(project)],
    },
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
