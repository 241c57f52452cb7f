#!/usr/bin/env python3
# vim: set et sw=4 sts=4 fileencoding=utf-8:
#
# Poisson-like cohomology of Lie superalgebras
# Copyright (c) 2024 The poissonlike developers
#
# SPDX-License-Identifier: BSD-3-Clause

"Exact Poisson-like cohomology of Lie superalgebras"

import os
import sys
from setuptools import setup, find_packages

if sys.version_info < (3, 8):
    raise ValueError('This package requires Python 3.8 or above')

HERE = os.path.abspath(os.path.dirname(__file__))

__project__      = 'poissonlike'
__version__      = '0.1'
__author__       = 'The poissonlike developers'
__author_email__ = ''
__url__          = 'http://poissonlike.readthedocs.io/'
__platforms__    = 'ALL'

__classifiers__ = [
    "Development Status :: 3 - Alpha",
    "Environment :: Console",
    "Intended Audience :: Science/Research",
    "Topic :: Scientific/Engineering :: Mathematics",
    "Operating System :: OS Independent",
    "License :: OSI Approved :: BSD License",
    "Programming Language :: Python :: 3",
    "Programming Language :: Python :: 3.8",
    "Programming Language :: Python :: 3.9",
    "Programming Language :: Python :: 3.10",
    "Programming Language :: Python :: 3.11",
    "Programming Language :: Python :: 3.12",
    "Programming Language :: Python :: Implementation :: CPython",
]

__keywords__ = [
    'poisson', 'cohomology', 'lie', 'superalgebra', 'schouten', 'betti',
]

__requires__ = [
    'setuptools',
    'numpy',
]

__extra_requires__ = {
    'doc':   ['sphinx'],
    'test':  ['pytest', 'coverage', 'mock'],
}

__entry_points__ = {
    'console_scripts': [
        'poissonlike = poissonlike.cli:main',
    ],
}


def main():
    import io
    with io.open(os.path.join(HERE, 'README.rst'), 'r') as readme:
        setup(
            name                 = __project__,
            version              = __version__,
            description          = __doc__,
            long_description     = readme.read(),
            classifiers          = __classifiers__,
            author               = __author__,
            author_email         = __author_email__,
            url                  = __url__,
            license              = [
                c.rsplit('::', 1)[1].strip()
                for c in __classifiers__
                if c.startswith('License ::')
            ][0],
            keywords             = __keywords__,
            packages             = find_packages(exclude=['tests']),
            package_data         = {'poissonlike': ['fixtures/*.json']},
            include_package_data = True,
            platforms            = __platforms__,
            python_requires      = '>=3.8',
            install_requires     = __requires__,
            extras_require       = __extra_requires__,
            entry_points         = __entry_points__,
        )


if __name__ == '__main__':
    main()
