#
# Copyright (c), 2016-2017, Quantum Espresso Foundation and SISSA (Scuola
# Internazionale Superiore di Studi Avanzati). All rights reserved.
# This file is distributed under the terms of the LGPL-2.1 license. See the
# file 'LICENSE' in the root directory of the present distribution, or
# https://opensource.org/licenses/LGPL-2.1
#
from setuptools import setup

with open('README.rst') as readme:
    long_description = readme.read()

setup(
    name='qdiscord',
    version='0.1.0',
    packages=['qdiscord'],
    install_requires=['numpy>=1.17', 'scipy>=1.2', 'matplotlib'],
    python_requires='>=3.7',
    entry_points={
        'console_scripts': [
            'qdiscord=qdiscord.cli:main'
        ]
    },
    test_suite='tests',

    license='LGPL-2.1',
    description='Global quantum discord of three-qubit states under Markovian noise',
    long_description=long_description,
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'Operating System :: POSIX',
        'Operating System :: POSIX :: Linux',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'License :: OSI Approved :: GNU Lesser General Public License v2 (LGPLv2)',
        'Natural Language :: English',
        'Topic :: Scientific/Engineering :: Physics'
    ]
)
