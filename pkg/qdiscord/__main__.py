#!/usr/bin/env python
#
# Copyright (c), 2016-2017, Quantum Espresso Foundation and SISSA (Scuola
# Internazionale Superiore di Studi Avanzati). All rights reserved.
# This file is distributed under the terms of the LGPL-2.1 license. See the
# file 'LICENSE' in the root directory of the present distribution, or
# https://opensource.org/licenses/LGPL-2.1
#
"""
Entry point of 'python -m qdiscord' (see PEP-338). Running the directory
directly (python qdiscord) also works: the parent directory is then put on
sys.path so that the package imports resolve.
"""
import os
import sys

if not __package__:
    sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
    from qdiscord.cli import main
else:
    from .cli import main

if __name__ == '__main__':
    main()
