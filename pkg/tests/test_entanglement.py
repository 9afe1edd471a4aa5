#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# Copyright (c), 2016-2017, Quantum Espresso Foundation and SISSA (Scuola
# Internazionale Superiore di Studi Avanzati). All rights reserved.
# This file is distributed under the terms of the LGPL-2.1 license. See the
# file 'LICENSE' in the root directory of the present distribution, or
# https://opensource.org/licenses/LGPL-2.1
#
"""
Tests for the concurrence lower bounds of the GHZ state.
"""
import unittest
import sys
import os
import math

import numpy as np

# Adds the the package directory to sys.path, in order to make
# the development module loadable also without set PYTHONPATH.
TEST_DIR = os.path.dirname(os.path.abspath(__file__))
PACKAGE_DIR = os.path.dirname(TEST_DIR)
if sys.path[0] != PACKAGE_DIR:
    sys.path.insert(0, PACKAGE_DIR)

from qdiscord.entanglement import TAU3_KINDS, tau3, sudden_death_time, robustness_report


class TestTau3(unittest.TestCase):

    def test_examples(self):
        for kind in TAU3_KINDS:
            self.assertAlmostEqual(tau3(kind, 0.0), 1.0, places=14)
        self.assertAlmostEqual(tau3('ghz_x', 0.5), math.exp(-2.0), places=14)
        self.assertAlmostEqual(tau3('ghz_z', 0.5), math.exp(-3.0), places=14)
        x = math.exp(-0.2)
        self.assertAlmostEqual(tau3('ghz_y', 0.1), (3 * x + x ** 2 + x ** 3 - 1) / 4, places=14)

    def test_range_and_monotonicity(self):
        kts = np.linspace(0, 3, 301)
        for kind in TAU3_KINDS:
            values = tau3(kind, kts)
            self.assertEqual(values.shape, kts.shape)
            self.assertTrue(np.all((values >= 0) & (values <= 1)), msg=kind)
            self.assertTrue(np.all(np.diff(values) <= 0), msg=kind)

    def test_exponential_decay_never_vanishes(self):
        self.assertIsNone(sudden_death_time('ghz_x'))
        self.assertIsNone(sudden_death_time('ghz_z'))
        self.assertGreater(tau3('ghz_x', 5.0), 0.0)
        self.assertGreater(tau3('ghz_z', 5.0), 0.0)

    def test_sudden_death(self):
        kt_death = sudden_death_time('ghz_y')
        self.assertAlmostEqual(kt_death, 0.609, delta=1e-3)

        x = np.exp(-2.0 * np.asarray(kt_death, dtype=float))
        self.assertLessEqual(3 * x + x ** 2 + x ** 3 - 1, 0.0)
        self.assertGreater(tau3('ghz_y', kt_death - 1e-9), 0.0)
        self.assertEqual(tau3('ghz_y', kt_death), 0.0)
        self.assertTrue(np.all(tau3('ghz_y', np.linspace(kt_death, 10, 50)) == 0.0))

    def test_invalid_arguments(self):
        with self.assertRaises(ValueError):
            tau3('ghz_d', 0.5)
        with self.assertRaises(ValueError):
            tau3('w_z', 0.5)
        with self.assertRaises(ValueError):
            tau3('ghz_x', -0.5)
        with self.assertRaises(ValueError):
            sudden_death_time('w_x')


class TestRobustness(unittest.TestCase):

    def test_discord_outlives_entanglement(self):
        kts = [0.0, 0.3, 0.8, 1.5]
        rows = robustness_report('ghz_y', kts)
        self.assertEqual([row['kt'] for row in rows], kts)
        self.assertEqual([row['discord_only'] for row in rows], [False, False, True, True])
        for row in rows[2:]:
            self.assertEqual(row['tau3'], 0.0)
            self.assertGreater(row['discord'], 0.0)

    def test_exponential_kinds(self):
        rows = robustness_report('ghz_z', [0.0, 1.0, 2.0])
        self.assertFalse(any(row['discord_only'] for row in rows))
        self.assertAlmostEqual(rows[0]['discord'], 1.0, places=14)

    def test_minimized_discord(self):
        rows = robustness_report('ghz_y', [1.0], minimized=True)
        self.assertTrue(rows[0]['discord_only'])
        self.assertGreater(rows[0]['discord'], 1e-5)


if __name__ == '__main__':
    unittest.main()
