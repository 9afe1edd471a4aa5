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
Tests for measurements, the discord objective, its minimization and the closed forms.
"""
import unittest
import sys
import os

import numpy as np

# Adds the the package directory to sys.path, in order to make
# the development module loadable also without set PYTHONPATH.
TEST_DIR = os.path.dirname(os.path.abspath(__file__))
PACKAGE_DIR = os.path.dirname(TEST_DIR)
if sys.path[0] != PACKAGE_DIR:
    sys.path.insert(0, PACKAGE_DIR)

from qdiscord.qmatrix import IDENTITY, partial_trace, von_neumann_entropy, relative_entropy
from qdiscord.channels import initial_density, evolve_analytic
from qdiscord.discord import ALTERNATIVE_BASES, MeasurementBasis, \
    as_basis, named_basis, canonical_basis, basis_unitary, projectors, pinch_local, \
    pinch_global, GQDObjective, gqd_objective, angle_grid, minimize_gqd, candidate_discords, \
    closed_form_discord, closed_form_entropy, alternative_closed_form
from qdiscord.exceptions import DensityMatrixError

SIGMA_Z_BASIS = MeasurementBasis((0.0, 0.0, 0.0), (0.0, 0.0, 0.0))

KIND_STATES = {
    'ghz_x': ('ghz', 'x'), 'ghz_y': ('ghz', 'y'), 'ghz_z': ('ghz', 'z'),
    'ghz_d': ('ghz', 'depol'), 'w_z': ('w', 'z'), 'w_d': ('w', 'depol'),
}


def random_density(rng, dim=8):
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_basis(rng):
    return MeasurementBasis(tuple(rng.uniform(0, np.pi, 3)), tuple(rng.uniform(0, 2 * np.pi, 3)))


class TestMeasurements(unittest.TestCase):

    def test_projector_examples(self):
        p1, p2 = projectors(SIGMA_Z_BASIS, 1)
        self.assertTrue(np.allclose(p1, np.diag([1, 0])))
        self.assertTrue(np.allclose(p2, np.diag([0, 1])))

        p1, p2 = projectors(named_basis('sigma_x'), 2)
        self.assertTrue(np.allclose(p1, 0.5 * np.ones((2, 2))))
        self.assertTrue(np.allclose(p2, 0.5 * np.array([[1, -1], [-1, 1]])))

    def test_projector_properties(self):
        rng = np.random.default_rng(31)
        for _ in range(20):
            basis = random_basis(rng)
            for j in (1, 2, 3):
                p1, p2 = projectors(basis, j)
                self.assertLessEqual(np.max(np.abs(p1 + p2 - IDENTITY)), 1e-14)
                self.assertLessEqual(np.max(np.abs(p1 @ p1 - p1)), 1e-14)
                self.assertLessEqual(np.max(np.abs(p1 @ p2)), 1e-14)
                self.assertAlmostEqual(np.trace(p1).real, 1.0, places=14)

    def test_basis_unitary(self):
        u = basis_unitary([0.3, 1.2], [2.0, 0.1])
        self.assertEqual(u.shape, (2, 2, 2))
        for k in range(2):
            self.assertTrue(np.allclose(u[k].conj().T @ u[k], IDENTITY, atol=1e-15))

    def test_invalid_qubit(self):
        with self.assertRaises(ValueError):
            projectors(SIGMA_Z_BASIS, 0)

    def test_named_basis(self):
        self.assertEqual(named_basis('sigma_z'), SIGMA_Z_BASIS)
        basis = named_basis('xyy')
        self.assertEqual(basis.phi, (0.0, np.pi / 2, np.pi / 2))
        with self.assertRaises(ValueError):
            named_basis('sigma_w')
        with self.assertRaises(ValueError):
            as_basis([0.0, 1.0])

    def test_canonical_basis(self):
        basis = canonical_basis([np.pi, 1.0, 2 * np.pi, 0.5, 0.3, 0.2])
        self.assertEqual(basis.theta[0], 0.0)
        self.assertEqual(basis.phi[0], 0.0)
        self.assertEqual(basis.theta[1], 0.0)
        self.assertAlmostEqual(basis.theta[2], 0.3, places=14)
        self.assertAlmostEqual(basis.phi[2], 0.2, places=14)

        rng = np.random.default_rng(37)
        rho = random_density(rng)
        for _ in range(10):
            basis = random_basis(rng)
            self.assertAlmostEqual(gqd_objective(rho, basis), gqd_objective(rho, canonical_basis(basis)),
                                   places=12)


class TestPinching(unittest.TestCase):

    def test_ghz_pinching(self):
        pinched = pinch_global(initial_density('ghz'), SIGMA_Z_BASIS)
        expected = np.zeros((8, 8))
        expected[0, 0] = expected[7, 7] = 0.5
        self.assertTrue(np.allclose(pinched, expected, atol=1e-15))
        self.assertAlmostEqual(von_neumann_entropy(pinched), 1.0, places=14)

    def test_local_pinching(self):
        rho = np.array([[0.5, 0.5], [0.5, 0.5]])
        self.assertTrue(np.allclose(pinch_local(rho, 0.0, 0.0), np.eye(2) / 2))
        self.assertTrue(np.allclose(pinch_local(rho, np.pi / 2, 0.0), rho))

    def test_properties(self):
        rng = np.random.default_rng(41)
        for _ in range(10):
            rho, basis = random_density(rng), random_basis(rng)
            pinched = pinch_global(rho, basis)
            self.assertAlmostEqual(np.trace(pinched).real, 1.0, places=13)
            self.assertLessEqual(np.max(np.abs(pinch_global(pinched, basis) - pinched)), 1e-13)

        diagonal = np.diag(rng.dirichlet(np.ones(8)))
        self.assertTrue(np.allclose(pinch_global(diagonal, SIGMA_Z_BASIS), diagonal, atol=1e-15))

    def test_objective_matches_relative_entropies(self):
        rng = np.random.default_rng(43)
        rho, basis = random_density(rng), random_basis(rng)
        expected = relative_entropy(rho, pinch_global(rho, basis))
        for j in (1, 2, 3):
            reduced = partial_trace(rho, j)
            expected -= relative_entropy(reduced, pinch_local(reduced, basis.theta[j - 1], basis.phi[j - 1]))
        self.assertAlmostEqual(gqd_objective(rho, basis), expected, places=10)


class TestObjective(unittest.TestCase):

    def test_examples(self):
        self.assertAlmostEqual(gqd_objective(initial_density('ghz'), SIGMA_Z_BASIS), 1.0, places=12)
        self.assertAlmostEqual(gqd_objective(initial_density('w'), SIGMA_Z_BASIS), 1.5, places=12)

    def test_maximally_mixed(self):
        rng = np.random.default_rng(47)
        for _ in range(5):
            self.assertAlmostEqual(gqd_objective(np.eye(8) / 8, random_basis(rng)), 0.0, places=12)

    def test_non_negative(self):
        rng = np.random.default_rng(53)
        for _ in range(20):
            self.assertGreaterEqual(gqd_objective(random_density(rng), random_basis(rng)), -1e-12)

    def test_ghz_bit_flip_in_sigma_z(self):
        for kt in (0.0, 0.1, 0.5, 2.0):
            self.assertAlmostEqual(gqd_objective(evolve_analytic('ghz', 'x', kt), 'sigma_z'), 1.0, places=12)

    def test_evaluation_counter(self):
        objective = GQDObjective(initial_density('ghz'))
        objective(SIGMA_Z_BASIS)
        objective(np.zeros(6))
        self.assertEqual(objective.evaluations, 2)

    def test_grid_slices(self):
        rng = np.random.default_rng(59)
        rho = random_density(rng)
        objective = GQDObjective(rho)
        grid = angle_grid(3, 4)
        unitaries = basis_unitary(grid[:, 0], grid[:, 1])
        costs = objective.local_costs(unitaries)
        values = objective.grid_slices(unitaries, 2)
        for g2, g3 in ((0, 0), (1, 5), (7, 3)):
            angles = grid[[2, g2, g3]].ravel()
            expected = gqd_objective(rho, angles)
            self.assertAlmostEqual(values[g2, g3] - costs[0, 2] - costs[1, g2] - costs[2, g3], expected,
                                   places=11)

    def test_exchange_symmetries(self):
        self.assertEqual(GQDObjective(initial_density('ghz')).exchange_symmetries(), (True, True))
        self.assertEqual(GQDObjective(initial_density('w')).exchange_symmetries(), (True, False))

    def test_invalid_state(self):
        with self.assertRaises(DensityMatrixError):
            gqd_objective(np.eye(8), SIGMA_Z_BASIS)
        with self.assertRaises(ValueError):
            GQDObjective(np.eye(4) / 4)

    def test_candidate_discords(self):
        values, winner = candidate_discords(evolve_analytic('ghz', 'x', 1.0))
        self.assertEqual(winner, 'sigma_x')
        self.assertAlmostEqual(values['sigma_z'], 1.0, places=12)
        self.assertAlmostEqual(values['sigma_x'], alternative_closed_form('ghz_x', 1.0), places=10)


class TestClosedForms(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(closed_form_discord('ghz_x', 0.7), 1.0)
        self.assertAlmostEqual(closed_form_discord('ghz_z', 0.0), 1.0, places=14)
        self.assertAlmostEqual(closed_form_discord('ghz_y', 0.0), 1.0, places=14)
        self.assertAlmostEqual(closed_form_discord('ghz_d', 0.0), 1.0, places=14)
        self.assertAlmostEqual(closed_form_discord('w_z', 0.0), 1.5, places=14)
        self.assertAlmostEqual(closed_form_discord('w_d', 0.0), 1.5, places=14)
        self.assertLessEqual(closed_form_discord('ghz_d', 20.0), 1e-12)
        self.assertLessEqual(abs(closed_form_discord('w_d', 20.0)), 1e-12)

    def test_printed_forms(self):
        self.assertAlmostEqual(closed_form_discord('w_d', 0.0, printed=True), 2.5, places=12)
        self.assertAlmostEqual(closed_form_discord('w_d', 50.0, printed=True), 2.0, places=12)
        self.assertAlmostEqual(closed_form_discord('ghz_d', 0.0, printed=True), 1.0, places=12)

    def test_matches_sigma_z_objective(self):
        for kind, (state, channel) in KIND_STATES.items():
            for kt in (0.0, 0.05, 0.3, 1.0, 3.0):
                self.assertAlmostEqual(
                    closed_form_discord(kind, kt),
                    gqd_objective(evolve_analytic(state, channel, kt), SIGMA_Z_BASIS),
                    places=9, msg="%s at kt=%g" % (kind, kt)
                )

    def test_alternative_forms(self):
        for kind, name in ALTERNATIVE_BASES.items():
            state, channel = KIND_STATES[kind]
            for kt in (0.1, 0.6, 2.0):
                self.assertAlmostEqual(
                    alternative_closed_form(kind, kt),
                    gqd_objective(evolve_analytic(state, channel, kt), named_basis(name)),
                    places=9, msg="%s at kt=%g" % (kind, kt)
                )
            self.assertLess(alternative_closed_form(kind, 1.0), closed_form_discord(kind, 1.0))

    def test_entropies(self):
        for kind in ('ghz_x', 'ghz_z', 'w_z'):
            state, channel = KIND_STATES[kind]
            for kt in (0.0, 0.2, 1.5):
                self.assertAlmostEqual(closed_form_entropy(kind, kt),
                                       von_neumann_entropy(evolve_analytic(state, channel, kt)), places=10)

    def test_decay(self):
        kts = np.linspace(0, 3, 31)
        for kind in ('ghz_z', 'ghz_d', 'w_z'):
            values = closed_form_discord(kind, kts)
            self.assertEqual(values.shape, kts.shape)
            self.assertTrue(np.all(np.diff(values) <= 1e-12), msg=kind)
            self.assertTrue(np.all(values >= -1e-12), msg=kind)

    def test_invalid_arguments(self):
        with self.assertRaises(ValueError):
            closed_form_discord('w_x', 0.5)
        with self.assertRaises(ValueError):
            closed_form_discord('ghz_z', -1.0)
        with self.assertRaises(ValueError):
            closed_form_entropy('ghz_y', 0.5)


class TestMinimization(unittest.TestCase):

    def test_initial_states(self):
        result = minimize_gqd(initial_density('ghz'))
        self.assertAlmostEqual(result.value, 1.0, delta=1e-6)
        result = minimize_gqd(initial_density('w'))
        self.assertAlmostEqual(result.value, 1.5, delta=1e-6)
        self.assertGreater(result.evaluations, len(angle_grid()))

    def test_phase_flip_agreement(self):
        for kt in (0.1, 0.5):
            result = minimize_gqd(evolve_analytic('ghz', 'z', kt))
            self.assertAlmostEqual(result.value, closed_form_discord('ghz_z', kt), delta=1e-5)
            self.assertTrue(all(theta < 1e-3 for theta in result.argmin.theta))

    def test_depolarising_agreement(self):
        result = minimize_gqd(evolve_analytic('ghz', 'depol', 0.2))
        self.assertAlmostEqual(result.value, closed_form_discord('ghz_d', 0.2), delta=1e-5)
        result = minimize_gqd(evolve_analytic('w', 'z', 0.3))
        self.assertAlmostEqual(result.value, closed_form_discord('w_z', 0.3), delta=1e-5)
        result = minimize_gqd(evolve_analytic('w', 'depol', 0.3))
        self.assertLessEqual(result.value, closed_form_discord('w_d', 0.3) + 1e-6)

    def test_bit_flip_below_sigma_z(self):
        result = minimize_gqd(evolve_analytic('ghz', 'x', 1.0))
        self.assertLess(result.value, 0.01)
        self.assertLessEqual(result.value, alternative_closed_form('ghz_x', 1.0) + 1e-6)

        rho = evolve_analytic('ghz', 'y', 1.0)
        result = minimize_gqd(rho)
        self.assertLessEqual(result.value, alternative_closed_form('ghz_y', 1.0) + 1e-6)
        self.assertLessEqual(result.value, gqd_objective(rho, result.argmin) + 1e-9)

    def test_w_bit_flip_channels(self):
        value_x = minimize_gqd(evolve_analytic('w', 'x', 0.5)).value
        value_y = minimize_gqd(evolve_analytic('w', 'y', 0.5)).value
        self.assertAlmostEqual(value_x, value_y, delta=1e-6)
        self.assertLessEqual(value_x, gqd_objective(evolve_analytic('w', 'x', 0.5), SIGMA_Z_BASIS) + 1e-6)

    def test_w_bit_flip_long_time(self):
        rho = evolve_analytic('w', 'x', 5.0)
        self.assertLess(minimize_gqd(rho).value, 0.01)
        sigma_z_value = gqd_objective(rho, SIGMA_Z_BASIS)
        self.assertTrue(0.79 < sigma_z_value < 0.81)


if __name__ == '__main__':
    unittest.main()
