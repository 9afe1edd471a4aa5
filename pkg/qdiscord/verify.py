#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# Copyright (c), 2016-2017, Quantum Espresso Foundation and SISSA (Scuola
# Internazionale Superiore di Studi Avanzati). All rights reserved.
# This file is distributed under the terms of the LGPL-2.1 license. See the
# file 'LICENSE' in the root directory of the present distribution, or
# https://opensource.org/licenses/LGPL-2.1
#
"""
Self-verification suite run by 'qdiscord verify'. Every check reports a measured
residual; informational lines report published values that are not gated.
"""
import logging
import math
import sys
import time
from collections import namedtuple

import numpy as np

from .constants import RECONSTRUCTION_TOL, ORACLE_TOL, VALUE_TOL, AGREEMENT_TOL, \
    W_ASYMPTOTE_CLAIM, KLEIN_TOL
from .qmatrix import SIGMA_Z, kron, partial_trace, hermitian_eig, \
    von_neumann_entropy, relative_entropy, binary_entropy, check_density_matrix
from .channels import STATES, CHANNELS, initial_density, evolve_analytic, \
    integrate_lindblad, lindblad_rhs
from .discord import CLOSED_FORM_KINDS, ALTERNATIVE_BASES, MeasurementBasis, \
    GQDObjective, projectors, pinch_global, minimize_gqd, named_basis, \
    closed_form_discord, closed_form_entropy, alternative_closed_form, candidate_discords
from .entanglement import tau3, sudden_death_time
from .api import SweepConfig, run_sweep
from .readutils import format_sweep_table, parse_sweep_table

logger = logging.getLogger(__name__)

Check = namedtuple('Check', ['name', 'passed', 'residual'])

CHECKS = []

KIND_STATES = {
    'ghz_x': ('ghz', 'x'), 'ghz_y': ('ghz', 'y'), 'ghz_z': ('ghz', 'z'),
    'ghz_d': ('ghz', 'depol'), 'w_z': ('w', 'z'), 'w_d': ('w', 'depol'),
}


def check(func):
    CHECKS.append(func)
    return func


def _gate(name, residual, tol):
    return Check(name, bool(residual <= tol), float(residual))


def _info(name, residual):
    return Check(name, None, float(residual))


def _random_density(rng, dim=8, rank=None):
    rank = rank or dim
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def _random_basis(rng):
    return MeasurementBasis(tuple(rng.uniform(0, np.pi, 3)), tuple(rng.uniform(0, 2 * np.pi, 3)))


def _time_grid(quick):
    return [0.0, 0.1, 0.5, 2.0] if quick else [0.0, 0.05, 0.1, 0.25, 0.5, 1.0, 2.0]


@check
def check_kernel(quick, rng):
    yield _gate("kron(sigma_z, sigma_z) = diag(1,-1,-1,1)",
                np.max(np.abs(kron(SIGMA_Z, SIGMA_Z) - np.diag([1, -1, -1, 1]))), 0.0)

    residual = 0.0
    for _ in range(10 if quick else 100):
        g = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
        a = g + g.conj().T
        lam, v = hermitian_eig(a)
        residual = max(residual, np.max(np.abs(v @ np.diag(lam) @ v.conj().T - a)),
                       np.max(np.abs(v.conj().T @ v - np.eye(8))))
    yield _gate("Jacobi eigensolver reconstruction and orthonormality", residual, RECONSTRUCTION_TOL)

    a, b, c = (_random_density(rng, 2) for _ in range(3))
    product = kron(a, b, c)
    residual = max(np.max(np.abs(partial_trace(product, j) - f)) for j, f in ((1, a), (2, b), (3, c)))
    yield _gate("partial trace of a product state", residual, 1.0E-14)

    residual = max(abs(von_neumann_entropy(np.eye(2) / 2) - 1.0),
                   abs(von_neumann_entropy(initial_density('ghz'))))
    yield _gate("entropy of I/2 and of the pure GHZ state", residual, 1.0E-12)

    value = relative_entropy(np.diag([0.75, 0.25]), np.eye(2) / 2)
    yield _gate("S(diag(3/4,1/4) || I/2) = 1 - h(3/4)", abs(value - (1 - binary_entropy(0.75))), 1.0E-12)


@check
def check_entropy_forms(quick, rng):
    kt = math.log(2) / 6
    value = von_neumann_entropy(evolve_analytic('ghz', 'z', kt))
    yield _gate("GHZ phase flip entropy at exp(-6kt)=1/2 equals h(1/4)",
                max(abs(value - binary_entropy(0.25)), abs(value - closed_form_entropy('ghz_z', kt))),
                1.0E-10)

    residual = 0.0
    for kind, (state, channel) in (('ghz_x', ('ghz', 'x')), ('w_z', ('w', 'z'))):
        for kt in _time_grid(quick):
            rho = evolve_analytic(state, channel, kt)
            residual = max(residual, abs(von_neumann_entropy(rho) - closed_form_entropy(kind, kt)))
    yield _gate("closed-form entropies match eigen entropies", residual, 1.0E-9)


@check
def check_states(quick, rng):
    residual = max(np.max(np.abs(evolve_analytic(s, c, 0.0) - initial_density(s)))
                   for s in STATES for c in CHANNELS)
    yield _gate("analytic evolution at kt=0 equals the initial state", residual, 1.0E-14)

    failures = 0
    for s in STATES:
        for c in CHANNELS:
            for kt in (0, 0.01, 0.1, 0.5, 1, 2, 5):
                try:
                    check_density_matrix(evolve_analytic(s, c, kt))
                except ValueError:
                    failures += 1
    yield _gate("analytic states are valid density matrices", failures, 0)

    residual = max(np.max(np.abs(evolve_analytic(s, 'depol', 10.0) - np.eye(8) / 8)) for s in STATES)
    yield _gate("depolarising noise drives both states to I/8", residual, 1.0E-6)


@check
def check_master_equation(quick, rng):
    residual = max(np.max(np.abs(lindblad_rhs(np.eye(8) / 8, c))) for c in CHANNELS)
    rho = _random_density(rng)
    residual = max([residual] + [abs(np.trace(lindblad_rhs(rho, c))) for c in CHANNELS])
    yield _gate("I/8 is stationary and the generator is trace free", residual, 1.0E-14)

    drho = lindblad_rhs(initial_density('ghz'), 'z')
    expected = np.zeros((8, 8))
    expected[0, 7] = expected[7, 0] = -3.0
    yield _gate("phase flip generator on the GHZ state", np.max(np.abs(drho - expected)), 1.0E-14)

    kts = [0.1, 0.5] if quick else [0.1, 0.5, 1.0, 2.0]
    residual = 0.0
    for s in STATES:
        for c in CHANNELS:
            numeric = integrate_lindblad(initial_density(s), c, kts)
            for rho, kt in zip(numeric, kts):
                residual = max(residual, np.max(np.abs(rho - evolve_analytic(s, c, kt))))
    yield _gate("RK4 integration matches the analytic evolution", residual, ORACLE_TOL)

    rho0 = initial_density('w')
    one_leg = integrate_lindblad(rho0, 'depol', [0.7])[0]
    two_legs = integrate_lindblad(integrate_lindblad(rho0, 'depol', [0.3])[0], 'depol', [0.4])[0]
    yield _gate("semigroup property of the integrated evolution",
                np.max(np.abs(one_leg - two_legs)), 1.0E-10)


@check
def check_measurements(quick, rng):
    n = 100 if quick else 1000
    residual = 0.0
    for _ in range(n):
        basis = _random_basis(rng)
        for j in (1, 2, 3):
            p1, p2 = projectors(basis, j)
            residual = max(residual, np.max(np.abs(p1 + p2 - np.eye(2))), np.max(np.abs(p1 @ p2)))
    yield _gate("projector completeness and orthogonality", residual, 1.0E-14)

    idempotence = identity = 0.0
    klein = np.inf
    for _ in range(n // 10 if quick else n):
        rho = _random_density(rng, rank=int(rng.integers(1, 9)))
        basis = _random_basis(rng)
        pinched = pinch_global(rho, basis)
        idempotence = max(idempotence, np.max(np.abs(pinch_global(pinched, basis) - pinched)))
        identity = max(identity, abs(relative_entropy(rho, pinched)
                                     - von_neumann_entropy(pinched) + von_neumann_entropy(rho)))
        klein = min(klein, relative_entropy(rho, _random_density(rng)))
    yield _gate("pinching idempotence", idempotence, 1.0E-12)
    yield _gate("S(rho||Phi(rho)) = S(Phi(rho)) - S(rho)", identity, 1.0E-9)
    yield _gate("Klein inequality on random pairs", max(0.0, -klein), KLEIN_TOL)


@check
def check_closed_forms(quick, rng):
    kts = _time_grid(quick)
    residual = 0.0
    for kind in CLOSED_FORM_KINDS:
        state, channel = KIND_STATES[kind]
        for kt in kts:
            value = GQDObjective(evolve_analytic(state, channel, kt))(named_basis('sigma_z'))
            residual = max(residual, abs(value - closed_form_discord(kind, kt)))
    yield _gate("closed forms equal the sigma_z objective", residual, 1.0E-9)

    residual = 0.0
    for kind, label in ALTERNATIVE_BASES.items():
        state, channel = KIND_STATES[kind]
        for kt in kts:
            value = GQDObjective(evolve_analytic(state, channel, kt))(named_basis(label))
            residual = max(residual, abs(value - alternative_closed_form(kind, kt)))
    yield _gate("alternative-basis forms equal the objective", residual, 1.0E-9)

    fine = np.linspace(0, 2, 41)
    increase = max(np.max(np.diff(np.atleast_1d(closed_form_discord(kind, fine))))
                   for kind in ('ghz_z', 'ghz_d', 'w_z'))
    yield _gate("closed forms decay monotonically", max(0.0, increase), 1.0E-12)

    deviation = max(abs(GQDObjective(evolve_analytic('ghz', 'x', kt))(named_basis('sigma_z')) - 1.0)
                    for kt in fine)
    yield _gate("GHZ σx discord in the sigma_z basis: max |D−1|", deviation, AGREEMENT_TOL)

    yield _info("printed GHZ depolarising form: max |printed - corrected|",
                np.max(np.abs(closed_form_discord('ghz_d', fine, printed=True)
                              - closed_form_discord('ghz_d', fine))))
    yield _info("printed W depolarising form: max |printed - corrected|",
                np.max(np.abs(closed_form_discord('w_d', fine, printed=True)
                              - closed_form_discord('w_d', fine))))


@check
def check_minimization(quick, rng):
    residual = max(abs(minimize_gqd(initial_density('ghz')).value - 1.0),
                   abs(minimize_gqd(initial_density('w')).value - 1.5))
    yield _gate("minimized discord at kt=0: 1 for GHZ, 1.5 for W", residual, VALUE_TOL)

    kts = _time_grid(quick)
    agreement, bound = 0.0, 0.0
    for kind in CLOSED_FORM_KINDS:
        state, channel = KIND_STATES[kind]
        for kt in kts:
            value = minimize_gqd(evolve_analytic(state, channel, kt)).value
            closed = closed_form_discord(kind, kt)
            if kind in ('ghz_z', 'ghz_d', 'w_z'):
                agreement = max(agreement, abs(value - closed))
            bound = max(bound, value - closed)
    yield _gate("minimized discord matches the sigma_z closed forms", agreement, AGREEMENT_TOL)
    yield _gate("minimized discord never exceeds a closed form", max(0.0, bound), VALUE_TOL)

    residual = 0.0
    for kt in (0.5, 2.0):
        residual = max(residual, abs(minimize_gqd(evolve_analytic('w', 'x', kt)).value
                                     - minimize_gqd(evolve_analytic('w', 'y', kt)).value))
    yield _gate("W discord coincides under sigma_x and sigma_y noise", residual, VALUE_TOL)

    values = [minimize_gqd(evolve_analytic('ghz', 'x', kt)).value for kt in (0.0, 0.05, 0.5, 2.0)]
    yield _info("GHZ σx discord constant: max |D−1|", max(abs(v - 1.0) for v in values))
    value = minimize_gqd(evolve_analytic('w', 'x', 5.0)).value
    yield _info("W asymptote: |D(kt=5) − %.3f|" % W_ASYMPTOTE_CLAIM, abs(value - W_ASYMPTOTE_CLAIM))
    for kt in (0.1, 1.0, 5.0):
        for channel in ('x', 'y'):
            values, winner = candidate_discords(evolve_analytic('w', channel, kt))
            yield _info("W/%s kt=%g best named basis %s" % (channel, kt, winner), values[winner])


@check
def check_entanglement(quick, rng):
    yield _gate("tau3 under phase flip at kt=0.5 is exp(-3)", abs(tau3('ghz_z', 0.5) - math.exp(-3.0)), 1.0E-15)

    death = sudden_death_time('ghz_y')
    after = np.linspace(death, death + 3, 31)
    before = np.linspace(0, death, 31)[:-1]
    residual = max(float(np.max(tau3('ghz_y', after))), float(np.min(tau3('ghz_y', before)) <= 0))
    yield _gate("tau3 under bit-phase flip vanishes exactly from kt*=%.10f" % death, residual, 0.0)

    discord = closed_form_discord('ghz_y', death + 0.5)
    yield _gate("GHZ bit-phase flip discord survives entanglement death", float(discord <= 0), 0.0)

    bounds = [sudden_death_time('ghz_x'), sudden_death_time('ghz_z')]
    yield _gate("no finite entanglement death under bit flip and phase flip",
                float(any(b is not None for b in bounds)), 0.0)


@check
def check_output(quick, rng):
    table = run_sweep(SweepConfig('w', 'z', 0.0, 1.0, 11, method='closed'))
    metadata, rows = parse_sweep_table(format_sweep_table(table))
    yield _gate("CSV round trip", float(metadata != table.metadata or rows != table.rows), 0.0)

    first = format_sweep_table(run_sweep(SweepConfig('ghz', 'y', 0.0, 2.0, 21, include_tau3=True)))
    second = format_sweep_table(run_sweep(SweepConfig('ghz', 'y', 0.0, 2.0, 21, include_tau3=True)))
    yield _gate("identical sweeps give identical output", float(first != second), 0.0)


def run_checks(quick=False, seed=1234):
    """
    Runs the whole verification suite.

    :param quick: use shorter time lists and fewer random samples
    :param seed: seed of the random states
    :return: the list of Check results
    """
    rng = np.random.default_rng(seed)
    results = []
    for func in CHECKS:
        start = time.time()
        results.extend(func(quick, rng))
        logger.info("%s done in %.1f s", func.__name__, time.time() - start)
    return results


def report(results, stream=None):
    """
    Prints one line per check and a summary.

    :return: the number of failed checks
    """
    stream = stream or sys.stdout
    failed = 0
    gated = 0
    for result in results:
        if result.passed is None:
            status = 'INFO'
        else:
            gated += 1
            status = 'PASS' if result.passed else 'FAIL'
            failed += not result.passed
        stream.write("[{}] {} = {:.3e}\n".format(status, result.name, result.residual))
    stream.write("{} checks, {} passed, {} failed\n".format(gated, gated - failed, failed))
    return failed


def verify(quick=False, stream=None):
    """
    Runs the suite and prints the report.

    :return: the exit status, 0 iff every check passed
    """
    return 1 if report(run_checks(quick), stream) else 0
