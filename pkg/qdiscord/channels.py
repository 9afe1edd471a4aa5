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
Three-qubit GHZ and W states transmitted through Markovian Pauli and depolarising
channels. Each qubit couples to its own channel with the same rate kappa, through
Lindblad operators sqrt(kappa) sigma_alpha (one Pauli for the Pauli channels, all
three for the depolarising channel). Time is measured as the dimensionless kt.

Two independent evaluations of rho(kt) are provided: the closed-form matrices
(evolve_analytic) and a fourth-order Runge-Kutta integration of the master
equation (evolve_numeric).
"""
import logging
import math
from dataclasses import dataclass

import numpy as np

from .constants import RK4_STEP
from .exceptions import IntegrationError
from .qmatrix import PAULI, embed

logger = logging.getLogger(__name__)

STATES = ('ghz', 'w')
CHANNELS = ('x', 'y', 'z', 'depol')

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class ChannelSpec:
    """
    A noise channel acting identically on the three qubits.

    :param kind: 'x', 'y', 'z' (Pauli channels) or 'depol' (depolarising)
    :param kappa: relaxation rate, in inverse time units
    """
    kind: str
    kappa: float = 1.0

    def __post_init__(self):
        if self.kind not in CHANNELS:
            raise ValueError("unknown channel %r: use one of %s" % (self.kind, ', '.join(CHANNELS)))
        if not (np.isfinite(self.kappa) and self.kappa > 0):
            raise ValueError("kappa must be a positive finite number, got %r" % (self.kappa,))

    @property
    def paulis(self):
        return ('x', 'y', 'z') if self.kind == 'depol' else (self.kind,)


def as_channel(channel):
    """Accepts a ChannelSpec or a channel label."""
    if isinstance(channel, ChannelSpec):
        return channel
    return ChannelSpec(str(channel).lower())


def check_state(state):
    label = str(state).lower()
    if label not in STATES:
        raise ValueError("unknown initial state %r: use 'ghz' or 'w'" % (state,))
    return label


def check_kt(kt):
    """Validates a scaled time kt: finite and non-negative."""
    kt = float(kt)
    if not np.isfinite(kt) or kt < 0:
        raise ValueError("kt must be finite and non-negative, got %r" % kt)
    return kt


def initial_ket(state):
    """
    State vector of GHZ = (|000> + |111>)/sqrt(2) or W = (|100> + |010> + sqrt(2)|001>)/2.
    """
    state = check_state(state)
    ket = np.zeros(8, dtype=complex)
    if state == 'ghz':
        ket[0] = ket[7] = 1.0 / _SQRT2
    else:
        ket[4] = ket[2] = 0.5
        ket[1] = _SQRT2 / 2.0
    return ket


def initial_density(state):
    """Pure-state projector |psi><psi| of the initial state."""
    ket = initial_ket(state)
    return np.outer(ket, ket.conj())


def evolution_coefficients(state, channel, kt):
    """
    Returns the coefficient functions of kt entering the evolved density matrix
    of *state* under *channel*, as a dictionary.
    """
    state = check_state(state)
    kind = as_channel(channel).kind
    kt = check_kt(kt)
    e2, e4, e6 = math.exp(-2 * kt), math.exp(-4 * kt), math.exp(-6 * kt)

    if state == 'ghz':
        if kind in ('x', 'y'):
            coeffs = {'alpha+': 1 + 3 * e4, 'alpha-': 1 - e4}
            if kind == 'y':
                coeffs.update({'beta1': 3 * e2 + e6, 'beta2': e2 - e6})
            return coeffs
        if kind == 'z':
            return {'c': e6}
        e8, e12 = math.exp(-8 * kt), math.exp(-12 * kt)
        return {'alpha~+': 1 + 3 * e8, 'alpha~-': 1 - e8, 'gamma': 4 * e12}

    if kind in ('x', 'y'):
        return {
            'alpha1': 1 + e2 + e4 + e6,
            'alpha2': 1 + e2 - e4 - e6,
            'alpha3': 1 - e2 - e4 + e6,
            'alpha4': 1 - e2 + e4 - e6,
            'beta+': 1 + e6,
            'beta-': 1 - e6,
        }
    if kind == 'z':
        return {'c': e4}
    e8, e12 = math.exp(-8 * kt), math.exp(-12 * kt)
    return {
        'alpha~1': 1 + e4 + e8 + e12,
        'alpha~2': 1 + e4 - e8 - e12,
        'alpha~3': 1 - e4 - e8 + e12,
        'alpha~4': 1 - e4 + e8 - e12,
        'beta~+': 1 + e12,
        'beta~-': 1 - e12,
        'gamma~+': e8 + e12,
        'gamma~-': e8 - e12,
    }


def _fill_symmetric(entries):
    """Builds a real symmetric 8x8 matrix from its upper-triangle entries."""
    rho = np.zeros((8, 8), dtype=complex)
    for (i, j), value in entries.items():
        rho[i, j] = rho[j, i] = value
    return rho


def _ghz_matrix(kind, k):
    if kind == 'z':
        c = k['c']
        return _fill_symmetric({(0, 0): 0.5, (7, 7): 0.5, (0, 7): c / 2})

    if kind == 'depol':
        corner, inner = k['alpha~+'], k['alpha~-']
        anti_corner, anti_inner = k['gamma'], 0.0
    else:
        corner, inner = k['alpha+'], k['alpha-']
        if kind == 'x':
            anti_corner, anti_inner = corner, inner
        else:
            anti_corner, anti_inner = k['beta1'], -k['beta2']

    entries = {(0, 0): corner, (7, 7): corner, (0, 7): anti_corner}
    for i in range(1, 4):
        entries[(i, i)] = entries[(7 - i, 7 - i)] = inner
        entries[(i, 7 - i)] = anti_inner
    return _fill_symmetric(entries) / 8


def _w_matrix(kind, k):
    r2 = _SQRT2
    if kind in ('x', 'y'):
        s = 1.0 if kind == 'x' else -1.0
        a1, a2, a3, a4 = k['alpha1'], k['alpha2'], k['alpha3'], k['alpha4']
        bp, bm = k['beta+'], k['beta-']
        entries = {
            (0, 0): 2 * a2, (0, 3): s * r2 * a2, (0, 5): s * r2 * a2, (0, 6): s * a2,
            (1, 1): 2 * a1, (1, 2): r2 * a1, (1, 4): r2 * a1, (1, 7): s * a3,
            (2, 2): 2 * bp, (2, 4): a1, (2, 7): s * r2 * a3,
            (3, 3): 2 * bm, (3, 5): a4, (3, 6): r2 * a4,
            (4, 4): 2 * bp, (4, 7): s * r2 * a3,
            (5, 5): 2 * bm, (5, 6): r2 * a4,
            (6, 6): 2 * a4, (7, 7): 2 * a3,
        }
        return _fill_symmetric(entries) / 16

    if kind == 'z':
        c = k['c']
        entries = {
            (1, 1): 2.0, (1, 2): r2 * c, (1, 4): r2 * c,
            (2, 2): 1.0, (4, 4): 1.0, (2, 4): c,
        }
        return _fill_symmetric(entries) / 4

    gp, gm = k['gamma~+'], k['gamma~-']
    bp, bm = k['beta~+'], k['beta~-']
    entries = {
        (0, 0): k['alpha~2'],
        (1, 1): k['alpha~1'], (1, 2): r2 * gp, (1, 4): r2 * gp,
        (2, 2): bp, (2, 4): gp, (4, 4): bp,
        (3, 3): bm, (3, 5): gm, (3, 6): r2 * gm, (5, 5): bm, (5, 6): r2 * gm,
        (6, 6): k['alpha~4'], (7, 7): k['alpha~3'],
    }
    return _fill_symmetric(entries) / 8


def evolve_analytic(state, channel, kt):
    """
    Closed-form density matrix rho(kt) of *state* after transmission through *channel*.
    For the GHZ state under phase flip the corner coherence is placed on both
    |000><111| and |111><000|.

    :param state: 'ghz' or 'w'
    :param channel: a ChannelSpec or a channel label
    :param kt: dimensionless scaled time
    :return: an 8x8 complex array
    """
    state = check_state(state)
    kind = as_channel(channel).kind
    coeffs = evolution_coefficients(state, kind, kt)
    if state == 'ghz':
        return _ghz_matrix(kind, coeffs)
    return _w_matrix(kind, coeffs)


def lindblad_operators(channel, n_qubits=3):
    """
    Returns the Lindblad operators sqrt(kappa) sigma_alpha acting on each qubit:
    n_qubits operators for a Pauli channel, 3*n_qubits for the depolarising one.
    """
    channel = as_channel(channel)
    amplitude = math.sqrt(channel.kappa)
    return [amplitude * embed(PAULI[alpha], j, n_qubits)
            for j in range(1, n_qubits + 1) for alpha in channel.paulis]


def lindblad_rhs(rho, channel):
    """
    Right-hand side of the master equation with zero system Hamiltonian,
    sum_i L_i rho L_i^+ - {L_i^+ L_i, rho}/2.
    """
    rho = np.asarray(rho, dtype=complex)
    n_qubits = int(round(math.log2(rho.shape[0])))
    drho = np.zeros_like(rho)
    for op in lindblad_operators(channel, n_qubits):
        op_dag = op.conj().T
        decay = op_dag @ op
        drho += op @ rho @ op_dag - 0.5 * (decay @ rho + rho @ decay)
    return drho


def lindblad_superoperator(channel, n_qubits=3):
    """
    Generator of the master equation as a matrix acting on the row-major
    vectorisation of rho, rho.reshape(-1).
    """
    dim = 2 ** n_qubits
    eye = np.eye(dim)
    generator = np.zeros((dim * dim, dim * dim), dtype=complex)
    for op in lindblad_operators(channel, n_qubits):
        decay = op.conj().T @ op
        generator += np.kron(op, op.conj()) - 0.5 * (np.kron(decay, eye) + np.kron(eye, decay.T))
    return generator


def _rk4_leg(vec, generator, span, step, dim):
    n_steps = max(1, int(math.ceil(span / step - 1.0E-9)))
    h = span / n_steps
    for _ in range(n_steps):
        k1 = generator @ vec
        k2 = generator @ (vec + 0.5 * h * k1)
        k3 = generator @ (vec + 0.5 * h * k2)
        k4 = generator @ (vec + h * k3)
        vec = vec + h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4)

        rho = vec.reshape(dim, dim)
        rho = (rho + rho.conj().T) / 2
        trace = np.trace(rho).real
        if not (np.isfinite(trace) and np.all(np.isfinite(rho))) or trace == 0.0:
            raise IntegrationError("non-finite state in the Runge-Kutta integration")
        vec = (rho / trace).reshape(-1)
    return vec, n_steps


def integrate_lindblad(rho0, channel, kts, step=RK4_STEP):
    """
    Integrates the master equation from rho0 with the classical fourth-order
    Runge-Kutta scheme, in units of kt. Each leg between two consecutive
    checkpoints is split in equal steps no longer than *step*; the state is
    re-Hermitized and renormalized to unit trace after every step.

    :param rho0: initial density matrix
    :param channel: a ChannelSpec or a channel label
    :param kts: sequence of non-negative checkpoint times
    :param step: maximum step in kt units
    :return: list of density matrices, in the order of *kts*
    :raise IntegrationError: if the state becomes non-finite
    """
    channel = as_channel(channel)
    if not step > 0:
        raise ValueError("integration step must be positive, got %r" % (step,))
    rho0 = np.array(rho0, dtype=complex)
    dim = rho0.shape[0]
    n_qubits = int(round(math.log2(dim)))
    checkpoints = [check_kt(kt) for kt in kts]

    # kt is dimensionless, so the generator is taken in units of kappa
    generator = lindblad_superoperator(channel, n_qubits) / channel.kappa
    results = {}
    vec, now, total_steps = rho0.reshape(-1), 0.0, 0
    for kt in sorted(set(checkpoints)):
        if kt > now:
            vec, n_steps = _rk4_leg(vec, generator, kt - now, step, dim)
            total_steps += n_steps
            now = kt
        results[kt] = vec.reshape(dim, dim).copy()

    logger.debug("RK4 %s channel: %d steps up to kt=%g", channel.kind, total_steps, now)
    return [results[kt] for kt in checkpoints]


def evolve_numeric(state, channel, kt, step=RK4_STEP):
    """
    Density matrix at scaled time kt obtained by integrating the master equation
    with RK4, starting from initial_density(state).

    :param state: 'ghz', 'w' or an explicit initial density matrix
    :param channel: a ChannelSpec or a channel label
    :param kt: dimensionless scaled time
    :param step: RK4 step in kt units
    """
    if isinstance(state, str):
        rho0 = initial_density(state)
    else:
        rho0 = state
    return integrate_lindblad(rho0, channel, [kt], step)[0]
