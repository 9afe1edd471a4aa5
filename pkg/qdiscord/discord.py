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
Global quantum discord of three-qubit states.

The discord of rho is the minimum, over local von Neumann measurements on each
qubit, of

    S(rho || Phi(rho)) - sum_j S(rho_j || Phi_j(rho_j))

where Phi is the pinching with the product projectors and Phi_j the pinching of
the reduced state of qubit j. Every relative entropy against a pinching is
evaluated as S(Phi(x)) - S(x); the pinched entropies are Shannon entropies of
the diagonal of x in the measured basis.

The measurement on qubit j is fixed by a polar angle theta_j and an azimuthal
angle phi_j: the first projector is |v><v| with
v = (cos(theta/2), exp(-i phi) sin(theta/2)), the second is I - |v><v|.
"""
import logging
import math
from collections import namedtuple
from dataclasses import dataclass
from itertools import product

import numpy as np
from scipy.optimize import minimize

from .constants import pi, tpi, GRID_THETA, GRID_PHI, N_REFINE, NM_MAXITER, \
    NM_XATOL, NM_FATOL, SYMMETRY_TOL, POLE_TOL
from .exceptions import MinimizationError
from .qmatrix import IDENTITY, check_density_matrix, partial_trace, swap_qubits, \
    von_neumann_entropy, shannon_entropy, xlog2x

logger = logging.getLogger(__name__)

CLOSED_FORM_KINDS = ('ghz_x', 'ghz_y', 'ghz_z', 'ghz_d', 'w_z', 'w_d')
ENTROPY_KINDS = ('ghz_x', 'ghz_z', 'w_z')
ALTERNATIVE_KINDS = ('ghz_x', 'ghz_y')

MeasurementBasis = namedtuple('MeasurementBasis', ['theta', 'phi'])
MeasurementBasis.__doc__ = "Polar (theta) and azimuthal (phi) angles of the measurement on each of the three qubits."

_NAMED_AXES = {'z': (0.0, 0.0), 'x': (pi / 2, 0.0), 'y': (pi / 2, pi / 2)}


@dataclass
class DiscordResult:
    """
    Result of minimize_gqd.

    :param value: minimized discord in bits
    :param argmin: canonical measurement basis attaining the value
    :param evaluations: number of objective evaluations (grid points plus simplex steps)
    :param residual: spread of the refined minima
    """
    value: float
    argmin: MeasurementBasis
    evaluations: int
    residual: float


###
# Measurements and pinchings

def as_basis(basis):
    """
    Accepts a MeasurementBasis, a 6-vector (theta1, phi1, theta2, phi2, theta3, phi3)
    or a name accepted by named_basis.
    """
    if isinstance(basis, MeasurementBasis):
        return basis
    if isinstance(basis, str):
        return named_basis(basis)
    x = np.asarray(basis, dtype=float).ravel()
    if x.size != 6:
        raise ValueError("a measurement basis needs 6 angles, got %d" % x.size)
    return MeasurementBasis(tuple(x[0::2]), tuple(x[1::2]))


def basis_vector(basis):
    basis = as_basis(basis)
    return np.ravel(np.column_stack([basis.theta, basis.phi]))


def named_basis(label):
    """
    Returns the basis of the eigenprojectors of the named Pauli matrices:
    'sigma_x', 'sigma_y', 'sigma_z' (same axis on every qubit) or a string of
    three axes such as 'xyy'.
    """
    key = label.lower()
    if key.startswith('sigma_'):
        key = key[len('sigma_'):] * 3
    if len(key) != 3 or any(axis not in _NAMED_AXES for axis in key):
        raise ValueError("unknown basis name %r" % (label,))
    angles = [_NAMED_AXES[axis] for axis in key]
    return MeasurementBasis(tuple(a[0] for a in angles), tuple(a[1] for a in angles))


def canonical_basis(basis):
    """
    Maps a basis to a representative measuring the same projectors, with
    theta in [0, pi/2], phi = 0 at the pole and phi in [0, pi) on the equator.
    """
    basis = as_basis(basis)
    thetas, phis = [], []
    for theta, phi in zip(basis.theta, basis.phi):
        theta = math.fmod(theta, tpi)
        if theta < 0:
            theta += tpi
        if theta > pi:
            theta, phi = tpi - theta, phi + pi
        if theta > pi / 2:
            theta, phi = pi - theta, phi + pi
        phi = math.fmod(phi, tpi)
        if phi < 0:
            phi += tpi
        if theta < POLE_TOL:
            theta, phi = 0.0, 0.0
        elif abs(theta - pi / 2) < POLE_TOL:
            theta, phi = pi / 2, math.fmod(phi, pi)
        if tpi - phi < POLE_TOL:
            phi = 0.0
        thetas.append(theta)
        phis.append(phi)
    return MeasurementBasis(tuple(thetas), tuple(phis))


def basis_unitary(theta, phi):
    """
    2x2 unitary whose columns are the measured states of a qubit for the angles
    (theta, phi). Broadcasts over arrays of angles, returning shape (..., 2, 2).
    """
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    phase = np.exp(-1j * phi)
    u = np.empty(np.broadcast(theta, phi).shape + (2, 2), dtype=complex)
    u[..., 0, 0] = c
    u[..., 1, 0] = phase * s
    u[..., 0, 1] = -phase.conj() * s
    u[..., 1, 1] = c
    return u


def projectors(basis, qubit):
    """
    The two orthogonal projectors measured on a qubit.

    :param basis: a MeasurementBasis (or anything accepted by as_basis)
    :param qubit: 1-based qubit index
    :return: the pair (Pi_1, Pi_2), with Pi_1 + Pi_2 = I
    """
    basis = as_basis(basis)
    if qubit not in (1, 2, 3):
        raise ValueError("qubit index must be 1, 2 or 3, got %r" % (qubit,))
    v = basis_unitary(basis.theta[qubit - 1], basis.phi[qubit - 1])[:, 0]
    first = np.outer(v, v.conj())
    return first, IDENTITY - first


def pinch_local(rho, theta, phi):
    """
    Pinching of a one-qubit state with the projectors of angles (theta, phi).
    """
    v = basis_unitary(theta, phi)[:, 0]
    first = np.outer(v, v.conj())
    second = IDENTITY - first
    rho = np.asarray(rho, dtype=complex)
    return first @ rho @ first + second @ rho @ second


def pinch_global(rho, basis):
    """
    Pinching sum_k Pi_k rho Pi_k of a three-qubit state with the 8 product
    projectors Pi_k = Pi^(1) x Pi^(2) x Pi^(3) of the basis.
    """
    basis = as_basis(basis)
    rho = np.asarray(rho, dtype=complex)
    local = [projectors(basis, j) for j in (1, 2, 3)]
    pinched = np.zeros_like(rho)
    for p1, p2, p3 in product(*local):
        proj = np.kron(np.kron(p1, p2), p3)
        pinched += proj @ rho @ proj
    return pinched


###
# Objective

class GQDObjective(object):
    """
    Objective function of the discord minimization for a fixed three-qubit state.
    The entropies of the state and of its one-qubit reductions are computed once.

    :param rho: 8x8 density matrix
    """
    def __init__(self, rho):
        self.rho = check_density_matrix(rho)
        if self.rho.shape != (8, 8):
            raise ValueError("the discord objective is defined for three-qubit states")
        self.entropy = von_neumann_entropy(self.rho)
        self.reduced = [partial_trace(self.rho, j) for j in (1, 2, 3)]
        self.reduced_entropies = [von_neumann_entropy(r) for r in self.reduced]
        self.tensor = self.rho.reshape((2,) * 6)
        self.evaluations = 0

    def __call__(self, basis):
        if isinstance(basis, MeasurementBasis):
            x = basis_vector(basis)
        else:
            x = np.asarray(basis, dtype=float)
        self.evaluations += 1

        units = basis_unitary(x[0::2], x[1::2])
        u = np.kron(np.kron(units[0], units[1]), units[2])
        probs = np.einsum('ia,ij,ja->a', u.conj(), self.rho, u).real
        value = shannon_entropy(probs) - self.entropy
        for j in range(3):
            q = np.einsum('ia,ij,ja->a', units[j].conj(), self.reduced[j], units[j]).real
            value -= shannon_entropy(q) - self.reduced_entropies[j]
        return float(value)

    def local_costs(self, unitaries):
        """
        Local terms S(Phi_j(rho_j)) - S(rho_j) for every qubit and every unitary.

        :param unitaries: array of shape (m, 2, 2)
        :return: array of shape (3, m)
        """
        costs = []
        for reduced, entropy in zip(self.reduced, self.reduced_entropies):
            q = np.einsum('gia,ij,gja->ga', unitaries.conj(), reduced, unitaries).real
            costs.append(shannon_entropy(q) - entropy)
        return np.array(costs)

    def grid_slices(self, unitaries, first):
        """
        Objective values at fixed measurement *first* on qubit 1 for all pairs of
        grid unitaries on qubits 2 and 3.

        :return: array of shape (m, m) indexed by (g2, g3)
        """
        u1 = unitaries[first]
        partial = np.einsum('ia,ijklmn,la->ajkmn', u1.conj(), self.tensor, u1)
        partial = np.einsum('gjb,ajkmn,gmb->gabkn', unitaries.conj(), partial, unitaries)
        probs = np.einsum('hkc,gabkn,hnc->ghabc', unitaries.conj(), partial, unitaries,
                          optimize=True).real
        m = unitaries.shape[0]
        self.evaluations += m * m
        return shannon_entropy(probs.reshape(m, m, 8)) - self.entropy

    def exchange_symmetries(self):
        """Returns (swap12, swap23): whether rho is invariant under those qubit exchanges."""
        return tuple(
            np.max(np.abs(swap_qubits(self.rho, i, j) - self.rho)) <= SYMMETRY_TOL
            for i, j in ((1, 2), (2, 3))
        )


def gqd_objective(rho, basis):
    """
    Discord objective S(rho||Phi(rho)) - sum_j S(rho_j||Phi_j(rho_j)) at a given basis.

    :param rho: 8x8 density matrix
    :param basis: a MeasurementBasis, a 6-vector of angles or a basis name
    :return: objective value in bits
    """
    return GQDObjective(rho)(as_basis(basis))


###
# Minimization

def angle_grid(n_theta=GRID_THETA, n_phi=GRID_PHI):
    """
    Grid of one-qubit measurement angles: theta = k pi / n_theta and
    phi = 2 m pi / n_phi, with a single point at the pole. Points are ordered
    by (theta, phi).

    :return: array of shape (m, 2)
    """
    points = [(0.0, 0.0)]
    for k in range(1, n_theta):
        for m in range(n_phi):
            points.append((k * pi / n_theta, m * tpi / n_phi))
    return np.array(points)


def _grid_scan(objective, grid, n_best):
    unitaries = basis_unitary(grid[:, 0], grid[:, 1])
    m = len(grid)
    costs = objective.local_costs(unitaries)
    swap12, swap23 = objective.exchange_symmetries()
    logger.debug("grid scan on %d angle pairs per qubit, swap12=%s swap23=%s", m, swap12, swap23)

    index2, index3 = np.meshgrid(np.arange(m), np.arange(m), indexing='ij')
    candidates = []
    for g1 in range(m):
        values = objective.grid_slices(unitaries, g1)
        values -= costs[0, g1] + costs[1][:, None] + costs[2][None, :]
        mask = np.ones((m, m), dtype=bool)
        if swap12:
            mask &= index2 >= g1
        if swap23:
            mask &= index3 >= index2
        if not mask.any():
            continue
        vals, g2s, g3s = values[mask], index2[mask], index3[mask]
        order = np.lexsort((g3s, g2s, np.round(vals, 12)))[:n_best]
        candidates.extend((vals[k], g1, g2s[k], g3s[k]) for k in order)

    candidates = np.array(candidates)
    order = np.lexsort((candidates[:, 3], candidates[:, 2], candidates[:, 1],
                        np.round(candidates[:, 0], 12)))[:n_best]
    starts = []
    for value, g1, g2, g3 in candidates[order]:
        angles = grid[[int(g1), int(g2), int(g3)]]
        starts.append((value, angles.ravel()))
    return starts


def minimize_gqd(rho, n_theta=GRID_THETA, n_phi=GRID_PHI, n_refine=N_REFINE,
                 maxiter=NM_MAXITER, xatol=NM_XATOL, fatol=NM_FATOL):
    """
    Global quantum discord of a three-qubit state. The six angles are first scanned
    on a product grid (n_theta x n_phi points per qubit, pruned by the exchange
    symmetries of rho), then the best n_refine grid points are refined with the
    Nelder-Mead simplex. The result is the lowest refined value.

    :param rho: 8x8 density matrix
    :param n_theta: number of polar angles in the grid
    :param n_phi: number of azimuthal angles in the grid
    :param n_refine: number of simplex refinements
    :param maxiter: iteration limit of each refinement
    :param xatol: simplex tolerance on the angles
    :param fatol: simplex tolerance on the objective
    :return: a DiscordResult
    :raise MinimizationError: if the winning refinement hit the iteration limit
    """
    objective = GQDObjective(rho)
    grid = angle_grid(n_theta, n_phi)
    starts = _grid_scan(objective, grid, n_refine)

    steps = np.tile([pi / n_theta / 2, pi / n_phi], 3)
    refined = []
    for grid_value, x0 in starts:
        simplex = np.vstack([x0, x0 + np.diag(steps)])
        res = minimize(objective, x0, method='Nelder-Mead',
                       options={'initial_simplex': simplex, 'maxiter': maxiter,
                                'xatol': xatol, 'fatol': fatol})
        converged = bool(res.success)
        logger.debug("simplex from %.12f: %.12f after %d iterations (%s)",
                     grid_value, res.fun, res.nit, res.message)
        refined.append((float(res.fun), tuple(res.x), converged))

    refined.sort(key=lambda item: (round(item[0], 12), item[1]))
    best_value, best_x, converged = refined[0]
    if not converged:
        raise MinimizationError(
            "Nelder-Mead refinement did not converge in %d iterations" % maxiter,
            best_value=best_value, best_basis=canonical_basis(best_x)
        )

    values = [item[0] for item in refined]
    return DiscordResult(
        value=max(0.0, best_value),
        argmin=canonical_basis(best_x),
        evaluations=objective.evaluations,
        residual=max(values) - min(values),
    )


def candidate_discords(rho, labels=('sigma_z', 'sigma_x', 'sigma_y')):
    """
    Objective at a set of named bases.

    :return: a dictionary label -> value and the label with the lowest value
    """
    objective = GQDObjective(rho)
    values = {label: objective(named_basis(label)) for label in labels}
    winner = min(labels, key=lambda label: (round(values[label], 12), labels.index(label)))
    return values, winner


###
# Closed forms

def _kind(kind, allowed):
    key = str(kind).lower()
    if key not in allowed:
        raise ValueError("unknown kind %r: use one of %s" % (kind, ', '.join(allowed)))
    return key


def _check_times(kt):
    kt = np.asarray(kt, dtype=float)
    if np.any(~np.isfinite(kt)) or np.any(kt < 0):
        raise ValueError("kt must be finite and non-negative")
    return kt


def _result(value):
    return float(value) if np.ndim(value) == 0 else value


def _w_depolarising(kt, printed):
    r = np.exp(-4 * kt)
    a1 = 1 + r + r ** 2 + r ** 3
    a2 = 1 + r - r ** 2 - r ** 3
    a3 = 1 - r - r ** 2 + r ** 3
    a4 = 1 - r + r ** 2 - r ** 3
    bp, bm = 1 + r ** 3, 1 - r ** 3
    gp, gm = r ** 2 + r ** 3, r ** 2 - r ** 3

    def block(b, g, a):
        root = np.sqrt(np.clip((b + g - a) ** 2 + 16 * g ** 2, 0, None))
        return xlog2x(b + g + a - root) + xlog2x(b + g + a + root)

    eigen_terms = (xlog2x(bp - gp) + xlog2x(bm - gm)) / 8 + (block(bp, gp, a1) + block(bm, gm, a4)) / 16
    if printed:
        return (3 - r ** 2) / 2 + eigen_terms - (
            xlog2x(bp) + xlog2x(bm) + xlog2x(a1) + 2 * xlog2x(a2) + 2 * xlog2x(a3) + xlog2x(a4)) / 4
    return -(1 + r ** 2) / 2 + eigen_terms - (xlog2x(a1) + xlog2x(a4)) / 8 - (xlog2x(bp) + xlog2x(bm)) / 4


def closed_form_discord(kind, kt, printed=False):
    """
    Analytic discord for the states whose minimum is attained with all the qubits
    measured along sigma_z.

    :param kind: one of 'ghz_x', 'ghz_y', 'ghz_z', 'ghz_d', 'w_z', 'w_d'
    :param kt: scaled time, scalar or array
    :param printed: for 'ghz_d' and 'w_d', evaluate the expressions in their \
    originally published form instead of the corrected ones
    :return: discord in bits
    """
    kind = _kind(kind, CLOSED_FORM_KINDS)
    kt = _check_times(kt)

    if kind == 'ghz_x':
        value = np.ones_like(kt)
    elif kind == 'ghz_y':
        e2, e4, e6 = np.exp(-2 * kt), np.exp(-4 * kt), np.exp(-6 * kt)
        ap, am = 1 + 3 * e4, 1 - e4
        b1, b2 = 3 * e2 + e6, e2 - e6
        value = (xlog2x(ap - b1) + xlog2x(ap + b1) + 3 * xlog2x(am - b2) + 3 * xlog2x(am + b2)) / 8 \
            - xlog2x(ap) / 4 - 3 * xlog2x(am) / 4
    elif kind == 'ghz_z':
        c = np.exp(-6 * kt)
        value = (xlog2x(1 + c) + xlog2x(1 - c)) / 2
    elif kind == 'ghz_d':
        a = 1 + 3 * np.exp((-4 if printed else -8) * kt)
        g = 4 * np.exp(-12 * kt)
        value = (xlog2x(a + g) + xlog2x(a - g)) / 8 - xlog2x(a) / 4
    elif kind == 'w_z':
        c = np.exp(-4 * kt)
        root = np.sqrt(1 - 2 * c + 17 * c ** 2)
        value = -(5 + c) / 4 + xlog2x(1 - c) / 4 + (xlog2x(3 + c - root) + xlog2x(3 + c + root)) / 8
    else:
        value = _w_depolarising(kt, printed)
    return _result(value)


def closed_form_entropy(kind, kt):
    """
    Analytic von Neumann entropy S(rho(kt)) for 'ghz_x', 'ghz_z' and 'w_z'.
    """
    kind = _kind(kind, ENTROPY_KINDS)
    kt = _check_times(kt)
    if kind == 'ghz_x':
        e4 = np.exp(-4 * kt)
        value = 2 - 3 * xlog2x(1 - e4) / 4 - xlog2x(1 + 3 * e4) / 4
    elif kind == 'ghz_z':
        c = np.exp(-6 * kt)
        value = 1 - (xlog2x(1 + c) + xlog2x(1 - c)) / 2
    else:
        c = np.exp(-4 * kt)
        root = np.sqrt(1 - 2 * c + 17 * c ** 2)
        value = (11 + c) / 4 - xlog2x(1 - c) / 4 - (xlog2x(3 + c - root) + xlog2x(3 + c + root)) / 8
    return _result(value)


def alternative_closed_form(kind, kt):
    """
    Objective of the GHZ state in bases other than sigma_z, which give lower values
    at late times: bit flip noise measured along sigma_x on every qubit ('ghz_x')
    and bit-phase flip noise measured along (sigma_x, sigma_y, sigma_y) ('ghz_y').
    """
    kind = _kind(kind, ALTERNATIVE_KINDS)
    kt = _check_times(kt)
    e2, e4, e6 = np.exp(-2 * kt), np.exp(-4 * kt), np.exp(-6 * kt)
    ap, am = 1 + 3 * e4, 1 - e4
    if kind == 'ghz_x':
        value = xlog2x(ap) / 4 + 3 * xlog2x(am) / 4
    else:
        b1, b2 = 3 * e2 + e6, e2 - e6
        value = (xlog2x(ap - b1) + xlog2x(ap + b1) + 3 * xlog2x(am - b2) + 3 * xlog2x(am + b2)) / 8 \
            - (xlog2x(1 + e2) + xlog2x(1 - e2)) / 2
    return _result(value)


ALTERNATIVE_BASES = {'ghz_x': 'sigma_x', 'ghz_y': 'xyy'}
