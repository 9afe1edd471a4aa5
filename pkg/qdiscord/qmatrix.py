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
Dense complex-matrix kernel for few-qubit states: tensor products, partial traces,
a cyclic Jacobi eigensolver for Hermitian matrices and base-2 entropies.

Qubit 1 is the most significant tensor factor, so the computational basis is
ordered as |000>, |001>, ..., |111>.
"""
import logging
from collections import namedtuple
from functools import reduce
from operator import index

import numpy as np

from .constants import HERMITICITY_TOL, TRACE_TOL, PSD_TOL, EIGEN_CUTOFF, \
    SUPPORT_TOL, KLEIN_TOL, JACOBI_TOL, JACOBI_MAX_SWEEPS
from .exceptions import DensityMatrixError, DivergenceError

logger = logging.getLogger(__name__)

IDENTITY = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

PAULI = {'i': IDENTITY, 'x': SIGMA_X, 'y': SIGMA_Y, 'z': SIGMA_Z}

Spectrum = namedtuple('Spectrum', ['eigenvalues', 'eigenvectors'])
Spectrum.__doc__ = "Eigenvalues in descending order and the unitary matrix of eigenvectors (columns)."


def pauli(label):
    """
    Returns the 2x2 Pauli matrix for *label* ('i', 'x', 'y' or 'z').
    """
    try:
        return PAULI[label.lower()].copy()
    except (KeyError, AttributeError):
        raise ValueError("unknown Pauli label %r: use one of 'i', 'x', 'y', 'z'" % (label,))


def _as_square(a, name='matrix'):
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("%s must be a square 2D array, got shape %r" % (name, a.shape))
    return a


def kron(a, b, *others):
    """
    Tensor product of square matrices, a (x) b (x) ... The entry (i*dim(b)+k, j*dim(b)+l)
    of kron(a, b) is a[i, j] * b[k, l].

    :param a: first factor (most significant)
    :param b: second factor
    :param others: further factors, appended in order
    :return: the complex matrix of dimension dim(a)*dim(b)*...
    """
    factors = [_as_square(m, 'factor') for m in (a, b) + others]
    return reduce(np.kron, factors)


def qubit_count(a):
    """
    Returns the number of qubits n of a 2**n x 2**n matrix.
    """
    dim = np.shape(a)[0]
    n = int(round(np.log2(dim))) if dim > 0 else -1
    if n < 0 or 2 ** n != dim:
        raise ValueError("dimension %d is not a power of two" % dim)
    return n


def embed(op, qubit, n_qubits=3):
    """
    Returns the operator acting as *op* on the given qubit (1-based) and as the
    identity on the others.
    """
    if not 1 <= qubit <= n_qubits:
        raise ValueError("qubit index must be in 1..%d, got %r" % (n_qubits, qubit))
    factors = [IDENTITY] * n_qubits
    factors[qubit - 1] = _as_square(op, 'op')
    return reduce(np.kron, factors)


def is_hermitian(a, tol=HERMITICITY_TOL):
    a = np.asarray(a)
    return np.max(np.abs(a - a.conj().T)) <= tol


def check_density_matrix(rho, hermiticity_tol=HERMITICITY_TOL, trace_tol=TRACE_TOL, psd_tol=PSD_TOL):
    """
    Checks that *rho* is a valid density matrix of one or more qubits: Hermitian,
    with unit trace and positive semidefinite within the given tolerances.

    :return: the Hermitized complex array (rho + rho^dagger) / 2
    :raise DensityMatrixError: if any invariant is violated
    """
    rho = _as_square(rho, 'density matrix')
    try:
        qubit_count(rho)
    except ValueError as err:
        raise DensityMatrixError(str(err))

    deviation = np.max(np.abs(rho - rho.conj().T))
    if deviation > hermiticity_tol:
        raise DensityMatrixError("matrix is not Hermitian: max |rho - rho^+| = %.3e" % deviation)
    rho = (rho + rho.conj().T) / 2

    trace = np.trace(rho).real
    if abs(trace - 1.0) > trace_tol:
        raise DensityMatrixError("trace is %.15g, expected 1" % trace)

    lowest = hermitian_eig(rho).eigenvalues[-1]
    if lowest < -psd_tol:
        raise DensityMatrixError("matrix is not positive semidefinite: min eigenvalue = %.3e" % lowest)
    return rho


def partial_trace(rho, keep):
    """
    Traces out all the qubits not listed in *keep*.

    :param rho: a 2**n x 2**n matrix
    :param keep: a 1-based qubit index or a sequence of indexes of the qubits to keep
    :return: the reduced matrix on the kept qubits, in their original order
    """
    rho = _as_square(rho, 'density matrix')
    n = qubit_count(rho)
    if np.ndim(keep) == 0:
        keep = [keep]
    try:
        keep = sorted(set(index(k) for k in keep))
    except TypeError:
        raise ValueError("qubit indexes must be integers, got %r" % (keep,))
    if not keep or keep[0] < 1 or keep[-1] > n:
        raise ValueError("qubit indexes must be in 1..%d, got %r" % (n, keep))

    kept = [k - 1 for k in keep]
    traced = [k for k in range(n) if k not in kept]
    dk, dt = 2 ** len(kept), 2 ** len(traced)

    tensor = rho.reshape([2] * (2 * n))
    order = kept + traced + [n + k for k in kept] + [n + k for k in traced]
    tensor = tensor.transpose(order).reshape(dk, dt, dk, dt)
    return np.einsum('ajbj->ab', tensor)


def swap_qubits(rho, i, j):
    """
    Exchanges the tensor factors of qubits i and j (1-based) of a state.
    """
    rho = _as_square(rho, 'density matrix')
    n = qubit_count(rho)
    perm = list(range(n))
    perm[i - 1], perm[j - 1] = perm[j - 1], perm[i - 1]
    tensor = rho.reshape([2] * (2 * n)).transpose(perm + [n + p for p in perm])
    return tensor.reshape(rho.shape)


def hermitian_eig(a, tol=JACOBI_TOL, max_sweeps=JACOBI_MAX_SWEEPS):
    """
    Eigendecomposition of a Hermitian matrix by the cyclic Jacobi method. Each
    pivot (p, q) is annihilated by a phase rotation that makes a[p, q] real
    followed by a real plane rotation. Sweeps stop when the off-diagonal Frobenius
    norm falls below tol * max(1, ||a||).

    :param a: Hermitian matrix (within 1e-10)
    :param tol: relative convergence threshold on the off-diagonal norm
    :param max_sweeps: maximum number of cyclic sweeps
    :return: a Spectrum, eigenvalues in descending order
    :raise DensityMatrixError: for non-Hermitian input
    :raise numpy.linalg.LinAlgError: if the sweeps do not converge
    """
    a = _as_square(a)
    if not is_hermitian(a, tol=1.0E-10):
        raise DensityMatrixError("hermitian_eig requires a Hermitian matrix")

    a = (a + a.conj().T) / 2
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    threshold = tol * max(1.0, np.linalg.norm(a))

    for sweep in range(max_sweeps + 1):
        off = np.linalg.norm(a - np.diag(np.diagonal(a)))
        if off < threshold:
            break
        if sweep == max_sweeps:
            raise np.linalg.LinAlgError("Jacobi sweeps did not converge: off-diagonal norm %.3e" % off)

        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                modulus = abs(apq)
                if modulus == 0.0:
                    continue
                phase = apq / modulus
                theta = 0.5 * np.arctan2(2.0 * modulus, (a[p, p] - a[q, q]).real)
                c, s = np.cos(theta), np.sin(theta)
                rot = np.array([[c, -s], [s * phase.conjugate(), c * phase.conjugate()]])

                idx = [p, q]
                a[:, idx] = a[:, idx] @ rot
                a[idx, :] = rot.conj().T @ a[idx, :]
                a[q, p] = a[p, q] = 0.0
                v[:, idx] = v[:, idx] @ rot

    logger.debug("Jacobi eigensolver converged after %d sweeps", sweep)
    eigenvalues = np.diagonal(a).real
    order = np.argsort(-eigenvalues, kind='stable')
    return Spectrum(eigenvalues[order], v[:, order])


def clipped_eigenvalues(rho, psd_tol=PSD_TOL):
    """
    Eigenvalues of a density matrix with roundoff negatives in [-psd_tol, 0) set to zero.

    :raise DensityMatrixError: if an eigenvalue is below -psd_tol
    """
    eigenvalues = hermitian_eig(rho).eigenvalues
    if eigenvalues[-1] < -psd_tol:
        raise DensityMatrixError("negative eigenvalue %.3e in density matrix" % eigenvalues[-1])
    return np.clip(eigenvalues, 0.0, None)


def xlog2x(x):
    """
    Elementwise x * log2(x) with the convention 0 log 0 = 0. Values below
    EIGEN_CUTOFF count as zero.
    """
    x = np.asarray(x, dtype=float)
    safe = np.where(x > EIGEN_CUTOFF, x, 1.0)
    return np.where(x > EIGEN_CUTOFF, x * np.log2(safe), 0.0)


def shannon_entropy(p, axis=-1):
    """Shannon entropy in bits of the probability vector(s) p along *axis*."""
    return -np.sum(xlog2x(p), axis=axis)


def binary_entropy(p):
    return shannon_entropy([p, 1.0 - p])


def von_neumann_entropy(rho):
    """
    Returns S(rho) = -Tr[rho log2 rho] in bits.
    """
    return float(shannon_entropy(clipped_eigenvalues(rho)))


def relative_entropy(rho, sigma, support_tol=SUPPORT_TOL):
    """
    Quantum relative entropy S(rho||sigma) = Tr rho log2 rho - Tr rho log2 sigma, in bits.
    Roundoff negatives in [-KLEIN_TOL, 0) are returned as 0, larger negative values
    are returned unchanged.

    :param rho: density matrix
    :param sigma: density matrix of the same dimension
    :param support_tol: largest weight of rho allowed on the kernel of sigma
    :raise DivergenceError: if supp(rho) is not contained in supp(sigma)
    """
    rho = _as_square(rho)
    sigma = _as_square(sigma)
    if rho.shape != sigma.shape:
        raise ValueError("dimension mismatch: %r vs %r" % (rho.shape, sigma.shape))

    neg_entropy = -von_neumann_entropy(rho)

    mu, w = hermitian_eig(sigma)
    weights = np.einsum('ik,ij,jk->k', w.conj(), rho, w).real
    kernel = mu <= EIGEN_CUTOFF
    if np.any(weights[kernel] > support_tol):
        raise DivergenceError(
            "rho has weight %.3e outside the support of sigma" % np.max(weights[kernel])
        )
    cross = np.sum(weights[~kernel] * np.log2(mu[~kernel]))
    value = float(neg_entropy - cross)
    if -KLEIN_TOL <= value < 0.0:
        value = 0.0
    return value
