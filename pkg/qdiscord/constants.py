#
# Copyright (c), 2016-2017, Quantum Espresso Foundation and SISSA (Scuola
# Internazionale Superiore di Studi Avanzati). All rights reserved.
# This file is distributed under the terms of the LGPL-2.1 license. See the
# file 'LICENSE' in the root directory of the present distribution, or
# https://opensource.org/licenses/LGPL-2.1
#
# Numerical constants and tolerances
from numpy import pi

tpi = 2.0 * pi

# density matrix invariants
HERMITICITY_TOL = 1.0E-12
TRACE_TOL = 1.0E-12
PSD_TOL = 1.0E-10            # eigenvalues in [-PSD_TOL, 0) are roundoff and clipped
EIGEN_CUTOFF = 1.0E-12       # eigenvalues below contribute 0 to entropies (0 log 0 = 0)
SUPPORT_TOL = 1.0E-10        # weight of rho outside supp(sigma) tolerated by relative_entropy
KLEIN_TOL = 1.0E-12          # negative relative entropies above -KLEIN_TOL are roundoff and set to 0
RECONSTRUCTION_TOL = 1.0E-10

# cyclic Jacobi eigensolver
JACOBI_TOL = 1.0E-13
JACOBI_MAX_SWEEPS = 100

# Lindblad integrator (kt units)
RK4_STEP = 1.0E-4

# discord minimization
GRID_THETA = 12              # polar angles theta = k pi / GRID_THETA
GRID_PHI = 12                # azimuthal angles phi = 2 k pi / GRID_PHI
N_REFINE = 5                 # simplex refinements started from the best grid points
NM_MAXITER = 10000
NM_XATOL = 1.0E-7
NM_FATOL = 1.0E-12
SYMMETRY_TOL = 1.0E-12
POLE_TOL = 1.0E-6            # |theta| below which phi is irrelevant and set to 0

# agreement thresholds
VALUE_TOL = 1.0E-6           # minimized value
AGREEMENT_TOL = 1.0E-5       # minimized vs closed form
ORACLE_TOL = 1.0E-7          # RK4 vs analytic evolution

# sweeps and output
MAX_SWEEP_POINTS = 10 ** 6
CSV_DIGITS = 12

# value quoted for the long-time discord of the W state under bit flip noise
W_ASYMPTOTE_CLAIM = 0.813
