#
# Copyright (c), 2016-2017, Quantum Espresso Foundation and SISSA (Scuola
# Internazionale Superiore di Studi Avanzati). All rights reserved.
# This file is distributed under the terms of the LGPL-2.1 license. See the
# file 'LICENSE' in the root directory of the present distribution, or
# https://opensource.org/licenses/LGPL-2.1
#
__version__ = '0.1.0'

from .exceptions import QDiscordError, DensityMatrixError, DivergenceError, IntegrationError, \
    MinimizationError, UnsupportedCombinationError
from .qmatrix import kron, partial_trace, hermitian_eig, von_neumann_entropy, relative_entropy, \
    check_density_matrix, Spectrum
from .channels import ChannelSpec, initial_density, evolve_analytic, lindblad_rhs, evolve_numeric, \
    integrate_lindblad
from .discord import MeasurementBasis, DiscordResult, projectors, pinch_global, pinch_local, \
    gqd_objective, minimize_gqd, closed_form_discord, closed_form_entropy, alternative_closed_form
from .entanglement import tau3, sudden_death_time, robustness_report
from .api import SweepConfig, SweepTable, run_sweep, run_figure
from .readutils import write_sweep_table, read_sweep_table
