#
# Copyright (c), 2016-2017, Quantum Espresso Foundation and SISSA (Scuola
# Internazionale Superiore di Studi Avanzati). All rights reserved.
# This file is distributed under the terms of the LGPL-2.1 license. See the
# file 'LICENSE' in the root directory of the present distribution, or
# https://opensource.org/licenses/LGPL-2.1
#
"""
Exceptions raised by qdiscord. Each one also derives from the closest builtin
exception, so callers can catch either.
"""


class QDiscordError(Exception):
    """Base class of qdiscord errors."""


class DensityMatrixError(QDiscordError, ValueError):
    """A matrix violates the Hermiticity, unit trace or positivity invariants."""


class DivergenceError(QDiscordError, ArithmeticError):
    """Relative entropy S(rho||sigma) is infinite: supp(rho) is not within supp(sigma)."""


class IntegrationError(QDiscordError, ArithmeticError):
    """The Lindblad integrator produced non-finite values."""


class MinimizationError(QDiscordError, RuntimeError):
    """
    The simplex refinement did not converge.

    :param message: the error message.
    :param best_value: the lowest objective value found.
    :param best_basis: the angles giving best_value.
    """
    def __init__(self, message, best_value=None, best_basis=None):
        super(MinimizationError, self).__init__(message)
        self.best_value = best_value
        self.best_basis = best_basis


class UnsupportedCombinationError(QDiscordError, ValueError):
    """No formula is available for the requested (state, channel, quantity)."""
