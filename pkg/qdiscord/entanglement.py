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
Lower bounds tau3 to the three-qubit concurrence of the GHZ state under the
Pauli channels.
"""
import logging
from functools import lru_cache

import numpy as np
from scipy.optimize import bisect

logger = logging.getLogger(__name__)

TAU3_KINDS = ('ghz_x', 'ghz_y', 'ghz_z')


def _kind(kind):
    key = str(kind).lower()
    if key not in TAU3_KINDS:
        raise ValueError("tau3 is available only for %s, got %r" % (', '.join(TAU3_KINDS), kind))
    return key


def _bit_phase_flip_argument(kt):
    x = np.exp(-2.0 * np.asarray(kt, dtype=float))
    return 3 * x + x ** 2 + x ** 3 - 1


@lru_cache(maxsize=None)
def _bit_phase_flip_death():
    kt = bisect(_bit_phase_flip_argument, 0.0, 10.0, xtol=1.0E-10)
    # first float past the root, where the bound is exactly zero
    while _bit_phase_flip_argument(kt) > 0:
        kt = np.nextafter(kt, np.inf)
    logger.debug("tau3 sudden death under bit-phase flip at kt=%.12f", kt)
    return float(kt)


def sudden_death_time(kind):
    """
    Scaled time after which tau3 vanishes: finite only under bit-phase flip
    noise, None when the bound decays exponentially.
    """
    if _kind(kind) == 'ghz_y':
        return _bit_phase_flip_death()
    return None


def tau3(kind, kt):
    """
    Lower bound to the three-qubit concurrence of the GHZ state at scaled time kt.

    :param kind: 'ghz_x', 'ghz_y' or 'ghz_z'
    :param kt: scaled time, scalar or array
    :return: value(s) in [0, 1]
    """
    kind = _kind(kind)
    kt = np.asarray(kt, dtype=float)
    if np.any(~np.isfinite(kt)) or np.any(kt < 0):
        raise ValueError("kt must be finite and non-negative")

    if kind == 'ghz_x':
        value = np.exp(-4.0 * kt)
    elif kind == 'ghz_z':
        value = np.exp(-6.0 * kt)
    else:
        value = np.where(kt >= _bit_phase_flip_death(), 0.0,
                         np.clip(_bit_phase_flip_argument(kt) / 4, 0.0, None))
    return float(value) if value.ndim == 0 else value


def robustness_report(kind, kts, minimized=False):
    """
    Compares tau3 with the discord of the GHZ state along a list of times.

    :param kind: 'ghz_x', 'ghz_y' or 'ghz_z'
    :param kts: scaled times
    :param minimized: use minimize_gqd instead of the closed-form discord
    :return: list of dictionaries with keys kt, tau3, discord, discord_only \
    (True where the state has discord but a vanishing tau3)
    """
    from .channels import evolve_analytic
    from .discord import closed_form_discord, minimize_gqd

    kind = _kind(kind)
    rows = []
    for kt in kts:
        if minimized:
            discord = minimize_gqd(evolve_analytic('ghz', kind[-1], kt)).value
        else:
            discord = closed_form_discord(kind, kt)
        bound = tau3(kind, kt)
        rows.append({'kt': float(kt), 'tau3': bound, 'discord': discord,
                     'discord_only': bound == 0.0 and discord > 0.0})
    return rows
