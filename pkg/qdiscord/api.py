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
A collection of functions to be part of qdiscord API and exposed to the user:
sweeps over the scaled time kt and the presets reproducing the published curve sets.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .constants import RK4_STEP, MAX_SWEEP_POINTS
from .channels import STATES, CHANNELS, ChannelSpec, initial_density, evolve_analytic, \
    integrate_lindblad
from .discord import CLOSED_FORM_KINDS, closed_form_discord, minimize_gqd
from .entanglement import TAU3_KINDS, tau3
from .exceptions import UnsupportedCombinationError
from .readutils import format_float

logger = logging.getLogger(__name__)

METHODS = ('closed', 'min', 'both', 'none')
_METHOD_ALIASES = {'closed_form': 'closed', 'minimized': 'min'}

QUANTITIES = ('discord_closed', 'discord_min', 'discord_absdiff', 'tau3', 'integrator_error')


def formula_kind(state, channel):
    """Label of the (state, channel) pair used by the closed forms, e.g. 'ghz_d'."""
    return '{}_{}'.format(state, 'd' if channel == 'depol' else channel)


@dataclass
class SweepConfig:
    """
    Parameters of a sweep over kt.

    :param state: 'ghz' or 'w'
    :param channel: 'x', 'y', 'z' or 'depol'
    :param kt_start: first scaled time
    :param kt_end: last scaled time
    :param points: number of equally spaced times
    :param method: 'closed' (analytic discord), 'min' (minimized discord), \
    'both' (the two and their absolute difference) or 'none' (no discord column). \
    'none' is not offered on the command line: it serves the tau3-only figure preset \
    and integrator-only sweeps built from the API
    :param include_tau3: add the concurrence lower bound
    :param integrator_check: add the max-entry error of the RK4 evolution
    :param kappa: relaxation rate, recorded in the metadata
    :param step: RK4 step in kt units
    :param workers: number of processes for the minimizations
    """
    state: str
    channel: str
    kt_start: float = 0.0
    kt_end: float = 2.0
    points: int = 21
    method: str = 'closed'
    include_tau3: bool = False
    integrator_check: bool = False
    kappa: float = 1.0
    step: float = RK4_STEP
    workers: int = 1

    def __post_init__(self):
        self.state = str(self.state).lower()
        self.channel = str(self.channel).lower()
        self.method = _METHOD_ALIASES.get(self.method, self.method)
        if self.state not in STATES:
            raise ValueError("state must be one of %s, got %r" % (', '.join(STATES), self.state))
        if self.channel not in CHANNELS:
            raise ValueError("channel must be one of %s, got %r" % (', '.join(CHANNELS), self.channel))
        if self.method not in METHODS:
            raise ValueError("method must be one of %s, got %r" % (', '.join(METHODS), self.method))
        if not (0 <= self.kt_start < self.kt_end) or not np.isfinite(self.kt_end):
            raise ValueError("the kt range needs 0 <= start < end, got [%r, %r]" % (self.kt_start, self.kt_end))
        if not 2 <= self.points <= MAX_SWEEP_POINTS:
            raise ValueError("points must be in 2..%d, got %r" % (MAX_SWEEP_POINTS, self.points))
        if not self.step > 0:
            raise ValueError("integration step must be positive")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")
        ChannelSpec(self.channel, self.kappa)

    @property
    def kind(self):
        return formula_kind(self.state, self.channel)

    def times(self):
        return np.linspace(self.kt_start, self.kt_end, self.points)


@dataclass
class SweepTable:
    """
    Rows (kt, quantity, value) sorted by kt and then by quantity, plus a metadata
    dictionary of strings.
    """
    metadata: dict = field(default_factory=dict)
    rows: list = field(default_factory=list)

    @property
    def quantities(self):
        return sorted(set(row[1] for row in self.rows))

    def column(self, quantity):
        """Returns the arrays (kt, value) of one quantity."""
        selected = [(kt, value) for kt, label, value in self.rows if label == quantity]
        if not selected:
            return np.empty(0), np.empty(0)
        kts, values = zip(*selected)
        return np.array(kts), np.array(values)


def _rounded(value):
    return float(format_float(value))


def _minimized_point(args):
    state, channel, kt = args
    return minimize_gqd(evolve_analytic(state, channel, kt)).value


def _minimized_column(config, kts):
    args = [(config.state, config.channel, kt) for kt in kts]
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as executor:
            return list(executor.map(_minimized_point, args))

    values = []
    for k, arg in enumerate(args):
        values.append(_minimized_point(arg))
        logger.info("minimized discord %d/%d at kt=%g: %.9f", k + 1, len(args), arg[2], values[-1])
    return values


def check_supported(config):
    """
    :raise UnsupportedCombinationError: if a requested quantity has no formula \
    for the state and channel of the config
    """
    if config.method in ('closed', 'both') and config.kind not in CLOSED_FORM_KINDS:
        raise UnsupportedCombinationError(
            "no closed-form discord for the %s state under the %s channel: use --method min"
            % (config.state.upper(), config.channel)
        )
    if config.include_tau3 and config.kind not in TAU3_KINDS:
        raise UnsupportedCombinationError(
            "tau3 is available only for the GHZ state under the x, y and z channels, "
            "not for %s/%s: drop --tau3" % (config.state.upper(), config.channel)
        )


def run_sweep(config):
    """
    Evaluates the requested quantities on an equally spaced grid of kt.

    :param config: a SweepConfig
    :return: a SweepTable with one row per kt per quantity
    :raise UnsupportedCombinationError: see check_supported
    """
    check_supported(config)
    kts = config.times()
    columns = {}

    if config.method in ('closed', 'both'):
        columns['discord_closed'] = np.atleast_1d(closed_form_discord(config.kind, kts))
    if config.method in ('min', 'both'):
        logger.info("minimizing the discord at %d times", len(kts))
        columns['discord_min'] = np.array(_minimized_column(config, kts))
    if config.method == 'both':
        columns['discord_absdiff'] = np.abs(columns['discord_closed'] - columns['discord_min'])
    if config.include_tau3:
        columns['tau3'] = np.atleast_1d(tau3(config.kind, kts))
    if config.integrator_check:
        channel = ChannelSpec(config.channel, config.kappa)
        numeric = integrate_lindblad(initial_density(config.state), channel, kts, config.step)
        columns['integrator_error'] = np.array([
            np.max(np.abs(rho - evolve_analytic(config.state, channel, kt)))
            for rho, kt in zip(numeric, kts)
        ])

    rows = [(_rounded(kt), label, _rounded(values[k]))
            for label, values in columns.items() for k, kt in enumerate(kts)]
    rows.sort(key=lambda row: (row[0], row[1]))
    return SweepTable(metadata=sweep_metadata(config), rows=rows)


def sweep_metadata(config):
    return {
        'state': config.state,
        'channel': config.channel,
        'method': config.method,
        'kappa': format_float(config.kappa),
        'tool': 'qdiscord {}'.format(__version__),
    }


###
# Figure presets: (state, channel, method, tau3) curves; None marks a missing formula

FIGURES = {
    1: [('ghz', channel, 'closed', False) for channel in CHANNELS],
    2: [('ghz', 'x', 'none', True), ('ghz', 'y', 'none', True), ('ghz', 'z', 'none', True),
        None],
    3: [('w', 'x', 'min', False), ('w', 'y', 'min', False),
        ('w', 'z', 'closed', False), ('w', 'depol', 'closed', False)],
    4: [None],
}

FIGURE_STATES = {1: 'ghz', 2: 'ghz', 3: 'w', 4: 'w'}

FIGURE_NOTES = {
    2: "tau3 of the GHZ state under depolarising noise has no closed form: curve skipped",
    4: "tau3 of the W state has no closed form under any channel: figure skipped",
}


def run_figure(figure, kt_start=0.0, kt_end=2.0, points=21, workers=1):
    """
    Runs the sweeps of a figure preset and merges them in one table whose
    quantity labels are prefixed by the channel, e.g. 'depol/discord_closed'.

    :param figure: preset number, 1 to 4
    :return: the pair (SweepTable, list of notes about the skipped curves)
    """
    if figure not in FIGURES:
        raise ValueError("figure must be one of %s, got %r" % (sorted(FIGURES), figure))

    rows, notes = [], []
    for curve in FIGURES[figure]:
        if curve is None:
            notes.append(FIGURE_NOTES[figure])
            logger.info(FIGURE_NOTES[figure])
            continue
        state, channel, method, with_tau3 = curve
        config = SweepConfig(state, channel, kt_start, kt_end, points, method=method,
                             include_tau3=with_tau3, workers=workers)
        table = run_sweep(config)
        rows.extend((kt, '{}/{}'.format(channel, label), value) for kt, label, value in table.rows)
        if method == 'min' and state == 'w':
            notes.append("W/%s: no closed form available, minimized discord emitted" % channel)

    rows.sort(key=lambda row: (row[0], row[1]))
    metadata = {'figure': str(figure), 'state': FIGURE_STATES[figure],
                'tool': 'qdiscord {}'.format(__version__)}
    return SweepTable(metadata=metadata, rows=rows), notes
