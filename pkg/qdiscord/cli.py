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
Command line interface for qdiscord.

Exit status: 0 on success, 1 when a verification check or a computation fails,
2 on usage errors.
"""
import logging
import sys
import time

EXIT_OK = 0
EXIT_CHECK_FAILURE = 1
EXIT_USAGE = 2


def get_cli_parser():
    import argparse
    from .constants import RK4_STEP

    parser = argparse.ArgumentParser(
        prog='qdiscord',
        description='Global quantum discord of three-qubit GHZ and W states under Markovian noise'
    )
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='log progress on stderr (-vv for debug messages)')
    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True

    sweep = subparsers.add_parser('sweep', help='evaluate discord and entanglement over a kt grid')
    sweep.add_argument('--state', choices=('ghz', 'w'),
                       help='initial state (required unless --figure is given)')
    sweep.add_argument('--channel', choices=('x', 'y', 'z', 'depol'),
                       help="noise channel: Pauli sigma_x, sigma_y, sigma_z or depolarising")
    sweep.add_argument('--from', dest='kt_start', type=float, default=0.0,
                       help='first scaled time kt (default: %(default)s)')
    sweep.add_argument('--to', dest='kt_end', type=float, default=2.0,
                       help='last scaled time kt (default: %(default)s)')
    sweep.add_argument('--points', type=int, default=21,
                       help='number of equally spaced times (default: %(default)s)')
    sweep.add_argument('--method', choices=('closed', 'min', 'both'), default='closed',
                       help="""closed: analytic discord; min: minimization over local
                       measurements; both: the two and their absolute difference""")
    sweep.add_argument('--tau3', dest='include_tau3', action='store_true',
                       help='add the lower bound to the three-qubit concurrence')
    sweep.add_argument('--check-integrator', dest='integrator_check', action='store_true',
                       help='add the max-entry error of the Runge-Kutta evolution')
    sweep.add_argument('--figure', type=int, choices=(1, 2, 3, 4),
                       help='emit the curve set of a figure preset instead of a single sweep')
    sweep.add_argument('--kappa', type=float, default=1.0,
                       help='relaxation rate, recorded in the output (default: %(default)s)')
    sweep.add_argument('--step', type=float, default=RK4_STEP,
                       help='Runge-Kutta step in kt units (default: %(default)s)')
    sweep.add_argument('--workers', type=int, default=1,
                       help='processes used for the minimizations (default: %(default)s)')
    sweep.add_argument('-o', '--output', default=None,
                       help='CSV output file (default: standard output)')
    sweep.add_argument('--plot', default=None,
                       help='also save a static plot of the curves to this file')

    verify = subparsers.add_parser('verify', help='run the self-verification suite')
    verify.add_argument('--quick', action='store_true',
                        help='shorter time lists and fewer random samples')
    return parser


def run_sweep_command(pars, parser):
    from .api import SweepConfig, run_sweep, run_figure
    from .readutils import format_sweep_table

    if pars.figure is not None:
        table, notes = run_figure(pars.figure, pars.kt_start, pars.kt_end, pars.points,
                                  workers=pars.workers)
        for note in notes:
            sys.stderr.write("note: {}\n".format(note))
    else:
        if pars.state is None or pars.channel is None:
            parser.error("sweep needs --state and --channel (or --figure)")
        config = SweepConfig(
            state=pars.state, channel=pars.channel, kt_start=pars.kt_start, kt_end=pars.kt_end,
            points=pars.points, method=pars.method, include_tau3=pars.include_tau3,
            integrator_check=pars.integrator_check, kappa=pars.kappa, step=pars.step,
            workers=pars.workers
        )
        table = run_sweep(config)

    text = format_sweep_table(table)
    if pars.output is None:
        sys.stdout.write(text)
    else:
        with open(pars.output, 'w', encoding='utf-8', newline='') as fout:
            fout.write(text)

    if pars.plot is not None and table.rows:
        from .plot import plot_sweep
        plot_sweep(table, filename=pars.plot)
    return EXIT_OK


def main(argv=None):
    if sys.version_info < (3, 6, 0):
        sys.stderr.write("You need python 3.6 or later to run this program\n")
        sys.exit(EXIT_USAGE)

    start_time = time.time()
    cli_parser = get_cli_parser()
    pars = cli_parser.parse_args(argv)

    level = {0: logging.WARNING, 1: logging.INFO}.get(pars.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s', stream=sys.stderr)
    logger = logging.getLogger('qdiscord')

    from .exceptions import QDiscordError, MinimizationError
    try:
        if pars.command == 'verify':
            from .verify import verify
            status = verify(quick=pars.quick)
        else:
            status = run_sweep_command(pars, cli_parser)
    except MinimizationError as err:
        logger.error("%s (best value found: %r)", err, err.best_value)
        status = EXIT_CHECK_FAILURE
    except ValueError as err:
        sys.stderr.write("qdiscord: error: {}\n".format(err))
        status = EXIT_USAGE
    except QDiscordError as err:
        sys.stderr.write("qdiscord: error: {}\n".format(err))
        status = EXIT_CHECK_FAILURE

    elapsed_time = time.time() - start_time
    logger.info("Finished. Elapsed time: %.2f s.", elapsed_time)
    sys.exit(status)
