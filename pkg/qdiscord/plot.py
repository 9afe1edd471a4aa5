#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
A collection of wrappers for the *matplotlib* functions.

.. Note::
  All functions return a *matplotlib* figure object which can be modified by the user.
"""

################################################################################

import numpy as np
import matplotlib.pyplot as plt

COLORS = ['k', 'r', 'b', 'g', 'c', 'm', 'y']
LINESTYLES = ['-', '--', '-.', ':']


def multiple_plot_xy(x, y, xlabel="", ylabel="", labels=None):
    """
    This function generates an x:y plot with matplotlib overlapping several lines.
    *x* and *y* are sequences of arrays, one pair for each line.
    """
    fig = plt.figure()
    ax = fig.add_subplot(1, 1, 1)  # create an axes object in the figure
    for i, (xi, yi) in enumerate(zip(x, y)):
        style = COLORS[i % len(COLORS)] + LINESTYLES[(i // len(COLORS)) % len(LINESTYLES)]
        label = labels[i] if labels is not None else None
        ax.plot(xi, yi, style, label=label)
    if labels is not None:
        ax.legend()
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    return fig


def plot_sweep(table, quantities=None, filename=None, show=False):
    """
    Plots the columns of a SweepTable as functions of kt.

    :param table: the SweepTable
    :param quantities: labels to plot, all the quantities in the table by default
    :param filename: if given, the figure is saved to this file
    :param show: show the figure on screen
    :return: the matplotlib figure
    """
    if quantities is None:
        quantities = table.quantities
    columns = [table.column(quantity) for quantity in quantities]
    fig = multiple_plot_xy([c[0] for c in columns], [c[1] for c in columns],
                           xlabel=r"$\kappa t$", ylabel="bits", labels=list(quantities))

    title = ', '.join('{}={}'.format(k, v) for k, v in table.metadata.items() if k != 'tool')
    fig.axes[0].set_title(title)
    fig.axes[0].set_ylim(bottom=min(0.0, np.min([np.min(c[1]) for c in columns] or [0.0])))
    if filename is not None:
        fig.savefig(filename)
    if show:
        plt.show()
    return fig
