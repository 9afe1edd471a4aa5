#!/usr/bin/env python3
#encoding: UTF-8
#
# Copyright (c), 2016-2017, Quantum Espresso Foundation and SISSA (Scuola
# Internazionale Superiore di Studi Avanzati). All rights reserved.
# This file is distributed under the terms of the LGPL-2.1 license. See the
# file 'LICENSE' in the root directory of the present distribution, or
# https://opensource.org/licenses/LGPL-2.1
#
"""
Writing and reading of sweep tables as CSV text files.

The format is:

# key: value                (one metadata line per entry)
kt,quantity,value
0,discord_closed,1
...

Floats are written with 12 significant digits.
"""
import csv
import io

from .constants import CSV_DIGITS

CSV_HEADER = ('kt', 'quantity', 'value')


def format_float(x):
    return '{:.{}g}'.format(x, CSV_DIGITS)


def create_header(metadata):
    """
    Creates the '#'-prefixed metadata lines of an output file.
    """
    text = ''
    for key, value in metadata.items():
        text += '# {}: {}\n'.format(key, value)
    return text


def format_sweep_table(table):
    """Returns the CSV text of a SweepTable."""
    stream = io.StringIO()
    stream.write(create_header(table.metadata))
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(CSV_HEADER)
    for kt, quantity, value in table.rows:
        writer.writerow((format_float(kt), quantity, format_float(value)))
    return stream.getvalue()


def write_sweep_table(table, filename):
    """
    Writes a SweepTable to a UTF-8 CSV file.

    :param table: the SweepTable
    :param filename: path of the output file
    """
    with open(filename, 'w', encoding='utf-8', newline='') as fout:
        fout.write(format_sweep_table(table))


def parse_sweep_table(text):
    """
    Parses the CSV text written by format_sweep_table.

    :return: the (metadata, rows) pair
    """
    metadata = {}
    lines = []
    for line in text.splitlines():
        if line.startswith('#'):
            key, _, value = line[1:].strip().partition(':')
            metadata[key.strip()] = value.strip()
        elif line.strip():
            lines.append(line)

    reader = csv.reader(lines)
    header = tuple(next(reader, ()))
    if header != CSV_HEADER:
        raise ValueError("bad CSV header %r, expected %r" % (header, CSV_HEADER))
    rows = [(float(kt), quantity, float(value)) for kt, quantity, value in reader]
    return metadata, rows


def read_sweep_table(filename):
    """
    Reads a sweep table written by write_sweep_table.

    :param filename: path of the CSV file
    :return: a SweepTable
    """
    from .api import SweepTable

    with open(filename, encoding='utf-8') as fin:
        metadata, rows = parse_sweep_table(fin.read())
    return SweepTable(metadata=metadata, rows=rows)
