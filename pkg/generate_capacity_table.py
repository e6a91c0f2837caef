#!/usr/bin/env python
# -*- encoding: utf-8 -*-
from __future__ import print_function, unicode_literals, division, absolute_import
import codecs
from ssakg.memory.capacity import DensityModel, nodes_for_capacity

ROW_FORMAT = '|{:>8s}|{:>8s}|{:>14s}|{:>12s}|{:>14s}|\n'

NODE_COUNTS = (500, 1000, 1500, 2000, 2500, 4000, 8000)
SEQUENCE_LENGTHS = (10, 15, 20)
CRITICAL_DENSITIES = (0.3, 0.5)
CURVE_SEQUENCES = 5000
CURVE_STEP = 500


with codecs.open('CAPACITY_TABLE.md', 'w', 'utf-8') as f_handle:
    f_handle.write('# Sequence capacity\n')
    f_handle.write('Sequences that bring an empty graph to the critical density, '
                   'from the closed-form density model.\n\n')

    for d_crit in CRITICAL_DENSITIES:
        f_handle.write('### Critical density %s\n' % d_crit)
        f_handle.write(ROW_FORMAT.format('nodes', 'length', 'xi', 'capacity', 'per node^2'))
        f_handle.write(ROW_FORMAT.format('-------:', '-------:', '-------------:', '-----------:', '-------------:'))
        for n in NODE_COUNTS:
            for length in SEQUENCE_LENGTHS:
                model = DensityModel(n=n, L=length, d_crit=d_crit)
                f_handle.write(ROW_FORMAT.format(
                    '%d' % n,
                    '%d' % length,
                    '%.6e' % model.xi,
                    '%d' % model.capacity_floor(),
                    '%.6e' % (model.capacity() / n ** 2),
                ))
        f_handle.write('\n')

    f_handle.write('### Nodes needed for 1000 sequences\n')
    f_handle.write(ROW_FORMAT.format('length', 'density', 'nodes', '', ''))
    f_handle.write(ROW_FORMAT.format('-------:', '-------:', '-------------:', '-----------:', '-------------:'))
    for length in SEQUENCE_LENGTHS:
        for d_crit in CRITICAL_DENSITIES:
            f_handle.write(ROW_FORMAT.format(
                '%d' % length, '%s' % d_crit, '%d' % nodes_for_capacity(1000, length, d_crit), '', ''))
    f_handle.write('\n')

    f_handle.write('### Density while storing sequences\n')
    f_handle.write(ROW_FORMAT.format('nodes', 'length', 'sequences', 'density', ''))
    f_handle.write(ROW_FORMAT.format('-------:', '-------:', '-------------:', '-----------:', '-------------:'))
    for n, length in ((1000, 15), (2500, 10)):
        curve = DensityModel(n=n, L=length).density_curve(CURVE_SEQUENCES, step=CURVE_STEP)
        for index, density in enumerate(curve):
            f_handle.write(ROW_FORMAT.format(
                '%d' % n, '%d' % length, '%d' % (index * CURVE_STEP), '%.6f' % density, ''))
    f_handle.write('\n')
