#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Copyright (c) 2026 holostat developers

# Author(s):

#   holostat developers

# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.

# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""Unit testing some general purpose helper functions
"""

import os.path
import unittest

import numpy as np

from holostat.helper_functions import (compose_output, format_number,
                                       ini_to_dict, parse_prefixed,
                                       read_config, read_yaml,
                                       to_report_value)

THIS_DIR = os.path.dirname(os.path.abspath(__file__))
DATA_DIR = os.path.join(THIS_DIR, 'data')


class TestConfigReading(unittest.TestCase):

    def test_read_yaml(self):
        """Test reading a YAML run configuration"""
        # Run
        conf = read_yaml(os.path.join(DATA_DIR, 'half_plane.yaml'))
        # Assert
        self.assertEqual(conf['gallery'], {'id': 'half-plane',
                                           'params': {'lambda': 0.3}})
        self.assertEqual(conf['suites'], ['structure', 'holomorphic'])
        self.assertEqual(conf['tolerances']['structure'], 1e-6)

    def test_ini_to_dict(self):
        """Test converting an ini section"""
        # Run
        conf = ini_to_dict(os.path.join(DATA_DIR, 'run.ini'), 'half_plane')
        # Assert
        self.assertEqual(conf['gallery'], {'id': 'half-plane',
                                           'params': {'lambda': 0.3}})
        self.assertEqual(conf['suites'], ['structure', 'holomorphic'])
        self.assertEqual(conf['grid'], 3)
        self.assertEqual(conf['seed'], 0)
        self.assertEqual(conf['tolerances'], {'structure': 1e-6})
        self.assertEqual(conf['fd'], {'step': 1e-4})
        self.assertNotIn('output', conf)

        # Run
        conf = ini_to_dict(os.path.join(DATA_DIR, 'run.ini'), 'cr_defect')
        # Assert
        self.assertEqual(conf['output'], '/tmp/{gallery_id}_{suite}.json')
        self.assertNotIn('tolerances', conf)

    def test_missing_ini(self):
        """Unreadable files are reported"""
        with self.assertRaises(IOError):
            ini_to_dict(os.path.join(DATA_DIR, 'missing.ini'), 'x')

    def test_read_config(self):
        """The file extension selects the reader"""
        conf = read_config(os.path.join(DATA_DIR, 'run.ini'))
        self.assertEqual(conf['gallery']['id'], 'half-plane')
        conf = read_config(os.path.join(DATA_DIR, 'run.ini'), 'cr_defect')
        self.assertEqual(conf['gallery']['id'], 'cr-defect')
        conf = read_config(os.path.join(DATA_DIR, 'chen_ricci_flat.yaml'))
        self.assertEqual(conf['directions'], 2)

    def test_parse_prefixed(self):
        """Prefixed items are collected and parsed"""
        res = parse_prefixed({'tol_cr': '1.0e-3', 'fd_scheme': 'central4',
                              'grid': '3'}, 'tol_')
        self.assertEqual(res, {'cr': 1e-3})
        res = parse_prefixed({'fd_scheme': 'central4'}, 'fd_')
        self.assertEqual(res, {'scheme': 'central4'})


class TestReportValues(unittest.TestCase):

    def test_format_number(self):
        """Seventeen significant digits"""
        self.assertEqual(format_number(0.1), '0.10000000000000001')
        self.assertEqual(format_number(2.0), '2')

    def test_to_report_value(self):
        """Numbers become strings, the structure is kept"""
        res = to_report_value({'a': [1, 0.5, np.float64(0.25)],
                               'b': None, 'c': True, 'd': 'text',
                               'e': np.array([1.5]), 3: np.int64(7)})
        self.assertEqual(res, {'a': ['1', '0.5', '0.25'], 'b': None,
                               'c': True, 'd': 'text', 'e': ['1.5'],
                               '3': '7'})

    def test_compose_output(self):
        """Output names come from trollsift patterns"""
        res = compose_output('/tmp/{gallery_id}_{suite}.json',
                             {'gallery_id': 'cr-defect',
                              'suite': 'cr-product'})
        self.assertEqual(res, '/tmp/cr-defect_cr-product.json')


def suite():
    """The test suite for test_helper_functions.
    """
    loader = unittest.TestLoader()
    mysuite = unittest.TestSuite()
    mysuite.addTest(loader.loadTestsFromTestCase(TestConfigReading))
    mysuite.addTest(loader.loadTestsFromTestCase(TestReportValues))

    return mysuite


if __name__ == "__main__":
    unittest.main()
