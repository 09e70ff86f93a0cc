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

"""Setup for holostat.
"""
import os

from setuptools import setup

THIS_DIR = os.path.dirname(os.path.abspath(__file__))

version = {}
with open(os.path.join(THIS_DIR, 'holostat', 'version.py')) as fid:
    exec(fid.read(), version)


setup(name="holostat",
      version=version['__version__'],
      description='Numerical checks for submanifolds of holomorphic '
                  'statistical manifolds',
      author='holostat developers',
      classifiers=["Development Status :: 3 - Alpha",
                   "Intended Audience :: Science/Research",
                   "License :: OSI Approved :: GNU General Public License v3 " +
                   "or later (GPLv3+)",
                   "Operating System :: OS Independent",
                   "Programming Language :: Python",
                   "Topic :: Scientific/Engineering :: Mathematics"],
      packages=['holostat',
                'holostat.tests', ],
      package_data={'holostat.tests': ['data/*']},
      scripts=['bin/holostat.py'],
      data_files=[],
      zip_safe=False,
      install_requires=['numpy', 'scipy', 'pyyaml', 'six', 'trollsift'],
      tests_require=['mock', 'scipy', 'six'],
      test_suite='holostat.tests.suite',
      )
