# -*- coding: utf-8 -*-
#
# Copyright (c) 2026 holostat developers
#
# Author(s):
#
#   holostat developers
#
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

'''Helper functions
'''

import logging
import os

import numpy as np
import six
import yaml
from six.moves.configparser import NoOptionError, RawConfigParser
from trollsift import compose

LOG = logging.getLogger(__name__)

NUMBER_FORMAT = '%.17g'


def read_yaml(fname):
    """Read YAML file"""
    with open(fname, 'r') as fid:
        data = yaml.safe_load(fid)

    return data


def parse_prefixed(config, prefix):
    '''Collect the items of *config* whose key starts with *prefix*.

    Suite tolerances and finite difference settings are given in ini
    files as:

    {'tol_<suite>': 'value'} and {'fd_<setting>': 'value'},

    and are returned as {'<suite>': value}.  Values are parsed as YAML
    scalars so numbers come back as numbers.
    '''
    res = {}
    for key in config:
        if key.startswith(prefix):
            res[key[len(prefix):]] = yaml.safe_load(config[key])
    return res


def ini_to_dict(fname, section):
    """Convert *section* of .ini *config* to a run configuration dict."""
    config = RawConfigParser()
    if not config.read(fname):
        raise IOError("Could not read %s" % fname)

    conf = {}
    conf['gallery'] = {'id': config.get(section, 'gallery_id')}
    try:
        params = yaml.safe_load(config.get(section, 'params'))
    except NoOptionError:
        params = None
    conf['gallery']['params'] = params or {}
    conf['suites'] = config.get(section, 'suites').split()

    for key in ('grid', 'max_points', 'seed', 'directions', 'workers',
                'oracle_samples'):
        try:
            conf[key] = config.getint(section, key)
        except NoOptionError:
            pass
    try:
        conf['output'] = config.get(section, 'output')
    except NoOptionError:
        pass

    items = dict(config.items(section))
    tolerances = parse_prefixed(items, 'tol_')
    if tolerances:
        conf['tolerances'] = tolerances
    fd_values = parse_prefixed(items, 'fd_')
    if fd_values:
        conf['fd'] = fd_values

    return conf


def read_config(fname, section=None):
    """Read a run configuration from a YAML or an ini file."""
    ext = os.path.splitext(fname)[1].lower()
    if ext in ('.ini', '.cfg'):
        if section is None:
            config = RawConfigParser()
            config.read(fname)
            sections = config.sections()
            if not sections:
                raise ValueError("No section in %s" % fname)
            section = sections[0]
        return ini_to_dict(fname, section)
    data = read_yaml(fname)
    if section is not None:
        data = data[section]
    return data


def format_number(value):
    """Decimal string with 17 significant digits."""
    return NUMBER_FORMAT % value


def to_report_value(value):
    """Recursively convert numbers to decimal strings for the reports."""
    if isinstance(value, dict):
        return dict((str(key), to_report_value(val))
                    for key, val in value.items())
    if isinstance(value, (list, tuple, np.ndarray)):
        return [to_report_value(val) for val in value]
    if value is None or isinstance(value, (bool, np.bool_)):
        return None if value is None else bool(value)
    if isinstance(value, six.string_types):
        return value
    if isinstance(value, (six.integer_types, np.integer)):
        return str(int(value))
    return format_number(float(value))


def compose_output(pattern, info):
    """Compose an output file name from a trollsift *pattern*."""
    fname = compose(pattern, info)
    LOG.debug("Output file: %s", fname)
    return fname
