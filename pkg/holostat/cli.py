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

"""Command line interface of the verification runner.
"""

import argparse
import json
import logging
import logging.handlers
import sys

import yaml

from holostat import gallery, runner
from holostat.helper_functions import read_config, to_report_value


def arg_parse(args=None):
    '''Handle input arguments.
    '''
    parser = argparse.ArgumentParser(prog="holostat")
    parser.add_argument("-l", "--log",
                        help="File to log to (defaults to stdout)",
                        default=None)
    parser.add_argument("-v", "--verbose", help="print debug messages too",
                        action="store_true")
    parser.add_argument("--quiet", help="no log messages on the console",
                        action="store_true")
    subparsers = parser.add_subparsers(dest="verb")
    subparsers.required = True

    subparsers.add_parser("list", help="list the gallery catalog")
    subparsers.add_parser("report-schema", help="print the report schema")
    for verb, text in (("verify", "run the configured suites"),
                       ("chen-ricci", "run the Chen-Ricci suite only")):
        sub = subparsers.add_parser(verb, help=text)
        sub.add_argument("config", help="config file to be used")
        sub.add_argument("-C", "--config_item",
                         help="config item to use with .ini files")
        sub.add_argument("--seed", type=int, default=None,
                         help="random seed")
        sub.add_argument("--grid", type=int, default=None,
                         help="points per axis")
        sub.add_argument("--fd-step", type=float, default=None,
                         help="finite difference step")
        sub.add_argument("--tol", type=float, default=None,
                         help="tolerance for every suite")
        sub.add_argument("--out", default=None,
                         help="output file or trollsift pattern")

    return parser.parse_args(args)


def setup_logging(args):
    """Install the log handlers."""
    handlers = []
    if args.log:
        handlers.append(
            logging.handlers.TimedRotatingFileHandler(args.log,
                                                      "midnight",
                                                      backupCount=7))
    if not args.quiet:
        handlers.append(logging.StreamHandler(sys.stderr))

    if args.verbose:
        loglevel = logging.DEBUG
    else:
        loglevel = logging.INFO
    for handler in handlers:
        handler.setFormatter(logging.Formatter("[%(levelname)s: %(asctime)s :"
                                               " %(name)s] %(message)s",
                                               '%Y-%m-%d %H:%M:%S'))
        handler.setLevel(loglevel)
        logging.getLogger('').setLevel(loglevel)
        logging.getLogger('').addHandler(handler)


def _load_config(args):
    try:
        config = read_config(args.config, args.config_item)
    except (IOError, OSError, KeyError, ValueError, yaml.YAMLError) as err:
        raise runner.ConfigurationError("Could not read %s: %s" %
                                        (args.config, str(err)))
    if not isinstance(config, dict):
        raise runner.ConfigurationError("%s holds no configuration" %
                                        args.config)
    if args.verb == "chen-ricci":
        config['suites'] = [runner.CHEN_RICCI]
    run_config = runner.RunConfig(config)
    run_config.override(seed=args.seed, grid=args.grid, fd_step=args.fd_step,
                        tol=args.tol, out=args.out)
    return run_config


def main(args=None, stream=None):
    '''Main. Parse cmdline, read config etc. Returns the exit status.'''
    args = arg_parse(args)
    stream = stream or sys.stdout
    setup_logging(args)
    logger = logging.getLogger("holostat")

    if args.verb == "list":
        stream.write(json.dumps(to_report_value(gallery.catalog()),
                                sort_keys=True, indent=2) + "\n")
        return runner.EXIT_PASS
    if args.verb == "report-schema":
        stream.write(json.dumps(runner.REPORT_SCHEMA, sort_keys=True,
                                indent=2) + "\n")
        return runner.EXIT_PASS

    try:
        run_config = _load_config(args)
        run = runner.Runner(run_config)
        run.set_logger(logger)
        reports = run.run()
    except runner.ConfigurationError as err:
        logger.error("Configuration error: %s", str(err))
        return runner.EXIT_CONFIG
    except runner.NumericError as err:
        logger.error("Numeric error: %s", str(err))
        return runner.EXIT_NUMERIC

    runner.write_reports(reports, run_config.output, stream)
    status = runner.exit_status(reports)
    logger.info("Finished with exit status %d", status)
    return status
