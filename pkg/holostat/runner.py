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

"""Batch verification of gallery objects over sampled points.
"""

import json
import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from holostat import chenricci, submanifold
from holostat.chart import FDConfig, GeometryError, levi_civita
from holostat.curvature import (ambient_s_tensor, curvature_at,
                                fit_holomorphic_c, riemann_symmetry_residual)
from holostat.gallery import GallerySpec, build
from holostat.helper_functions import compose_output, to_report_value
from holostat.statstruct import (DualPair, check_k_conditions,
                                 holomorphic_residual, kahler_form_residual,
                                 statistical_residuals)
from holostat.version import __version__

LOG = logging.getLogger(__name__)

STRUCTURE = 'structure'
HOLOMORPHIC = 'holomorphic'
CURVATURE_FIT = 'curvature-fit'
CR = 'cr'
PROPOSITIONS = 'propositions'
CR_PRODUCT = 'cr-product'
CHEN_RICCI = 'chen-ricci'
QUADRATIC_ORACLE = 'quadratic-oracle'
SUITES = (STRUCTURE, HOLOMORPHIC, CURVATURE_FIT, CR, PROPOSITIONS,
          CR_PRODUCT, CHEN_RICCI, QUADRATIC_ORACLE)

PASS = 'pass'
FAIL = 'fail'
SKIPPED = 'skipped'

NO_COMPLEX_STRUCTURE = 'no-complex-structure'
NO_IMMERSION = 'no-immersion'
NO_CR_STRUCTURE = 'no-cr-structure'
NOT_PROPER_CR = 'not-proper-cr'
HYPOTHESIS_FAILED = 'hypothesis-failed'
AMBIENT_NOT_CONSTANT = 'ambient-not-constant-curvature'
CONTRAST_NORMAL = 'contrast-normal-component'
REASON_CODES = (NO_COMPLEX_STRUCTURE, NO_IMMERSION, NO_CR_STRUCTURE,
                NOT_PROPER_CR, HYPOTHESIS_FAILED, AMBIENT_NOT_CONSTANT,
                CONTRAST_NORMAL)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_CONFIG = 2
EXIT_NUMERIC = 3

DEFAULT_FD_VALUES = FDConfig().as_dict()

DEFAULT_TOLERANCES = {STRUCTURE: 1e-6,
                      HOLOMORPHIC: 1e-6,
                      CURVATURE_FIT: 1e-6,
                      CR: 1e-6,
                      PROPOSITIONS: 1e-5,
                      CR_PRODUCT: 1e-6,
                      CHEN_RICCI: 1e-6,
                      QUADRATIC_ORACLE: 1e-9}

DEFAULT_RUN_VALUES = {'grid': 5,
                      'max_points': 128,
                      'seed': 0,
                      'directions': 8,
                      'oracle_samples': 10 ** 6,
                      'workers': 1,
                      'output': None,
                      'expect_cr_product': True,
                      'expect_constant_curvature': False,
                      'alphas': [-3.0 + 0.5 * idx for idx in range(13)],
                      'dims': list(range(2, 9))}

# Identity residual of the Chen-Ricci proof chain
IDENTITY_TOL = 1e-5

REPORT_SCHEMA = {
    'suite': 'suite name, one of: ' + ', '.join(SUITES),
    'version': 'holostat version string',
    'gallery': {'id': 'gallery id', 'params': 'gallery parameters'},
    'config': 'echo of the run configuration',
    'records': [{'index': 'point index (string)',
                 'point': 'coordinates as decimal strings or null',
                 'direction': 'unit direction (chen-ricci only)',
                 'status': 'pass | fail | skipped',
                 'reason': 'reason code for skipped or failed records: ' +
                           ', '.join(REASON_CODES),
                 'residual': 'main residual of the record',
                 'slack': 'inequality slack (chen-ricci only)',
                 'values': 'all computed quantities'}],
    'summary': {'count': 'number of records',
                'passed': 'number of passed records',
                'failed': 'number of failed records',
                'skipped': 'number of skipped records',
                'max_residual': 'largest residual over the records',
                'min_slack': 'smallest slack over the records'},
}


class ConfigurationError(ValueError):
    """The run configuration is invalid."""


class NumericError(Exception):
    """A numeric failure at a given sample point."""

    def __init__(self, suite, point, error):
        super(NumericError, self).__init__(
            "%s failed at %s: %s" % (suite, str(point), str(error)))
        self.suite = suite
        self.point = point
        self.error = error


class RunConfig(object):

    """Validated run configuration."""

    def __init__(self, config):
        config = dict(config or {})
        gallery = config.get('gallery') or {}
        if 'id' not in gallery:
            raise ConfigurationError("Missing gallery id")
        try:
            self.spec = GallerySpec(gallery['id'], gallery.get('params'))
        except ValueError as err:
            raise ConfigurationError(str(err))

        self.suites = list(config.get('suites') or [])
        if not self.suites:
            raise ConfigurationError("No suites to run")
        unknown = [suite for suite in self.suites if suite not in SUITES]
        if unknown:
            raise ConfigurationError("Unknown suites: %s" %
                                     ", ".join(unknown))

        values = DEFAULT_RUN_VALUES.copy()
        values.update((key, val) for key, val in config.items()
                      if key in DEFAULT_RUN_VALUES)
        self.values = values
        if int(values['grid']) < 2:
            raise ConfigurationError("grid must be at least 2 points per "
                                     "axis")
        if int(values['max_points']) < 1 or int(values['workers']) < 1:
            raise ConfigurationError("max_points and workers must be "
                                     "positive")

        self.tolerances = DEFAULT_TOLERANCES.copy()
        tolerances = config.get('tolerances') or {}
        unknown = [key for key in tolerances if key not in SUITES]
        if unknown:
            raise ConfigurationError("Tolerances for unknown suites: %s" %
                                     ", ".join(unknown))
        self.tolerances.update(tolerances)

        self.fd_values = DEFAULT_FD_VALUES.copy()
        self.fd_values.update(config.get('fd') or {})
        try:
            self.fd = FDConfig(**self.fd_values)
        except (TypeError, ValueError) as err:
            raise ConfigurationError("Invalid fd settings: %s" % str(err))

    def __getattr__(self, name):
        values = self.__dict__.get('values', {})
        if name in values:
            return values[name]
        raise AttributeError(name)

    def override(self, seed=None, grid=None, fd_step=None, tol=None,
                 out=None):
        """Apply command line overrides."""
        if seed is not None:
            self.values['seed'] = int(seed)
        if grid is not None:
            if int(grid) < 2:
                raise ConfigurationError("grid must be at least 2 points "
                                         "per axis")
            self.values['grid'] = int(grid)
        if fd_step is not None:
            self.fd_values['step'] = float(fd_step)
            try:
                self.fd = FDConfig(**self.fd_values)
            except ValueError as err:
                raise ConfigurationError(str(err))
        if tol is not None:
            for key in self.tolerances:
                self.tolerances[key] = float(tol)
        if out is not None:
            self.values['output'] = out

    def as_dict(self):
        """Echo of the configuration for the reports."""
        res = dict((key, val) for key, val in self.values.items()
                   if key != 'output')
        res['suites'] = list(self.suites)
        res['tolerances'] = dict(self.tolerances)
        res['fd'] = dict(self.fd_values)
        return res


def grid_points(chart, points_per_axis, max_points, seed):
    """Interior tensor grid of the chart box, or a seeded uniform sample
    when the grid would exceed *max_points*."""
    if chart.bounds is None:
        raise ConfigurationError("Chart %s has no bounding box to sample" %
                                 chart.name)
    lower = chart.bounds[:, 0]
    upper = chart.bounds[:, 1]
    if points_per_axis ** chart.dim <= max_points:
        fracs = (np.arange(points_per_axis) + 1.0) / (points_per_axis + 1.0)
        axes = [low + (up - low) * fracs for low, up in zip(lower, upper)]
        mesh = np.meshgrid(*axes, indexing='ij')
        points = np.stack([arr.ravel() for arr in mesh], axis=-1)
    else:
        rng = np.random.default_rng(seed)
        points = rng.uniform(lower, upper, size=(max_points, chart.dim))
    return [point for point in points if chart.contains(point)]


def summarize(records):
    """Counts, max residual and min slack of *records*."""
    residuals = [rec['residual'] for rec in records
                 if rec.get('residual') is not None]
    slacks = [rec['slack'] for rec in records
              if rec.get('slack') is not None]
    return {'count': len(records),
            'passed': sum(rec['status'] == PASS for rec in records),
            'failed': sum(rec['status'] == FAIL for rec in records),
            'skipped': sum(rec['status'] == SKIPPED for rec in records),
            'max_residual': max(residuals) if residuals else None,
            'min_slack': min(slacks) if slacks else None}


def _record(index, point, status, residual=None, values=None, reason=None,
            **extra):
    rec = {'index': index,
           'point': None if point is None else list(point),
           'status': status,
           'reason': reason,
           'residual': residual,
           'values': values or {}}
    rec.update(extra)
    return rec


def _status(residual, tol):
    if residual is None or not np.isfinite(residual):
        return FAIL
    return PASS if residual <= tol else FAIL


class Runner(object):

    """Run the configured suites on one gallery object."""

    def __init__(self, config):
        if not isinstance(config, RunConfig):
            config = RunConfig(config)
        self.config = config
        self.cfg = config.fd
        self.logger = LOG
        self._obj = None

    def set_logger(self, logger):
        """Set logger."""
        self.logger = logger

    @property
    def obj(self):
        """The gallery object, built on first use."""
        if self._obj is None:
            self._obj = build(self.config.spec, self.cfg)
        return self._obj

    def run(self):
        """Run every configured suite and return the suite reports."""
        reports = []
        for suite in self.config.suites:
            self.logger.info("Running suite %s on %s", suite,
                             self.config.spec.gallery_id)
            records = getattr(self, '_suite_' + suite.replace('-', '_'))()
            summary = summarize(records)
            self.logger.info("Suite %s: %d passed, %d failed, %d skipped",
                             suite, summary['passed'], summary['failed'],
                             summary['skipped'])
            reports.append({'suite': suite,
                            'version': __version__,
                            'gallery': {'id': self.config.spec.gallery_id,
                                        'params': self.config.spec.params},
                            'config': self.config.as_dict(),
                            'records': records,
                            'summary': summary})
        return reports

    def _map_points(self, suite, chart, func):
        """Evaluate *func(index, point)* over the sample grid of *chart*
        and return the records in point order."""
        points = grid_points(chart, int(self.config.grid),
                             int(self.config.max_points),
                             int(self.config.seed))
        self.logger.debug("%d sample points for %s", len(points), suite)

        def evaluate(item):
            index, point = item
            try:
                with np.errstate(divide='raise', invalid='raise',
                                 over='raise'):
                    res = func(index, point)
            except (GeometryError, np.linalg.LinAlgError,
                    FloatingPointError) as err:
                self.logger.error("Numeric failure in %s at point %d %s",
                                  suite, index, str(point))
                raise NumericError(suite, point, err)
            self.logger.debug("Point %d of %s done", index, suite)
            return res

        workers = int(self.config.workers)
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as executor:
                results = list(executor.map(evaluate, enumerate(points)))
        else:
            results = [evaluate(item) for item in enumerate(points)]
        records = []
        for res in results:
            if isinstance(res, list):
                records.extend(res)
            else:
                records.append(res)
        return records

    def _skip(self, reason):
        self.logger.warning("Skipping: %s", reason)
        return [_record(0, None, SKIPPED, reason=reason)]

    def _suite_structure(self):
        obj = self.obj
        tol = self.config.tolerances[STRUCTURE]

        def check(index, point):
            res = statistical_residuals(obj.chart, obj.pair, point, self.cfg)
            values = res.as_dict()
            values.pop('holomorphic', None)
            residual = max(values.values())
            return _record(index, point, _status(residual, tol), residual,
                           values)

        return self._map_points(STRUCTURE, obj.chart, check)

    def _suite_holomorphic(self):
        obj = self.obj
        chart = obj.chart
        if not chart.has_complex_structure:
            return self._skip(NO_COMPLEX_STRUCTURE)
        tol = self.config.tolerances[HOLOMORPHIC]

        def check(index, point):
            j_square, hermitian = chart.check_complex_structure(point)
            values = {'holomorphic': holomorphic_residual(chart, obj.pair,
                                                          point, self.cfg),
                      'kahler_form': kahler_form_residual(chart, obj.pair,
                                                          point, self.cfg),
                      'j_square': j_square,
                      'hermitian': hermitian}
            if chart.has_contrast:
                sym, adj, anti = check_k_conditions(chart, point)
                values.update({'k_symmetric': sym, 'k_self_adjoint': adj,
                               'k_anti_complex': anti})
            residual = max(values.values())
            return _record(index, point, _status(residual, tol), residual,
                           values)

        return self._map_points(HOLOMORPHIC, chart, check)

    def _suite_curvature_fit(self):
        obj = self.obj
        chart = obj.chart
        if not chart.has_complex_structure:
            return self._skip(NO_COMPLEX_STRUCTURE)
        tol = self.config.tolerances[CURVATURE_FIT]
        expect = bool(self.config.expect_constant_curvature)

        def check(index, point):
            sten = ambient_s_tensor(obj.pair, point, self.cfg, chart.contains)
            rlc = curvature_at(lambda pnt: levi_civita(chart, pnt, self.cfg),
                               point, self.cfg, chart.contains)
            c_s, res_s = fit_holomorphic_c(chart, [(point, sten)], self.cfg)
            c_lc, res_lc = fit_holomorphic_c(chart, [(point, rlc)], self.cfg)
            values = {'c': c_s, 'fit_residual': res_s, 'c_lc': c_lc,
                      'lc_fit_residual': res_lc,
                      'lc_symmetry': riemann_symmetry_residual(
                          rlc, chart.metric_at(point))}
            residual = max(res_s, res_lc)
            if not np.all(np.isfinite(list(values.values()))):
                status = FAIL
            elif expect:
                status = _status(residual, tol)
            else:
                status = PASS
            return _record(index, point, status, residual, values)

        return self._map_points(CURVATURE_FIT, chart, check)

    def _submanifold_reason(self, need_j=True):
        obj = self.obj
        if obj.immersion is None:
            return NO_IMMERSION
        if obj.cr is None:
            return NO_CR_STRUCTURE
        if need_j and not obj.chart.has_complex_structure:
            return NO_COMPLEX_STRUCTURE
        return None

    def _suite_cr(self):
        reason = self._submanifold_reason()
        if reason:
            return self._skip(reason)
        obj = self.obj
        tol = self.config.tolerances[CR]

        def check(index, point):
            values = submanifold.cr_residuals(obj.immersion, obj.cr, point,
                                              self.cfg)
            residual = max(values.values())
            return _record(index, point, _status(residual, tol), residual,
                           values)

        return self._map_points(CR, obj.immersion.domain, check)

    def _suite_propositions(self):
        reason = self._submanifold_reason()
        if reason:
            return self._skip(reason)
        obj = self.obj
        imm = obj.immersion
        tol = self.config.tolerances[PROPOSITIONS]
        ambient = imm.ambient
        lc_field = (lambda pnt: levi_civita(ambient, pnt, self.cfg))
        lc_pair = DualPair(lc_field, lc_field, source='levi-civita')

        def check(index, point):
            state = submanifold.point_state(imm, obj.cr, obj.pair, point,
                                            self.cfg)
            geom = state.geom
            geom_lc = submanifold.induced_geometry(imm, lc_pair, point,
                                                   self.cfg)
            values = {
                'b_symmetry': max(
                    float(np.max(np.abs(geom.B - geom.B.transpose(1, 0, 2)))),
                    float(np.max(np.abs(geom.B_star -
                                        geom.B_star.transpose(1, 0, 2))))),
                'b0_sum': float(np.max(np.abs(2 * geom_lc.B - geom.B -
                                              geom.B_star))),
                'gauss': submanifold.gauss_equation_residual(
                    imm, obj.pair, point, self.cfg, geom=geom)}
            residual = max(values.values())
            status = _status(residual, tol)
            skipped = []
            for check_id in submanifold.CHECK_IDS:
                report = submanifold.proposition_suite(
                    imm, obj.cr, obj.pair, point, check_id, self.cfg, tol,
                    state=state)
                values[check_id] = report.as_dict()
                if report.applicable:
                    worst = max(report.conclusions.values())
                    residual = max(residual, worst)
                    if not report.passed:
                        status = FAIL
                else:
                    skipped.append(check_id)
            return _record(index, point, status, residual, values,
                           reason=HYPOTHESIS_FAILED if skipped else None,
                           skipped_checks=skipped)

        return self._map_points(PROPOSITIONS, imm.domain, check)

    def _suite_cr_product(self):
        reason = self._submanifold_reason()
        if reason:
            return self._skip(reason)
        obj = self.obj
        imm = obj.immersion
        tol = self.config.tolerances[CR_PRODUCT]
        expect = bool(self.config.expect_cr_product)

        def check(index, point):
            geom = submanifold.induced_geometry(imm, obj.pair, point,
                                                self.cfg)
            values = submanifold.cr_product_criterion(imm, obj.cr, obj.pair,
                                                      point, self.cfg, tol,
                                                      geom=geom)
            if values['verdict'] is None:
                return _record(index, point, SKIPPED, values=values,
                               reason=NOT_PROPER_CR)
            values['riemannian_product'] = \
                submanifold.riemannian_product_hypotheses(
                    imm, obj.cr, obj.pair, point, self.cfg, tol, geom=geom)
            residual = max(values['a_norm'], values['a_star_norm'])
            if expect and not values['verdict'] and \
               values['a_levi_civita_norm'] <= tol:
                # the sufficient criterion cannot certify this point
                return _record(index, point, SKIPPED, residual, values,
                               reason=CONTRAST_NORMAL)
            status = PASS if values['verdict'] == expect else FAIL
            return _record(index, point, status, residual, values)

        return self._map_points(CR_PRODUCT, imm.domain, check)

    def _suite_chen_ricci(self):
        reason = self._submanifold_reason()
        if reason:
            return self._skip(reason)
        obj = self.obj
        imm = obj.immersion
        tol = self.config.tolerances[CHEN_RICCI]
        seed = int(self.config.seed)
        ndirs = int(self.config.directions)

        def check(index, point):
            geom = submanifold.induced_geometry(imm, obj.pair, point,
                                                self.cfg)
            gmat = geom.induced_metric
            rng = np.random.default_rng([seed, index])
            records = []
            for dindex in range(ndirs):
                xvec = rng.normal(size=imm.dim)
                xvec /= np.sqrt(xvec.dot(gmat).dot(xvec))
                report = chenricci.chen_ricci_report(imm, obj.pair, point,
                                                     xvec, cfg=self.cfg,
                                                     geom=geom)
                values = report.as_dict()
                values.pop('point')
                values.pop('X')
                for sector in (chenricci.SECTOR_D, chenricci.SECTOR_DPERP):
                    try:
                        values['corollary_' + sector] = \
                            chenricci.corollary_bounds(report, sector)
                    except GeometryError:
                        pass
                extra = {'direction': list(xvec), 'slack': report.slack}
                if not report.applicable:
                    records.append(_record(index, point, SKIPPED,
                                           report.identity_residual, values,
                                           reason=report.reason, **extra))
                    continue
                passed = (report.slack >= -tol and
                          report.identity_residual <= IDENTITY_TOL)
                if all(report.equality.values()):
                    passed = passed and report.slack <= tol
                records.append(_record(index, point,
                                       PASS if passed else FAIL,
                                       report.identity_residual, values,
                                       **extra))
            return records

        return self._map_points(CHEN_RICCI, imm.domain, check)

    def _suite_quadratic_oracle(self):
        tol = self.config.tolerances[QUADRATIC_ORACLE]
        seed = int(self.config.seed)
        samples = int(self.config.oracle_samples)
        records = []
        index = 0
        for alpha in self.config.alphas:
            for dim in self.config.dims:
                program = chenricci.quadratic_max(alpha, dim)
                best, _ = chenricci.random_search_quadratic(
                    alpha, dim, samples, seed=[seed, index])
                excess = best - program.max_value
                constraint = abs(float(np.sum(program.solution)) - alpha)
                values = {'alpha': alpha, 'm': dim,
                          'max_value': program.max_value,
                          'oracle_value': best,
                          'solution_h11': float(program.solution[0]),
                          'constraint_residual': constraint,
                          'certified': program.certified}
                passed = (excess <= tol and constraint <= tol and
                          program.certified and
                          program.solution[0] == alpha / 2.0)
                records.append(_record(index, None, PASS if passed else FAIL,
                                       max(excess, constraint), values))
                index += 1
        return records


def exit_status(reports):
    """EXIT_FAIL when any record failed, EXIT_PASS otherwise."""
    for report in reports:
        if report['summary']['failed']:
            return EXIT_FAIL
    return EXIT_PASS


def dumps(obj):
    """Deterministic JSON text with decimal string numbers."""
    return json.dumps(to_report_value(obj), sort_keys=True, indent=2)


def write_reports(reports, pattern=None, stream=None):
    """Write the reports to files named by *pattern*, or to *stream*.

    A pattern containing ``{suite}`` gives one file per suite.
    """
    written = []
    if pattern is None:
        if stream is not None:
            stream.write(dumps(reports) + "\n")
        return written
    if '{suite' in pattern:
        for report in reports:
            fname = compose_output(pattern,
                                   {'gallery_id': report['gallery']['id'],
                                    'suite': report['suite']})
            with open(fname, 'w') as fid:
                fid.write(dumps(report) + "\n")
            written.append(fname)
    else:
        gallery_id = reports[0]['gallery']['id'] if reports else ''
        fname = compose_output(pattern, {'gallery_id': gallery_id,
                                         'suite': 'all'})
        with open(fname, 'w') as fid:
            fid.write(dumps(reports) + "\n")
        written.append(fname)
    return written
