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

"""The Chen-Ricci inequality for submanifolds of holomorphic statistical
manifolds of constant holomorphic curvature.
"""

import logging

import numpy as np
from scipy.linalg import null_space

from holostat.chart import (DEFAULT_FD, DomainError, Frame, NonUnitVectorError,
                            SectorMismatchError, as_point, gram_schmidt,
                            levi_civita, orthogonal_complement)
from holostat.curvature import (ambient_s_tensor, curvature_at,
                                fit_holomorphic_c, ricci_pair)
from holostat.submanifold import induced_geometry, intrinsic_s_tensor

LOG = logging.getLogger(__name__)

SECTOR_D = 'D'
SECTOR_DPERP = 'Dperp'

EQUALITY_TOL = 1e-6
FIT_TOL = 1e-5


class QuadraticProgram(object):

    """Maximum of h₁₁ Σ_{i≥2} h_ii on the plane Σ h_ii = α."""

    def __init__(self, alpha, m, solution, max_value, hessian_eigenvalues):
        self.alpha = alpha
        self.m = m
        self.solution = solution
        self.max_value = max_value
        self.hessian_eigenvalues = hessian_eigenvalues

    @property
    def certified(self):
        """The Hessian is negative semi-definite on the constraint plane."""
        return bool(np.all(self.hessian_eigenvalues <= 1e-12))

    def objective(self, point):
        point = np.asarray(point, dtype=float)
        return float(point[0] * np.sum(point[1:]))

    def __repr__(self):
        return "QuadraticProgram(alpha=%g, m=%d, max=%g)" % (
            self.alpha, self.m, self.max_value)


def _objective_hessian(m):
    hess = np.zeros((m, m))
    hess[0, 1:] = 1.0
    hess[1:, 0] = 1.0
    return hess


def quadratic_max(alpha, m):
    """Closed form maximizer with its second order certificate."""
    m = int(m)
    if m < 2:
        raise DomainError("The quadratic program needs m >= 2, got %d" % m)
    alpha = float(alpha)
    solution = np.empty(m)
    solution[0] = alpha / 2.0
    solution[1:] = alpha / (2.0 * (m - 1))
    tangent = null_space(np.ones((1, m)))
    reduced = tangent.T.dot(_objective_hessian(m)).dot(tangent)
    eigs = np.linalg.eigvalsh(0.5 * (reduced + reduced.T))
    return QuadraticProgram(alpha, m, solution, alpha ** 2 / 4.0, eigs)


def random_search_quadratic(alpha, m, samples=10 ** 6, seed=0,
                            batch_size=100000, ascent_steps=100):
    """Seeded random search plus projected ascent on the constraint plane.

    Returns (best value, best point).
    """
    m = int(m)
    if m < 2:
        raise DomainError("The quadratic program needs m >= 2, got %d" % m)
    rng = np.random.default_rng(seed)
    scale = max(1.0, abs(alpha))
    best_value = -np.inf
    best_point = None
    remaining = int(samples)
    while remaining > 0:
        size = min(batch_size, remaining)
        remaining -= size
        draws = rng.normal(scale=scale, size=(size, m))
        draws -= ((draws.sum(axis=1) - alpha) / m)[:, np.newaxis]
        values = draws[:, 0] * draws[:, 1:].sum(axis=1)
        idx = int(np.argmax(values))
        if values[idx] > best_value:
            best_value = float(values[idx])
            best_point = draws[idx].copy()

    def objective(point):
        return point[0] * (alpha - point[0])

    step = 0.1 * scale
    for _ in range(ascent_steps):
        grad = np.empty(m)
        grad[0] = np.sum(best_point[1:])
        grad[1:] = best_point[0]
        grad -= grad.mean()
        candidate = best_point + step * grad
        if objective(candidate) > best_value:
            best_point = candidate
            best_value = float(objective(candidate))
        else:
            step *= 0.5
    return best_value, best_point


def adapted_frame(gmat, xvec):
    """Orthonormal frame with X first."""
    xvec = np.asarray(xvec, dtype=float)
    first = gram_schmidt([xvec], gmat)
    rest = orthogonal_complement(first, gmat)
    return Frame(np.vstack([xvec, rest.vectors]), gmat)


def ricci0(chart, point, xvec, frame, cfg=None):
    """Levi-Civita Ricci curvature of *chart* along the unit vector X.

    The curvature tensor is recomputed from the metric of *chart* by nested
    differences; an InducedGeometry only carries the connection.
    """
    cfg = cfg or DEFAULT_FD
    point = as_point(point, chart.dim)
    if chart.dim == 1:
        return 0.0
    rten = curvature_at(lambda pnt: levi_civita(chart, pnt, cfg), point, cfg,
                        chart.contains)
    return ricci_pair(rten, chart.metric_at(point), xvec, frame)


class RicciReport(object):

    """All the terms of the Chen-Ricci inequality at one point."""

    def __init__(self, **kwargs):
        self.__dict__.update(kwargs)

    @property
    def lhs(self):
        return self.ric_pair

    def as_dict(self):
        res = dict(self.__dict__)
        for key, val in res.items():
            if isinstance(val, np.ndarray):
                res[key] = val.tolist()
        return res

    def __repr__(self):
        return "RicciReport(slack=%g, applicable=%s)" % (self.slack,
                                                         self.applicable)


def _ambient_fits(imm, pair, xpt, cfg):
    """Constant holomorphic curvature fits of S̄ and of the Levi-Civita
    curvature of the ambient chart, with both tensors."""
    ambient = imm.ambient
    samb = ambient_s_tensor(pair, xpt, cfg, ambient.contains)
    rlc = curvature_at(lambda pnt: levi_civita(ambient, pnt, cfg), xpt, cfg,
                       ambient.contains)
    c_s, res_s = fit_holomorphic_c(ambient, [(xpt, samb)], cfg)
    c_lc, res_lc = fit_holomorphic_c(ambient, [(xpt, rlc)], cfg)
    return c_s, res_s, c_lc, res_lc, samb, rlc


def chen_ricci_report(imm, pair, point, xvec, c=None, cfg=None,
                      fit_tol=FIT_TOL, equality_tol=EQUALITY_TOL, geom=None):
    """Assemble both sides of the Chen-Ricci inequality at *point*.

    With *c* None the fitted holomorphic curvature is used.  The report is
    applicable when the ambient curvature fits pass with the same c.
    """
    cfg = cfg or DEFAULT_FD
    point = as_point(point, imm.dim)
    geom = geom or induced_geometry(imm, pair, point, cfg)
    gmat = geom.induced_metric
    xvec = np.asarray(xvec, dtype=float)
    norm2 = xvec.dot(gmat).dot(xvec)
    if abs(norm2 - 1.0) > 1e-6:
        raise NonUnitVectorError("X has squared length %g" % norm2)
    m = imm.dim
    frame = adapted_frame(gmat, xvec)

    c_s, res_s, c_lc, res_lc, samb, rlc = _ambient_fits(
        imm, pair, geom.ambient_point, cfg)
    c_fit = 0.5 * (c_s + c_lc)
    applicable = (res_s <= fit_tol and res_lc <= fit_tol and
                  abs(c_s - c_lc) <= fit_tol)
    if c is None:
        c = c_fit
    elif abs(c - c_fit) > fit_tol:
        applicable = False

    if m > 1:
        sint = intrinsic_s_tensor(imm, pair, point, cfg)
        ric = ricci_pair(sint, gmat, xvec, frame)
    else:
        ric = 0.0
    ric_lc = ricci0(imm.induced_chart(cfg), point, xvec, frame, cfg)
    pxvec = geom.pftf.P.dot(xvec)
    px_norm2 = float(pxvec.dot(gmat).dot(pxvec))
    h_norm2 = float(geom.H.dot(geom.H))
    h_star_norm2 = float(geom.H_star.dot(geom.H_star))
    factor = m - 1 + 3 * px_norm2
    rhs = (2 * ric_lc - c / 4.0 * factor -
           m ** 2 / 8.0 * (h_norm2 + h_star_norm2))

    hform = geom.h_in_frame(frame)
    hform_star = geom.h_in_frame(frame, starred=True)

    def gauss_sum(hten):
        return float(np.sum(hten[0, 0, :] * hten[1:, 1:, :].trace(axis1=0,
                                                                  axis2=1)) -
                     np.sum(hten[0, 1:, :] ** 2))

    def dropped(hten):
        offdiag = float(np.sum(hten[0, 1:, :] ** 2))
        rest = hten[1:, 1:, :].trace(axis1=0, axis2=1)
        balance = float(np.sum((hten[0, 0, :] - rest) ** 2)) / 4.0
        return offdiag, balance

    off, bal = dropped(hform)
    off_star, bal_star = dropped(hform_star)
    predicted = 0.5 * (off + bal + off_star + bal_star)
    identity = ((2 * ric - c / 2.0 * factor) -
                (4 * (ric_lc - c / 4.0 * factor) - gauss_sum(hform) -
                 gauss_sum(hform_star)))

    # the same chain with the ambient Ricci sums taken from S̄ and R̄⁰
    # instead of the constant curvature form
    pushed = geom.jacobian.dot(frame.vectors.T).T
    if m > 1:
        ric_s_bar = ricci_pair(samb, geom.ambient_metric, pushed[0], pushed)
        ric_lc_bar = ricci_pair(rlc, geom.ambient_metric, pushed[0], pushed)
    else:
        ric_s_bar = ric_lc_bar = 0.0
    gauss_identity = ((2 * ric - 2 * ric_s_bar) -
                      (4 * (ric_lc - ric_lc_bar) - gauss_sum(hform) -
                       gauss_sum(hform_star)))
    # slack = predicted + ambient_defect at every point
    ambient_defect = ric_s_bar - 2 * ric_lc_bar + c / 4.0 * factor

    equality = {}
    for name, hten, mean in (('h', hform, geom.H),
                             ('h_star', hform_star, geom.H_star)):
        hxx = hten[0, 0, :]
        equality[name + '_xx'] = bool(
            np.linalg.norm(hxx - m / 2.0 * mean) <= equality_tol)
        offd = np.max(np.abs(hten[0, 1:, :])) if m > 1 and hten.size else 0.0
        equality[name + '_xy'] = bool(offd <= equality_tol)

    slack = ric - rhs
    LOG.debug("Chen-Ricci at %s: lhs %g rhs %g", str(point), ric, rhs)
    return RicciReport(point=point, X=xvec, m=m, ric_pair=float(ric),
                       ric0=float(ric_lc), px_norm2=px_norm2, c=float(c),
                       c_fit=float(c_fit), c_fit_residual=float(res_s),
                       lc_fit_residual=float(res_lc),
                       h_norm2=h_norm2, h_star_norm2=h_star_norm2,
                       rhs=float(rhs), slack=float(slack),
                       predicted_slack=float(predicted),
                       dropped_terms=off + off_star,
                       quadratic_gap=bal + bal_star,
                       identity_residual=abs(float(identity)),
                       gauss_identity_residual=abs(float(gauss_identity)),
                       ambient_defect=float(ambient_defect),
                       equality=equality, applicable=applicable,
                       reason=None if applicable else
                       "ambient-not-constant-curvature")


def corollary_bounds(report, sector, tol=1e-6):
    """Right hand side of the inequality specialized to D or D⊥."""
    m = report.m
    mean_term = m ** 2 / 8.0 * (report.h_norm2 + report.h_star_norm2)
    if sector == SECTOR_D:
        if abs(report.px_norm2 - 1.0) > tol:
            raise SectorMismatchError("X is not in D: |PX|² = %g" %
                                      report.px_norm2)
        return 2 * report.ric0 - report.c * (m + 2) / 4.0 - mean_term
    if sector == SECTOR_DPERP:
        if report.px_norm2 > tol:
            raise SectorMismatchError("X is not in D⊥: |PX|² = %g" %
                                      report.px_norm2)
        return 2 * report.ric0 - report.c * (m - 1) / 4.0 - mean_term
    raise ValueError("Unknown sector: %s" % str(sector))
