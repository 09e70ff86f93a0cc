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

"""Immersed statistical submanifolds.

Tangent vectors are given by their coordinates in the submanifold chart,
normal vectors by their components in the orthonormal normal frame of the
InducedGeometry they belong to.  The second fundamental forms are stored
as ``B[i, j, r] = g(B(∂_i, ∂_j), ν_r)``.
"""

import logging

import numpy as np

from holostat.chart import (DEFAULT_FD, Chart, DependentVectorsError,
                            GeometryError, as_point, directional_derivative,
                            euclidean_complement, gradient, gram_schmidt,
                            levi_civita, metric_derivative,
                            orthogonal_complement, scaled_residual)
from holostat.curvature import (ambient_s_tensor, curvature_at,
                                curvature_form, pair_curvatures)
from holostat.statstruct import DualPair

LOG = logging.getLogger(__name__)

CHECK_IDS = ('prop3_1', 'prop3_2', 'prop3_3', 'eq3_1', 'prop3_5', 'prop3_7',
             'lemma3_9', 'prop3_10', 'prop3_10_star')


class Immersion(object):

    """A smooth map from the *domain* chart into the *ambient* chart."""

    def __init__(self, mapping, domain, ambient, jacobian=None, hessian=None,
                 name=None):
        if domain.dim >= ambient.dim:
            raise ValueError("Submanifold dimension %d must be below the "
                             "ambient dimension %d" % (domain.dim,
                                                       ambient.dim))
        self._mapping = mapping
        self._jacobian = jacobian
        self._hessian = hessian
        self.domain = domain
        self.ambient = ambient
        self.name = name or "immersion"

    @property
    def dim(self):
        return self.domain.dim

    @property
    def codim(self):
        return self.ambient.dim - self.domain.dim

    def __call__(self, point):
        return np.asarray(self._mapping(point), dtype=float)

    def jacobian_at(self, point, cfg=None):
        """Ambient × domain matrix, column i is ∂_i f."""
        if self._jacobian is not None:
            jac = self._jacobian(point)
        else:
            jac = gradient(self, point, cfg, self.domain.contains).T
        return np.array(jac, dtype=float).reshape(self.ambient.dim, self.dim)

    def hessian_at(self, point, cfg=None):
        """hess[a, i, j] = ∂_i ∂_j f^a."""
        if self._hessian is not None:
            hess = np.array(self._hessian(point), dtype=float)
            hess = hess.reshape(self.ambient.dim, self.dim, self.dim)
        else:
            hess = gradient(lambda pnt: self.jacobian_at(pnt, cfg), point,
                            cfg, self.domain.contains)
            hess = np.einsum('iaj->aij', hess)
        return 0.5 * (hess + hess.transpose(0, 2, 1))

    def induced_metric(self, point, cfg=None):
        """Pullback of the ambient metric."""
        jac = self.jacobian_at(point, cfg)
        gbar = self.ambient.metric_at(self(point))
        gmat = jac.T.dot(gbar).dot(jac)
        return 0.5 * (gmat + gmat.T)

    def induced_metric_derivative(self, point, cfg=None):
        """dg[k, i, j] = ∂_k g_ij of the pullback metric."""
        xpt = self(point)
        jac = self.jacobian_at(point, cfg)
        hess = self.hessian_at(point, cfg)
        gbar = self.ambient.metric_at(xpt)
        dgbar = metric_derivative(self.ambient, xpt, cfg)
        dmat = (np.einsum('aki,ab,bj->kij', hess, gbar, jac) +
                np.einsum('ai,ab,bkj->kij', jac, gbar, hess) +
                np.einsum('ak,abc,bi,cj->kij', jac, dgbar, jac, jac))
        return dmat

    def induced_chart(self, cfg=None):
        """The submanifold as a Riemannian chart of its own."""
        return Chart(self.dim,
                     lambda pnt: self.induced_metric(pnt, cfg),
                     bounds=self.domain.bounds,
                     contains=self.domain._contains,
                     metric_derivative=lambda pnt:
                     self.induced_metric_derivative(pnt, cfg),
                     name=self.name + "-induced")

    def __repr__(self):
        return "Immersion(%s, %d -> %d)" % (self.name, self.dim,
                                            self.ambient.dim)


class PFtf(object):

    """Tangential and normal parts of J on tangent and normal vectors."""

    def __init__(self, pmat, fmat, tmat, smallf, residual=0.0):
        self.P = pmat
        self.F = fmat
        self.t = tmat
        self.f = smallf
        self.reconstruction_residual = residual

    def __repr__(self):
        return "PFtf(residual=%g)" % self.reconstruction_residual


def _pftf(jac, gbar, jmat, nmat, gmat):
    """Decompose J on the tangent columns *jac* and normal columns *nmat*."""
    jtan = jmat.dot(jac)
    jnor = jmat.dot(nmat)
    pmat = np.linalg.solve(gmat, jac.T.dot(gbar).dot(jtan))
    fmat = nmat.T.dot(gbar).dot(jtan)
    tmat = np.linalg.solve(gmat, jac.T.dot(gbar).dot(jnor))
    smallf = nmat.T.dot(gbar).dot(jnor)
    residual = max(scaled_residual(jtan - jac.dot(pmat) - nmat.dot(fmat),
                                   jtan),
                   scaled_residual(jnor - jac.dot(tmat) - nmat.dot(smallf),
                                   jnor))
    return PFtf(pmat, fmat, tmat, smallf, residual)


def _frames(imm, point, cfg=None, seeds=None):
    """Ambient point, Jacobian, ambient metric, tangent and normal frames."""
    xpt = imm(point)
    jac = imm.jacobian_at(point, cfg)
    gbar = imm.ambient.metric_at(xpt)
    try:
        tangent = gram_schmidt(jac.T, gbar)
    except DependentVectorsError:
        raise DependentVectorsError("Jacobian of %s is rank deficient at %s" %
                                    (imm.name, str(point)))
    normal = orthogonal_complement(tangent, gbar, seeds)
    return xpt, jac, gbar, tangent, normal


def pftf(imm, point, cfg=None, seeds=None):
    """P, F, t and f at *point*."""
    point = as_point(point, imm.dim)
    xpt, jac, gbar, _, normal = _frames(imm, point, cfg, seeds)
    gmat = jac.T.dot(gbar).dot(jac)
    return _pftf(jac, gbar, imm.ambient.j_at(xpt), normal.matrix, gmat)


def induced_connection(imm, gamma_bar, point, cfg=None):
    """Induced connection and normal part of ∇̄_{∂_i}∂_j.

    Returns (gamma, normal_part) with gamma[k, i, j] in submanifold
    coordinates and normal_part[a, i, j] as ambient vectors.
    """
    xpt = imm(point)
    jac = imm.jacobian_at(point, cfg)
    hess = imm.hessian_at(point, cfg)
    gbar = imm.ambient.metric_at(xpt)
    gambient = np.asarray(gamma_bar(xpt), dtype=float)
    gmat = jac.T.dot(gbar).dot(jac)
    dim = imm.dim
    accel = hess + np.einsum('abc,bi,cj->aij', gambient, jac, jac)
    proj = np.einsum('ak,ab,bij->kij', jac, gbar, accel)
    gamma = np.linalg.solve(gmat, proj.reshape(dim, dim * dim))
    gamma = gamma.reshape(dim, dim, dim)
    normal_part = accel - np.einsum('ak,kij->aij', jac, gamma)
    return gamma, normal_part


def induced_pair(imm, pair, cfg=None):
    """The induced dual pair as connection fields on the domain."""
    return DualPair(lambda pnt: induced_connection(imm, pair.nabla, pnt,
                                                   cfg)[0],
                    lambda pnt: induced_connection(imm, pair.nabla_star, pnt,
                                                   cfg)[0],
                    source='induced')


class InducedGeometry(object):

    """Snapshot of the induced dual structure at one point."""

    def __init__(self, **kwargs):
        self.__dict__.update(kwargs)

    @property
    def dim(self):
        return self.induced_metric.shape[0]

    @property
    def codim(self):
        return len(self.normal_frame)

    def to_ambient(self, vector):
        """Push a tangent vector forward."""
        return self.jacobian.dot(vector)

    def normal_to_ambient(self, comps):
        """Ambient vector of normal frame components."""
        return self.normal_frame.vectors.T.dot(comps)

    def normal_components(self, vector):
        """Normal frame components of an ambient vector."""
        return self.normal_frame.components(vector)

    def norm(self, vector):
        """Length of a tangent vector in the induced metric."""
        vector = np.asarray(vector, dtype=float)
        return float(np.sqrt(max(vector.dot(self.induced_metric).dot(vector),
                                 0.0)))

    def second_form(self, xvec, yvec, starred=False):
        """B(X, Y) (or B*) as normal components."""
        bten = self.B_star if starred else self.B
        return np.einsum('ijr,i,j->r', bten, xvec, yvec)

    def h_in_frame(self, frame, starred=False):
        """h[a, b, r] for an orthonormal tangent frame given in coordinates."""
        vectors = np.asarray(getattr(frame, 'vectors', frame), dtype=float)
        bten = self.B_star if starred else self.B
        return np.einsum('ai,bj,ijr->abr', vectors, vectors, bten)

    def coordinate_frame(self):
        """The tangent frame expressed in submanifold coordinates."""
        gmat = self.induced_metric
        coords = np.linalg.solve(gmat, self.jacobian.T.dot(
            self.ambient_metric).dot(self.tangent_frame.vectors.T))
        return coords.T


def induced_geometry(imm, pair, point, cfg=None):
    """Frames, induced connections, both second fundamental forms, mean
    curvature vectors and normal connections of *imm* at *point*."""
    cfg = cfg or DEFAULT_FD
    point = as_point(point, imm.dim)
    if not imm.domain.contains(point):
        raise GeometryError("Point %s outside the domain of %s" %
                            (str(point), imm.name))
    xpt, jac, gbar, tangent, normal = _frames(imm, point, cfg)
    gmat = jac.T.dot(gbar).dot(jac)
    gmat = 0.5 * (gmat + gmat.T)
    ginv = np.linalg.inv(gmat)
    nvec = normal.vectors
    gamma, npart = induced_connection(imm, pair.nabla, point, cfg)
    gamma_star, npart_star = induced_connection(imm, pair.nabla_star, point,
                                                cfg)
    bten = np.einsum('ra,ab,bij->ijr', nvec, gbar, npart)
    bten_star = np.einsum('ra,ab,bij->ijr', nvec, gbar, npart_star)
    mean = np.einsum('ij,ijr->r', ginv, bten) / imm.dim
    mean_star = np.einsum('ij,ijr->r', ginv, bten_star) / imm.dim

    def normal_field(pnt):
        return _frames(imm, pnt, cfg, seeds=nvec)[4].vectors

    dnu = gradient(normal_field, point, cfg, imm.domain.contains)

    def connection_parts(gamma_bar):
        gambient = np.asarray(gamma_bar(xpt), dtype=float)
        cov = dnu + np.einsum('abc,bi,rc->ira', gambient, jac, nvec)
        ngamma = np.einsum('sa,ab,irb->sir', nvec, gbar, cov)
        tang = np.einsum('ak,ab,irb->kir', jac, gbar, cov)
        weing = np.linalg.solve(gmat, tang.reshape(imm.dim, -1))
        return ngamma, weing.reshape(tang.shape)

    ngamma, weing = connection_parts(pair.nabla)
    ngamma_star, weing_star = connection_parts(pair.nabla_star)

    structure = None
    if imm.ambient.has_complex_structure:
        structure = _pftf(jac, gbar, imm.ambient.j_at(xpt), normal.matrix,
                          gmat)
    LOG.debug("Induced geometry of %s at %s", imm.name, str(point))
    return InducedGeometry(point=point, ambient_point=xpt, jacobian=jac,
                           ambient_metric=gbar, tangent_frame=tangent,
                           normal_frame=normal, induced_metric=gmat,
                           gamma=gamma, gamma_star=gamma_star, B=bten,
                           B_star=bten_star, H=mean, H_star=mean_star,
                           normal_gamma=ngamma,
                           normal_gamma_star=ngamma_star,
                           weingarten=weing, weingarten_star=weing_star,
                           pftf=structure)


def shape_operator(geom, vector, starred=False):
    """A_V (from B*) or, with *starred*, A*_V (from B) as an m×m matrix.

    *vector* is given by normal frame components or as an ambient vector.
    """
    vector = np.asarray(vector, dtype=float)
    if vector.size == geom.jacobian.shape[0]:
        comps = geom.normal_components(vector)
        if np.max(np.abs(geom.normal_to_ambient(comps) - vector)) > \
           1e-8 * max(1.0, np.max(np.abs(vector))):
            raise GeometryError("Vector is not normal to the submanifold")
        vector = comps
    bten = geom.B if starred else geom.B_star
    bmat = np.einsum('ijr,r->ij', bten, vector)
    return np.linalg.solve(geom.induced_metric, bmat)


def intrinsic_s_tensor(imm, pair, point, cfg=None):
    """S of the induced dual pair."""
    return ambient_s_tensor(induced_pair(imm, pair, cfg), point, cfg,
                            imm.domain.contains)


def gauss_equation_residual(imm, pair, point, cfg=None, quadruples=None,
                            geom=None):
    """Residual of the Gauss equations of both connections.

    g(R̄(X,Y)Z,W) = g(R(X,Y)Z,W) + g(B(X,Z),B*(Y,W)) - g(B*(X,W),B(Y,Z))
    and the same with the roles of the connections exchanged.  *quadruples*
    is an optional list of (X, Y, Z, W) tangent vectors; the default is
    every coordinate quadruple.
    """
    cfg = cfg or DEFAULT_FD
    geom = geom or induced_geometry(imm, pair, point, cfg)
    xpt = geom.ambient_point
    jac = geom.jacobian
    gbar = geom.ambient_metric
    gmat = geom.induced_metric
    rbar, rbar_star = pair_curvatures(pair, xpt, cfg, imm.ambient.contains)
    rint, rint_star = pair_curvatures(induced_pair(imm, pair, cfg), point,
                                      cfg, imm.domain.contains)

    def one_side(ramb, rsub, bten, bten_star):
        lhs = np.einsum('labc,ai,bj,ck,lm,mw->ijkw', ramb, jac, jac, jac,
                        gbar, jac)
        rhs = (np.einsum('lijk,lw->ijkw', rsub, gmat) +
               np.einsum('ikr,jwr->ijkw', bten, bten_star) -
               np.einsum('iwr,jkr->ijkw', bten_star, bten))
        defect = lhs - rhs
        if quadruples is not None:
            defect = np.array([np.einsum('ijkw,i,j,k,w->', defect, *quad)
                               for quad in quadruples])
        return scaled_residual(defect, lhs, rhs)

    return max(one_side(rbar, rint, geom.B, geom.B_star),
               one_side(rbar_star, rint_star, geom.B_star, geom.B))


class CRStructure(object):

    """Holomorphic distribution D and its complement D⊥ in coordinates.

    Either basis may be a constant array of row vectors or a function of
    the point returning one.
    """

    def __init__(self, d_basis, dperp_basis):
        self._d_basis = d_basis
        self._dperp_basis = dperp_basis

    @staticmethod
    def _evaluate(basis, point, dim):
        if callable(basis):
            basis = basis(point)
        return np.array(basis, dtype=float).reshape(-1, dim)

    def d_at(self, point):
        """Rows spanning D at *point*."""
        return self._evaluate(self._d_basis, point, len(point))

    def dperp_at(self, point):
        """Rows spanning D⊥ at *point*."""
        return self._evaluate(self._dperp_basis, point, len(point))

    def is_proper(self, point):
        """Both distributions are non-trivial."""
        return len(self.d_at(point)) > 0 and len(self.dperp_at(point)) > 0

    def validate(self, point):
        """Check that D ⊕ D⊥ spans the tangent space and dim D is even."""
        dvecs = self.d_at(point)
        zvecs = self.dperp_at(point)
        if len(dvecs) % 2:
            raise ValueError("The holomorphic distribution must have even "
                             "dimension, got %d" % len(dvecs))
        stacked = np.vstack([dvecs, zvecs])
        if stacked.shape[0] != len(point) or \
           np.linalg.matrix_rank(stacked) != len(point):
            raise ValueError("D and D⊥ do not span the tangent space")


def _orthonormal_rows(vectors, gmat):
    if not len(vectors):
        return np.zeros((0, gmat.shape[0]))
    return gram_schmidt(vectors, gmat).vectors


def mu_frame(geom, cr):
    """Orthonormal normal components (rows) spanning μ = (J D⊥)^⊥."""
    zvecs = cr.dperp_at(geom.point)
    jzz = geom.pftf.F.dot(zvecs.T).T if len(zvecs) else np.zeros(
        (0, geom.codim))
    return euclidean_complement(jzz, geom.codim)


def cr_residuals(imm, cr, point, cfg=None):
    """Residuals of the CR conditions on D, D⊥ and of FP = 0."""
    point = as_point(point, imm.dim)
    xpt, jac, gbar, tangent, normal = _frames(imm, point, cfg)
    gmat = jac.T.dot(gbar).dot(jac)
    jmat = imm.ambient.j_at(xpt)
    dvecs = cr.d_at(point)
    zvecs = cr.dperp_at(point)

    def amb_norm(vec):
        return float(np.sqrt(max(vec.dot(gbar).dot(vec), 0.0)))

    jd_closure = 0.0
    if len(dvecs):
        dframe = gram_schmidt(jac.dot(dvecs.T).T, gbar)
        for dvec in dvecs:
            jvec = jmat.dot(jac.dot(dvec))
            jd_closure = max(jd_closure, amb_norm(jvec - dframe.project(jvec)) /
                             amb_norm(jvec))
    jdperp = 0.0
    for zvec in zvecs:
        jvec = jmat.dot(jac.dot(zvec))
        jdperp = max(jdperp, amb_norm(tangent.project(jvec)) / amb_norm(jvec))
    parts = _pftf(jac, gbar, jmat, normal.matrix, gmat)
    coords = np.linalg.solve(gmat, jac.T.dot(gbar).dot(tangent.matrix))
    fp_norm = float(np.linalg.norm(parts.F.dot(parts.P).dot(coords), 2))
    orthogonality = 0.0
    if len(dvecs) and len(zvecs):
        cross = dvecs.dot(gmat).dot(zvecs.T)
        orthogonality = scaled_residual(cross, gmat)
    return {'jd_closure': jd_closure,
            'jdperp_normality': jdperp,
            'fp_norm': fp_norm,
            'orthogonality': orthogonality}


def mixed_geodesic_residuals(geom, cr):
    """Max |B(X, Z)| and |B*(X, Z)| for X in D and Z in D⊥ (unit)."""
    evecs = _orthonormal_rows(cr.d_at(geom.point), geom.induced_metric)
    zvecs = _orthonormal_rows(cr.dperp_at(geom.point), geom.induced_metric)
    plain = 0.0
    star = 0.0
    for evec in evecs:
        for zvec in zvecs:
            plain = max(plain, float(np.linalg.norm(
                geom.second_form(evec, zvec))))
            star = max(star, float(np.linalg.norm(
                geom.second_form(evec, zvec, starred=True))))
    return plain, star


class CheckReport(object):

    """Hypothesis and conclusion residuals of one proposition check."""

    def __init__(self, check_id, hypotheses, conclusions, tol):
        self.check_id = check_id
        self.hypotheses = dict(hypotheses)
        self.conclusions = dict(conclusions)
        self.tol = tol

    @property
    def applicable(self):
        return all(val <= self.tol for val in self.hypotheses.values())

    @property
    def passed(self):
        """True/False when applicable, None otherwise."""
        if not self.applicable:
            return None
        return all(val <= self.tol for val in self.conclusions.values())

    def as_dict(self):
        return {'check_id': self.check_id,
                'hypotheses': self.hypotheses,
                'conclusions': self.conclusions,
                'applicable': self.applicable,
                'passed': self.passed}

    def __repr__(self):
        return "CheckReport(%s, %s)" % (self.check_id, self.as_dict())


class _PointState(object):

    """Shared per-point data of the proposition checks."""

    def __init__(self, imm, cr, pair, point, cfg):
        self.imm = imm
        self.cr = cr
        self.pair = pair
        self.cfg = cfg
        self.point = point
        self.contains = imm.domain.contains
        self.geom = induced_geometry(imm, pair, point, cfg)
        self.gmat = self.geom.induced_metric
        self.seeds = self.geom.normal_frame.vectors
        self.parts = self.geom.pftf
        self._derivatives = None

    def _pftf_at(self, pnt):
        return pftf(self.imm, pnt, self.cfg, seeds=self.seeds)

    @property
    def derivatives(self):
        """Coordinate partials of P, F, t, f in the seeded normal gauge."""
        if self._derivatives is None:
            names = ('P', 'F', 't', 'f')
            self._derivatives = dict(
                (name, gradient(lambda pnt, name=name:
                                getattr(self._pftf_at(pnt), name),
                                self.point, self.cfg, self.contains))
                for name in names)
        return self._derivatives

    def d_frame_field(self, pnt):
        return _orthonormal_rows(self.cr.d_at(pnt),
                                 self.imm.induced_metric(pnt, self.cfg))

    def d_frame(self):
        return self.d_frame_field(self.point)

    def dperp_frame(self):
        return _orthonormal_rows(self.cr.dperp_at(self.point), self.gmat)

    def tnorm(self, vector):
        return self.geom.norm(vector)

    def mu(self):
        return mu_frame(self.geom, self.cr)

    def involutivity(self):
        """Largest D⊥ component of brackets of the orthonormal D frame."""
        evecs = self.d_frame()
        zvecs = self.dperp_frame()
        if len(evecs) < 2 or not len(zvecs):
            return 0.0
        dframe = gradient(self.d_frame_field, self.point, self.cfg,
                          self.contains)
        worst = 0.0
        for aidx in range(len(evecs)):
            for bidx in range(aidx + 1, len(evecs)):
                bracket = (np.einsum('i,im->m', evecs[aidx],
                                     dframe[:, bidx, :]) -
                           np.einsum('i,im->m', evecs[bidx],
                                     dframe[:, aidx, :]))
                comps = zvecs.dot(self.gmat).dot(bracket)
                worst = max(worst, float(np.linalg.norm(comps)))
        return worst


def _check_prop3_1(state, tol):
    geom = state.geom
    parts = state.parts
    dsmallf = state.derivatives['f']
    # ⟨∇⊥_{∂i}(fν_r) - f∇⊥*_{∂i}ν_r, ν_s⟩
    lhs = (np.einsum('isr->sir', dsmallf) +
           np.einsum('siu,ur->sir', geom.normal_gamma, parts.f) -
           np.einsum('su,uir->sir', parts.f, geom.normal_gamma_star))
    # g(A*_{ν_r} tν_s - A*_{ν_s} tν_r, ∂_i)
    rhs = (np.einsum('ijr,js->sir', geom.B, parts.t) -
           np.einsum('ijs,jr->sir', geom.B, parts.t))
    return CheckReport('prop3_1', {},
                       {'identity': scaled_residual(lhs - rhs, lhs, rhs)},
                       tol), {'f_parallel_defect': scaled_residual(lhs),
                              'a_star_t_asymmetry': scaled_residual(rhs)}


def _check_prop3_2(state, tol):
    geom = state.geom
    parts = state.parts
    dfmat = state.derivatives['F']
    dtmat = state.derivatives['t']
    # ⟨∇⊥_{∂i}(F∂_j) - F∇*_{∂i}∂_j, ν_r⟩
    lhs = (np.einsum('irj->rij', dfmat) +
           np.einsum('ris,sj->rij', geom.normal_gamma, parts.F) -
           np.einsum('rk,kij->rij', parts.F, geom.gamma_star))
    # ∇_{∂i}(tν_r) - t∇⊥*_{∂i}ν_r
    tder = (np.einsum('ikr->kir', dtmat) +
            np.einsum('kil,lr->kir', geom.gamma, parts.t) -
            np.einsum('ks,sir->kir', parts.t, geom.normal_gamma_star))
    rhs = -np.einsum('jk,kir->rij', state.gmat, tder)
    return CheckReport('prop3_2', {},
                       {'identity': scaled_residual(lhs - rhs, lhs, rhs)},
                       tol), {'f_parallel_defect': scaled_residual(lhs),
                              't_parallel_defect': scaled_residual(tder)}


def _check_prop3_3(state, tol):
    geom = state.geom
    parts = state.parts
    holomorphic = max(scaled_residual(parts.F), scaled_residual(parts.t))
    ginv = np.linalg.inv(state.gmat)
    trace = np.einsum('ij,ijr->r', ginv, geom.B)
    trace_star = np.einsum('ij,ijr->r', ginv, geom.B_star)
    sint = intrinsic_s_tensor(state.imm, state.pair, state.point, state.cfg)
    samb = ambient_s_tensor(state.pair, geom.ambient_point, state.cfg,
                            state.imm.ambient.contains)
    jmat = state.imm.ambient.j_at(geom.ambient_point)
    worst = 0.0
    scale = 0.0
    directions = list(geom.coordinate_frame()) + list(np.eye(geom.dim))
    for xvec in directions:
        xvec = xvec / geom.norm(xvec)
        pxvec = parts.P.dot(xvec)
        intrinsic = curvature_form(sint, state.gmat, xvec, pxvec, pxvec, xvec)
        xamb = geom.to_ambient(xvec)
        jxamb = jmat.dot(xamb)
        ambient = curvature_form(samb, geom.ambient_metric, xamb, jxamb,
                                 jxamb, xamb)
        coupling = geom.second_form(xvec, xvec).dot(
            geom.second_form(xvec, xvec, starred=True))
        worst = max(worst, abs(intrinsic - ambient + 2.0 * coupling))
        scale = max(scale, abs(intrinsic), abs(ambient))
    return CheckReport('prop3_3', {'holomorphic': holomorphic},
                       {'trace_b': float(np.linalg.norm(trace)),
                        'trace_b_star': float(np.linalg.norm(trace_star)),
                        'sectional_identity': worst / (1.0 + scale)},
                       tol), {}


def _check_eq3_1(state, tol):
    geom = state.geom
    parts = state.parts
    worst = 0.0
    for vcomp in state.mu():
        a_fv = shape_operator(geom, parts.f.dot(vcomp))
        a_star_v = shape_operator(geom, vcomp, starred=True)
        for evec in state.d_frame():
            defect = a_fv.dot(evec) + a_star_v.dot(parts.P.dot(evec))
            worst = max(worst, state.tnorm(defect))
    return CheckReport('eq3_1', {}, {'shape_relation': worst}, tol), {}


def _check_prop3_5(state, tol):
    imm = state.imm
    geom = state.geom
    cfg = state.cfg
    mu_amb = np.array([geom.normal_to_ambient(vec) for vec in state.mu()])
    zvecs = state.cr.dperp_at(state.point)
    worst = 0.0
    if len(mu_amb) and len(zvecs) > 1:
        def j_field(pnt, idx):
            xpt = imm(pnt)
            return imm.ambient.j_at(xpt).dot(imm.jacobian_at(pnt, cfg).dot(
                state.cr.dperp_at(pnt)[idx]))

        for gamma_bar in (state.pair.nabla, state.pair.nabla_star):
            gambient = np.asarray(gamma_bar(geom.ambient_point), dtype=float)

            def covariant(xidx, yidx):
                deriv = directional_derivative(
                    lambda pnt: j_field(pnt, yidx), state.point,
                    zvecs[xidx], cfg, state.contains)
                return deriv + np.einsum('abc,b,c->a', gambient,
                                         geom.to_ambient(zvecs[xidx]),
                                         j_field(state.point, yidx))

            for xidx in range(len(zvecs)):
                for yidx in range(xidx + 1, len(zvecs)):
                    diff = covariant(xidx, yidx) - covariant(yidx, xidx)
                    comps = mu_amb.dot(geom.ambient_metric).dot(diff)
                    worst = max(worst, float(np.linalg.norm(comps)))
    return CheckReport('prop3_5', {}, {'mu_component': worst}, tol), {}


def _check_prop3_7(state, tol):
    geom = state.geom
    evecs = state.d_frame()
    zvecs = state.dperp_frame()
    results = {}
    for name, gamma in (('minimality', geom.gamma),
                        ('minimality_star', geom.gamma_star)):
        worst = 0.0
        if len(evecs) and len(zvecs):
            dframe = gradient(state.d_frame_field, state.point, state.cfg,
                              state.contains)
            total = np.zeros(geom.dim)
            for aidx, evec in enumerate(evecs):
                total += np.einsum('i,im->m', evec, dframe[:, aidx, :])
                total += np.einsum('kij,i,j->k', gamma, evec, evec)
            worst = float(np.linalg.norm(zvecs.dot(state.gmat).dot(total)))
        results[name] = worst
    return CheckReport('prop3_7', {}, results, tol), {}


def _check_lemma3_9(state, tol):
    geom = state.geom
    parts = state.parts
    evecs = state.d_frame()
    worst = 0.0
    worst_star = 0.0
    for xvec in evecs:
        for yvec in evecs:
            jx = parts.P.dot(xvec)
            jy = parts.P.dot(yvec)
            worst = max(worst, float(np.linalg.norm(
                geom.second_form(jx, yvec) - geom.second_form(jy, xvec))))
            worst_star = max(worst_star, float(np.linalg.norm(
                geom.second_form(jx, yvec, True) -
                geom.second_form(jy, xvec, True))))
    return CheckReport('lemma3_9', {'involutive': state.involutivity()},
                       {'b_symmetry': worst, 'b_star_symmetry': worst_star},
                       tol), {}


def _check_prop3_10(state, tol, starred_hypothesis=False):
    geom = state.geom
    parts = state.parts
    jmat = state.imm.ambient.j_at(geom.ambient_point)
    mixed, mixed_star = mixed_geodesic_residuals(geom, state.cr)
    worst = 0.0
    for vcomp in state.mu():
        # mixed geodesy for ∇̄ controls A*, for ∇̄* it controls A
        shape = shape_operator(geom, vcomp, starred=not starred_hypothesis)
        for evec in state.d_frame():
            lhs = geom.to_ambient(shape.dot(parts.P.dot(evec)))
            rhs = jmat.dot(geom.to_ambient(shape.dot(evec)))
            diff = lhs + rhs
            worst = max(worst, float(np.sqrt(max(
                diff.dot(geom.ambient_metric).dot(diff), 0.0))))
    if starred_hypothesis:
        return CheckReport('prop3_10_star',
                           {'involutive': state.involutivity(),
                            'mixed_geodesic_star': mixed_star},
                           {'shape_anticommutation': worst}, tol), {}
    return CheckReport('prop3_10',
                       {'involutive': state.involutivity(),
                        'mixed_geodesic': mixed},
                       {'shape_star_anticommutation': worst}, tol), {}


_CHECKS = {'prop3_1': _check_prop3_1,
           'prop3_2': _check_prop3_2,
           'prop3_3': _check_prop3_3,
           'eq3_1': _check_eq3_1,
           'prop3_5': _check_prop3_5,
           'prop3_7': _check_prop3_7,
           'lemma3_9': _check_lemma3_9,
           'prop3_10': _check_prop3_10,
           'prop3_10_star': lambda state, tol: _check_prop3_10(state, tol,
                                                               True)}


def proposition_suite(imm, cr, pair, point, check_id, cfg=None, tol=1e-5,
                      state=None):
    """Run the proposition check *check_id* at *point*.

    Returns a CheckReport whose conclusions are meaningful only when it is
    applicable; informational side values are attached as ``details``.
    """
    if check_id not in _CHECKS:
        raise KeyError("Unknown check id: %s" % str(check_id))
    cfg = cfg or DEFAULT_FD
    point = as_point(point, imm.dim)
    if state is None:
        state = _PointState(imm, cr, pair, point, cfg)
    if state.parts is None:
        raise GeometryError("Proposition checks need a complex structure")
    report, details = _CHECKS[check_id](state, tol)
    report.details = details
    return report


def point_state(imm, cr, pair, point, cfg=None):
    """Shared data for running several proposition checks at one point."""
    return _PointState(imm, cr, pair, as_point(point, imm.dim),
                       cfg or DEFAULT_FD)


def cr_product_criterion(imm, cr, pair, point, cfg=None, tol=1e-6,
                         geom=None):
    """Norms of A_{FD⊥}D and A*_{FD⊥}D and the CR-product verdict.

    The criterion is sufficient only.  Alongside it come the norm of the
    Levi-Civita part ½(A + A*)_{FD⊥}D and *contrast_normal*, the largest
    normal component of ½(B - B*)(X, Y) over X in D and tangent Y.  A
    false verdict with a vanishing Levi-Civita part is caused by the
    contrast tensor alone.
    """
    point = as_point(point, imm.dim)
    if not cr.is_proper(point):
        return {'a_norm': None, 'a_star_norm': None,
                'a_levi_civita_norm': None, 'contrast_normal': None,
                'verdict': None, 'reason': 'not-proper-cr'}
    geom = geom or induced_geometry(imm, pair, point, cfg)
    evecs = _orthonormal_rows(cr.d_at(point), geom.induced_metric)
    zvecs = _orthonormal_rows(cr.dperp_at(point), geom.induced_metric)
    a_norm = 0.0
    a_star_norm = 0.0
    a_lc_norm = 0.0
    for zvec in zvecs:
        fz = geom.pftf.F.dot(zvec)
        shape = shape_operator(geom, fz)
        shape_star = shape_operator(geom, fz, starred=True)
        shape_lc = 0.5 * (shape + shape_star)
        for evec in evecs:
            a_norm = max(a_norm, geom.norm(shape.dot(evec)))
            a_star_norm = max(a_star_norm, geom.norm(shape_star.dot(evec)))
            a_lc_norm = max(a_lc_norm, geom.norm(shape_lc.dot(evec)))
    tvecs = _orthonormal_rows(np.eye(imm.dim), geom.induced_metric)
    contrast = np.einsum('ijr,ai,bj->abr', 0.5 * (geom.B - geom.B_star),
                         evecs, tvecs)
    return {'a_norm': a_norm, 'a_star_norm': a_star_norm,
            'a_levi_civita_norm': a_lc_norm,
            'contrast_normal': float(np.max(np.abs(contrast))),
            'verdict': a_norm <= tol and a_star_norm <= tol, 'reason': None}


def riemannian_product_hypotheses(imm, cr, pair, point, cfg=None, tol=1e-6,
                                  geom=None):
    """Residuals of the hypotheses and the conclusion of the Riemannian
    product criterion for generic submanifolds."""
    cfg = cfg or DEFAULT_FD
    point = as_point(point, imm.dim)
    geom = geom or induced_geometry(imm, pair, point, cfg)
    parts = geom.pftf
    gmat = geom.induced_metric
    dpmat = gradient(lambda pnt: pftf(imm, pnt, cfg).P, point, cfg,
                     imm.domain.contains)
    # P∇*_{∂i}∂_j - ∇_{∂i}(P∂_j)
    lhs = np.einsum('kl,lij->kij', parts.P, geom.gamma_star)
    rhs = (np.einsum('ikj->kij', dpmat) +
           np.einsum('kil,lj->kij', geom.gamma, parts.P))
    defect = lhs - rhs
    py_residual = max(geom.norm(defect[:, i, j])
                      for i in range(geom.dim) for j in range(geom.dim))
    py_residual /= 1.0 + max(np.max(np.abs(lhs)), np.max(np.abs(rhs)))
    evecs = _orthonormal_rows(cr.d_at(point), gmat)
    bstar_d = 0.0
    for evec in evecs:
        bstar_d = max(bstar_d, float(np.max(np.abs(
            np.einsum('ijr,j->ir', geom.B_star, evec)))))
    conclusion = float(np.max(np.abs(
        np.einsum('ijr,jk->ikr', geom.B_star, parts.P))))
    f_residual = float(np.max(np.abs(parts.f))) if parts.f.size else 0.0
    applicable = max(f_residual, py_residual, bstar_d) <= tol
    return {'f_residual': f_residual,
            'py_residual': float(py_residual),
            'bstar_d_residual': bstar_d,
            'conclusion_b_residual': conclusion,
            'applicable': applicable}


def curvature_of_induced_metric(imm, point, cfg=None):
    """Levi-Civita curvature tensor of the pullback metric."""
    chart = imm.induced_chart(cfg)
    return curvature_at(lambda pnt: levi_civita(chart, pnt, cfg), point, cfg,
                        chart.contains)
