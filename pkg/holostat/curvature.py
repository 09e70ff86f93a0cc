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

"""Curvature of connections, the averaged tensor S and its sectional and
Ricci curvatures.

Curvature arrays are ``r[l, i, j, k] = R^l_ijk`` with
``R(∂_i, ∂_j)∂_k = R^l_ijk ∂_l``.
"""

import logging

import numpy as np

from holostat.chart import (DEFAULT_FD, DegeneratePlaneError, FrameError,
                            gradient, scaled_residual)

LOG = logging.getLogger(__name__)

PLANE_THRESHOLD = 1e-14


def curvature_at(gamma_field, point, cfg=None, contains=None):
    """Curvature tensor of the connection *gamma_field* at *point*.

    R^l_ijk = ∂_i Γ^l_jk - ∂_j Γ^l_ik + Γ^l_im Γ^m_jk - Γ^l_jm Γ^m_ik,
    the partials taken with the curvature settings of *cfg*.
    """
    cfg = cfg or DEFAULT_FD
    point = np.asarray(point, dtype=float)
    gamma = np.asarray(gamma_field(point), dtype=float)
    dgamma = gradient(gamma_field, point, cfg.for_curvature(), contains)
    deriv = np.einsum('iljk->lijk', dgamma)
    quad = np.einsum('lim,mjk->lijk', gamma, gamma)
    curv = deriv + quad
    return curv - curv.transpose(0, 2, 1, 3)


def s_tensor(rten, rten_star):
    """S = ½(R + R*)."""
    rten = np.asarray(rten, dtype=float)
    rten_star = np.asarray(rten_star, dtype=float)
    if rten.shape != rten_star.shape:
        raise ValueError("Curvature shapes differ: %s and %s" %
                         (str(rten.shape), str(rten_star.shape)))
    return 0.5 * (rten + rten_star)


def pair_curvatures(pair, point, cfg=None, contains=None):
    """R and R* of a dual pair."""
    return (curvature_at(pair.nabla, point, cfg, contains),
            curvature_at(pair.nabla_star, point, cfg, contains))


def ambient_s_tensor(pair, point, cfg=None, contains=None):
    """The averaged curvature tensor of *pair* at *point*."""
    return s_tensor(*pair_curvatures(pair, point, cfg, contains))


def curvature_form(sten, gmat, xvec, yvec, zvec, wvec):
    """g(S(X, Y)Z, W)."""
    vec = np.einsum('lijk,i,j,k->l', sten, xvec, yvec, zvec)
    return float(vec.dot(gmat).dot(wvec))


def sectional_pair(sten, gmat, xvec, yvec):
    """g(S(X,Y)Y, X) divided by the squared area of the X, Y parallelogram."""
    xvec = np.asarray(xvec, dtype=float)
    yvec = np.asarray(yvec, dtype=float)
    xx = xvec.dot(gmat).dot(xvec)
    yy = yvec.dot(gmat).dot(yvec)
    xy = xvec.dot(gmat).dot(yvec)
    area2 = xx * yy - xy ** 2
    if area2 <= PLANE_THRESHOLD * xx * yy or xx * yy == 0:
        raise DegeneratePlaneError("Vectors %s and %s span no plane" %
                                   (str(xvec), str(yvec)))
    return curvature_form(sten, gmat, xvec, yvec, yvec, xvec) / area2


def _check_adapted_frame(frame, gmat, xvec, tol):
    vectors = np.asarray(getattr(frame, 'vectors', frame), dtype=float)
    gram = vectors.dot(gmat).dot(vectors.T)
    if np.max(np.abs(gram - np.eye(len(vectors)))) > tol:
        raise FrameError("Frame is not orthonormal")
    if np.max(np.abs(vectors[0] - xvec)) > tol:
        raise FrameError("First frame vector differs from X")
    return vectors


def ricci_pair(sten, gmat, xvec, frame, tol=1e-6):
    """Sum of sectional curvatures of the planes X ∧ e_i, i ≥ 2."""
    vectors = _check_adapted_frame(frame, gmat, np.asarray(xvec, dtype=float),
                                   tol)
    return float(sum(sectional_pair(sten, gmat, vectors[0], evec)
                     for evec in vectors[1:]))


def holomorphic_curvature_form(gmat, jmat):
    """Curvature tensor of constant holomorphic curvature c = 1.

    T(X,Y)Z = ¼{g(Y,Z)X - g(X,Z)Y + g(JY,Z)JX - g(JX,Z)JY + 2g(X,JY)JZ}
    """
    dim = gmat.shape[0]
    eye = np.eye(dim)
    # jlow[a, b] = g(J∂_a, ∂_b)
    jlow = jmat.T.dot(gmat)
    form = (np.einsum('jk,li->lijk', gmat, eye) -
            np.einsum('ik,lj->lijk', gmat, eye) +
            np.einsum('jk,li->lijk', jlow, jmat) -
            np.einsum('ik,lj->lijk', jlow, jmat) +
            2.0 * np.einsum('ji,lk->lijk', jlow, jmat))
    return 0.25 * form


def fit_holomorphic_c(chart, samples, cfg=None):
    """Least-squares fit of the constant holomorphic curvature.

    *samples* is a sequence of (point, S) pairs.  Returns the fitted c and
    the max-norm misfit; an all-zero design gives c = 0.
    """
    samples = list(samples)
    if not samples:
        raise ValueError("No curvature samples to fit")
    designs = []
    targets = []
    for point, sten in samples:
        designs.append(holomorphic_curvature_form(chart.metric_at(point),
                                                  chart.j_at(point)))
        targets.append(np.asarray(sten, dtype=float))
    design = np.concatenate([arr.ravel() for arr in designs])
    target = np.concatenate([arr.ravel() for arr in targets])
    norm2 = design.dot(design)
    if norm2 == 0:
        cfit = 0.0
    else:
        cfit = float(design.dot(target) / norm2)
    residual = float(np.max(np.abs(target - cfit * design)))
    LOG.debug("Fitted holomorphic curvature %s with residual %s", cfit,
              residual)
    return cfit, residual


def riemann_symmetry_residual(rten, gmat):
    """Residual of g(R(X,Y)Z,W) = -g(R(X,Y)W,Z) and the first Bianchi
    identity."""
    lowered = np.einsum('lijk,lm->ijkm', rten, gmat)
    skew = lowered + lowered.transpose(0, 1, 3, 2)
    bianchi = (rten + np.einsum('ljki->lijk', rten) +
               np.einsum('lkij->lijk', rten))
    return max(scaled_residual(skew, lowered),
               scaled_residual(bianchi, rten))
