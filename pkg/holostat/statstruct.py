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

"""Dual connection pairs and the statistical structure residuals.
"""

import logging

import numpy as np
from scipy import integrate

from holostat.chart import (DEFAULT_FD, DomainError, QuadratureError,
                            StructureMissingError, as_point,
                            check_conditioning, gradient, levi_civita,
                            metric_derivative, scaled_residual)

LOG = logging.getLogger(__name__)

FROM_DUALITY = 'from-duality'
FROM_CONTRAST = 'from-contrast'
ALPHA_FAMILY = 'alpha-family'

TAIL_CUTOFF = 50.0


class DualPair(object):

    """A pair of connection fields ∇, ∇* given as point -> Γ callables."""

    def __init__(self, nabla, nabla_star, source=FROM_DUALITY, params=None):
        self.nabla = nabla
        self.nabla_star = nabla_star
        self.source = source
        self.params = dict(params or {})

    @classmethod
    def from_contrast(cls, chart, cfg=None):
        """The pair ∇⁰ ± K of the contrast tensor of *chart*."""
        if not chart.has_contrast:
            raise StructureMissingError("Chart %s has no contrast tensor" %
                                        chart.name)
        return cls(lambda point: from_contrast(chart, point, cfg)[0],
                   lambda point: from_contrast(chart, point, cfg)[1],
                   source=FROM_CONTRAST)

    @classmethod
    def from_duality(cls, chart, nabla, cfg=None):
        """Complete *nabla* with its dual connection."""
        return cls(nabla,
                   lambda point: dual_connection(chart, nabla, point, cfg),
                   source=FROM_DUALITY)

    @classmethod
    def alpha_family(cls, alpha):
        """α-connection pair of the exponential distribution family."""
        return cls(lambda point: alpha_connection(point[0], alpha),
                   lambda point: alpha_connection(point[0], -alpha),
                   source=ALPHA_FAMILY, params={'alpha': alpha})

    def at(self, point):
        """Both coefficient arrays at *point*."""
        return (np.asarray(self.nabla(point), dtype=float),
                np.asarray(self.nabla_star(point), dtype=float))

    def levi_civita(self, point):
        """The average ½(Γ + Γ*)."""
        gamma, gamma_star = self.at(point)
        return 0.5 * (gamma + gamma_star)

    def swapped(self):
        """The pair with the roles of ∇ and ∇* exchanged."""
        return DualPair(self.nabla_star, self.nabla, self.source,
                        self.params)

    def __repr__(self):
        return "DualPair(%s, %s)" % (self.source, self.params)


class StructureResiduals(object):

    """Max-norm residuals of the statistical manifold axioms."""

    def __init__(self, torsion, torsion_star, duality, codazzi,
                 holomorphic=None):
        self.torsion = torsion
        self.torsion_star = torsion_star
        self.duality = duality
        self.codazzi = codazzi
        self.holomorphic = holomorphic

    def as_dict(self):
        res = {'torsion': self.torsion,
               'torsion_star': self.torsion_star,
               'duality': self.duality,
               'codazzi': self.codazzi}
        if self.holomorphic is not None:
            res['holomorphic'] = self.holomorphic
        return res

    def max(self):
        return max(self.as_dict().values())


def _connection_at(nabla, point):
    if callable(nabla):
        return np.asarray(nabla(point), dtype=float)
    return np.asarray(nabla, dtype=float)


def dual_connection(chart, nabla, point, cfg=None):
    """Solve Xg(Y, Z) = g(∇_X Y, Z) + g(Y, ∇*_X Z) for Γ* at *point*."""
    point = as_point(point, chart.dim)
    gamma = _connection_at(nabla, point)
    gmat = chart.metric_at(point)
    check_conditioning(gmat)
    dmat = metric_derivative(chart, point, cfg)
    dim = chart.dim
    # rhs[i, j, k] = ∂_i g_jk - Γ^l_ij g_lk = Γ*^m_ik g_jm
    rhs = dmat - np.einsum('lij,lk->ijk', gamma, gmat)
    rhs = np.einsum('ijk->jik', rhs).reshape(dim, dim * dim)
    return np.linalg.solve(gmat, rhs).reshape(dim, dim, dim)


def from_contrast(chart, point, cfg=None):
    """Return (Γ⁰ + K, Γ⁰ - K) at *point*."""
    if not chart.has_contrast:
        raise StructureMissingError("Chart %s has no contrast tensor" %
                                    chart.name)
    point = as_point(point, chart.dim)
    gamma0 = levi_civita(chart, point, cfg)
    kten = chart.contrast_at(point)
    return gamma0 + kten, gamma0 - kten


def apply_tensor(kten, xvec, yvec):
    """K(X, Y) for a (1,2)-tensor stored as K[k, i, j]."""
    return np.einsum('kij,i,j->k', kten, xvec, yvec)


def check_k_conditions(chart, point, triples=None):
    """Residuals of the three contrast tensor conditions.

    Returns the max-norm residuals of K(X,Y) - K(Y,X),
    g(K(X,Y),Z) - g(Y,K(X,Z)) and K(X,JY) + JK(X,Y) over the given
    triples (default: all coordinate triples).
    """
    point = as_point(point, chart.dim)
    kten = chart.contrast_at(point)
    gmat = chart.metric_at(point)
    jmat = chart.j_at(point)
    if triples is None:
        basis = np.eye(chart.dim)
        triples = [(xv, yv, zv) for xv in basis for yv in basis for zv in basis]
    symmetric = 0.0
    self_adjoint = 0.0
    anti_complex = 0.0
    for xvec, yvec, zvec in triples:
        kxy = apply_tensor(kten, xvec, yvec)
        kyx = apply_tensor(kten, yvec, xvec)
        kxz = apply_tensor(kten, xvec, zvec)
        symmetric = max(symmetric, float(np.max(np.abs(kxy - kyx))))
        self_adjoint = max(self_adjoint,
                           abs(kxy.dot(gmat).dot(zvec) -
                               yvec.dot(gmat).dot(kxz)))
        kxjy = apply_tensor(kten, xvec, jmat.dot(yvec))
        anti_complex = max(anti_complex,
                           float(np.max(np.abs(kxjy + jmat.dot(kxy)))))
    return symmetric, self_adjoint, anti_complex


def _codazzi_tensor(gamma, gmat, dmat):
    """C[i, j, k] = (∇_i g)(∂_j, ∂_k)."""
    lowered = np.einsum('lij,lk->ijk', gamma, gmat)
    return dmat - lowered - lowered.transpose(0, 2, 1)


def statistical_residuals(chart, pair, point, cfg=None):
    """Torsion, duality and Codazzi residuals of *pair* at *point*."""
    point = as_point(point, chart.dim)
    gamma, gamma_star = pair.at(point)
    gmat = chart.metric_at(point)
    dmat = metric_derivative(chart, point, cfg)

    torsion = float(np.max(np.abs(gamma - gamma.transpose(0, 2, 1))))
    torsion_star = float(np.max(np.abs(gamma_star -
                                       gamma_star.transpose(0, 2, 1))))
    lowered = np.einsum('lij,lk->ijk', gamma, gmat)
    lowered_star = np.einsum('lik,lj->ijk', gamma_star, gmat)
    duality = scaled_residual(dmat - lowered - lowered_star,
                              dmat, gamma, gamma_star)
    ctensor = _codazzi_tensor(gamma, gmat, dmat)
    codazzi = scaled_residual(ctensor - ctensor.transpose(1, 0, 2),
                              dmat, gamma)
    holomorphic = None
    if chart.has_complex_structure:
        holomorphic = holomorphic_residual(chart, pair, point, cfg)
    return StructureResiduals(torsion, torsion_star, duality, codazzi,
                              holomorphic)


def _j_derivative(chart, point, cfg):
    """dJ[i, k, j] = ∂_i J^k_j, zero for constant structures."""
    if not callable(chart._complex_structure):
        return np.zeros((chart.dim, ) * 3)
    return gradient(chart.j_at, point, cfg or DEFAULT_FD, chart.contains)


def holomorphic_residual(chart, pair, point, cfg=None):
    """Max-norm of ∇_X(JY) - J∇*_X Y over coordinate vectors."""
    point = as_point(point, chart.dim)
    jmat = chart.j_at(point)
    gamma, gamma_star = pair.at(point)
    djmat = _j_derivative(chart, point, cfg)
    lhs = np.einsum('ikj->kij', djmat) + np.einsum('kil,lj->kij', gamma, jmat)
    rhs = np.einsum('km,mij->kij', jmat, gamma_star)
    return scaled_residual(lhs - rhs, gamma, gamma_star, jmat)


def kahler_form_residual(chart, pair, point, cfg=None):
    """Max-norm of ∇ω where ω(X, Y) = g(X, JY).

    (∇_i ω)_jk = ∂_i ω_jk - Γ^l_ij ω_lk - Γ^l_ik ω_jl.
    """
    point = as_point(point, chart.dim)
    gamma, _ = pair.at(point)

    def omega(pnt):
        return chart.metric_at(pnt).dot(chart.j_at(pnt))

    domega = gradient(omega, point, cfg or DEFAULT_FD, chart.contains)
    omat = omega(point)
    defect = (domega - np.einsum('lij,lk->ijk', gamma, omat) -
              np.einsum('lik,jl->ijk', gamma, omat))
    return scaled_residual(defect, domega, gamma, omat)


def alpha_connection(phi, alpha):
    """α-connection coefficient (α - 1)/Φ of the exponential family."""
    phi = float(phi)
    if not phi > 0:
        raise DomainError("The exponential family needs Φ > 0, got %s" %
                          str(phi))
    return np.array([[[(alpha - 1.0) / phi]]])


def fisher_metric_quadrature(phi):
    """Fisher information of p(u, Φ) = Φ exp(-Φu) by adaptive quadrature."""
    phi = float(phi)
    if not phi > 0:
        raise DomainError("The exponential family needs Φ > 0, got %s" %
                          str(phi))

    def integrand(uval):
        return (1.0 / phi - uval) ** 2 * phi * np.exp(-phi * uval)

    result = integrate.quad(integrand, 0.0, TAIL_CUTOFF / phi,
                            epsabs=1e-14, epsrel=1e-12, limit=200,
                            full_output=1)
    value, abserr = result[0], result[1]
    if len(result) > 3 or not np.isfinite(value) or \
       abserr > 1e-9 * max(abs(value), 1.0):
        raise QuadratureError("Fisher quadrature did not converge at "
                              "Φ=%s (error estimate %g)" % (phi, abserr))
    LOG.debug("Fisher metric at %s: %s (+- %g)", phi, value, abserr)
    return value


def contrast_k1(lam, jmat, gmat):
    """K₁ built from the vector field value *lam*."""
    jlam = jmat.dot(lam)
    # u_i = g(Λ, ∂_i), w_i = g(JΛ, ∂_i)
    uco = gmat.dot(lam)
    wco = gmat.dot(jlam)
    return (np.multiply.outer(lam, np.outer(wco, wco) - np.outer(uco, uco)) +
            np.multiply.outer(jlam, np.outer(wco, uco) + np.outer(uco, wco)))


def _uv(lam, jmat, gmat):
    """u_i = g(Λ, ∂_i) and v_i = g(Λ, J∂_i)."""
    uco = gmat.dot(lam)
    vco = jmat.T.dot(gmat).dot(lam)
    return uco, vco


def contrast_k2(lam, jmat, gmat):
    """K₂ built from the vector field value *lam*."""
    jlam = jmat.dot(lam)
    uco, vco = _uv(lam, jmat, gmat)
    uu = np.outer(uco, uco)
    vv = np.outer(vco, vco)
    mixed = np.outer(vco, uco) + np.outer(uco, vco)
    return (np.multiply.outer(lam, vv - uu - mixed) +
            np.multiply.outer(jlam, uu - vv - mixed))


def contrast_k3(lam, jmat, gmat):
    """K₃ built from the vector field value *lam*."""
    jlam = jmat.dot(lam)
    uco, vco = _uv(lam, jmat, gmat)
    uu = np.outer(uco, uco)
    vv = np.outer(vco, vco)
    mixed = np.outer(vco, uco) + np.outer(uco, vco)
    return np.multiply.outer(jlam, vv - uu) + np.multiply.outer(lam, mixed)


def contrast_k4(lam, jmat, gmat):
    """K₄ built from the vector field value *lam*."""
    jlam = jmat.dot(lam)
    uco, vco = _uv(lam, jmat, gmat)
    uu = np.outer(uco, uco)
    vv = np.outer(vco, vco)
    mixed = np.outer(vco, uco) + np.outer(uco, vco)
    return (np.multiply.outer(jlam, vv - uu + mixed) +
            np.multiply.outer(lam, uu - vv + mixed))


CONTRAST_BUILDERS = {'k1': contrast_k1,
                     'k2': contrast_k2,
                     'k3': contrast_k3,
                     'k4': contrast_k4}


def contrast_identities(lam, jmat, gmat):
    """Residuals of K₁(Λ) = K₃(JΛ), K₂ = (1 - J)K₁ and K₄ = (1 + J)K₃."""
    lam = np.asarray(lam, dtype=float)
    k1 = contrast_k1(lam, jmat, gmat)
    k2 = contrast_k2(lam, jmat, gmat)
    k3 = contrast_k3(lam, jmat, gmat)
    k4 = contrast_k4(lam, jmat, gmat)
    k3_rotated = contrast_k3(jmat.dot(lam), jmat, gmat)
    j_k1 = np.einsum('km,mij->kij', jmat, k1)
    j_k3 = np.einsum('km,mij->kij', jmat, k3)
    return {'k1_k3': scaled_residual(k1 - k3_rotated, k1),
            'k2_k1': scaled_residual(k2 - (k1 - j_k1), k2),
            'k4_k3': scaled_residual(k4 - (k3 + j_k3), k4)}
