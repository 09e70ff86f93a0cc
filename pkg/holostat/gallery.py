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

"""Ready made statistical manifolds and submanifolds.

Complex Euclidean spaces C^k use the real coordinates
(x¹, ..., x^k, y¹, ..., y^k) with J∂x_i = ∂y_i and J∂y_i = -∂x_i.
"""

import logging

import numpy as np

from holostat.chart import DEFAULT_FD, Chart, DomainError
from holostat.statstruct import CONTRAST_BUILDERS, DualPair
from holostat.submanifold import CRStructure, Immersion

LOG = logging.getLogger(__name__)

EXP_FAMILY = 'exp-family'
HALF_PLANE = 'half-plane'
K_SPACES = ('k1-space', 'k2-space', 'k3-space', 'k4-space')
TRIVIAL_FLAT = 'trivial-flat'
HOLOMORPHIC_INCLUSION = 'holomorphic-inclusion'
CR_CN_R = 'cr-cn-r'
LAGRANGIAN_TORUS = 'lagrangian-torus'
GENERIC_PRODUCT = 'generic-product'
CR_DEFECT = 'cr-defect'

CONTRASTS = ('none', 'k1', 'k2', 'k3', 'k4')
LAMBDA_MODES = ('radial', 'constant')

AMBIENT_HALF_WIDTH = 2.0
ANGLE_MARGIN = 0.1

DEFAULT_PARAMS = {
    EXP_FAMILY: {'alpha': 1.0},
    HALF_PLANE: {'lambda': 0.1},
    'k1-space': {'n': 1, 'lambda_mode': 'radial', 'lambda_vector': None},
    'k2-space': {'n': 1, 'lambda_mode': 'radial', 'lambda_vector': None},
    'k3-space': {'n': 1, 'lambda_mode': 'radial', 'lambda_vector': None},
    'k4-space': {'n': 1, 'lambda_mode': 'radial', 'lambda_vector': None},
    TRIVIAL_FLAT: {'n': 2, 'm': 2},
    HOLOMORPHIC_INCLUSION: {'n': 2, 'k': 1, 'contrast': 'none',
                            'lambda_mode': 'radial', 'lambda_vector': None},
    CR_CN_R: {'n': 1, 'k': 0, 'contrast': 'k3', 'lambda_mode': 'radial',
              'lambda_vector': None},
    LAGRANGIAN_TORUS: {'n': 2, 'r': None, 'contrast': 'none',
                       'lambda_mode': 'radial', 'lambda_vector': None},
    GENERIC_PRODUCT: {'n': 1, 'contrast': 'k4', 'lambda_mode': 'radial',
                      'lambda_vector': None},
    CR_DEFECT: {'eps': 1e-3},
}

DESCRIPTIONS = {
    EXP_FAMILY: "exponential distributions, Fisher metric and α-connections",
    HALF_PLANE: "half-plane x¹ > 0 with metric x¹δ and constant contrast λ",
    'k1-space': "flat C^n with the contrast tensor K₁",
    'k2-space': "flat C^n with the contrast tensor K₂",
    'k3-space': "flat C^n with the contrast tensor K₃",
    'k4-space': "flat C^n with the contrast tensor K₄",
    TRIVIAL_FLAT: "totally geodesic real m-plane in flat C^n",
    HOLOMORPHIC_INCLUSION: "complex subspace C^k of C^n",
    CR_CN_R: "C^n × R as a CR-product in C^(n+1+k)",
    LAGRANGIAN_TORUS: "product of circle arcs, Lagrangian in C^n",
    GENERIC_PRODUCT: "C^(n+1) × arcs^n as a generic submanifold of C^(2n+1)",
    CR_DEFECT: "(x, y, t) -> (x, t, y, εxt), a CR submanifold off by ε",
}

IMMERSION_IDS = (TRIVIAL_FLAT, HOLOMORPHIC_INCLUSION, CR_CN_R,
                 LAGRANGIAN_TORUS, GENERIC_PRODUCT, CR_DEFECT)


class GallerySpec(object):

    """A gallery id with its merged and validated parameters."""

    def __init__(self, gallery_id, params=None):
        if gallery_id not in DEFAULT_PARAMS:
            raise DomainError("Unknown gallery id: %s" % str(gallery_id))
        self.gallery_id = gallery_id
        self.params = DEFAULT_PARAMS[gallery_id].copy()
        unknown = set(params or {}) - set(self.params)
        if unknown:
            raise DomainError("Unknown parameters for %s: %s" %
                              (gallery_id, ", ".join(sorted(unknown))))
        self.params.update(params or {})
        self._validate()

    @property
    def is_immersion(self):
        return self.gallery_id in IMMERSION_IDS

    def _validate(self):
        params = self.params
        if 'n' in params:
            if int(params['n']) != params['n'] or params['n'] < 1:
                raise DomainError("n must be a positive integer")
            params['n'] = int(params['n'])
        if params.get('contrast', 'none') not in CONTRASTS:
            raise DomainError("Unknown contrast: %s" % str(params['contrast']))
        if params.get('lambda_mode', 'radial') not in LAMBDA_MODES:
            raise DomainError("Unknown lambda mode: %s" %
                              str(params['lambda_mode']))
        if self.gallery_id == TRIVIAL_FLAT and \
           not 1 <= params['m'] <= params['n']:
            raise DomainError("A totally real plane needs 1 <= m <= n")
        if self.gallery_id == HOLOMORPHIC_INCLUSION and \
           not 1 <= params['k'] < params['n']:
            raise DomainError("A complex subspace needs 1 <= k < n")
        if self.gallery_id == CR_CN_R and params['k'] < 0:
            raise DomainError("The extra codimension k must be >= 0")
        if self.gallery_id == LAGRANGIAN_TORUS:
            if params['r'] is None:
                params['r'] = [1.0] * params['n']
            radii = np.asarray(params['r'], dtype=float)
            if radii.shape != (params['n'], ) or np.any(radii <= 0):
                raise DomainError("r must hold n positive radii")

    def __repr__(self):
        return "GallerySpec(%s, %s)" % (self.gallery_id, self.params)


class GalleryObject(object):

    """The built chart, dual pair and (optional) immersion."""

    def __init__(self, spec, chart, pair, immersion=None, cr=None):
        self.spec = spec
        self.chart = chart
        self.pair = pair
        self.immersion = immersion
        self.cr = cr

    @property
    def sample_chart(self):
        """The chart the runner samples points from."""
        if self.immersion is not None:
            return self.immersion.domain
        return self.chart


def complex_structure(k):
    """Block matrix of J on C^k."""
    eye = np.eye(k)
    zero = np.zeros((k, k))
    return np.block([[zero, -eye], [eye, zero]])


def _lambda_field(dim, mode, vector):
    if mode == 'radial':
        return lambda point: np.asarray(point, dtype=float)
    if vector is None:
        vector = np.eye(dim)[0]
    vector = np.asarray(vector, dtype=float)
    if vector.shape != (dim, ):
        raise DomainError("lambda_vector must have %d entries" % dim)
    return lambda point: vector


def complex_space(k, contrast='none', lambda_mode='radial',
                  lambda_vector=None, half_width=AMBIENT_HALF_WIDTH,
                  name=None):
    """Flat C^k with the contrast tensor named by *contrast*."""
    dim = 2 * k
    jmat = complex_structure(k)
    gmat = np.eye(dim)
    if contrast == 'none':
        def kfield(point):
            return np.zeros((dim, dim, dim))
    else:
        builder = CONTRAST_BUILDERS[contrast]
        lam = _lambda_field(dim, lambda_mode, lambda_vector)

        def kfield(point):
            return builder(lam(point), jmat, gmat)
    return Chart(dim, lambda point: gmat,
                 bounds=[(-half_width, half_width)] * dim,
                 complex_structure=jmat, contrast=kfield,
                 metric_derivative=lambda point: np.zeros((dim, dim, dim)),
                 name=name or "C%d-%s" % (k, contrast))


def exp_family_chart(alpha):
    """Φ ∈ (0.1, 10) with g = Φ⁻² dΦ² and contrast α/Φ."""
    return Chart(1, lambda point: [[point[0] ** -2]], bounds=[(0.1, 10.0)],
                 contrast=lambda point: [[[alpha / point[0]]]],
                 metric_derivative=lambda point: [[[-2.0 * point[0] ** -3]]],
                 name=EXP_FAMILY)


def half_plane_contrast(lam):
    """K with -k¹₁₁ = k²₁₂ = k²₂₁ = k¹₂₂ = λ."""
    kten = np.zeros((2, 2, 2))
    kten[0, 0, 0] = -lam
    kten[1, 0, 1] = lam
    kten[1, 1, 0] = lam
    kten[0, 1, 1] = lam
    return kten


def half_plane_chart(lam):
    """x¹ > 0 with g = x¹{(dx¹)² + (dx²)²}, standard J and contrast λ."""
    kten = half_plane_contrast(lam)

    def dmetric(point):
        dmat = np.zeros((2, 2, 2))
        dmat[0] = np.eye(2)
        return dmat

    return Chart(2, lambda point: point[0] * np.eye(2),
                 bounds=[(0.1, 10.0), (-10.0, 10.0)],
                 complex_structure=complex_structure(1),
                 contrast=lambda point: kten, metric_derivative=dmetric,
                 name=HALF_PLANE)


def half_plane_connection(lam):
    """Closed form Γ = Γ⁰ + K of the half-plane."""
    kten = half_plane_contrast(lam)

    def gamma(point):
        half = 0.5 / point[0]
        gam = np.zeros((2, 2, 2))
        gam[0, 0, 0] = half
        gam[1, 0, 1] = half
        gam[1, 1, 0] = half
        gam[0, 1, 1] = -half
        return gam + kten
    return gamma


def _linear_immersion(matrix, domain, ambient, name):
    matrix = np.asarray(matrix, dtype=float)
    hess = np.zeros((matrix.shape[0], matrix.shape[1], matrix.shape[1]))
    return Immersion(lambda point: matrix.dot(point), domain, ambient,
                     jacobian=lambda point: matrix,
                     hessian=lambda point: hess, name=name)


def _box(dim, half_width=1.0):
    return Chart(dim, lambda point: np.eye(dim),
                 bounds=[(-half_width, half_width)] * dim,
                 name="box%d" % dim)


def _ambient(params, k):
    return complex_space(k, params.get('contrast', 'none'),
                         params.get('lambda_mode', 'radial'),
                         params.get('lambda_vector'))


def trivial_flat(params):
    """x-coordinate m-plane of flat C^n."""
    n, m = params['n'], params['m']
    ambient = complex_space(n)
    matrix = np.zeros((2 * n, m))
    matrix[:m, :m] = np.eye(m)
    imm = _linear_immersion(matrix, _box(m), ambient, TRIVIAL_FLAT)
    return imm, CRStructure(np.zeros((0, m)), np.eye(m))


def holomorphic_inclusion(params):
    """C^k -> C^n, (x, y) -> (x, 0, y, 0)."""
    n, k = params['n'], params['k']
    ambient = _ambient(params, n)
    matrix = np.zeros((2 * n, 2 * k))
    matrix[:k, :k] = np.eye(k)
    matrix[n:n + k, k:] = np.eye(k)
    imm = _linear_immersion(matrix, _box(2 * k), ambient,
                            HOLOMORPHIC_INCLUSION)
    return imm, CRStructure(np.eye(2 * k), np.zeros((0, 2 * k)))


def cr_cn_r(params):
    """C^n × R -> C^(n+1+k), (x, y, t) -> (x, t, 0, y, 0, 0)."""
    n, k = params['n'], params['k']
    total = n + 1 + k
    ambient = _ambient(params, total)
    dim = 2 * n + 1
    matrix = np.zeros((2 * total, dim))
    matrix[:n, :n] = np.eye(n)
    matrix[n, 2 * n] = 1.0
    matrix[total:total + n, n:2 * n] = np.eye(n)
    imm = _linear_immersion(matrix, _box(dim), ambient, CR_CN_R)
    basis = np.eye(dim)
    return imm, CRStructure(basis[:2 * n], basis[2 * n:])


def _angle_box(dim, first_angle):
    """Box with coordinates from *first_angle* on restricted to arcs."""
    limit = np.pi / 2 - ANGLE_MARGIN
    bounds = [(-1.0, 1.0)] * first_angle + [(-limit, limit)] * (dim -
                                                               first_angle)
    return Chart(dim, lambda point: np.eye(dim), bounds=bounds,
                 name="arcs%d" % dim)


def _circle_parts(radii, offset, total, dim, first_angle):
    """Mapping, Jacobian and Hessian pieces of the circle factors."""
    def mapping(point):
        res = np.zeros(2 * total)
        angles = point[first_angle:]
        res[offset:offset + len(radii)] = radii * np.cos(angles)
        res[total + offset:total + offset + len(radii)] = \
            radii * np.sin(angles)
        return res

    def jacobian(point):
        jac = np.zeros((2 * total, dim))
        for idx, (rad, ang) in enumerate(zip(radii, point[first_angle:])):
            jac[offset + idx, first_angle + idx] = -rad * np.sin(ang)
            jac[total + offset + idx, first_angle + idx] = rad * np.cos(ang)
        return jac

    def hessian(point):
        hess = np.zeros((2 * total, dim, dim))
        for idx, (rad, ang) in enumerate(zip(radii, point[first_angle:])):
            col = first_angle + idx
            hess[offset + idx, col, col] = -rad * np.cos(ang)
            hess[total + offset + idx, col, col] = -rad * np.sin(ang)
        return hess

    return mapping, jacobian, hessian


def lagrangian_torus(params):
    """θ -> (r cos θ, r sin θ) in C^n."""
    n = params['n']
    radii = np.asarray(params['r'], dtype=float)
    half_width = max(AMBIENT_HALF_WIDTH, 2.0 * float(np.max(radii)))
    ambient = complex_space(n, params['contrast'], params['lambda_mode'],
                            params['lambda_vector'], half_width=half_width)
    mapping, jacobian, hessian = _circle_parts(radii, 0, n, n, 0)
    imm = Immersion(mapping, _angle_box(n, 0), ambient, jacobian=jacobian,
                    hessian=hessian, name=LAGRANGIAN_TORUS)
    return imm, CRStructure(np.zeros((0, n)), np.eye(n))


def generic_product(params):
    """(x, y, θ) -> (x, cos θ, y, sin θ) from C^(n+1) × arcs^n into
    C^(2n+1)."""
    n = params['n']
    total = 2 * n + 1
    dim = 3 * n + 2
    ambient = _ambient(params, total)
    first_angle = 2 * n + 2
    linear = np.zeros((2 * total, dim))
    linear[:n + 1, :n + 1] = np.eye(n + 1)
    linear[total:total + n + 1, n + 1:2 * n + 2] = np.eye(n + 1)
    mapping, jacobian, hessian = _circle_parts(np.ones(n), n + 1, total, dim,
                                               first_angle)
    imm = Immersion(lambda point: linear.dot(point) + mapping(point),
                    _angle_box(dim, first_angle), ambient,
                    jacobian=lambda point: linear + jacobian(point),
                    hessian=hessian, name=GENERIC_PRODUCT)
    basis = np.eye(dim)
    return imm, CRStructure(basis[:first_angle], basis[first_angle:])


def cr_defect(params):
    """(x, y, t) -> (x, t, y, εxt) in flat C²."""
    eps = float(params['eps'])
    ambient = complex_space(2)

    def mapping(point):
        xval, yval, tval = point
        return np.array([xval, tval, yval, eps * xval * tval])

    def jacobian(point):
        xval, _, tval = point
        return np.array([[1.0, 0, 0],
                         [0, 0, 1.0],
                         [0, 1.0, 0],
                         [eps * tval, 0, eps * xval]])

    def hessian(point):
        hess = np.zeros((4, 3, 3))
        hess[3, 0, 2] = hess[3, 2, 0] = eps
        return hess

    imm = Immersion(mapping, _box(3), ambient, jacobian=jacobian,
                    hessian=hessian, name=CR_DEFECT)
    basis = np.eye(3)
    return imm, CRStructure(basis[:2], basis[2:])


IMMERSION_BUILDERS = {TRIVIAL_FLAT: trivial_flat,
                      HOLOMORPHIC_INCLUSION: holomorphic_inclusion,
                      CR_CN_R: cr_cn_r,
                      LAGRANGIAN_TORUS: lagrangian_torus,
                      GENERIC_PRODUCT: generic_product,
                      CR_DEFECT: cr_defect}


def build_chart(spec):
    """The (ambient) chart of *spec*."""
    params = spec.params
    if spec.gallery_id == EXP_FAMILY:
        return exp_family_chart(params['alpha'])
    if spec.gallery_id == HALF_PLANE:
        return half_plane_chart(params['lambda'])
    if spec.gallery_id in K_SPACES:
        return complex_space(params['n'], spec.gallery_id[:2],
                             params['lambda_mode'], params['lambda_vector'],
                             name=spec.gallery_id)
    return build_immersion(spec)[0].ambient


def build_immersion(spec):
    """The immersion of *spec* and its CR structure."""
    if not spec.is_immersion:
        raise DomainError("%s is not a submanifold" % spec.gallery_id)
    return IMMERSION_BUILDERS[spec.gallery_id](spec.params)


def build_pair(spec, chart, cfg=None):
    """The dual pair living on *chart*."""
    if spec.gallery_id == EXP_FAMILY:
        return DualPair.alpha_family(spec.params['alpha'])
    return DualPair.from_contrast(chart, cfg or DEFAULT_FD)


def build(spec, cfg=None):
    """Build everything *spec* describes."""
    if not isinstance(spec, GallerySpec):
        spec = GallerySpec(*spec)
    LOG.debug("Building %s", str(spec))
    immersion = None
    crs = None
    if spec.is_immersion:
        immersion, crs = build_immersion(spec)
        chart = immersion.ambient
    else:
        chart = build_chart(spec)
    return GalleryObject(spec, chart, build_pair(spec, chart, cfg),
                         immersion, crs)


def catalog():
    """Gallery ids with their description and default parameters."""
    return [{'id': gid, 'description': DESCRIPTIONS[gid],
             'params': DEFAULT_PARAMS[gid].copy()}
            for gid in sorted(DEFAULT_PARAMS)]
