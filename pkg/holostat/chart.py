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

"""Coordinate charts, finite differences and metric linear algebra.

Index conventions used throughout the package:

* connection coefficients are arrays ``gamma[k, i, j] = Γ^k_ij``, the
  ``∂_k`` component of ``∇_{∂_i} ∂_j``;
* metric derivatives are arrays ``dg[i, j, k] = ∂_i g_jk``;
* contrast tensors are arrays ``K[k, i, j] = K^k_ij``;
* frames are stored row-wise, ``frame.vectors[a]`` is the a-th vector.
"""

import logging

import numpy as np
from scipy.linalg import null_space

LOG = logging.getLogger(__name__)

CENTRAL2 = 'central-2nd-order'
CENTRAL4 = 'central-4th-order'
SCHEMES = (CENTRAL2, CENTRAL4)

PIVOT_THRESHOLD = 1e-12
CONDITION_LIMIT = 1e10


class GeometryError(Exception):
    """Base class for the errors raised by the geometry code."""


class BoundaryError(GeometryError):
    """A stencil left the chart even after shrinking the step."""


class DegenerateMetricError(GeometryError):
    """The metric is singular or too badly conditioned."""


class DependentVectorsError(GeometryError):
    """The input vectors are (numerically) linearly dependent."""


class StructureMissingError(GeometryError):
    """The chart lacks the complex structure or the contrast tensor."""


class DomainError(GeometryError, ValueError):
    """An argument is outside of its mathematical domain."""


class DegeneratePlaneError(GeometryError):
    """Two vectors do not span a plane."""


class FrameError(GeometryError):
    """A frame is not orthonormal or not adapted as required."""


class NonUnitVectorError(GeometryError):
    """A vector that should have unit length does not."""


class SectorMismatchError(GeometryError):
    """A direction does not belong to the claimed distribution."""


class QuadratureError(GeometryError):
    """Numerical integration did not converge."""


class FDConfig(object):

    """Finite difference settings."""

    def __init__(self, step=1e-5, scheme=CENTRAL2, tol_identity=1e-6,
                 curvature_step=1e-3, curvature_scheme=CENTRAL4,
                 max_shrink=20, shrink_factor=0.5):
        if step <= 0 or curvature_step <= 0:
            raise ValueError("Finite difference steps must be positive")
        for name in (scheme, curvature_scheme):
            if name not in SCHEMES:
                raise ValueError("Unknown finite difference scheme: %s" %
                                 str(name))
        self.step = float(step)
        self.scheme = scheme
        self.tol_identity = float(tol_identity)
        self.curvature_step = float(curvature_step)
        self.curvature_scheme = curvature_scheme
        self.max_shrink = int(max_shrink)
        self.shrink_factor = float(shrink_factor)

    def for_curvature(self):
        """Settings for the outer derivative of nested differentiation."""
        return FDConfig(step=self.curvature_step,
                        scheme=self.curvature_scheme,
                        tol_identity=self.tol_identity,
                        curvature_step=self.curvature_step,
                        curvature_scheme=self.curvature_scheme,
                        max_shrink=self.max_shrink,
                        shrink_factor=self.shrink_factor)

    def as_dict(self):
        """Return the settings as a plain dictionary."""
        return {'step': self.step,
                'scheme': self.scheme,
                'tol_identity': self.tol_identity,
                'curvature_step': self.curvature_step,
                'curvature_scheme': self.curvature_scheme,
                'max_shrink': self.max_shrink,
                'shrink_factor': self.shrink_factor}

    def __repr__(self):
        return "FDConfig(%s)" % ", ".join(
            "%s=%r" % (key, val) for key, val in sorted(self.as_dict().items()))


DEFAULT_FD = FDConfig()


def as_point(coords, dim=None):
    """Convert *coords* to a float vector and validate it."""
    point = np.array(coords, dtype=float).reshape(-1)
    if dim is not None and point.size != dim:
        raise ValueError("Point has %d coordinates, expected %d" %
                         (point.size, dim))
    if not np.all(np.isfinite(point)):
        raise ValueError("Point has non-finite coordinates: %s" % str(point))
    return point


class Chart(object):

    """A coordinate chart carrying a metric and optional structures.

    *bounds* is a sequence of open intervals, one per coordinate, and
    *contains* an optional extra membership predicate.  The complex
    structure may be a constant matrix or a function of the point, the
    contrast tensor a function returning ``K[k, i, j]``.
    """

    def __init__(self, dim, metric, bounds=None, contains=None,
                 complex_structure=None, contrast=None,
                 metric_derivative=None, name=None):
        self.dim = int(dim)
        if self.dim < 1:
            raise ValueError("Chart dimension must be positive")
        if complex_structure is not None and self.dim % 2:
            raise ValueError("A chart with complex structure must have "
                             "even dimension")
        self._metric = metric
        if bounds is not None:
            bounds = np.array(bounds, dtype=float).reshape(self.dim, 2)
        self.bounds = bounds
        self._contains = contains
        self._complex_structure = complex_structure
        self._contrast = contrast
        self._metric_derivative = metric_derivative
        self.name = name or "chart"

    @property
    def has_complex_structure(self):
        return self._complex_structure is not None

    @property
    def has_contrast(self):
        return self._contrast is not None

    @property
    def has_metric_derivative(self):
        return self._metric_derivative is not None

    def contains(self, point):
        """Check that *point* lies in the chart."""
        point = np.asarray(point, dtype=float)
        if point.shape != (self.dim, ):
            return False
        if self.bounds is not None:
            if np.any(point <= self.bounds[:, 0]) or \
               np.any(point >= self.bounds[:, 1]):
                return False
        if self._contains is not None:
            return bool(self._contains(point))
        return True

    def metric_at(self, point):
        """Symmetric metric matrix at *point*."""
        mat = np.array(self._metric(point), dtype=float).reshape(self.dim,
                                                                 self.dim)
        return 0.5 * (mat + mat.T)

    def j_at(self, point):
        """Complex structure matrix at *point*, columns are J∂_i."""
        if self._complex_structure is None:
            raise StructureMissingError("Chart %s has no complex structure" %
                                        self.name)
        if callable(self._complex_structure):
            mat = self._complex_structure(point)
        else:
            mat = self._complex_structure
        return np.array(mat, dtype=float).reshape(self.dim, self.dim)

    def contrast_at(self, point):
        """Contrast tensor K[k, i, j] at *point*."""
        if self._contrast is None:
            raise StructureMissingError("Chart %s has no contrast tensor" %
                                        self.name)
        return np.array(self._contrast(point), dtype=float).reshape(
            self.dim, self.dim, self.dim)

    def analytic_metric_derivative(self, point):
        """Analytic dg[i, j, k] = ∂_i g_jk, or None when not supplied."""
        if self._metric_derivative is None:
            return None
        dmat = np.array(self._metric_derivative(point), dtype=float)
        dmat = dmat.reshape(self.dim, self.dim, self.dim)
        return 0.5 * (dmat + dmat.transpose(0, 2, 1))

    def check_complex_structure(self, point):
        """Residuals of J² = -1 and of the J-invariance of the metric."""
        jmat = self.j_at(point)
        gmat = self.metric_at(point)
        square = jmat.dot(jmat) + np.eye(self.dim)
        hermitian = jmat.T.dot(gmat).dot(jmat) - gmat
        return (float(np.max(np.abs(square))),
                scaled_residual(hermitian, gmat))

    def __repr__(self):
        return "Chart(%s, dim=%d)" % (self.name, self.dim)


def scaled_residual(defect, *operands):
    """Max-norm of *defect* normalized by 1 + max |operand entry|."""
    defect = np.asarray(defect, dtype=float)
    if defect.size == 0:
        return 0.0
    scale = 0.0
    for operand in operands:
        operand = np.asarray(operand, dtype=float)
        if operand.size:
            scale = max(scale, float(np.max(np.abs(operand))))
    return float(np.max(np.abs(defect))) / (1.0 + scale)


def _stencil(scheme):
    if scheme == CENTRAL2:
        return ((1.0, 0.5), (-1.0, -0.5))
    return ((2.0, -1.0 / 12), (1.0, 8.0 / 12), (-1.0, -8.0 / 12),
            (-2.0, 1.0 / 12))


def directional_derivative(field, point, direction, cfg=None, contains=None):
    """Central difference of *field* at *point* along *direction*.

    The step is shrunk geometrically when a stencil point falls outside
    *contains*; a BoundaryError is raised when shrinking does not help.
    """
    cfg = cfg or DEFAULT_FD
    point = np.asarray(point, dtype=float)
    direction = np.asarray(direction, dtype=float)
    stencil = _stencil(cfg.scheme)
    step = cfg.step
    for _ in range(cfg.max_shrink + 1):
        nodes = [point + offset * step * direction for offset, _ in stencil]
        if contains is None or all(contains(node) for node in nodes):
            break
        step *= cfg.shrink_factor
    else:
        raise BoundaryError("Stencil around %s leaves the domain" %
                            str(point))
    if step < cfg.step:
        LOG.debug("Step shrunk to %g at %s", step, str(point))
    total = None
    for (_, weight), node in zip(stencil, nodes):
        value = weight * np.asarray(field(node), dtype=float)
        total = value if total is None else total + value
    return total / step


def partial_derivative(field, point, axis, cfg=None, contains=None):
    """Central difference of *field* at *point* along coordinate *axis*."""
    point = np.asarray(point, dtype=float)
    direction = np.zeros(point.size)
    direction[axis] = 1.0
    return directional_derivative(field, point, direction, cfg, contains)


def gradient(field, point, cfg=None, contains=None):
    """Stack of all coordinate partials, first index is the axis."""
    point = np.asarray(point, dtype=float)
    return np.array([partial_derivative(field, point, axis, cfg, contains)
                     for axis in range(point.size)])


def check_conditioning(gmat):
    """Raise DegenerateMetricError for singular or ill conditioned metrics."""
    gmat = np.asarray(gmat, dtype=float)
    if not np.all(np.isfinite(gmat)):
        raise DegenerateMetricError("Metric has non-finite entries")
    eigs = np.linalg.eigvalsh(gmat)
    if eigs[0] <= PIVOT_THRESHOLD * max(abs(eigs[-1]), 1.0):
        raise DegenerateMetricError("Metric is not positive definite: "
                                    "eigenvalues %s" % str(eigs))
    if eigs[-1] / eigs[0] > CONDITION_LIMIT:
        raise DegenerateMetricError("Metric condition number %g too large" %
                                    (eigs[-1] / eigs[0]))


def metric_derivative(chart, point, cfg=None):
    """Return dg[i, j, k] = ∂_i g_jk at *point*."""
    point = as_point(point, chart.dim)
    dmat = chart.analytic_metric_derivative(point)
    if dmat is not None:
        return dmat
    dmat = gradient(chart.metric_at, point, cfg, chart.contains)
    return 0.5 * (dmat + dmat.transpose(0, 2, 1))


def levi_civita(chart, point, cfg=None):
    """Christoffel symbols of the metric of *chart* at *point*."""
    point = as_point(point, chart.dim)
    if not chart.contains(point):
        raise BoundaryError("Point %s outside chart %s" % (str(point),
                                                           chart.name))
    gmat = chart.metric_at(point)
    check_conditioning(gmat)
    dmat = metric_derivative(chart, point, cfg)
    # Christoffel symbols of the first kind, lowered index first
    first = 0.5 * (np.einsum('ijl->lij', dmat) + np.einsum('jil->lij', dmat) -
                   dmat)
    dim = chart.dim
    gamma = np.linalg.solve(gmat, first.reshape(dim, dim * dim))
    return gamma.reshape(dim, dim, dim)


def metric_compatibility_residual(chart, gamma, point, cfg=None):
    """Residual of ∂_i g_jk - Γ^m_ij g_mk - Γ^m_ik g_jm."""
    gmat = chart.metric_at(point)
    dmat = metric_derivative(chart, point, cfg)
    lowered = np.einsum('mij,mk->ijk', gamma, gmat)
    defect = dmat - lowered - lowered.transpose(0, 2, 1)
    return scaled_residual(defect, dmat, gamma)


class Frame(object):

    """An ordered set of vectors at a point with the Gram matrix used."""

    def __init__(self, vectors, gram):
        gram = np.asarray(gram, dtype=float)
        self.gram = gram
        self.vectors = np.array(vectors, dtype=float).reshape(-1,
                                                               gram.shape[0])

    def __len__(self):
        return self.vectors.shape[0]

    def __iter__(self):
        return iter(self.vectors)

    def __getitem__(self, idx):
        return self.vectors[idx]

    @property
    def matrix(self):
        """Vectors as columns."""
        return self.vectors.T

    def gram_matrix(self):
        """Pairwise inner products of the frame vectors."""
        return self.vectors.dot(self.gram).dot(self.vectors.T)

    def orthonormality_residual(self):
        """Max deviation of the Gram matrix from the identity."""
        if not len(self):
            return 0.0
        return float(np.max(np.abs(self.gram_matrix() - np.eye(len(self)))))

    def components(self, vector):
        """Inner products of *vector* with the (orthonormal) frame."""
        return self.vectors.dot(self.gram).dot(vector)

    def project(self, vector):
        """Orthogonal projection of *vector* on the span of the frame."""
        return self.vectors.T.dot(self.components(vector))


def _norm(vector, gram):
    return np.sqrt(max(float(vector.dot(gram).dot(vector)), 0.0))


def gram_schmidt(vectors, gram, pivot=PIVOT_THRESHOLD):
    """Orthonormalize *vectors* with respect to *gram*, keeping the order.

    Modified Gram-Schmidt with one reorthogonalization pass.
    """
    gram = np.asarray(gram, dtype=float)
    vectors = np.array(vectors, dtype=float).reshape(-1, gram.shape[0])
    basis = []
    for idx, vector in enumerate(vectors):
        length = _norm(vector, gram)
        work = vector.copy()
        for _ in range(2):
            for other in basis:
                work = work - other.dot(gram).dot(work) * other
        residual = _norm(work, gram)
        if length == 0 or residual <= pivot * max(length, 1.0):
            raise DependentVectorsError("Vector %d is dependent on the "
                                        "previous ones" % idx)
        basis.append(work / residual)
    return Frame(basis, gram)


def orthogonal_complement(subspace, ambient_gram, seeds=None):
    """Orthonormal frame of the g-orthogonal complement of *subspace*.

    Without *seeds* the complement is spanned by projecting the standard
    basis, picking the best conditioned candidate at each step.  With
    *seeds* they are projected and orthonormalized in the given order,
    which continues a frame from a nearby point smoothly.
    """
    gram = np.asarray(ambient_gram, dtype=float)
    dim = gram.shape[0]
    if isinstance(subspace, Frame):
        sub = subspace.vectors
    else:
        sub = np.array(subspace, dtype=float).reshape(-1, dim)
    if len(sub):
        sub = gram_schmidt(sub, gram).vectors
    wanted = dim - len(sub)
    if wanted == 0:
        return Frame(np.zeros((0, dim)), gram)

    def _residual(vector, basis):
        for other in basis:
            vector = vector - other.dot(gram).dot(vector) * other
        return vector

    basis = []
    if seeds is None:
        candidates = [_residual(vec, sub) for vec in np.eye(dim)]
        while len(basis) < wanted:
            residuals = [_residual(vec, basis) for vec in candidates]
            norms = [_norm(vec, gram) for vec in residuals]
            best = int(np.argmax(norms))
            if norms[best] <= PIVOT_THRESHOLD:
                raise DependentVectorsError("Could not complete the frame")
            basis.append(residuals[best] / norms[best])
    else:
        for vec in np.array(seeds, dtype=float).reshape(-1, dim):
            if len(basis) == wanted:
                break
            work = _residual(_residual(_residual(vec, sub), basis), basis)
            length = _norm(work, gram)
            if length > 1e-6 * max(_norm(vec, gram), 1.0):
                basis.append(work / length)
        if len(basis) < wanted:
            # seeds did not span the complement, fill up from the basis
            rest = orthogonal_complement(np.vstack([sub] + basis), gram)
            basis.extend(rest.vectors)
    return Frame(basis, gram)


def euclidean_complement(vectors, dim):
    """Orthonormal basis (rows) of the Euclidean complement in R^dim."""
    vectors = np.array(vectors, dtype=float).reshape(-1, dim)
    if not len(vectors):
        return np.eye(dim)
    return null_space(vectors).T
