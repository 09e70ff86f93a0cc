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

"""Test charts, finite differences and frames.
"""

import unittest

import numpy as np

from holostat.chart import (CENTRAL4, BoundaryError, Chart,
                            DegenerateMetricError, DependentVectorsError,
                            FDConfig, as_point, directional_derivative,
                            gram_schmidt, levi_civita,
                            metric_compatibility_residual, metric_derivative,
                            orthogonal_complement, partial_derivative,
                            scaled_residual)


def half_plane_metric_chart():
    """Metric x¹δ without an analytic derivative."""
    return Chart(2, lambda point: point[0] * np.eye(2),
                 bounds=[(0.1, 10.0), (-10.0, 10.0)], name="conformal")


class TestFiniteDifferences(unittest.TestCase):

    def test_square(self):
        """Derivative of x² at 1"""
        res = partial_derivative(lambda point: point[0] ** 2, [1.0], 0)
        self.assertAlmostEqual(res, 2.0, places=8)

    def test_fourth_order_convergence(self):
        """Halving the step divides the 4th order error by about 16"""
        errors = []
        for step in (0.1, 0.05):
            cfg = FDConfig(step=step, scheme=CENTRAL4)
            res = partial_derivative(lambda point: np.exp(point[0]), [0.0],
                                     0, cfg)
            errors.append(abs(res - 1.0))
        ratio = errors[0] / errors[1]
        self.assertTrue(14.0 < ratio < 18.0)

    def test_directional(self):
        """Derivative along an arbitrary direction"""
        def field(point):
            return point[0] * point[1]
        res = directional_derivative(field, [1.0, 2.0], [1.0, 1.0])
        self.assertAlmostEqual(res, 3.0, places=8)

    def test_vector_field(self):
        """Array valued fields are differentiated entrywise"""
        def field(point):
            return np.array([[point[0], point[0] ** 2], [0.0, 1.0]])
        res = partial_derivative(field, [3.0], 0)
        np.testing.assert_allclose(res, [[1.0, 6.0], [0.0, 0.0]],
                                   atol=1e-8)

    def test_step_shrinking(self):
        """The step shrinks near the boundary"""
        chart = Chart(1, lambda point: [[1.0]], bounds=[(0.0, 1.0)])
        res = partial_derivative(lambda point: point[0] ** 2, [1e-6], 0,
                                 contains=chart.contains)
        self.assertAlmostEqual(res, 2e-6, places=8)

    def test_boundary_error(self):
        """Shrinking cannot leave a single point set"""
        with self.assertRaises(BoundaryError):
            partial_derivative(lambda point: point[0], [0.5], 0,
                               contains=lambda point: point[0] == 0.5)

    def test_config(self):
        """Invalid settings are refused"""
        with self.assertRaises(ValueError):
            FDConfig(scheme='forward')
        with self.assertRaises(ValueError):
            FDConfig(step=0.0)
        cfg = FDConfig(step=1e-4)
        self.assertEqual(cfg.for_curvature().step, cfg.curvature_step)
        self.assertEqual(cfg.as_dict()['step'], 1e-4)


class TestChart(unittest.TestCase):

    def test_as_point(self):
        """Points must be finite and of the right size"""
        np.testing.assert_allclose(as_point([1, 2]), [1.0, 2.0])
        with self.assertRaises(ValueError):
            as_point([1.0, np.nan])
        with self.assertRaises(ValueError):
            as_point([1.0, 2.0], 3)

    def test_contains(self):
        """Open bounds and the extra predicate"""
        chart = Chart(2, lambda point: np.eye(2), bounds=[(0, 1), (0, 1)],
                      contains=lambda point: point[0] < point[1])
        self.assertTrue(chart.contains([0.2, 0.5]))
        self.assertFalse(chart.contains([0.5, 0.2]))
        self.assertFalse(chart.contains([0.0, 0.5]))
        self.assertFalse(chart.contains([0.2]))

    def test_levi_civita(self):
        """Christoffel symbols of the conformal half-plane metric"""
        chart = half_plane_metric_chart()
        gamma = levi_civita(chart, [1.0, 0.0])
        expected = np.zeros((2, 2, 2))
        expected[0, 0, 0] = 0.5
        expected[1, 0, 1] = expected[1, 1, 0] = 0.5
        expected[0, 1, 1] = -0.5
        np.testing.assert_allclose(gamma, expected, atol=1e-8)
        self.assertLess(metric_compatibility_residual(chart, gamma,
                                                      [1.0, 0.0]), 1e-8)

    def test_analytic_metric_derivative(self):
        """An analytic metric derivative is used when present"""
        def dmetric(point):
            dmat = np.zeros((2, 2, 2))
            dmat[0] = np.eye(2)
            return dmat
        chart = Chart(2, lambda point: point[0] * np.eye(2),
                      bounds=[(0.1, 10.0), (-10.0, 10.0)],
                      metric_derivative=dmetric)
        fd_chart = half_plane_metric_chart()
        np.testing.assert_allclose(metric_derivative(chart, [2.0, 1.0]),
                                   metric_derivative(fd_chart, [2.0, 1.0]),
                                   atol=1e-8)

    def test_degenerate_metric(self):
        """Singular metrics are refused"""
        chart = Chart(2, lambda point: np.diag([1.0, 0.0]))
        with self.assertRaises(DegenerateMetricError):
            levi_civita(chart, [0.0, 0.0])

    def test_outside(self):
        """Connections are only computed inside the chart"""
        with self.assertRaises(BoundaryError):
            levi_civita(half_plane_metric_chart(), [-1.0, 0.0])

    def test_complex_structure(self):
        """J² = -1 and J is an isometry of the flat metric"""
        jmat = np.array([[0.0, -1.0], [1.0, 0.0]])
        chart = Chart(2, lambda point: np.eye(2), complex_structure=jmat)
        square, hermitian = chart.check_complex_structure([0.0, 0.0])
        self.assertEqual(square, 0.0)
        self.assertEqual(hermitian, 0.0)
        with self.assertRaises(ValueError):
            Chart(3, lambda point: np.eye(3), complex_structure=np.eye(3))

    def test_scaled_residual(self):
        """Residuals are normalized by the operand size"""
        self.assertEqual(scaled_residual([2.0], [3.0]), 0.5)
        self.assertEqual(scaled_residual([]), 0.0)


class TestFrames(unittest.TestCase):

    def setUp(self):
        self.gram = np.array([[2.0, 0.5, 0.0],
                              [0.5, 1.0, 0.1],
                              [0.0, 0.1, 3.0]])

    def test_gram_schmidt(self):
        """Orthonormal in the given metric, order kept"""
        frame = gram_schmidt([[1.0, 0, 0], [1.0, 1.0, 0]], self.gram)
        self.assertLess(frame.orthonormality_residual(), 1e-12)
        first = np.array([1.0, 0, 0]) / np.sqrt(2.0)
        np.testing.assert_allclose(frame[0], first)

    def test_gram_schmidt_idempotent(self):
        """An orthonormal frame is left as it is"""
        rng = np.random.default_rng(11)
        vectors = rng.normal(size=(3, 3))
        once = gram_schmidt(vectors, self.gram)
        twice = gram_schmidt(once.vectors, self.gram)
        np.testing.assert_allclose(twice.vectors, once.vectors, atol=1e-12)

    def test_dependent(self):
        """Dependent vectors are detected"""
        with self.assertRaises(DependentVectorsError):
            gram_schmidt([[1.0, 0, 0], [2.0, 0, 0]], self.gram)

    def test_complement(self):
        """The complement completes the frame"""
        sub = gram_schmidt([[1.0, 1.0, 0]], self.gram)
        comp = orthogonal_complement(sub, self.gram)
        self.assertEqual(len(comp), 2)
        np.testing.assert_allclose(comp.vectors.dot(self.gram).dot(sub[0]),
                                   0.0, atol=1e-12)
        self.assertLess(comp.orthonormality_residual(), 1e-12)

    def test_seeded_complement(self):
        """Seeds from a nearby point give a nearby frame"""
        sub = gram_schmidt([[1.0, 1.0, 0]], self.gram)
        base = orthogonal_complement(sub, self.gram)
        moved = gram_schmidt([[1.0, 1.0, 1e-4]], self.gram)
        comp = orthogonal_complement(moved, self.gram, seeds=base.vectors)
        np.testing.assert_allclose(comp.vectors, base.vectors, atol=1e-3)

    def test_projection(self):
        """Projection on the span of a frame"""
        frame = gram_schmidt([[1.0, 0, 0], [0, 1.0, 0]], self.gram)
        vec = np.array([1.0, 2.0, 0.0])
        np.testing.assert_allclose(frame.project(vec), vec, atol=1e-12)


def suite():
    """The test suite for test_chart.
    """
    loader = unittest.TestLoader()
    mysuite = unittest.TestSuite()
    mysuite.addTest(loader.loadTestsFromTestCase(TestFiniteDifferences))
    mysuite.addTest(loader.loadTestsFromTestCase(TestChart))
    mysuite.addTest(loader.loadTestsFromTestCase(TestFrames))

    return mysuite


if __name__ == "__main__":
    unittest.main()
