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

"""Test curvature tensors, sectional and Ricci curvatures.
"""

import unittest

import numpy as np

from holostat.chart import (DegeneratePlaneError, FrameError,
                            orthogonal_complement)
from holostat.curvature import (ambient_s_tensor, curvature_at,
                                fit_holomorphic_c, holomorphic_curvature_form,
                                pair_curvatures, ricci_pair,
                                riemann_symmetry_residual, s_tensor,
                                sectional_pair)
from holostat.gallery import complex_space, complex_structure, \
    half_plane_chart
from holostat.statstruct import DualPair


class TestHalfPlaneCurvature(unittest.TestCase):

    def setUp(self):
        self.chart = half_plane_chart(0.0)
        self.pair = DualPair.from_contrast(self.chart)

    def test_gaussian_curvature(self):
        """The metric x¹δ has curvature 1/(2x³)"""
        for point in ([1.0, 0.0], [2.0, 3.0]):
            # Run
            sten = ambient_s_tensor(self.pair, point,
                                    contains=self.chart.contains)
            res = sectional_pair(sten, self.chart.metric_at(point),
                                 [1.0, 0.0], [0.0, 1.0])
            # Assert
            self.assertAlmostEqual(res, 0.5 / point[0] ** 3, delta=1e-5)

    def test_symmetries(self):
        """Skew symmetry and the first Bianchi identity"""
        point = [1.5, -0.5]
        rten = curvature_at(self.pair.levi_civita, point,
                            contains=self.chart.contains)
        self.assertLess(riemann_symmetry_residual(
            rten, self.chart.metric_at(point)), 1e-6)

    def test_dual_curvatures(self):
        """g(R(X,Y)Z, W) = -g(Z, R*(X,Y)W)"""
        chart = half_plane_chart(0.3)
        pair = DualPair.from_contrast(chart)
        point = [1.0, 0.5]
        rten, rten_star = pair_curvatures(pair, point,
                                          contains=chart.contains)
        gmat = chart.metric_at(point)
        lowered = np.einsum('lijk,lm->ijkm', rten, gmat)
        lowered_star = np.einsum('lijk,lm->ijkm', rten_star, gmat)
        np.testing.assert_allclose(lowered,
                                   -lowered_star.transpose(0, 1, 3, 2),
                                   atol=1e-5)

    def test_degenerate_plane(self):
        """Parallel vectors span no plane"""
        sten = np.zeros((2, 2, 2, 2))
        with self.assertRaises(DegeneratePlaneError):
            sectional_pair(sten, np.eye(2), [1.0, 0.0], [2.0, 0.0])
        with self.assertRaises(DegeneratePlaneError):
            sectional_pair(sten, np.eye(2), [0.0, 0.0], [1.0, 0.0])


class TestFlatCurvature(unittest.TestCase):

    def test_flat(self):
        """Flat C² with zero contrast has no curvature"""
        chart = complex_space(2)
        pair = DualPair.from_contrast(chart)
        sten = ambient_s_tensor(pair, [0.3, 0.1, -0.2, 0.4],
                                contains=chart.contains)
        self.assertLessEqual(np.max(np.abs(sten)), 1e-7)

    def test_shapes(self):
        """S needs curvature tensors of equal shape"""
        with self.assertRaises(ValueError):
            s_tensor(np.zeros((2, 2, 2, 2)), np.zeros((4, 4, 4, 4)))

    def test_ricci_frame(self):
        """The Ricci sum needs an orthonormal frame starting at X"""
        sten = np.zeros((2, 2, 2, 2))
        with self.assertRaises(FrameError):
            ricci_pair(sten, np.eye(2), [1.0, 0.0], [[1.0, 0.0], [1.0, 1.0]])
        with self.assertRaises(FrameError):
            ricci_pair(sten, np.eye(2), [1.0, 0.0], [[0.0, 1.0], [1.0, 0.0]])
        self.assertEqual(ricci_pair(sten, np.eye(2), [1.0, 0.0], np.eye(2)),
                         0.0)


class TestHolomorphicForm(unittest.TestCase):

    def setUp(self):
        self.gmat = np.eye(4)
        self.jmat = complex_structure(2)
        self.form = holomorphic_curvature_form(self.gmat, self.jmat)

    def test_holomorphic_sectional(self):
        """Planes X, JX have curvature c"""
        xvec = np.array([1.0, 0.0, 0.0, 0.0])
        res = sectional_pair(self.form, self.gmat, xvec, self.jmat.dot(xvec))
        self.assertAlmostEqual(res, 1.0, places=12)

    def test_totally_real_sectional(self):
        """Totally real planes have curvature c/4"""
        res = sectional_pair(self.form, self.gmat, [1.0, 0, 0, 0],
                             [0, 1.0, 0, 0])
        self.assertAlmostEqual(res, 0.25, places=12)

    def test_ricci(self):
        """Ricci curvature of the holomorphic form is c(n+1)/2"""
        res = ricci_pair(self.form, self.gmat, [1.0, 0, 0, 0], np.eye(4))
        self.assertAlmostEqual(res, 1.5, places=12)

    def test_fit(self):
        """The fit recovers a known constant"""
        chart = complex_space(2)
        points = [np.zeros(4), np.array([0.1, 0.2, -0.3, 0.4])]
        samples = [(point, 2.5 * self.form) for point in points]
        cfit, residual = fit_holomorphic_c(chart, samples)
        self.assertAlmostEqual(cfit, 2.5, places=12)
        self.assertLess(residual, 1e-12)

    def test_fit_zero(self):
        """Flat samples give c = 0"""
        chart = complex_space(1)
        cfit, residual = fit_holomorphic_c(chart,
                                           [([0.0, 0.0],
                                             np.zeros((2, 2, 2, 2)))])
        self.assertEqual(cfit, 0.0)
        self.assertEqual(residual, 0.0)
        with self.assertRaises(ValueError):
            fit_holomorphic_c(chart, [])


class TestInvariance(unittest.TestCase):

    def setUp(self):
        self.rng = np.random.default_rng(17)

    def test_plane_basis(self):
        """The sectional curvature depends on the plane only"""
        gmat = np.eye(4)
        form = holomorphic_curvature_form(gmat, complex_structure(2))
        for _ in range(5):
            xvec, yvec = self.rng.normal(size=(2, 4))
            mix = self.rng.normal(size=(2, 2))
            if abs(np.linalg.det(mix)) < 0.1:
                mix += 2 * np.eye(2)
            xnew = mix[0, 0] * xvec + mix[0, 1] * yvec
            ynew = mix[1, 0] * xvec + mix[1, 1] * yvec
            self.assertAlmostEqual(sectional_pair(form, gmat, xnew, ynew),
                                   sectional_pair(form, gmat, xvec, yvec),
                                   places=10)

    def test_ricci_frame_rotation(self):
        """Rotating e₂..e_m keeps the Ricci curvature"""
        chart = complex_space(2, 'k3')
        pair = DualPair.from_contrast(chart)
        point = [0.4, -0.3, 0.2, 0.5]
        sten = ambient_s_tensor(pair, point, contains=chart.contains)
        gmat = chart.metric_at(point)
        xvec = self.rng.normal(size=4)
        xvec /= np.sqrt(xvec.dot(gmat).dot(xvec))
        rest = orthogonal_complement([xvec], gmat).vectors
        rotation = np.linalg.qr(self.rng.normal(size=(3, 3)))[0]
        first = ricci_pair(sten, gmat, xvec, np.vstack([xvec, rest]))
        second = ricci_pair(sten, gmat, xvec,
                            np.vstack([xvec, rotation.dot(rest)]))
        self.assertAlmostEqual(first, second, places=10)


def suite():
    """The test suite for test_curvature.
    """
    loader = unittest.TestLoader()
    mysuite = unittest.TestSuite()
    mysuite.addTest(loader.loadTestsFromTestCase(TestHalfPlaneCurvature))
    mysuite.addTest(loader.loadTestsFromTestCase(TestFlatCurvature))
    mysuite.addTest(loader.loadTestsFromTestCase(TestHolomorphicForm))
    mysuite.addTest(loader.loadTestsFromTestCase(TestInvariance))

    return mysuite


if __name__ == "__main__":
    unittest.main()
