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

"""Test the quadratic program and the Chen-Ricci inequality.
"""

import unittest

import numpy as np

from holostat import gallery
from holostat.chart import DomainError, NonUnitVectorError, \
    SectorMismatchError
from holostat.chenricci import (SECTOR_D, SECTOR_DPERP, adapted_frame,
                                chen_ricci_report, corollary_bounds,
                                quadratic_max, random_search_quadratic,
                                ricci0)
from holostat.submanifold import induced_geometry


def built(gallery_id, **params):
    obj = gallery.build(gallery.GallerySpec(gallery_id, params))
    return obj.immersion, obj.pair


class TestQuadraticProgram(unittest.TestCase):

    def test_closed_form(self):
        """α = 2, m = 3 has maximum 1"""
        res = quadratic_max(2.0, 3)
        self.assertAlmostEqual(res.max_value, 1.0, places=14)
        np.testing.assert_allclose(res.solution, [1.0, 0.5, 0.5])
        self.assertAlmostEqual(res.objective(res.solution), 1.0, places=14)
        self.assertTrue(res.certified)

    def test_zero(self):
        """α = 0 has maximum 0"""
        res = quadratic_max(0.0, 4)
        self.assertEqual(res.max_value, 0.0)
        np.testing.assert_allclose(res.solution, 0.0)

    def test_small_m(self):
        """A single variable gives no program"""
        with self.assertRaises(DomainError):
            quadratic_max(1.0, 1)
        with self.assertRaises(DomainError):
            random_search_quadratic(1.0, 1, samples=10)

    def test_random_search(self):
        """Random search never beats the closed form"""
        best, point = random_search_quadratic(2.0, 3, samples=20000)
        self.assertLessEqual(best, 1.0 + 1e-9)
        self.assertGreater(best, 1.0 - 1e-4)
        self.assertAlmostEqual(np.sum(point), 2.0, places=10)

    def test_sweep(self):
        """α in [-3, 3], m in [2, 8]"""
        for alpha in np.arange(-3.0, 3.25, 0.5):
            for m in range(2, 9):
                closed = quadratic_max(alpha, m)
                self.assertTrue(closed.certified)
                best, _ = random_search_quadratic(alpha, m, samples=2000,
                                                  seed=m)
                self.assertLessEqual(best, closed.max_value + 1e-9)

    def test_seeded(self):
        """The search is reproducible"""
        first = random_search_quadratic(1.5, 4, samples=1000, seed=7)
        second = random_search_quadratic(1.5, 4, samples=1000, seed=7)
        self.assertEqual(first[0], second[0])


class TestRicci0(unittest.TestCase):

    def test_half_plane(self):
        """The Ricci curvature of a surface is its Gaussian curvature"""
        chart = gallery.half_plane_chart(0.0)
        point = [1.0, 0.0]
        frame = adapted_frame(chart.metric_at(point), [1.0, 0.0])
        res = ricci0(chart, point, [1.0, 0.0], frame)
        self.assertAlmostEqual(res, 0.5, delta=1e-5)

    def test_one_dimensional(self):
        """Curves have no Ricci curvature"""
        chart = gallery.exp_family_chart(1.0)
        self.assertEqual(ricci0(chart, [1.0], [1.0], [[1.0]]), 0.0)

    def test_adapted_frame(self):
        """X comes first and the frame is orthonormal"""
        gmat = np.diag([4.0, 1.0, 2.0])
        frame = adapted_frame(gmat, [0.5, 0.0, 0.0])
        np.testing.assert_allclose(frame[0], [0.5, 0.0, 0.0])
        self.assertLess(frame.orthonormality_residual(), 1e-12)


class TestChenRicci(unittest.TestCase):

    def test_totally_geodesic(self):
        """A flat totally geodesic plane attains equality"""
        imm, pair = built(gallery.TRIVIAL_FLAT)
        # Run
        report = chen_ricci_report(imm, pair, [0.1, -0.2], [1.0, 0.0])
        # Assert
        self.assertTrue(report.applicable)
        self.assertAlmostEqual(report.slack, 0.0, delta=1e-8)
        self.assertAlmostEqual(report.c, 0.0, delta=1e-8)
        self.assertTrue(all(report.equality.values()))
        self.assertLess(report.identity_residual, 1e-8)

    def test_torus(self):
        """Slack of the Lagrangian torus matches the dropped terms"""
        imm, pair = built(gallery.LAGRANGIAN_TORUS)
        report = chen_ricci_report(imm, pair, [0.2, -0.3], [1.0, 0.0])
        self.assertTrue(report.applicable)
        self.assertAlmostEqual(report.px_norm2, 0.0, places=12)
        self.assertAlmostEqual(report.h_norm2, 0.5, places=10)
        self.assertAlmostEqual(report.rhs, -0.5, delta=1e-6)
        self.assertAlmostEqual(report.slack, 0.5, delta=1e-6)
        self.assertAlmostEqual(report.predicted_slack, report.slack,
                               delta=1e-6)
        self.assertGreaterEqual(report.slack, -1e-6)
        self.assertLess(report.identity_residual, 1e-5)
        self.assertFalse(report.equality['h_xx'])

    def test_contrast_pair(self):
        """With B ≠ B* the slack splits into the dropped terms and the
        ambient defect"""
        imm, pair = built(gallery.CR_CN_R)
        point = [0.5, 0.5, 0.5]
        geom = induced_geometry(imm, pair, point)
        self.assertGreater(np.max(np.abs(geom.B - geom.B_star)), 0.1)
        # Run
        report = chen_ricci_report(imm, pair, point, [0.0, 0.0, 1.0],
                                   geom=geom)
        # Assert
        self.assertFalse(report.applicable)
        self.assertLess(report.gauss_identity_residual, 1e-5)
        self.assertAlmostEqual(report.slack,
                               report.predicted_slack + report.ambient_defect,
                               delta=1e-5)

    def test_ambient_defect(self):
        """Constant curvature ambients have no defect"""
        for gid in (gallery.TRIVIAL_FLAT, gallery.LAGRANGIAN_TORUS):
            imm, pair = built(gid)
            report = chen_ricci_report(imm, pair, [0.2, -0.3], [1.0, 0.0])
            self.assertAlmostEqual(report.ambient_defect, 0.0, delta=1e-6)
            self.assertLess(report.gauss_identity_residual, 1e-5)

    def test_sign_of_x(self):
        """X and -X give the same report"""
        imm, pair = built(gallery.LAGRANGIAN_TORUS)
        plus = chen_ricci_report(imm, pair, [0.2, -0.3], [1.0, 0.0])
        minus = chen_ricci_report(imm, pair, [0.2, -0.3], [-1.0, 0.0])
        self.assertAlmostEqual(plus.slack, minus.slack, delta=1e-8)
        self.assertAlmostEqual(plus.rhs, minus.rhs, delta=1e-8)

    def test_non_unit(self):
        """X must be a unit vector"""
        imm, pair = built(gallery.LAGRANGIAN_TORUS)
        with self.assertRaises(NonUnitVectorError):
            chen_ricci_report(imm, pair, [0.2, -0.3], [2.0, 0.0])

    def test_given_c(self):
        """A constant that contradicts the fit is not applicable"""
        imm, pair = built(gallery.TRIVIAL_FLAT)
        report = chen_ricci_report(imm, pair, [0.0, 0.0], [1.0, 0.0], c=1.0)
        self.assertFalse(report.applicable)
        self.assertEqual(report.reason, "ambient-not-constant-curvature")

    def test_as_dict(self):
        """Arrays are listed in the report"""
        imm, pair = built(gallery.TRIVIAL_FLAT)
        res = chen_ricci_report(imm, pair, [0.0, 0.0], [1.0, 0.0]).as_dict()
        self.assertEqual(res['X'], [1.0, 0.0])
        self.assertEqual(res['m'], 2)


class TestCorollaries(unittest.TestCase):

    def test_dperp(self):
        """Totally real directions use c(m - 1)/4"""
        imm, pair = built(gallery.LAGRANGIAN_TORUS)
        report = chen_ricci_report(imm, pair, [0.2, -0.3], [1.0, 0.0])
        self.assertAlmostEqual(corollary_bounds(report, SECTOR_DPERP),
                               report.rhs, delta=1e-10)
        with self.assertRaises(SectorMismatchError):
            corollary_bounds(report, SECTOR_D)

    def test_d(self):
        """Holomorphic directions use c(m + 2)/4"""
        imm, pair = built(gallery.HOLOMORPHIC_INCLUSION)
        report = chen_ricci_report(imm, pair, [0.1, 0.2], [1.0, 0.0])
        self.assertAlmostEqual(report.px_norm2, 1.0, places=12)
        self.assertAlmostEqual(corollary_bounds(report, SECTOR_D),
                               report.rhs, delta=1e-10)
        with self.assertRaises(SectorMismatchError):
            corollary_bounds(report, SECTOR_DPERP)

    def test_unknown_sector(self):
        """Only D and D⊥ are sectors"""
        imm, pair = built(gallery.TRIVIAL_FLAT)
        report = chen_ricci_report(imm, pair, [0.0, 0.0], [1.0, 0.0])
        with self.assertRaises(ValueError):
            corollary_bounds(report, 'mu')


def suite():
    """The test suite for test_chenricci.
    """
    loader = unittest.TestLoader()
    mysuite = unittest.TestSuite()
    mysuite.addTest(loader.loadTestsFromTestCase(TestQuadraticProgram))
    mysuite.addTest(loader.loadTestsFromTestCase(TestRicci0))
    mysuite.addTest(loader.loadTestsFromTestCase(TestChenRicci))
    mysuite.addTest(loader.loadTestsFromTestCase(TestCorollaries))

    return mysuite


if __name__ == "__main__":
    unittest.main()
