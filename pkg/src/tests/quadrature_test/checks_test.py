import math
import unittest

from src.enums.report_def import Orientation
from src.models.catalog import flat_torus, fubini_study, product_spheres, round_sphere
from src.quadrature import (
    QuadratureSpec,
    bishop_volume_check,
    conformal_weyl_invariance,
    corollary_chain_s4_bound,
    finiteness_bounds_check,
    gap_theorem_check,
    lemma_chi_check,
    scalar_window,
    theorem_b_chain,
    theorem_c_d_bounds_report,
)


class ScalarWindowTestCase(unittest.TestCase):
    def test_sphereWindow(self):
        window = corollary_chain_s4_bound()
        self.assertAlmostEqual(window.scalar_sq_upper, 128.0 * math.pi**2, places=9)
        self.assertAlmostEqual(window.total_scalar_upper, 8.0 * math.pi * math.sqrt(2.0), places=12)
        self.assertAlmostEqual(window.total_scalar_lower, 8.0 * math.pi * math.sqrt(6.0 / 5.0), places=12)

    def test_projectivePlaneWindow(self):
        window = scalar_window(3, 1)
        self.assertAlmostEqual(window.total_scalar_upper, 4.0 * math.pi * math.sqrt(6.0), places=12)
        # 下界超过上界：窗口为空
        self.assertGreater(window.total_scalar_lower, window.total_scalar_upper)

    def test_negativeUpperBound(self):
        window = scalar_window(1, 2)
        self.assertLess(window.scalar_sq_upper, 0.0)
        self.assertEqual(window.total_scalar_upper, 0.0)

    def test_boundsReport(self):
        report = theorem_c_d_bounds_report()
        self.assertTrue(report.ok, report.verdicts)
        self.assertLess(report.s4_upper, report.s4_reference)
        self.assertLess(report.cp2_upper, report.cp2_reference)


class ModelChecksTestCase(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.spec = QuadratureSpec.from_order()
        cls.s4 = round_sphere()
        cls.cp2 = fubini_study()
        cls.s2xs2 = product_spheres()
        cls.t4 = flat_torus()

    def test_chiBound(self):
        result = lemma_chi_check(self.s4, self.spec)
        self.assertTrue(result.applicable)
        self.assertTrue(result.strict)
        self.assertAlmostEqual(result.bound, 10.0, delta=1e-3)
        self.assertTrue(lemma_chi_check(self.cp2, self.spec).ok)

    def test_chiBoundNotApplicableOnFlatTorus(self):
        result = lemma_chi_check(self.t4, self.spec)
        self.assertFalse(result.applicable)
        self.assertTrue(result.ok)
        self.assertTrue(result.reason)

    def test_gapEqualityOnFubiniStudy(self):
        result = gap_theorem_check(self.cp2, Orientation.Standard, self.spec)
        self.assertTrue(result.ok, result.verdicts)
        self.assertTrue(result.theorem_applicable)
        self.assertTrue(result.equality)
        self.assertFalse(result.corollary_ii_applicable)
        self.assertAlmostEqual(result.corollary_rhs, 3.0, delta=1e-3)

    def test_gapReversedFubiniStudy(self):
        result = gap_theorem_check(self.cp2, Orientation.Reversed, self.spec)
        self.assertTrue(result.applicable)
        self.assertTrue(result.ok, result.verdicts)
        self.assertFalse(result.theorem_applicable)
        self.assertTrue(result.corollary_ii_applicable)
        self.assertTrue(result.corollary_ii_equality)
        self.assertAlmostEqual(result.corollary_ii_lhs, 3.0, delta=1e-3)

    def test_gapEqualityOnProductSpheres(self):
        result = gap_theorem_check(self.s2xs2, Orientation.Standard, self.spec)
        self.assertTrue(result.ok, result.verdicts)
        self.assertTrue(result.equality)
        self.assertAlmostEqual(result.corollary_i_lhs, 8.0 / 3.0, delta=1e-3)

    def test_gapNotApplicableOnSphere(self):
        result = gap_theorem_check(self.s4, Orientation.Standard, self.spec)
        self.assertFalse(result.applicable)
        self.assertTrue(result.ok)

    def test_bishop(self):
        sphere = bishop_volume_check(self.s4, self.spec)
        self.assertTrue(sphere.ok)
        self.assertTrue(sphere.equality)
        self.assertAlmostEqual(sphere.homothety_factor, 1.0, delta=1e-6)
        cp2 = bishop_volume_check(self.cp2, self.spec)
        self.assertTrue(cp2.ok)
        self.assertFalse(cp2.equality)
        self.assertAlmostEqual(cp2.rescaled_volume, 2.0 * math.pi**2, delta=1e-3)
        self.assertFalse(bishop_volume_check(self.t4, self.spec).applicable)

    def test_finiteness(self):
        result = finiteness_bounds_check(self.cp2, self.spec)
        self.assertTrue(result.applicable)
        self.assertTrue(result.ok, result.verdicts)
        self.assertAlmostEqual(result.min_sectional, 0.5, delta=1e-5)
        self.assertAlmostEqual(result.max_sectional, 2.0, delta=1e-5)
        self.assertTrue(finiteness_bounds_check(self.s2xs2, self.spec).ok)
        self.assertFalse(finiteness_bounds_check(self.t4, self.spec).applicable)

    def test_chain(self):
        result = theorem_b_chain(self.cp2, self.spec)
        self.assertTrue(result.ok, result.verdicts)
        standard, reversed_ = result.links
        self.assertFalse(standard.left_applicable)
        self.assertTrue(reversed_.left_applicable)
        self.assertAlmostEqual(reversed_.left, 3.0, delta=1e-3)
        self.assertAlmostEqual(standard.right, 1.2, delta=1e-3)
        self.assertFalse(theorem_b_chain(self.t4, self.spec).applicable)

    def test_weylEnergyIsConformallyInvariant(self):
        result = conformal_weyl_invariance(self.cp2, spec=self.spec)
        self.assertTrue(result.ok, result.verdicts)
        self.assertLess(result.relative_change, 1e-4)


if __name__ == "__main__":
    unittest.main()
