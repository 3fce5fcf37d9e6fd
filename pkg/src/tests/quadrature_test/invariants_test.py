import math
import unittest

import numpy as np
from pydantic import ValidationError

from src.enums.report_def import Orientation
from src.errors import QuadratureError
from src.models.catalog import flat_torus, fubini_study, product_spheres, round_sphere
from src.quadrature import (
    QuadratureScheme,
    QuadratureSpec,
    euler_characteristic,
    homogeneous_cross_check,
    integrate,
    invariant_report,
    signature,
    term_integrals,
    total_scalar_functional,
    volume,
)
from src.quadrature.invariants import approx_equal, less_equal, strict_less


class QuadratureSpecTestCase(unittest.TestCase):
    def test_validation(self):
        with self.assertRaises(ValidationError):
            QuadratureSpec(orders=(1, 4, 4, 4))
        with self.assertRaises(ValidationError):
            QuadratureSpec(margin=0.5)

    def test_weightsSumToBoxVolume(self):
        params, weights = QuadratureSpec(orders=(3, 4, 5, 6)).nodes()
        self.assertEqual(params.shape, (360, 4))
        self.assertAlmostEqual(math.fsum(weights.tolist()), 1.0, places=14)
        self.assertTrue(np.all((params > 0.0) & (params < 1.0)))
        _, weights = QuadratureSpec(orders=(4, 4, 4, 4), margin=0.1).nodes()
        self.assertAlmostEqual(math.fsum(weights.tolist()), 0.8**4, places=14)

    def test_doubledAndCount(self):
        spec = QuadratureSpec.from_order(5)
        self.assertEqual(spec.node_count, 625)
        self.assertEqual(spec.doubled().orders, (10, 10, 10, 10))
        self.assertEqual(spec.doubled().scheme, QuadratureScheme.Product)


class VerdictTestCase(unittest.TestCase):
    def test_relations(self):
        self.assertTrue(strict_less("a", 1.0, 2.0).ok)
        self.assertFalse(strict_less("a", 2.0, 2.0).ok)
        self.assertTrue(less_equal("b", 1.0 + 1e-9, 1.0, 1e-8).ok)
        self.assertFalse(less_equal("b", 1.1, 1.0, 1e-8).ok)
        verdict = approx_equal("c", 1.0, 1.05, 0.1)
        self.assertTrue(verdict.ok)
        self.assertAlmostEqual(verdict.margin, 0.05, places=12)


class ModelInvariantsTestCase(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.spec = QuadratureSpec.from_order()
        cls.s4 = round_sphere()
        cls.cp2 = fubini_study()
        cls.s2xs2 = product_spheres()
        cls.t4 = flat_torus()

    def test_roundSphere(self):
        report = invariant_report(self.s4, self.spec)
        self.assertTrue(report.ok, report.verdicts)
        self.assertEqual(round(report.euler_characteristic), 2)
        self.assertEqual(round(report.signature), 0)
        self.assertAlmostEqual(report.volume, 8.0 * math.pi**2 / 3.0, delta=1e-4 * report.volume)
        self.assertAlmostEqual(report.total_scalar, 8.0 * math.pi * math.sqrt(6.0), delta=1e-4 * report.total_scalar)

    def test_fubiniStudy(self):
        report = invariant_report(self.cp2, self.spec)
        self.assertTrue(report.ok, report.verdicts)
        self.assertEqual(round(report.euler_characteristic), 3)
        self.assertEqual(round(report.signature), 1)
        self.assertLess(report.tau_integer_error, 1e-3)
        self.assertAlmostEqual(report.total_scalar, 12.0 * math.pi * math.sqrt(2.0), delta=1e-4 * report.total_scalar)

    def test_productSpheres(self):
        report = invariant_report(self.s2xs2, self.spec)
        self.assertTrue(report.ok, report.verdicts)
        self.assertEqual(round(report.euler_characteristic), 4)
        self.assertEqual(round(report.signature), 0)
        self.assertAlmostEqual(report.volume, 16.0 * math.pi**2, delta=1e-4 * report.volume)

    def test_flatTorus(self):
        report = invariant_report(self.t4, self.spec)
        self.assertTrue(report.ok, report.verdicts)
        self.assertAlmostEqual(report.volume, 1.0, places=12)
        self.assertAlmostEqual(report.euler_characteristic, 0.0, places=9)
        self.assertAlmostEqual(report.total_scalar, 0.0, places=9)
        self.assertTrue(term_integrals(self.t4, self.spec).is_flat())

    def test_nonEinsteinProductSpheres(self):
        # S²(1)×S²(b) 的 r̊ 不为零，χ 仍是 4
        for b in (0.5, 2.0):
            model = product_spheres(1.0, b)
            report = invariant_report(model, self.spec)
            self.assertTrue(report.ok, report.verdicts)
            self.assertAlmostEqual(report.euler_characteristic, 4.0, delta=1e-3)
            self.assertAlmostEqual(report.signature, 0.0, delta=1e-3)
            terms = term_integrals(model, self.spec)
            self.assertGreater(terms.ricci0_sq, 0.1 * terms.volume)

    def test_reversedOrientationFlipsSignature(self):
        standard = signature(self.cp2, self.spec)
        reversed_ = signature(self.cp2, self.spec, Orientation.Reversed)
        self.assertAlmostEqual(reversed_, -standard, places=14)
        report = invariant_report(self.cp2, self.spec, Orientation.Reversed)
        self.assertTrue(report.ok, report.verdicts)
        self.assertEqual(report.orientation, Orientation.Reversed)
        self.assertAlmostEqual(report.euler_characteristic, euler_characteristic(self.cp2, self.spec), places=14)

    def test_homogeneousShortcut(self):
        for model in (self.s4, self.cp2, self.s2xs2):
            self.assertTrue(homogeneous_cross_check(model, self.spec).ok, model.name)
        spec = QuadratureSpec.from_order(scheme=QuadratureScheme.Homogeneous)
        self.assertAlmostEqual(
            total_scalar_functional(self.cp2, spec), total_scalar_functional(self.cp2, self.spec), delta=1e-3
        )

    def test_integrate(self):
        vol = volume(self.s4, self.spec)
        ones = lambda x: np.ones(x.shape[0])
        self.assertAlmostEqual(integrate(self.s4, ones, self.spec), vol, places=12)
        spec = QuadratureSpec.from_order(scheme=QuadratureScheme.Homogeneous)
        self.assertAlmostEqual(integrate(self.s4, ones, spec), vol, places=12)

    def test_nonFiniteIntegrandReportsNode(self):
        with self.assertRaises(QuadratureError) as ctx:
            integrate(self.t4, lambda x: np.full(x.shape[0], np.nan), self.spec)
        self.assertEqual(len(ctx.exception.node), 4)

    def test_resultIsDeterministic(self):
        a = invariant_report(self.s2xs2, self.spec)
        b = invariant_report(self.s2xs2, self.spec)
        self.assertEqual(a.model_dump_json(), b.model_dump_json())


if __name__ == "__main__":
    unittest.main()
