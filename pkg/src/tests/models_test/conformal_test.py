import unittest

import numpy as np

from src.errors import ChartError
from src.models.catalog import fubini_study, round_sphere
from src.models.conformal import (
    constant_factor,
    conformal_convergence_study,
    conformal_law_residual,
    conformal_rescale,
    default_bump_point,
    default_steps,
    frak_S_at,
    gaussian_bump,
)


class ConformalTestCase(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.s4 = round_sphere().chart
        cls.cp2 = fubini_study().chart

    def test_frakSOnModels(self):
        self.assertAlmostEqual(frak_S_at(self.s4, self.s4.reference_point), 12.0, delta=1e-5)
        # ℂP² 上 s = 2√6|W⁺|
        self.assertAlmostEqual(frak_S_at(self.cp2, self.cp2.reference_point), 0.0, delta=1e-4)

    def test_constantFactor(self):
        # 常数因子下 Δu = 0，𝔖 按 c⁻² 缩放
        rescaled = conformal_rescale(self.s4, constant_factor(2.0))
        self.assertAlmostEqual(frak_S_at(rescaled, self.s4.reference_point), 3.0, delta=1e-5)
        residual = conformal_law_residual(self.s4, constant_factor(2.0), self.s4.reference_point)
        self.assertLess(abs(residual), 1e-5)

    def test_bumpResidualIsSmall(self):
        u = gaussian_bump(self.cp2.reference_point, amplitude=0.2)
        residual = conformal_law_residual(self.cp2, u, default_bump_point(self.cp2))
        self.assertLess(abs(residual), 1e-4)

    def test_rejectsNonPositiveFactor(self):
        with self.assertRaises(ChartError):
            conformal_rescale(self.s4, constant_factor(-1.0))
        with self.assertRaises(ChartError):
            conformal_rescale(self.s4, gaussian_bump(self.s4.reference_point, amplitude=-1.5, width=10.0))

    def test_secondOrderConvergence(self):
        u = gaussian_bump(self.s4.reference_point)
        study = conformal_convergence_study(self.s4, u, default_bump_point(self.s4), default_steps())
        self.assertEqual(len(study.residuals), 3)
        self.assertEqual(len(study.observed_orders), 2)
        self.assertLess(abs(study.observed_orders[-1] - 2.0), 0.3)
        self.assertLess(abs(study.extrapolated), 1e-5)

    def test_convergenceNeedsTwoSteps(self):
        with self.assertRaises(ChartError):
            conformal_convergence_study(self.s4, constant_factor(1.0), self.s4.reference_point, [0.01])


if __name__ == "__main__":
    unittest.main()
