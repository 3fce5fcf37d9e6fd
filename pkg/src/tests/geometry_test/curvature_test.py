import unittest

import numpy as np
from scipy.stats import special_ortho_group

from src.errors import CurvatureInputError, DocumentError
from src.geometry.bivector import Bivector6, adapted_basis, hodge_star, so4_action
from src.geometry.curvature import (
    BASIS_TAG,
    CurvatureDecomposition,
    CurvatureOperator,
    TraceFree3,
    decompose,
    decompose_batch,
    reconstruct,
    reconstruct_batch,
)
from src.geometry.eigen import eigenvalues_sym3, eigenvalues_sym3_batch


def random_operator(rng: np.random.Generator) -> np.ndarray:
    """随机对称 6×6 矩阵，调整 C 块对角使两块迹相等"""
    m = rng.standard_normal((6, 6))
    m = 0.5 * (m + m.T)
    gap = np.trace(m[:3, :3]) - np.trace(m[3:, 3:])
    m[3:, 3:] += gap / 3.0 * np.eye(3)
    return m


def random_trace_free(rng: np.random.Generator) -> np.ndarray:
    m = rng.standard_normal((3, 3))
    m = 0.5 * (m + m.T)
    return m - np.trace(m) / 3.0 * np.eye(3)


class CurvatureOperatorTestCase(unittest.TestCase):
    def test_rejectsAsymmetric(self):
        m = np.eye(6)
        m[0, 1] = 1.0
        with self.assertRaises(CurvatureInputError):
            CurvatureOperator(m)

    def test_rejectsUnequalBlockTraces(self):
        m = np.eye(6)
        m[0, 0] = 2.0
        with self.assertRaises(CurvatureInputError):
            CurvatureOperator(m)

    def test_rejectsShapeAndNonFinite(self):
        with self.assertRaises(CurvatureInputError):
            CurvatureOperator(np.eye(5))
        m = np.eye(6)
        m[2, 2] = np.nan
        with self.assertRaises(CurvatureInputError):
            CurvatureOperator(m)

    def test_identityIsRoundSphere(self):
        d = decompose(CurvatureOperator.identity())
        self.assertAlmostEqual(d.scalar, 12.0, places=12)
        self.assertEqual(d.w_plus_norm_sq, 0.0)
        self.assertEqual(d.w_minus_norm_sq, 0.0)
        self.assertTrue(d.is_einstein())

    def test_zeroOperator(self):
        d = decompose(CurvatureOperator(np.zeros((6, 6))))
        self.assertEqual(d.scalar, 0.0)
        self.assertEqual(d.to_dict()["mixed"], [[0.0] * 3] * 3)
        self.assertTrue(d.is_einstein())

    def test_fubiniStudyBlocks(self):
        m = np.zeros((6, 6))
        m[0, 0] = 6.0
        m[3:, 3:] = 2.0 * np.eye(3)
        d = decompose(CurvatureOperator(m))
        self.assertAlmostEqual(d.scalar, 24.0, places=12)
        np.testing.assert_allclose(d.w_plus.eigenvalues(), (-2.0, -2.0, 4.0), atol=1e-12)
        self.assertAlmostEqual(d.w_plus_norm_sq, 24.0, places=12)
        self.assertAlmostEqual(d.w_minus_norm_sq, 0.0, places=12)
        # 等号情形 |W⁺|² = s²/24
        self.assertAlmostEqual(d.w_plus_norm_sq, d.scalar**2 / 24.0, places=10)

    def test_roundTrip(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            m = random_operator(rng)
            back = reconstruct(decompose(CurvatureOperator(m))).matrix
            scale = max(np.abs(m).max(), 1.0)
            self.assertLessEqual(np.abs(back - m).max(), 1e-12 * scale)

    def test_roundTripWithBlockTraceMismatch(self):
        # 块迹之差在容差内时 A、C 仍被精确还原
        rng = np.random.default_rng(19)
        for _ in range(50):
            m = random_operator(rng)
            m[0, 0] += 5e-11
            d = decompose(CurvatureOperator(m))
            np.testing.assert_allclose(d.w_plus.matrix + d.scalar / 12.0 * np.eye(3), m[:3, :3], rtol=0, atol=1e-14)
            back = reconstruct(d).matrix
            self.assertLessEqual(np.abs(back - m).max(), 1e-12 * max(np.abs(m).max(), 1.0))

    def test_decompositionRoundTrip(self):
        rng = np.random.default_rng(11)
        for _ in range(100):
            d = CurvatureDecomposition(
                w_plus=TraceFree3(random_trace_free(rng)),
                w_minus=TraceFree3(random_trace_free(rng)),
                mixed=rng.standard_normal((3, 3)),
                scalar=rng.standard_normal() * 10.0,
            )
            again = decompose(reconstruct(d))
            np.testing.assert_allclose(again.w_plus.matrix, d.w_plus.matrix, atol=1e-12)
            np.testing.assert_allclose(again.w_minus.matrix, d.w_minus.matrix, atol=1e-12)
            np.testing.assert_allclose(again.mixed, d.mixed, atol=1e-12)
            self.assertAlmostEqual(again.scalar, d.scalar, delta=1e-11 * max(abs(d.scalar), 1.0))

    def test_batchMatchesSingle(self):
        rng = np.random.default_rng(3)
        stack = np.array([random_operator(rng) for _ in range(50)])
        parts = decompose_batch(stack)
        np.testing.assert_allclose(reconstruct_batch(parts), stack, atol=1e-12)
        for i in (0, 17, 49):
            d = decompose(CurvatureOperator(stack[i]))
            np.testing.assert_allclose(parts["w_plus"][i], d.w_plus.matrix, atol=1e-13)
            self.assertAlmostEqual(parts["scalar"][i], d.scalar, places=12)

    def test_reverseOrientationSwapsWeyl(self):
        rng = np.random.default_rng(5)
        d = decompose(CurvatureOperator(random_operator(rng)))
        r = d.reverse_orientation()
        np.testing.assert_array_equal(r.w_plus.matrix, d.w_minus.matrix)
        np.testing.assert_array_equal(r.mixed, d.mixed.T)
        self.assertEqual(r.scalar, d.scalar)

    def test_conjugationPreservesSpectra(self):
        rng = np.random.default_rng(13)
        op = CurvatureOperator(random_operator(rng))
        q = special_ortho_group.rvs(4, random_state=13)
        d0, d1 = decompose(op), decompose(op.conjugate(q))
        np.testing.assert_allclose(d1.w_plus.eigenvalues(), d0.w_plus.eigenvalues(), atol=1e-10)
        np.testing.assert_allclose(d1.w_minus.eigenvalues(), d0.w_minus.eigenvalues(), atol=1e-10)
        self.assertAlmostEqual(d1.scalar, d0.scalar, places=10)
        self.assertAlmostEqual(d1.traceless_ricci_norm_sq, d0.traceless_ricci_norm_sq, places=9)

    def test_documentRoundTrip(self):
        op = CurvatureOperator(2.0 * np.eye(6))
        doc = op.to_document()
        self.assertEqual(doc["basis"], BASIS_TAG)
        np.testing.assert_array_equal(CurvatureOperator.from_document(doc).matrix, op.matrix)
        with self.assertRaises(DocumentError):
            CurvatureOperator.from_document({"basis": "e-ij", "matrix": doc["matrix"]})
        with self.assertRaises(DocumentError):
            CurvatureOperator.from_document({"basis": BASIS_TAG})

    def test_traceFreeValidation(self):
        with self.assertRaises(CurvatureInputError):
            TraceFree3(np.eye(3))
        with self.assertRaises(CurvatureInputError):
            TraceFree3(np.array([[0.0, 1.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, 0.0]]))


class BivectorTestCase(unittest.TestCase):
    def test_hodgeStarInvolution(self):
        phi = Bivector6(np.arange(1.0, 7.0))
        np.testing.assert_array_equal(hodge_star(hodge_star(phi)).components, phi.components)
        for i, e in enumerate(adapted_basis()):
            sign = 1.0 if i < 3 else -1.0
            np.testing.assert_array_equal(hodge_star(e).components, sign * e.components)

    def test_wedgeOfOrthonormalPairIsUnitSimple(self):
        phi = Bivector6.from_vectors(np.eye(4)[0], np.eye(4)[1])
        self.assertTrue(phi.is_unit_simple())
        np.testing.assert_allclose(phi.components, np.array([1, 0, 0, 1, 0, 0]) / np.sqrt(2.0), atol=1e-15)
        np.testing.assert_allclose(Bivector6.from_form(phi.to_form()).components, phi.components, atol=1e-15)

    def test_so4ActionIsBlockOrthogonal(self):
        q = special_ortho_group.rvs(4, random_state=21)
        rho = so4_action(q)
        np.testing.assert_allclose(rho @ rho.T, np.eye(6), atol=1e-12)
        np.testing.assert_allclose(rho[:3, 3:], 0.0, atol=1e-12)
        np.testing.assert_allclose(rho[3:, :3], 0.0, atol=1e-12)

    def test_so4ActionRejectsReflection(self):
        with self.assertRaises(CurvatureInputError):
            so4_action(np.diag([1.0, 1.0, 1.0, -1.0]))


class EigenTestCase(unittest.TestCase):
    def test_matchesEigh(self):
        rng = np.random.default_rng(17)
        stack = np.array([random_trace_free(rng) for _ in range(1000)])
        expected = np.linalg.eigh(stack)[0]
        np.testing.assert_allclose(eigenvalues_sym3_batch(stack), expected, atol=1e-11)

    def test_degenerateSpectrum(self):
        values = eigenvalues_sym3(np.diag([1.0, 1.0, -2.0]))
        np.testing.assert_allclose(values, (-2.0, 1.0, 1.0), atol=1e-14)
        q = special_ortho_group.rvs(3, random_state=2)
        values = eigenvalues_sym3(q @ np.diag([-1.0, -1.0, 2.0]) @ q.T)
        np.testing.assert_allclose(values, (-1.0, -1.0, 2.0), atol=1e-12)

    def test_zeroMatrix(self):
        self.assertEqual(eigenvalues_sym3(np.zeros((3, 3))), (0.0, 0.0, 0.0))


if __name__ == "__main__":
    unittest.main()
