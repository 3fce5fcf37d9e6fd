import unittest

from src.topology import (
    enumerate_homeotypes,
    hitchin_positive_form_candidates,
    self_dual_equality_signature,
    tian_examples,
)
from src.topology.homeotypes import representative


class EnumerationTestCase(unittest.TestCase):
    def setUp(self):
        self.classes = enumerate_homeotypes()

    def test_countIsTwelve(self):
        self.assertEqual(len(self.classes), 12)

    def test_contents(self):
        pairs = [(c.b_plus, c.b_minus, c.form_type) for c in self.classes]
        self.assertIn((0, 0, "empty"), pairs)
        self.assertIn((1, 0, "odd"), pairs)
        for k in (1, 2, 3):
            self.assertIn((k, k, "even"), pairs)
            self.assertIn((k, k, "odd"), pairs)
        for b_plus, b_minus in ((2, 1), (3, 2), (4, 3), (4, 2)):
            self.assertIn((b_plus, b_minus, "odd"), pairs)
        self.assertNotIn((2, 0, "odd"), pairs)

    def test_everyClassPassesEulerCeiling(self):
        for c in self.classes:
            self.assertLessEqual(c.chi, 9)
            self.assertEqual(c.chi, 2 + c.b_plus + c.b_minus)
            self.assertTrue(c.derived_reading)
            self.assertIn(c.source, ("self_dual_branch", "signature_window"))

    def test_sortedByEuler(self):
        keys = [(c.chi, c.tau, c.form_type) for c in self.classes]
        self.assertEqual(keys, sorted(keys))
        self.assertEqual(self.classes[0].representative, "S⁴")

    def test_representatives(self):
        self.assertEqual(representative(1, 1, "even"), "S²×S²")
        self.assertEqual(representative(2, 2, "even"), "#2(S²×S²)")
        self.assertEqual(representative(2, 1, "odd"), "2ℂP²#ℂ̄P²")
        self.assertEqual(representative(1, 0, "odd"), "ℂP²")


class ArithmeticTestCase(unittest.TestCase):
    def test_positiveFormCandidates(self):
        candidates = hitchin_positive_form_candidates()
        self.assertEqual(candidates.hitchin, [1, 2])
        self.assertEqual(candidates.fubini_study, [1])

    def test_kahlerEinsteinExamplesAreOutsideWindow(self):
        examples = tian_examples()
        self.assertEqual([e.blowups for e in examples], [3, 4, 5, 6, 7, 8])
        for e in examples:
            self.assertEqual(e.chi, 3 + e.blowups)
            self.assertEqual(e.tau, 1 - e.blowups)
            self.assertFalse(e.gate.ok, e.manifold)

    def test_selfDualEqualityIsNotInteger(self):
        result = self_dual_equality_signature()
        self.assertEqual(result.tau, "16/7")
        self.assertFalse(result.is_integer)


if __name__ == "__main__":
    unittest.main()
