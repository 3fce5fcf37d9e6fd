import unittest
from fractions import Fraction

from src.errors import TopologyInputError
from src.topology import (
    TopologyDescriptor,
    check_parity,
    combined_verdict,
    hitchin_enclosure,
    hitchin_gate,
    simply_connected_deduction,
    theorem_a_gate,
    theorem_b_gate,
)
from src.topology.descriptor import require_integer
from src.topology.gates import EXCLUDED_CONCLUSION, FLAT_CONCLUSION, FUBINI_STUDY_CONCLUSION


def margin(result, name):
    return next(m for m in result.margins if m.name == name)


class DescriptorTestCase(unittest.TestCase):
    def test_derivedInvariants(self):
        desc = TopologyDescriptor(b_plus=3, b_minus=19)
        self.assertEqual(desc.euler_characteristic, 24)
        self.assertEqual(desc.signature, -16)
        self.assertEqual(desc.reversed().signature, 16)
        self.assertEqual(desc.b_two, 22)
        self.assertEqual(desc.to_dict()["signature"], -16)

    def test_validation(self):
        with self.assertRaises(TopologyInputError):
            TopologyDescriptor(b_plus=-1, b_minus=0)
        with self.assertRaises(TopologyInputError):
            TopologyDescriptor(b_plus=1.5, b_minus=0)
        with self.assertRaises(TopologyInputError):
            TopologyDescriptor(b_plus=1, b_minus=0, b_one=1)
        with self.assertRaises(TopologyInputError):
            TopologyDescriptor(b_plus=0, b_minus=0, simply_connected=True, finite_pi1=False)
        desc = TopologyDescriptor(b_plus=0, b_minus=0, b_one=4, finite_pi1=False)
        self.assertEqual(desc.euler_characteristic, -6)

    def test_requireInteger(self):
        self.assertEqual(require_integer("x", Fraction(4, 2)), 2)
        for bad in (True, 2.0, Fraction(1, 2), "3"):
            with self.assertRaises(TopologyInputError):
                require_integer("x", bad)

    def test_parity(self):
        check_parity(3, 1)
        check_parity(-4, 0)
        with self.assertRaises(TopologyInputError):
            check_parity(3, 0)


class GateTestCase(unittest.TestCase):
    def test_windowMargins(self):
        result = theorem_b_gate(3, 1)
        self.assertFalse(result.ok)
        self.assertEqual(margin(result, "signature_window").exact, "-3/4")
        self.assertEqual(margin(result, "chi_ceiling").exact, "6")
        self.assertTrue(theorem_b_gate(5, 1).ok)
        self.assertTrue(theorem_b_gate(9, -1).ok)
        self.assertFalse(theorem_b_gate(10, 0).ok)

    def test_windowIsStrict(self):
        # 边界 χ = (15/4)|τ| 本身不算通过
        result = theorem_b_gate(30, 8)
        self.assertEqual(margin(result, "signature_window").exact, "0")
        self.assertFalse(result.ok)

    def test_hitchin(self):
        self.assertTrue(hitchin_gate(3, 1).ok)
        self.assertTrue(hitchin_gate(4, 2).ok)
        self.assertFalse(hitchin_gate(5, 3).ok)
        self.assertFalse(hitchin_gate(24, -16).ok)
        self.assertEqual(margin(hitchin_gate(4, 2), "squared").exact, "20")
        self.assertTrue(hitchin_gate(0, 0).ok)
        self.assertFalse(hitchin_gate(-2, 0).ok)

    def test_hitchinEnclosure(self):
        lo, hi = hitchin_enclosure()
        self.assertLess(lo * lo, Fraction(27, 8))
        self.assertGreater(hi * hi, Fraction(27, 8))
        self.assertEqual(hi - lo, Fraction(1, 8 * 10**12))
        self.assertLess(lo, Fraction(1837, 1000))
        self.assertGreater(hi, Fraction(1837, 1000))

    def test_hitchinMarginsAgreeWithVerdict(self):
        result = hitchin_gate(4, 2)
        self.assertTrue(result.ok)
        margins = {m.name: m for m in result.margins}
        self.assertGreater(Fraction(margins["linear_lower"].exact), 0)
        self.assertAlmostEqual(margins["linear_lower"].value, 4.0 - 2.0 * 1.5**1.5, places=10)
        self.assertAlmostEqual(margins["coefficient_lo"].value, 1.5**1.5, places=10)

    def test_parityIsEnforced(self):
        with self.assertRaises(TopologyInputError):
            theorem_b_gate(4, 1)
        with self.assertRaises(TopologyInputError):
            hitchin_gate(2.0, 0)

    def test_positiveDefiniteForm(self):
        result = theorem_a_gate(TopologyDescriptor(b_plus=1, b_minus=0))
        self.assertTrue(result.hypotheses_met)
        self.assertEqual(result.conclusion, FUBINI_STUDY_CONCLUSION)
        self.assertFalse(result.theorem_b.ok)
        self.assertTrue(result.hitchin.ok)
        self.assertEqual(theorem_a_gate(TopologyDescriptor(b_plus=2, b_minus=0)).conclusion, EXCLUDED_CONCLUSION)
        self.assertFalse(theorem_a_gate(TopologyDescriptor(b_plus=1, b_minus=1)).hypotheses_met)


class DeductionTestCase(unittest.TestCase):
    def test_simplyConnected(self):
        one = simply_connected_deduction(1)
        self.assertEqual(one.min_chi, 5)
        self.assertEqual(one.cover_degree_bound, 1)
        self.assertEqual(simply_connected_deduction(-2).min_chi, 8)

    def test_noFeasibleEuler(self):
        result = simply_connected_deduction(3)
        self.assertTrue(result.applicable)
        self.assertIsNone(result.min_chi)

    def test_zeroSignature(self):
        result = simply_connected_deduction(0)
        self.assertFalse(result.applicable)
        self.assertTrue(result.reasoning)


class CombinedVerdictTestCase(unittest.TestCase):
    def test_branches(self):
        cases = [
            (TopologyDescriptor(0, 0), "未被排除"),
            (TopologyDescriptor(1, 1), "未被排除"),
            (TopologyDescriptor(2, 1), "未被排除"),
            (TopologyDescriptor(1, 0), FUBINI_STUDY_CONCLUSION),
            (TopologyDescriptor(0, 1), FUBINI_STUDY_CONCLUSION),
            (TopologyDescriptor(2, 0), EXCLUDED_CONCLUSION),
            (TopologyDescriptor(5, 0), EXCLUDED_CONCLUSION),
            (TopologyDescriptor(4, 4), EXCLUDED_CONCLUSION),
            (TopologyDescriptor(3, 19), EXCLUDED_CONCLUSION),
        ]
        for desc, expected in cases:
            self.assertEqual(combined_verdict(desc).verdict, expected, desc)

    def test_hitchinTakesPrecedence(self):
        result = combined_verdict(TopologyDescriptor(5, 0))
        self.assertEqual(result.provenance, ["Hitchin 不等式不成立"])

    def test_infiniteFundamentalGroup(self):
        result = combined_verdict(TopologyDescriptor(3, 3, b_one=4, finite_pi1=False))
        self.assertEqual(result.verdict, FLAT_CONCLUSION)
        self.assertEqual(result.gates, [])

    def test_nonOrientable(self):
        result = combined_verdict(TopologyDescriptor(0, 0, orientable=False))
        self.assertTrue(result.verdict.startswith("不适用"))

    def test_deductionAttached(self):
        self.assertIsNone(combined_verdict(TopologyDescriptor(1, 1)).deduction)
        self.assertEqual(combined_verdict(TopologyDescriptor(2, 1)).deduction.min_chi, 5)


if __name__ == "__main__":
    unittest.main()
