import unittest

from src.enums.report_def import CheckStatus
from src.report.suites import (
    SUITES,
    bivector_suite,
    chern_suite,
    inequalities_suite,
    models_suite,
    spinor_suite,
    topology_suite,
)


def failed_checks(records):
    return [(r.check_id, r.computed) for r in records if r.status == CheckStatus.Failed]


class SuitesTestCase(unittest.TestCase):
    def test_suiteOrder(self):
        self.assertEqual(list(SUITES), ["bivector", "spinor", "models", "chern", "inequalities", "topology"])

    def test_topologySuitePasses(self):
        records = topology_suite()
        self.assertEqual(failed_checks(records), [])
        ids = {r.check_id for r in records}
        self.assertIn("homeotype_count", ids)
        self.assertIn("self_dual_equality", ids)

    def test_spinorSuitePasses(self):
        records = spinor_suite(seed=1, samples=50, kato_samples=2000)
        self.assertEqual(failed_checks(records), [])
        self.assertTrue(all(r.suite == "spinor" for r in records))

    def test_bivectorSuitePasses(self):
        records = bivector_suite(seed=3, instances=5, samples=20000)
        self.assertEqual(failed_checks(records), [])
        ids = {r.check_id for r in records}
        for check_id in ("decomposition_round_trip", "min_sectional_spot_check", "weyl_bound_converse", "sectional_range.cp2"):
            self.assertIn(check_id, ids)
        spot = next(r for r in records if r.check_id == "min_sectional_spot_check")
        self.assertEqual(spot.computed["instances"], 5)

    def test_modelsSuitePasses(self):
        self.assertEqual(failed_checks(models_suite()), [])

    def test_chernSuitePasses(self):
        records = chern_suite()
        self.assertEqual(failed_checks(records), [])
        ids = {r.check_id for r in records}
        self.assertIn("non_einstein_chi.b=0.5", ids)
        self.assertIn("non_einstein_chi.b=2", ids)

    def test_inequalitiesSuitePasses(self):
        records = inequalities_suite()
        self.assertEqual(failed_checks(records), [])
        statuses = {r.check_id: r.status for r in records}
        self.assertEqual(statuses["finiteness_bounds.cp2"], CheckStatus.Passed)

    def test_recordsCarryProvenance(self):
        for item in topology_suite():
            self.assertTrue(item.anchor)
            self.assertIsNotNone(item.provenance)


if __name__ == "__main__":
    unittest.main()
