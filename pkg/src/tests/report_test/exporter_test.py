import csv
import io
import json
import unittest

import numpy as np

from src.enums.report_def import CheckStatus, OutputFormat, Provenance
from src.errors import ReportFormatError
from src.report import CheckRecord, PaperReport, RunConfig, emit
from src.report.exporter import CSV_HEAD, to_csv, to_markdown, to_text
from src.report.schemas import _json_safe
from src.report.suites import record


def sample_report(failed: bool = False) -> PaperReport:
    records = [
        record("alpha", "one", "1 + 1 = 2", {"value": 2}, {"value": 2}, Provenance.TRIVIAL, True, margin=0.5),
        record("alpha", "two", "a | b", {"value": float("nan")}, {"value": 1.0}, Provenance.DERIVED, not failed),
        record("beta", "three", "skip", {}, {}, Provenance.PAPER, False, applicable=False, detail="条件不满足"),
    ]
    return PaperReport.build(RunConfig(subcommand="report", output_format=OutputFormat.Json), records, {"x": np.float64(1.5)})


class SchemaTestCase(unittest.TestCase):
    def test_jsonSafe(self):
        value = _json_safe({"a": [float("inf"), np.int64(3)], 1: np.array([1.0, np.nan])})
        self.assertEqual(value, {"a": [None, 3], "1": [1.0, None]})

    def test_recordSanitizesMargin(self):
        item = CheckRecord(
            suite="s", check_id="c", anchor="", computed={}, expected={},
            provenance=Provenance.TRIVIAL, margin=float("nan"), status=CheckStatus.Passed,
        )
        self.assertIsNone(item.margin)

    def test_summaryAndExitCode(self):
        report = sample_report()
        self.assertEqual((report.summary.total, report.summary.passed, report.summary.not_applicable), (3, 2, 1))
        self.assertEqual(report.exit_code, 0)
        self.assertEqual(report.suites(), ["alpha", "beta"])
        self.assertEqual(report.payload, {"x": 1.5})
        self.assertEqual(sample_report(failed=True).exit_code, 1)

    def test_runConfigValidation(self):
        with self.assertRaises(ValueError):
            RunConfig(subcommand="chern", quad_order=1)
        with self.assertRaises(ValueError):
            RunConfig(subcommand="chern", fd_step=float("inf"))
        self.assertEqual(RunConfig(subcommand="chern", seed=7).echo()["seed"], 7)


class ExporterTestCase(unittest.TestCase):
    def setUp(self):
        self.report = sample_report()

    def test_jsonIsDeterministic(self):
        first = emit(self.report, "json")
        self.assertEqual(first, emit(sample_report(), OutputFormat.Json))
        doc = json.loads(first)
        self.assertEqual(doc["schema_version"], "1.0")
        self.assertIsNone(doc["records"][1]["computed"]["value"])
        self.assertNotIn("timestamp", first.decode("utf-8"))

    def test_csv(self):
        rows = list(csv.reader(io.StringIO(to_csv(self.report))))
        self.assertEqual(rows[0], CSV_HEAD)
        self.assertEqual(len(rows), 4)
        self.assertEqual(rows[1][5], "5.000e-01")
        self.assertEqual(rows[3][4], "not_applicable")

    def test_markdownEscapesPipes(self):
        text = to_markdown(self.report)
        self.assertIn("## alpha", text)
        self.assertIn("## beta", text)
        self.assertIn("a \\| b", text)
        self.assertIn("## payload", text)

    def test_text(self):
        lines = to_text(self.report).splitlines()
        self.assertTrue(lines[0].startswith("suite"))
        self.assertIn("total=3 passed=2 failed=0 not_applicable=1", lines)

    def test_unsupportedFormat(self):
        with self.assertRaises(ReportFormatError):
            emit(self.report, "xml")
        self.assertEqual(emit(self.report, "TEXT"), emit(self.report, OutputFormat.Text))


if __name__ == "__main__":
    unittest.main()
