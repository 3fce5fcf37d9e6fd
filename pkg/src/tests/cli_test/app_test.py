import contextlib
import io
import json
import os
import shutil
import tempfile
import unittest

from src.cli.app import PROG, build_parser, run
from src.config.config import Config
from src.config.global_config import FIXTURE_DIR
from src.topology.gates import FUBINI_STUDY_CONCLUSION


def fixture(name: str) -> str:
    return os.path.join(FIXTURE_DIR, name)


class CliTestCase(unittest.TestCase):
    def setUp(self):
        self.saved = {k: getattr(Config, k) for k in Config.as_dict()}
        self.tmp = tempfile.mkdtemp()
        self.output = os.path.join(self.tmp, "out.json")

    def tearDown(self):
        for key, value in self.saved.items():
            setattr(Config, key, value)
        shutil.rmtree(self.tmp, ignore_errors=True)

    def invoke(self, *argv):
        """运行子命令，返回 (退出码, 解析后的 JSON 或 None, stderr)"""
        stderr = io.StringIO()
        with contextlib.redirect_stderr(stderr):
            code = run([*argv, "--output", self.output])
        doc = None
        if os.path.exists(self.output):
            with open(self.output, "r", encoding="utf-8") as f:
                doc = json.load(f)
            os.remove(self.output)
        return code, doc, stderr.getvalue()

    def assertUsageError(self, *argv):
        code, doc, err = self.invoke(*argv)
        self.assertEqual(code, 2)
        self.assertIsNone(doc)
        return err

    def test_decomposeZeroOperator(self):
        code, doc, _ = self.invoke("decompose", "--input", fixture("zero_matrix.json"), "--format", "json")
        self.assertEqual(code, 0)
        self.assertEqual(doc["payload"]["scalar"], 0.0)
        self.assertEqual(doc["payload"]["w_plus"], [[0.0] * 3] * 3)
        self.assertEqual(doc["summary"]["failed"], 0)

    def test_decomposeFubiniStudy(self):
        code, doc, _ = self.invoke("decompose", "--input", fixture("cp2_operator.json"), "--format", "json")
        self.assertEqual(code, 0)
        self.assertAlmostEqual(doc["payload"]["scalar"], 24.0, places=12)

    def test_badInputs(self):
        for name in ("broken.json", "short_matrix.json", "missing.json"):
            err = self.assertUsageError("decompose", "--input", fixture(name), "--format", "json")
            self.assertTrue(err.startswith(f"{PROG}: error:"), err)
            self.assertEqual(len(err.strip().splitlines()), 1)

    def test_usageErrors(self):
        self.assertUsageError("decompose", "--no-such-flag")
        self.assertUsageError("decompose", "--input", fixture("zero_matrix.json"), "--format", "xml")
        self.assertUsageError("chern")
        self.assertUsageError("chern", "--model", "k3")
        self.assertUsageError("chern", "--model", "s4", "--param", "radius", "--format", "json")
        self.assertUsageError("chern", "--model", "s4", "--param", "side=2", "--format", "json")
        self.assertUsageError("chern", "--model", "t4", "--quad-order", "1", "--format", "json")

    def test_certifyModel(self):
        code, doc, _ = self.invoke("certify", "--model", "cp2", "--format", "json")
        self.assertEqual(code, 0)
        self.assertAlmostEqual(doc["payload"]["min_sectional"], 1.0, places=9)
        ids = [r["check_id"] for r in doc["records"]]
        self.assertIn("weyl_bound", ids)
        self.assertIn("min_sectional_closed_form", ids)

    def test_certifyNeedsSource(self):
        self.assertUsageError("certify")
        self.assertUsageError("certify", "--model", "cp2", "--input", fixture("cp2_operator.json"))

    def test_chernFlatTorus(self):
        code, doc, _ = self.invoke("chern", "--model", "t4", "--quad-order", "4", "--format", "json")
        self.assertEqual(code, 0)
        self.assertAlmostEqual(doc["payload"]["volume"], 1.0, places=12)
        self.assertEqual(doc["config"]["run"]["quad_order"], 4)

    def test_obstructBetti(self):
        code, doc, _ = self.invoke("obstruct", "--bplus", "1", "--bminus", "0", "--format", "json")
        self.assertEqual(code, 0)
        self.assertEqual(doc["payload"]["verdict"]["verdict"], FUBINI_STUDY_CONCLUSION)
        self.assertTrue(all(r["status"] == "passed" for r in doc["records"]))

    def test_obstructInvariants(self):
        code, doc, _ = self.invoke("obstruct", "--chi", "3", "--tau", "1", "--format", "json")
        self.assertEqual(code, 0)
        gates = {g["gate"]: g["ok"] for g in doc["payload"]["gates"]}
        self.assertEqual(gates, {"theorem_b": False, "hitchin": True})
        self.assertEqual(doc["payload"]["definite_form"]["conclusion"], FUBINI_STUDY_CONCLUSION)

    def test_obstructErrors(self):
        self.assertUsageError("obstruct", "--chi", "3", "--tau", "0", "--format", "json")
        self.assertUsageError("obstruct", "--chi", "3", "--format", "json")
        self.assertUsageError("obstruct", "--chi", "3", "--tau", "1", "--bplus", "1", "--bminus", "0")
        self.assertUsageError("obstruct", "--bplus", "-1", "--bminus", "0", "--format", "json")

    def test_enumerate(self):
        code, doc, _ = self.invoke("enumerate", "--format", "json")
        self.assertEqual(code, 0)
        self.assertEqual(len(doc["payload"]), 12)

    def test_spinorCheck(self):
        code, doc, _ = self.invoke("spinor-check", "--samples", "20", "--kato-samples", "500", "--seed", "3", "--format", "json")
        self.assertEqual(code, 0)
        self.assertEqual(doc["config"]["run"]["seed"], 3)

    def test_reportIsReproducible(self):
        first = self.invoke("report", "--suite", "topology", "--format", "json")
        second = self.invoke("report", "--suite", "topology", "--format", "json")
        self.assertEqual(first[0], 0)
        self.assertEqual(first[1], second[1])

    def test_otherFormats(self):
        for fmt in ("csv", "markdown", "text"):
            code = run(["enumerate", "--format", fmt, "--output", self.output])
            self.assertEqual(code, 0)
            with open(self.output, "r", encoding="utf-8") as f:
                self.assertTrue(f.read())

    def test_parserHasAllSubcommands(self):
        parser = build_parser()
        for command in ("decompose", "certify", "chern", "conformal-check", "spinor-check", "obstruct", "enumerate", "report"):
            args = parser.parse_args([command] + {"certify": ["--model", "s4"], "chern": ["--model", "s4"]}.get(command, []))
            self.assertEqual(args.command, command)


if __name__ == "__main__":
    unittest.main()
