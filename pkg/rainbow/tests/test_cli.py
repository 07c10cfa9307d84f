import json
import tempfile
from io import StringIO
from pathlib import Path
from unittest import mock

from django.core.management import CommandError, call_command
from django.test import SimpleTestCase, override_settings

from rainbow import certificates
from rainbow.cli import run


def prcf(*argv):
    stdout_buffer = StringIO()
    stderr_buffer = StringIO()
    code = run(list(argv), stdout=stdout_buffer, stderr=stderr_buffer)
    return code, stdout_buffer.getvalue(), stderr_buffer.getvalue()


def report(*argv):
    code, out, err = prcf(*argv)
    if code != 0:
        raise AssertionError(f"prcf {' '.join(argv)} exited {code}: {err}")
    return json.loads(out)


class ReportShapeTests(SimpleTestCase):
    def test_report_fields(self):
        data = report("analyze", "--family", "petersen")
        self.assertEqual(set(data), {"command", "input", "results", "timing", "budget"})
        self.assertEqual(data["command"], "analyze")
        self.assertEqual(data["input"], {"source": "family", "name": "petersen", "n": 10, "m": 15})
        self.assertEqual(data["results"]["classification"], "Moore(d=2, r=3)")
        self.assertIsNone(data["timing"])
        self.assertEqual(data["budget"]["workers"], 1)

    def test_deterministic_output(self):
        first = prcf("census", "--family", "petersen")
        second = prcf("census", "--family", "petersen")
        self.assertEqual(first[1], second[1])
        self.assertEqual(json.loads(first[1])["results"]["cycle_count"], 12)

    def test_timing_flag(self):
        data = report("census", "--family", "petersen", "--timing")
        self.assertIsInstance(data["timing"], float)

    def test_summary_goes_to_stderr(self):
        code, _, err = prcf("census", "--family", "petersen")
        self.assertEqual(code, 0)
        self.assertIn("=" * 60, err)
        self.assertIn("prcf census", err)
        self.assertIn("Elapsed:", err)

    @override_settings(PRCF_MAX_NODES=10)
    def test_settings_supply_the_default_budget(self):
        code, _, err = prcf("census", "--family", "petersen")
        self.assertEqual(code, 2)
        self.assertIn("Budget exceeded", err)


class FamilyCommandTests(SimpleTestCase):
    def test_edge_list(self):
        code, out, _ = prcf("family", "--family", "cycle", "--n", "4")
        self.assertEqual(code, 0)
        self.assertEqual(out, "0 1\n1 2\n2 3\n0 3\n")

    def test_graph6_and_dot(self):
        _, out, _ = prcf("family", "--family", "path", "--n", "2", "--emit", "graph6")
        self.assertEqual(out, "A_\n")
        _, out, _ = prcf("family", "--family", "petersen", "--emit", "dot")
        self.assertTrue(out.startswith("graph petersen {"))

    def test_json_with_subdivision(self):
        data = report("family", "--family", "petersen", "--subdivide", "1", "--emit", "json")
        self.assertEqual((data["results"]["n"], data["results"]["m"]), (25, 30))
        self.assertEqual(data["input"]["name"], "subdivision(petersen, 1)")

    def test_input_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            graph_file = Path(tmp) / "square.txt"
            graph_file.write_text("0 1\n1 2\n2 3\n3 0\n")
            data = report("analyze", "--input", str(graph_file))
        self.assertEqual(data["results"]["girth"], 4)
        self.assertEqual(data["input"]["source"], "input")


class DecideCommandTests(SimpleTestCase):
    def test_k2n_is_bad(self):
        data = report("decide", "--family", "k2n", "--n", "4")
        self.assertEqual(data["results"]["outcome"], "bad")
        self.assertEqual(data["results"]["evidence"], "exhaustion")
        self.assertIsNone(data["results"]["witness"])

    def test_good_verdict_carries_verified_witness(self):
        data = report("decide", "--family", "cycle", "--n", "6")
        witness = data["results"]["witness"]
        self.assertEqual(data["results"]["outcome"], "good")
        self.assertTrue(witness["verified"])
        self.assertEqual(len(witness["colors"]), 6)

    def test_certified_strategy(self):
        data = report("decide", "--family", "hosi", "--strategy", "certified")
        self.assertEqual(data["results"]["outcome"], "bad")
        self.assertEqual(data["results"]["evidence"], "certificate")
        self.assertEqual(data["results"]["certificate"]["upper"], "1/6")


class CertifyCommandTests(SimpleTestCase):
    def test_hoffman_singleton(self):
        data = report("certify", "--family", "hoffman-singleton")
        certificate = data["results"]["certificate"]
        self.assertEqual((certificate["lower"], certificate["upper"]), ("1/5", "1/6"))
        self.assertEqual(certificate["verdict"], "bad")
        self.assertEqual(certificate["provenance"], "concrete-graph")

    def test_polygon_params(self):
        data = report("certify", "--params", "d=3", "r=12")
        self.assertEqual(data["results"]["certificate"]["upper"], "31/121")
        self.assertEqual(data["results"]["certificate"]["verdict"], "bad")
        self.assertEqual(data["results"]["order_formulas"]["bipartite_style"], 2 * (1 + 11 + 121))

    def test_octagon_params(self):
        certificate = report("certify", "--params", "octagon", "q=128")["results"]["certificate"]
        self.assertEqual(certificate["verdict"], "bad")
        self.assertEqual(certificate["secondary_lower"], "1/6")
        self.assertEqual(certificate["secondary_verdict"], "bad")

    def test_noncriticality(self):
        results = report("certify", "--params", "noncriticality")["results"]
        self.assertEqual((results["lower"], results["upper"]), (1134, 1050))
        self.assertTrue(results["contradiction"])

    def test_published_mismatch_exits_3(self):
        with mock.patch.dict(certificates.HOSI_PUBLISHED, {"cycles": 1261}):
            code, _, err = prcf("certify", "--params", "noncriticality")
        self.assertEqual(code, 3)
        self.assertIn("Cross-check failed", err)

    def test_param_errors(self):
        self.assertEqual(prcf("certify", "--params", "moore")[0], 1)
        self.assertEqual(prcf("certify", "--params", "d=x")[0], 1)
        self.assertEqual(prcf("certify", "--params", "heptagon", "q=3")[0], 1)
        self.assertEqual(prcf("certify", "--family", "petersen", "--params", "moore", "r=7")[0], 1)

    def test_not_a_certifiable_graph(self):
        self.assertEqual(prcf("certify", "--family", "complete", "--n", "5")[0], 1)


class ThresholdCommandTests(SimpleTestCase):
    def test_hexagon_prime_power(self):
        results = report("threshold", "--polygon", "6", "--prime-power")["results"]
        self.assertEqual(results["threshold"], 90)
        self.assertEqual(results["report"]["unconstrained"], 86)
        self.assertFalse(results["report"]["agrees_with_published"])
        self.assertEqual(results["order_formulas"]["moore_style"], 508276320301)

    def test_hexagon_unconstrained(self):
        self.assertEqual(report("threshold", "--polygon", "6")["results"]["threshold"], 86)

    def test_octagon(self):
        results = report("threshold", "--octagon")["results"]
        self.assertEqual(results["threshold"], 128)
        self.assertEqual(results["report"]["q_for_one_sixth"], 128)

    def test_through_call_command(self):
        stdout_buffer = StringIO()
        call_command(
            "threshold", polygon=3, stdout=stdout_buffer, stderr=StringIO()
        )
        self.assertEqual(json.loads(stdout_buffer.getvalue())["results"]["threshold"], 10)
        with self.assertRaises(CommandError) as ctx:
            call_command("threshold", stdout=StringIO(), stderr=StringIO())
        self.assertEqual(ctx.exception.returncode, 1)

    def test_degenerate_polygon_exits_1(self):
        for d in ("0", "1"):
            code, out, err = prcf("threshold", "--polygon", d)
            self.assertEqual(code, 1)
            self.assertEqual(out, "")
            self.assertIn("diameter must be at least 2", err)


class ColorAndCheckCommandTests(SimpleTestCase):
    def test_subdivision_colorer(self):
        results = report(
            "color", "--family", "petersen", "--subdivide", "2", "--method", "subdivision-k"
        )["results"]
        self.assertTrue(results["verified"])
        self.assertEqual(len(results["colors"]), 45)

    def test_plain_coloring_output(self):
        code, out, _ = prcf("color", "--family", "cycle", "--n", "4", "--emit", "coloring")
        self.assertEqual(code, 0)
        self.assertEqual(out, "0 0\n1 1\n2 0\n3 1\n")

    def test_check(self):
        with tempfile.TemporaryDirectory() as tmp:
            good = Path(tmp) / "good.txt"
            good.write_text("0 0\n1 1\n2 0\n3 1\n")
            rainbow = Path(tmp) / "rainbow.txt"
            rainbow.write_text("0 0\n1 1\n2 2\n3 3\n")
            short = Path(tmp) / "short.txt"
            short.write_text("0 0\n")

            results = report("check", "--family", "cycle", "--n", "4", "--coloring", str(good))
            self.assertTrue(results["results"]["verified"])
            self.assertEqual(
                results["input"],
                {"source": "family", "name": "cycle(4)", "n": 4, "m": 4, "coloring": str(good)},
            )

            results = report("check", "--family", "cycle", "--n", "4", "--coloring", str(rainbow))
            self.assertFalse(results["results"]["verified"])
            self.assertEqual(results["results"]["rainbow_cycle"], [0, 1, 2, 3])

            code, _, _ = prcf("check", "--family", "cycle", "--n", "4", "--coloring", str(short))
            self.assertEqual(code, 1)


class ExitCodeTests(SimpleTestCase):
    def test_invalid_input(self):
        self.assertEqual(prcf("census", "--family", "petersen", "--bogus")[0], 1)
        self.assertEqual(prcf("census", "--input", "/nonexistent/graph.txt")[0], 1)
        self.assertEqual(prcf("family", "--family", "pg", "--q", "4")[0], 1)
        self.assertEqual(prcf("census")[0], 1)
        self.assertEqual(prcf("analyze", "--family", "petersen", "--workers", "0")[0], 1)
        self.assertEqual(prcf("nonsense")[0], 1)
        self.assertEqual(prcf()[0], 1)

    def test_family_and_input_are_exclusive(self):
        code, _, err = prcf("analyze", "--family", "petersen", "--input", "x.txt")
        self.assertEqual(code, 1)
        self.assertIn("either --family or --input", err)

    def test_budget_exceeded(self):
        code, out, err = prcf("census", "--family", "hoffman-singleton", "--max-nodes", "10")
        self.assertEqual(code, 2)
        self.assertEqual(out, "")
        self.assertIn("Budget exceeded", err)
