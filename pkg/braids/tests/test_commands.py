import json
import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command, get_commands
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from braids.schemas import CheckReport, DerivationRecord


def run(*args):
    out = StringIO()
    call_command(*args, stdout=out)
    return out.getvalue()


class CommandTestCase(SimpleTestCase):
    def assertExitCode(self, code, *args):
        with self.assertRaises(CommandError) as ctx:
            run(*args)
        self.assertEqual(ctx.exception.returncode, code)
        return ctx.exception


class WordCommandTests(CommandTestCase):
    def test_normalize_identifies_a1_sides(self):
        left = run("normalize", "y1[a] y1 y1[b]")
        right = run("normalize", "y1 y1 y1[a+b]")
        self.assertEqual(left, right)
        self.assertIn("steinberg: x{e1-e2}[a+b]", left)

    def test_normalize_trivial_braid(self):
        out = run("normalize", "--rank", "2", "y2 y1[a] y1^-1 y2^-1")
        self.assertEqual(out.splitlines(), ["steinberg: x{e1-e3}[a]", "braid: 1", "garside: Delta^0"])

    def test_phi(self):
        self.assertEqual(run("phi", "y1[a]").splitlines(), ["steinberg: x{e1-e2}[a]", "braid: y1"])

    def test_psi(self):
        self.assertEqual(run("psi", "--rank", "2", "x{1,3}[a]").strip(), "y2 y1[a] y1^-1 y2^-1")

    def test_eval_colours(self):
        out = run("eval", "--ring", "poly:a", "--colors", "u,v", "y1[a]")
        self.assertEqual(out.strip(), "v+a*u, u")

    def test_draw(self):
        out = run("draw", "--rank", "2", "y1 y2[a]")
        self.assertEqual(out.splitlines()[0], "1 2 3")
        self.assertTrue(out.splitlines()[-1].endswith("y2[a]"))

    def test_pure_gens(self):
        lines = run("pure_gens", "--type", "D", "--rank", "4").splitlines()
        self.assertEqual(len(lines), 12)
        self.assertIn("b{3,3}: y3 y2 y2p y3 y3 y2p y2 y3", lines)


class CommandNameTests(SimpleTestCase):
    def test_system_check_is_not_shadowed(self):
        self.assertEqual(get_commands()["check"], "django.core")
        self.assertEqual(get_commands()["verify"], "braids")
        self.assertIn("no issues", run("check"))


class ErrorCodeTests(CommandTestCase):
    def test_parse_error(self):
        error = self.assertExitCode(2, "normalize", "--rank", "4", "y1 y9")
        self.assertIn("offset 3", str(error))

    def test_bad_ring_text(self):
        self.assertExitCode(2, "normalize", "--ring", "real", "y1")

    def test_type_d_over_noncommutative_ring(self):
        self.assertExitCode(1, "normalize", "--type", "D", "--rank", "4", "--ring", "poly:a,noncomm", "y2")

    def test_system_too_small(self):
        self.assertExitCode(1, "normalize", "--type", "D", "--rank", "2", "y2")

    def test_unknown_suite_is_a_usage_error(self):
        self.assertExitCode(1, "verify", "nope")

    def test_missing_suite(self):
        self.assertExitCode(1, "verify")


class CheckCommandTests(CommandTestCase):
    def test_schema(self):
        schema = json.loads(run("verify", "--schema"))
        self.assertIn("checks", schema["properties"])

    def test_text_report(self):
        lines = run("verify", "garside", "--rank", "2").splitlines()
        self.assertTrue(lines[-1].startswith("garside on A_2 over poly:a,b,c: pass"))
        self.assertIn("pass     delta", lines)

    def test_json_report(self):
        report = CheckReport.model_validate_json(run("verify", "phi", "--type", "D", "--rank", "3", "--format", "json"))
        self.assertEqual((report.suite, report.family, report.rank), ("phi", "D", 3))
        self.assertEqual(report.status, "pass")

    def test_unproven_exit_code(self):
        self.assertExitCode(4, "verify", "twin", "--type", "D", "--rank", "4", "--max-steps", "1")

    @override_settings(PARABRAID_UNPROVEN_PASSES=True)
    def test_unproven_can_pass(self):
        out = run("verify", "twin", "--type", "D", "--rank", "4", "--max-steps", "1")
        self.assertIn("unproven twin:4:prover", out)

    def test_calibration_check(self):
        out = run("calibrate", "--check")
        self.assertEqual(out.splitlines(), ["D_3: ok", "D_4: ok", "D_5: ok", "D_6: ok"])

    def test_calibration_show(self):
        lines = run("calibrate", "--type", "D", "--rank", "4").splitlines()
        self.assertEqual(lines[0], "D_4: flips -e2+e3")
        self.assertIn("N(-e1+e2, -e2+e3) = +1", lines)
        self.assertTrue(lines[-1].startswith("sign_free: false"))


class ProveCommandTests(CommandTestCase):
    def setUp(self):
        directory = tempfile.TemporaryDirectory()
        self.addCleanup(directory.cleanup)
        self.path = Path(directory.name) / "derivation.json"

    def test_prove_and_replay(self):
        out = run("prove", "--no-shortcuts", "--out", str(self.path), "y1[a] y1 y1[b] == y1 y1 y1[a+b]")
        lines = out.splitlines()
        self.assertEqual(lines[0], "y1[a] y1 y1[b] == y1 y1 y1[a+b]: 1 steps")
        self.assertEqual(lines[1], "  1. A1[1] forward at 0 [p=a, q=b]")

        record = DerivationRecord.model_validate_json(self.path.read_text(encoding="utf-8"))
        self.assertFalse(record.shortcuts)

        replayed = run("replay", str(self.path))
        self.assertEqual(replayed.strip(), "ok: y1[a] y1 y1[b] == y1 y1 y1[a+b] in 1 steps on A_1 over poly:a,b,c")

    def test_tampered_derivation(self):
        run("prove", "--no-shortcuts", "--out", str(self.path), "y1[a] y1 y1[b] == y1 y1 y1[a+b]")
        data = json.loads(self.path.read_text(encoding="utf-8"))
        data["steps"][0]["position"] = 1
        self.path.write_text(json.dumps(data), encoding="utf-8")
        self.assertExitCode(3, "replay", str(self.path))

    def test_not_a_derivation_file(self):
        self.path.write_text('{"family": "B"}', encoding="utf-8")
        self.assertExitCode(2, "replay", str(self.path))

    def test_missing_file(self):
        self.assertExitCode(1, "replay", str(self.path))

    def test_equation_needs_two_sides(self):
        self.assertExitCode(2, "prove", "y1 y1")

    def test_unproven(self):
        self.assertExitCode(4, "prove", "--max-steps", "20", "--max-len", "3", "y1 == y1^-1")

    @override_settings(PARABRAID_UNPROVEN_PASSES=True)
    def test_unproven_can_pass(self):
        out = run("prove", "--max-steps", "20", "--max-len", "3", "y1 == y1^-1")
        self.assertTrue(out.startswith("unproven: no derivation within bounds"))

    def test_rules(self):
        lines = run("prove", "--rules", "--no-shortcuts", "y1 == y1").splitlines()
        self.assertEqual(lines[0], "A1[1]: y1[p] y1 y1[q] = y1 y1 y1[p+q]")
        self.assertNotIn("merge[1]", " ".join(lines))
