"""End-to-end tests of the prismcheck command line."""

import json
import shutil
import subprocess
import sys
import tempfile
import unittest
from pathlib import Path

PRISMCHECK = None
FIXTURES = None


def run(*args, fixtures=None):
    cmd = [PRISMCHECK, "--fixtures", str(fixtures or FIXTURES), *args]
    return subprocess.run(cmd, capture_output=True, text=True, timeout=1200)


class CliTest(unittest.TestCase):
    def test_list_has_every_check(self):
        out = run("verify", "list")
        self.assertEqual(out.returncode, 0, out.stderr)
        for check in ("table-1a", "table-5", "r17-extremal", "properties"):
            self.assertIn(check, out.stdout)

    def test_unknown_check_is_a_configuration_error(self):
        out = run("verify", "run", "nonexistent")
        self.assertEqual(out.returncode, 2)
        self.assertIn("nonexistent", out.stderr)

    def test_missing_fixture_directory(self):
        out = run("verify", "run", "table-1a", fixtures="/nonexistent/fixtures")
        self.assertEqual(out.returncode, 2)

    def test_minor_and_iso_queries(self):
        self.assertEqual(run("minor", "F7", "W3").returncode, 0)
        self.assertEqual(run("minor", "W3", "F7").returncode, 1)
        self.assertEqual(run("iso", "AG32", "AG32").returncode, 0)
        self.assertEqual(run("iso", "F7", "F7star").returncode, 1)
        show = run("catalog", "show", "P9")
        self.assertEqual(show.returncode, 0)
        self.assertIn("P9", show.stdout)

    def test_single_check_json(self):
        out = run("verify", "run", "table-1b", "--json-stdout")
        self.assertEqual(out.returncode, 0, out.stdout)
        report = json.loads(out.stdout)
        self.assertEqual(report["schema"], 1)
        self.assertEqual(report["checks"][0]["status"], "pass")

    def test_corrupted_r17_is_detected(self):
        with tempfile.TemporaryDirectory() as tmp:
            copy = Path(tmp) / "fixtures"
            shutil.copytree(FIXTURES, copy)
            path = copy / "matroids" / "R17.mat"
            lines = path.read_text().splitlines()
            # Flip one entry of the first D row.
            for i, line in enumerate(lines):
                if line and set(line) <= {"0", "1"}:
                    lines[i] = ("1" if line[0] == "0" else "0") + line[1:]
                    break
            path.write_text("\n".join(lines) + "\n")
            for check in ("table-5", "r17-extremal"):
                out = run("verify", "run", check, "--json-stdout", fixtures=copy)
                self.assertEqual(out.returncode, 1, out.stdout[-2000:])
                report = json.loads(out.stdout)
                result = report["checks"][0]
                self.assertEqual(result["status"], "fail")
                self.assertTrue(result["details"]["failures"])

    def test_full_run_is_deterministic(self):
        with tempfile.TemporaryDirectory() as tmp:
            a = Path(tmp) / "a.json"
            b = Path(tmp) / "b.json"
            first = run("verify", "all", "--jobs", "1", "--no-runtime", "--json", str(a))
            second = run("verify", "all", "--jobs", "3", "--no-runtime", "--json", str(b))
            self.assertEqual(first.returncode, second.returncode)
            self.assertEqual(a.read_bytes(), b.read_bytes())
            report = json.loads(a.read_text())
            self.assertEqual(report["schema"], 1)
            self.assertEqual(report["summary"]["total"], len(report["checks"]))


if __name__ == "__main__":
    PRISMCHECK, FIXTURES = sys.argv[1], sys.argv[2]
    unittest.main(argv=sys.argv[:1], verbosity=2)
