"""End-to-end command-line checks: exit codes and emitted artifacts."""

import json
import os
import subprocess
import sys
from pathlib import Path

from ctforge.qdyson import certificate_from_dict, validate_certificate

ROOT = Path(__file__).resolve().parent.parent


def run_cli(*args, **kw):
    env = dict(os.environ)
    env["PYTHONPATH"] = str(ROOT / "src")
    env.setdefault("CT_FORGE_THREADS", "1")
    return subprocess.run((sys.executable, "-m", "ctforge") + args,
                          capture_output=True, text=True, env=env, **kw)


class TestVerifyCommand:
    def test_identity_holds(self):
        r = run_cli("verify", "--a0", "1", "--a", "1")
        assert r.returncode == 0
        assert "LHS = RHS = 1 + q" in r.stdout

    def test_q1_multinomial(self):
        r = run_cli("verify", "--a0", "1", "--a", "1,1", "--q1")
        assert r.returncode == 0 and "6" in r.stdout

    def test_negative_parameter_is_usage_error(self):
        r = run_cli("verify", "--a0", "1", "--a", "-1")
        assert r.returncode == 2

    def test_missing_flags_usage_error(self):
        assert run_cli("verify", "--a", "1").returncode == 2

    def test_json_output(self):
        r = run_cli("verify", "--a0", "2", "--a", "1", "--json")
        assert r.returncode == 0
        payload = json.loads(r.stdout)
        assert payload["ok"] is True
        assert payload["rhs"] == "1 + q + q^2"

    def test_replay_method(self):
        r = run_cli("verify", "--a0", "1", "--a", "1,1", "--method", "replay")
        assert r.returncode == 0 and "certified" in r.stdout


class TestCertifyCommand:
    def test_single_b(self, tmp_path):
        out = tmp_path / "cert.json"
        r = run_cli("certify", "--a", "1", "--b", "1",
                    "--json-out", str(out), "--oracle")
        assert r.returncode == 0
        cert = certificate_from_dict(json.loads(out.read_text()))
        assert validate_certificate(cert) == 2

    def test_all_b_writes_per_b(self, tmp_path):
        out = tmp_path / "cert.json"
        r = run_cli("certify", "--a", "1,1", "--all-b", "--json-out", str(out))
        assert r.returncode == 0
        for b in (1, 2):
            path = tmp_path / f"cert_b{b}.json"
            assert path.exists()
            cert = certificate_from_dict(json.loads(path.read_text()))
            assert validate_certificate(cert) >= 1

    def test_b_out_of_range(self):
        assert run_cli("certify", "--a", "1", "--b", "2").returncode == 2


class TestCtCommand:
    def test_small_pole(self):
        r = run_cli("ct", "--expr", "1/(1 - q*x0/x1)", "--var", "x0")
        assert r.returncode == 0 and r.stdout.strip() == "1"

    def test_large_pole(self):
        r = run_cli("ct", "--expr", "1/(1 - q*x1/x0)", "--var", "x1")
        assert r.returncode == 0 and r.stdout.strip() == "0"

    def test_all_vars(self):
        r = run_cli("ct", "--expr", "(1 - x0/x1)*(1 - q*x1/x0)", "--all-vars")
        assert r.returncode == 0 and r.stdout.strip() == "1 + q"

    def test_parse_error_exit_2(self):
        r = run_cli("ct", "--expr", "(1 - x0/x1", "--var", "x0")
        assert r.returncode == 2
        assert "expected" in r.stderr

    def test_properness_failure_exit_1(self):
        r = run_cli("ct", "--expr", "1/(1 - q*x0/x1)", "--var", "x1",
                    "--method", "pfrac")
        assert r.returncode == 1
        assert "degree" in r.stderr

    def test_methods_agree(self):
        r = run_cli("ct", "--expr", "1/((1 - x0/x1)*(1 - x0/(q*x2)))",
                    "--var", "x0", "--method", "both")
        assert r.returncode == 0

    def test_polynomial_input_defaults_to_series(self):
        r = run_cli("ct", "--expr", "(1 - x0/x1)", "--var", "x0")
        assert r.returncode == 0 and r.stdout.strip() == "1"
        # explicitly requesting pfrac still surfaces the properness degree
        r = run_cli("ct", "--expr", "(1 - x0/x1)", "--var", "x0",
                    "--method", "pfrac")
        assert r.returncode == 1 and "degree in x0 is 1" in r.stderr


class TestTournamentCommand:
    def test_exhaustive(self):
        r = run_cli("tournament", "--s-max", "3", "--a-max", "2")
        assert r.returncode == 0
        assert "counterexamples:   0" in r.stdout


class TestIdentitiesCommand:
    def test_suite_passes(self):
        r = run_cli("identities", "--trunc", "5")
        assert r.returncode == 0
        assert "FAIL" not in r.stdout
        assert r.stdout.count("PASS") == 6


class TestBenchCommand:
    def test_csv_schema(self, tmp_path):
        out = tmp_path / "bench.csv"
        r = run_cli("bench", "--max-n", "1", "--max-a", "1", "--out", str(out))
        assert r.returncode == 0
        lines = out.read_text().strip().splitlines()
        assert lines[0] == "n,a,method,millis,terms"
        assert len(lines) > 1
        assert any(line.startswith("1,1-1,brute,") for line in lines)

    def test_empty_grid_header_only(self):
        r = run_cli("bench", "--max-n", "-1", "--max-a", "2")
        assert r.returncode == 0
        assert r.stdout.strip() == "n,a,method,millis,terms"
