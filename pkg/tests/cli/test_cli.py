"""End-to-end tests for the rrwork command line."""

import json

import pytest
import app.cli.app as cli_module
from app.cli import cli
from typer.testing import CliRunner

runner = CliRunner()


@pytest.fixture(autouse=True)
def _no_logging_setup(monkeypatch):
    """Skip loguru configuration inside CLI invocations."""
    monkeypatch.setattr(cli_module, "configure_logging", lambda level=None: None)


@pytest.fixture(autouse=True)
def _small_sweep(monkeypatch):
    """Keep sweeps desk-sized."""
    monkeypatch.setenv("SWEEP_CUBE_BOUND", "1")
    monkeypatch.setenv("SWEEP_D_BOUND", "3")
    monkeypatch.setenv("SWEEP_N_MAX", "1")
    monkeypatch.setenv("SWEEP_MUMFORD_N_MAX", "3")


def invoke(*args: str):
    return runner.invoke(cli, list(args))


def as_json(result) -> dict:
    return json.loads(result.stdout)


@pytest.mark.cli
class TestCoeffsCommand:
    """Test the coeffs command."""

    def test_p2_table(self):
        """Test [(0, 7), (1, −4), (2, 1)] in JSON."""
        result = invoke("coeffs", "--p", "2", "--format", "json")
        assert result.exit_code == 0
        payload = as_json(result)
        assert [(e["twist"], e["exponent"]) for e in payload["entries"]] == [(0, 7), (1, -4), (2, 1)]
        assert payload["moments"] == [4, -2, 0]

    def test_text_table(self):
        """Test the human-readable table."""
        result = invoke("coeffs", "--p", "3")
        assert result.exit_code == 0
        assert "    0     19" in result.stdout

    def test_composite_is_usage_error(self):
        """Test exit 2 for a non-prime p."""
        assert invoke("coeffs", "--p", "4").exit_code == 2

    def test_missing_p_is_usage_error(self):
        """Test exit 2 when a required parameter is absent."""
        assert invoke("coeffs").exit_code == 2

    def test_non_integer_is_usage_error(self):
        """Test exit 2 for an unparsable option."""
        assert invoke("coeffs", "--p", "two").exit_code == 2


@pytest.mark.cli
class TestVerifyCommands:
    """Test exit codes of each verification command."""

    def test_main_with_mumford_passes(self):
        """Test verify-main --p 3 --assume-mumford."""
        result = invoke("verify-main", "--p", "3", "--assume-mumford")
        assert result.exit_code == 0
        assert result.stdout.startswith("PASS  main_degree")

    def test_main_without_mumford_fails(self):
        """Test the negative control and its rendered residual."""
        result = invoke("verify-main", "--p", "3")
        assert result.exit_code == 1
        assert "residual: 72*lam - 6*ww" in result.stdout

    def test_main_env_toggle(self, monkeypatch):
        """Test that ASSUME_MUMFORD switches the binding on."""
        monkeypatch.setenv("ASSUME_MUMFORD", "true")
        assert invoke("verify-main", "--p", "2").exit_code == 0

    def test_grading(self):
        """Test verify-grading."""
        assert invoke("verify-grading", "--p", "5").exit_code == 0

    def test_deligne_all_forms(self):
        """Test that the as-printed form fails as expected and exits 0."""
        result = invoke("verify-deligne", "--format", "json")
        assert result.exit_code == 0
        statuses = {r["params"]["form"]: r["status"] for r in as_json(result)["reports"]}
        assert statuses == {
            "pairing-square": "pass",
            "exponent-six": "pass",
            "as-printed": "fail",
            "eighteen": "pass",
        }

    def test_deligne_p2_mode(self):
        """Test the derived binding."""
        assert invoke("verify-deligne", "--form", "exponent-six", "--p2-mode").exit_code == 0

    def test_mumford(self):
        """Test verify-mumford with and without the binding."""
        assert invoke("verify-mumford", "--n", "2", "--assume-mumford").exit_code == 0
        assert invoke("verify-mumford", "--n", "2").exit_code == 1

    def test_mumford_negative_n_is_usage_error(self):
        """Test exit 2 for n < 0."""
        assert invoke("verify-mumford", "--n", "-1").exit_code == 2

    def test_remark(self):
        """Test verify-remark."""
        assert invoke("verify-remark", "--n", "3", "--p", "5", "--assume-mumford").exit_code == 0
        assert invoke("verify-remark", "--n", "3").exit_code == 2

    def test_arr(self):
        """Test verify-arr at one twist and over a range."""
        assert invoke("verify-arr", "--p", "5", "--d", "-3").exit_code == 0
        assert invoke("verify-arr", "--p", "5", "--d-bound", "5").exit_code == 0

    def test_cube(self):
        """Test verify-cube symbolic and numeric, and the paired options."""
        assert invoke("verify-cube").exit_code == 0
        assert invoke("verify-cube", "--t", "5", "--p", "2").exit_code == 0
        assert invoke("verify-cube", "--t", "5").exit_code == 2

    def test_lambda(self):
        """Test verify-lambda."""
        assert invoke("verify-lambda", "--n", "4").exit_code == 0

    def test_top(self):
        """Test verify-top."""
        assert invoke("verify-top", "--p", "3", "--assume-mumford").exit_code == 0
        assert invoke("verify-top", "--p", "3").exit_code == 1

    def test_frobenius(self):
        """Test the Frobenius decomposition report."""
        result = invoke("frobenius", "--p", "3", "--d", "5", "--format", "json")
        assert result.exit_code == 0
        reports = as_json(result)["reports"]
        assert reports[0]["identity"] == "frobenius_pushforward"
        assert reports[0]["lhs"] == "O(1) + O(1) + O(1)"


@pytest.mark.cli
class TestSweepCommand:
    """Test the sweep command and report stability."""

    def test_sweep_with_mumford(self):
        """Test that a small sweep passes."""
        result = invoke("sweep", "--p-max", "3", "--assume-mumford", "--format", "json")
        assert result.exit_code == 0
        payload = as_json(result)
        assert payload["failed"] == 0
        assert payload["total"] == len(payload["reports"])

    def test_sweep_without_mumford_fails(self):
        """Test exit 1 when main-degree checks fail."""
        assert invoke("sweep", "--p-max", "2").exit_code == 1

    def test_json_is_byte_identical(self):
        """Test repeated runs on the same inputs."""
        args = ("sweep", "--p-max", "3", "--assume-mumford", "--format", "json")
        assert invoke(*args).stdout == invoke(*args).stdout

    def test_schema_fields(self):
        """Test the stable report fields, with timing null by default."""
        report = as_json(invoke("verify-main", "--p", "2", "--assume-mumford", "--format", "json"))["reports"][0]
        assert {"identity", "params", "status", "lhs", "rhs", "elapsed_ms"} <= set(report)
        assert report["elapsed_ms"] is None

    def test_timings_flag(self):
        """Test that --timings fills elapsed_ms."""
        report = as_json(
            invoke("verify-main", "--p", "2", "--assume-mumford", "--format", "json", "--timings")
        )["reports"][0]
        assert report["elapsed_ms"] is not None

    def test_out_file(self, tmp_path):
        """Test that --out writes the JSON report."""
        target = tmp_path / "reports" / "main.json"
        result = invoke("verify-main", "--p", "2", "--assume-mumford", "--out", str(target))
        assert result.exit_code == 0
        assert json.loads(target.read_text(encoding="utf-8"))["passed"] == 1
