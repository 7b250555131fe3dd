import io
import json
import shlex
import subprocess
import sys
from pathlib import Path

import pytest

from ncsuper.cli import main
from ncsuper.expr import parse_expression
from ncsuper.presentations import overridden, superspace
from ncsuper.suites import SUITES, expand_suites, validate_report

GOLDEN = Path(__file__).parent / "golden" / "cli.txt"


def run(*argv):
    out = io.StringIO()
    status = main(list(argv), out=out)
    return status, out.getvalue()


def golden_cases():
    text = GOLDEN.read_text()
    cases = []
    for block in text.split("$ ncsuper ")[1:]:
        command, _, rest = block.partition("\n")
        body, _, status = rest.rpartition("[exit ")
        cases.append((command, body, int(status.split("]")[0])))
    return cases


@pytest.mark.parametrize("command, expected, status", golden_cases(), ids=lambda v: v if isinstance(v, str) and len(v) < 50 else None)
def test_golden_output(command, expected, status):
    got_status, got = run(*shlex.split(command))
    assert got_status == status
    assert got == expected


def test_verify_json_schema_and_determinism(tmp_path):
    target = tmp_path / "report.json"
    status, message = run("verify", "--suite", "forms,metric", "--format", "json", "--output", str(target))
    assert status == 0 and "report written" in message
    data = validate_report(json.loads(target.read_text()))
    assert data["suites"] == ["forms", "metric"]
    assert data["summary"]["fail"] == 0
    _, again = run("verify", "--suite", "metric", "--suite", "forms", "--format", "json")
    assert again == target.read_text()


def test_verify_text_report():
    status, text = run("verify", "--suite", "connection")
    assert status == 0
    assert text.splitlines()[-1].startswith("summary: ")
    assert "PASS  connection.torsion[xi1]" in text


def test_pinned_c0_fails_with_residuals():
    status, text = run("verify", "--suite", "metric", "--c0", "1", "--c1", "0", "--format", "json")
    assert status == 1
    data = validate_report(json.loads(text))
    failing = [r for r in data["results"] if r["status"] == "fail"]
    pairs = {(a, b) for a in ("xi1", "eta", "xi2") for b in ("xi1", "eta", "xi2")} - {("xi2", "xi2")}
    assert {r["check_id"] for r in failing} == {f"metric.compatible[{a},{b}]" for a, b in pairs}
    rho = parse_expression("rho", "forms")
    x = parse_expression("x", "forms")
    first = next(r for r in failing if r["check_id"] == "metric.compatible[eta,eta]")
    assert parse_expression(first["residual"], "forms") == 2 * (rho * x * x)


def test_residuals_round_trip():
    _, text = run("verify", "--suite", "metric", "--c0", "1", "--c1", "h", "--format", "json")
    for r in json.loads(text)["results"]:
        if r["residual"]:
            value = parse_expression(r["residual"], "forms")
            from ncsuper.expr import format_element

            assert format_element(value) == r["residual"]


def test_pinned_curvature_still_passes():
    status, _ = run("verify", "--suite", "curvature", "--c0", "2", "--c1", "1/3")
    assert status == 0


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["verify"],
        ["verify", "--suite", ""],
        ["verify", "--suite", "nonsense"],
        ["verify", "--suite", "all", "--format", "xml"],
        ["verify", "--suite", "metric", "--c0", "x"],
        ["verify", "--suite", "metric", "--c0", "1 +"],
        ["normalize", "x +"],
        ["normalize", "xi1", "--algebra", "nowhere"],
        ["sigma", "xi1"],
        ["sigma", "xi1 ox eta", "--pos", "2"],
        ["curvature", "--a", "4"],
    ],
)
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_unwritable_output_exit_2(tmp_path):
    assert run("verify", "--suite", "connection", "--output", str(tmp_path / "missing" / "r.json"))[0] == 2


def test_bad_step_budget_exit_2(monkeypatch):
    monkeypatch.setenv("NCSUPER_STEP_BUDGET", "many")
    assert run("normalize", "x*theta1")[0] == 2


def test_tiny_step_budget_fails_check(monkeypatch):
    monkeypatch.setenv("NCSUPER_STEP_BUDGET", "3")
    with overridden("superspace", superspace().with_rules()):
        assert run("normalize", "(x*theta1)^3")[0] == 1


def test_suite_expansion():
    assert expand_suites(["all"]) == list(SUITES)
    assert expand_suites(["metric", "forms", "metric"]) == ["forms", "metric"]
    with pytest.raises(ValueError):
        expand_suites([" "])


def test_corrupted_rule_fails_verification():
    broken = superspace().with_rules(replace={("theta2", "x"): {("x", "theta2"): 2}})
    with overridden("superspace", broken):
        status, text = run("verify", "--suite", "presentations", "--format", "json")
    assert status == 1
    assert json.loads(text)["summary"]["fail"] > 0
    assert run("verify", "--suite", "presentations")[0] == 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ncsuper", "normalize", "theta2^2"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "0\n"


def test_console_script_version():
    proc = subprocess.run(["ncsuper", "--version"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "ncsuper 1.0.0"


def test_text_report_carries_sigma_symmetry_note():
    _, text = run("verify", "--suite", "metric")
    assert "note: sigma-symmetry of g: skew-symmetric" in text
