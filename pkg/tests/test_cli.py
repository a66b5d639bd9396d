import json
import subprocess
import sys
from pathlib import Path

import pytest

from shiftpois.cli import EXIT_CAP, EXIT_FAIL, EXIT_PASS, EXIT_SCHEMA, main

DOCS = Path(__file__).resolve().parent.parent / "demos" / "documents"


def run(capsys, *argv):
    code = main(list(argv) + ["--json"])
    return code, json.loads(capsys.readouterr().out)


def doc(name):
    return str(DOCS / name)


@pytest.mark.parametrize("name,command,expected", [
    ("classical.json", "validate", EXIT_PASS),
    ("koszul_tate.json", "validate", EXIT_PASS),
    ("bad_differential.json", "validate", EXIT_FAIL),
    ("classical.json", "poisson-check", EXIT_PASS),
    ("lie_poisson.json", "poisson-check", EXIT_PASS),
    ("koszul_tate_tower.json", "poisson-check", EXIT_PASS),
    ("non_mc.json", "poisson-check", EXIT_FAIL),
    ("constant_path.json", "homotopy-check", EXIT_PASS),
    ("degenerate_2simplex.json", "homotopy-check", EXIT_PASS),
    ("interpolation.json", "homotopy-check", EXIT_FAIL),
    ("undeclared.json", "validate", EXIT_SCHEMA),
    ("classical.json", "homotopy-check", EXIT_SCHEMA),
    ("koszul_tate.json", "poisson-check", EXIT_SCHEMA),
])
def test_exit_codes(capsys, name, command, expected):
    code, payload = run(capsys, command, "--input", doc(name))
    assert code == expected == payload["exit_code"]
    assert payload["ok"] == (expected == EXIT_PASS)


def test_classical_report(capsys):
    code, payload = run(capsys, "poisson-check", "--input", doc("classical.json"))
    assert payload["bracket"] == {"{x,x}": "0", "{x,y}": "1", "{y,x}": "-1", "{y,y}": "0"}
    assert payload["caps"] == {"degree": 4, "weight": 4, "probe": 1}
    names = [c["check"] for c in payload["checks"]]
    assert "mc N=4" in names and "linfinity N=4" in names and "semistrict q2 multi-derivation" in names


def test_non_mc_fails_on_both_sides_at_n3(capsys):
    _, payload = run(capsys, "poisson-check", "--input", doc("non_mc.json"))
    failed = sorted(c["check"] for c in payload["checks"] if not c["ok"])
    assert failed == ["linfinity N=3", "mc N=3"]


def test_schema_error_reports_position(capsys):
    code, payload = run(capsys, "validate", "--input", doc("undeclared.json"))
    assert payload["line"] is not None and payload["column"] is not None
    assert "undeclared" in payload["error"]
    code, payload = run(capsys, "validate", "--input", "/nonexistent.json")
    assert code == EXIT_SCHEMA


def test_cap_overflow(capsys):
    code, payload = run(capsys, "poisson-check", "--input", doc("classical.json"), "--weight-cap", "1")
    assert code == EXIT_CAP and payload["needed"] == 2
    code, payload = run(capsys, "poisson-check", "--input", doc("lie_poisson.json"), "--degree-cap", "0")
    assert code == EXIT_CAP and payload["needed"] == 1


def test_shift_override(capsys):
    # at n = 1 the bivector d_x d_y has degree 3 in Pol[2], so the family is invalid
    code, payload = run(capsys, "poisson-check", "--input", doc("classical.json"), "--n", "1")
    assert code == EXIT_SCHEMA and "invalid family" in payload["error"]


def test_rationals_in_json_output(capsys, tmp_path):
    data = json.loads((DOCS / "classical.json").read_text())
    data["family"]["2"][0]["coefficient"] = "2/6"
    p = tmp_path / "third.json"
    p.write_text(json.dumps(data))
    code, payload = run(capsys, "poisson-check", "--input", str(p))
    assert code == EXIT_PASS and payload["bracket"]["{x,y}"] == "1/3"
    code, payload = run(capsys, "homotopy-check", "--input", doc("interpolation.json"))
    assert payload["vertices"][1]["2"][0]["coefficient"] == "1"


def test_homotopy_vertices(capsys):
    _, payload = run(capsys, "homotopy-check", "--input", doc("interpolation.json"))
    assert payload["vertices"][0] == {}
    failed = [c["check"] for c in payload["checks"] if not c["ok"]]
    assert failed == ["simplex N=2"]


def test_selftest_vacuous_and_unknown_mutation(capsys):
    code, payload = run(capsys, "selftest", "--size", "0")
    assert code == EXIT_PASS and len(payload["checks"]) == 10
    assert main(["selftest", "--size", "0", "--mutate-sign", "nonsense"]) == EXIT_SCHEMA


def test_selftest_subset_with_mutation(capsys):
    code, payload = run(capsys, "selftest", "--size", "4", "--suite", "6", "--suite", "8")
    assert code == EXIT_PASS and [c["check"][:8] for c in payload["checks"]] == ["suite 6:", "suite 8:"]
    code, payload = run(capsys, "selftest", "--size", "4", "--suite", "8", "--mutate-sign", "koszul")
    assert code == EXIT_FAIL and payload["mutated"] == ["koszul"]


def test_human_output_and_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "shiftpois", "poisson-check", "--input", doc("non_mc.json")],
                       capture_output=True, text=True)
    assert r.returncode == EXIT_FAIL
    assert "[FAIL] mc N=3" in r.stdout and "witness" in r.stdout
    r = subprocess.run([sys.executable, "-m", "shiftpois", "--help"], capture_output=True, text=True)
    assert r.returncode == 0 and "exit codes" in r.stdout
