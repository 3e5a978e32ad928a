import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from chernineq.cli import CSV_COLUMNS, main, parse_reports

SPACES = Path(__file__).resolve().parent.parent / "spaces"
QUINTIC = SPACES / "quintic.toml"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0
    assert "quintic_threefold: n=3, N=4, very_ample, c1=0" in out
    code, out, _ = run(capsys, "catalog", "--json")
    rows = json.loads(out)
    assert {"P1", "P6", "quintic_threefold", "P1xP1_12"} <= {r["name"] for r in rows}
    _, out, _ = run(capsys, "catalog", "--filter", "cy", "--json")
    assert rows and all(r["c1_zero"] for r in json.loads(out))
    _, out, _ = run(capsys, "catalog", "--filter", "product", "--json")
    assert {r["family"] for r in json.loads(out)} == {"product"}


def test_show(capsys):
    code, out, _ = run(capsys, "show", "--space", "P:2")
    assert code == 0 and "c1 = 3*h" in out and "c[2]=3" in out and "c[1,1]=9" in out
    _, out, _ = run(capsys, "show", "--space", "quintic_threefold", "--format", "json")
    assert json.loads(out)[0]["chern_numbers"] == {"3": "-200", "2,1": "0", "1,1,1": "0"}


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify", "--space", "hypersurface:3,5", "--theorem", "sharp", "--k", "2",
                       "--format", "json")
    (report,) = parse_reports(out)
    assert code == 0 and report.holds and report.equality
    code, out, _ = run(capsys, "verify", "--space", "P:3", "--theorem", "all")
    assert code == 0 and "0 violated" in out
    code, out, _ = run(capsys, "verify", "--space", "all", "--theorem", "all", "--format", "csv")
    assert code == 0


def test_verify_hypothesis_gate(capsys):
    code, _, err = run(capsys, "verify", "--space", f"file:{QUINTIC}", "--theorem", "euler-chain")
    assert code == 2 and "not flagged nef" in err
    code, _, _ = run(capsys, "verify", "--file", str(SPACES / "p2_nef.toml"), "--theorem", "euler-chain")
    assert code == 0


def test_verify_violation_exits_one(tmp_path, capsys):
    fake = QUINTIC.read_text().replace("ambient_dim = 4\n", "").replace(
        '"(1+h)^5*(1+5h)^(-1)"', '"1 + 40*h^2"')
    path = tmp_path / "fake.toml"
    path.write_text(fake)
    code, out, _ = run(capsys, "verify", "--file", str(path), "--theorem", "k2")
    assert code == 1 and "VIOLATED" in out


@pytest.mark.parametrize("argv", [
    ["verify", "--space", "nosuch"],
    ["verify", "--space", "P:3", "--theorem", "cor18", "--a", "1/2", "--eps", "1"],
    ["verify", "--space", "quintic_threefold", "--theorem", "cor18"],
    ["verify", "--space", "quintic_threefold", "--theorem", "calabi-yau", "--k", "9"],
    ["verify", "--space", "P:1", "--theorem", "k2"],
    ["verify", "--space", "hypersurface:3,5", "--theorem", "sharp", "--k", "7"],
    ["verify", "--space", "P:2", "--theorem", "calabi-yau"],
    ["certificate", "--partition", "3,1", "--rank", "2"],
    ["certificate", "--expr", "c1^2 +", "--rank", "2"],
    ["certificate", "--expr", "c1 + c2", "--rank", "2"],
    ["certificate", "--expr", "c3", "--rank", "2"],
])
def test_input_errors_exit_two(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


@pytest.mark.parametrize("argv", [
    ["verify", "--space", "P:3", "--bogus"],
    ["verify", "--space", "P:3", "--file", str(QUINTIC)],
    ["verify", "--space", "P:3", "--theorem", "nosuch"],
    ["certificate", "--partition", "1,1", "--expr", "c1", "--rank", "2"],
    ["certificate", "--partition", "1,2", "--rank", "2"],
    ["verify", "--space", "P:3", "--a", "0.5"],
    [],
])
def test_argument_errors_exit_two(capsys, argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


def test_missing_integral_file_exits_two(tmp_path, capsys):
    path = tmp_path / "broken.toml"
    path.write_text(QUINTIC.read_text().replace('[integral]\n"h^3" = "5"\n', ""))
    code, _, err = run(capsys, "verify", "--file", str(path))
    assert code == 2 and "integral" in err


def test_certificates(capsys):
    code, out, _ = run(capsys, "certificate", "--partition", "1,1", "--rank", "2")
    assert code == 0 and out.splitlines()[0] == "c1^2 - c2 = 1*S(1,1)"
    _, out, _ = run(capsys, "certificate", "--partition", "1,1,1", "--rank", "3")
    assert out.splitlines()[0] == "c1^3 - c3 = 1*S(1,1,1) + 2*S(2,1)"
    _, out, _ = run(capsys, "certificate", "--partition", "2,1,1", "--rank", "3", "--format", "json")
    data = json.loads(out)
    assert data["verified"] is True and data["rank"] == 3
    code, out, _ = run(capsys, "certificate", "--expr", "c2 - c1^2", "--rank", "2")
    assert code == 1 and "coefficient -1 on S(1,1)" in out
    code, out, _ = run(capsys, "certificate", "--expr", "c1*c2 - c3", "--rank", "3")
    assert code == 0 and "1*S(2,1)" in out


def test_formats_and_output_file(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("CHERNINEQ_FORMAT", "csv")
    code, out, _ = run(capsys, "verify", "--space", "P1xP1_12", "--theorem", "chern-number")
    rows = list(csv.reader(io.StringIO(out)))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert rows[1] == ["P1xP1_12", "chern-number", "", "4", "8", "true", "false"]
    monkeypatch.setenv("CHERNINEQ_FORMAT", "json")
    target = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--space", "P:2", "--theorem", "dps-schur", "--output", str(target))
    assert code == 0 and out == ""
    reports = parse_reports(target.read_text())
    assert [r.to_json() for r in reports] == json.loads(target.read_text())


def test_json_round_trip_over_the_catalog(capsys):
    _, out, _ = run(capsys, "verify", "--space", "all", "--format", "json")
    reports = parse_reports(out)
    assert json.loads(json.dumps([r.to_json() for r in reports], indent=2)) == json.loads(out)


@pytest.mark.parametrize("fmt", ["pretty", "json", "csv"])
def test_file_duplicate_reports_are_identical(capsys, fmt):
    _, from_file, _ = run(capsys, "verify", "--file", str(QUINTIC), "--format", fmt)
    _, builtin, _ = run(capsys, "verify", "--space", "quintic_threefold", "--format", fmt)
    assert from_file == builtin


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "chernineq", "certificate", "--partition", "3,1", "--rank", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
    proc = subprocess.run([sys.executable, "-m", "chernineq", "verify", "--space", "P:2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
