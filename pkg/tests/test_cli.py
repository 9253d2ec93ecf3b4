import io
import json
import subprocess
import sys

import pytest

from corpus import F1, FIBONACCI, QUADRATIC_ZEROS, ZERO
from pioformula.cli import main
from pioformula.documents import AnalysisDocument, dump_spec


@pytest.fixture
def spec_file(tmp_path):
    def write(spec, name="spec.json"):
        path = tmp_path / name
        path.write_text(dump_spec(spec))
        return str(path)

    return write


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def test_analyze_f1(spec_file):
    code, text = run(["analyze", spec_file(F1)])
    assert code == 0
    doc = json.loads(text)
    assert doc["m"] == 2 and doc["X"] == [1]
    assert doc["classes"][0]["poly_coeffs"] == ["0", "-2", "0", "0", "1"]
    assert AnalysisDocument.from_json(text).to_json() == text


@pytest.mark.parametrize(
    "spec,n,method,expected",
    [
        (F1, 11, "auto", "14619"),
        (F1, 10**12 + 1, "auto", str((10**12 + 1) ** 4 - 2 * (10**12 + 1))),
        (F1, 12, "pio", str(2 * 3**12 + 12**4 - 24)),
        (FIBONACCI, 10, "simple", "55"),
        (FIBONACCI, 90, "matrix", "2880067194370816120"),
        (ZERO, 123456789012345, "auto", "0"),
    ],
)
def test_eval(spec_file, spec, n, method, expected):
    assert run(["eval", spec_file(spec), str(n), "--method", method]) == (0, expected + "\n")


def test_zeros(spec_file):
    assert run(["zeros", spec_file(QUADRATIC_ZEROS), "--limit", "1000"]) == (0, "2, 3\n")
    assert run(["zeros", spec_file(FIBONACCI), "--limit", "1000"]) == (0, "none\n")
    code, text = run(["zeros", spec_file(QUADRATIC_ZEROS), "--limit", "50", "--annotate"])
    assert "n=2 residue=1 kind=polynomial" in text


def test_sections(spec_file):
    code, text = run(["sections", spec_file(F1), "--m", "2"])
    lines = text.splitlines()
    assert code == 0 and len(lines) == 2
    assert "initial [-1, 75, 615, 2387, 6543]" in lines[0]
    assert "order 6" in lines[1]


def test_powersum(spec_file):
    code, text = run(["powersum", spec_file(FIBONACCI), "--precision", "64"])
    assert code == 0
    assert "0.44721359549995793928" in text
    assert text.rstrip().endswith("ok")
    assert run(["powersum", spec_file(ZERO)])[1] == "empty power sum (zero sequence)\n"


@pytest.mark.parametrize("fmt", ["table", "json", "csv"])
def test_bench_formats(spec_file, fmt):
    code, text = run(["bench", spec_file(F1), "--ns", "1001,10001", "--budget", "5", "--format", fmt])
    assert code == 0
    if fmt == "json":
        rows = json.loads(text)["rows"]
        assert [r["n"] for r in rows] == [1001, 10001]
        assert all(r["agree"] for r in rows)
    else:
        assert "1001" in text and "10001" in text


def test_malformed_input_exit_2(spec_file, tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"k": 2, "coeffs": ["0", "1"], "initial": ["1", "1"]}')
    assert run(["analyze", str(bad)])[0] == 2
    assert "[coeffs]" in capsys.readouterr().err
    assert run(["analyze", str(tmp_path / "missing.json")])[0] == 2
    with pytest.raises(SystemExit) as e:
        run(["eval", spec_file(F1), "0"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        run(["frobnicate"])
    assert e.value.code == 2


def test_modulus_cap_exit_3(spec_file, monkeypatch):
    assert run(["--modulus-cap", "1", "analyze", spec_file(F1)])[0] == 3
    monkeypatch.setenv("PIOFORMULA_MODULUS_CAP", "1")
    assert run(["analyze", spec_file(F1)])[0] == 3
    # the flag wins over the environment
    assert run(["--modulus-cap", "2", "analyze", spec_file(F1)])[0] == 0


def test_budget_exit_4(spec_file):
    assert run(["eval", spec_file(F1), str(10**8 + 1), "--method", "simple", "--budget", "0.05"])[0] == 4


def test_console_entry_reads_stdin():
    proc = subprocess.run(
        [sys.executable, "-m", "pioformula", "eval", "-", "11"],
        input=dump_spec(F1),
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "14619\n"


def test_analyze_reads_stdin_by_default():
    proc = subprocess.run(
        [sys.executable, "-m", "pioformula", "analyze"], input=dump_spec(FIBONACCI), capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["m"] == 1
