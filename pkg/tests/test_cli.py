import csv
import io
import json
import subprocess
import sys

import pytest

from fewweight.cli import RunConfig, ConfigError, main, sweep, sweep_tuples


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_example_4_8(capsys):
    code, out, _ = run(capsys, "construct", "--p", "7", "--m", "2", "--N", "3")
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == 1
    s = doc["spec"]
    assert (s["length"], s["gray_length"], s["N1"], s["N2"], s["n"]) == (392, 784, 24, 1, 8)
    assert s["modulus"][-1] == 1 and len(s["D"]) == 8
    assert s["D"][0] == 0 and s["D"][1] == 3  # D = alpha^0, alpha^3, ...


def test_construct_small(capsys):
    code, out, _ = run(capsys, "construct", "--p", "3", "--m", "2", "--N", "1", "--format", "text")
    assert code == 0 and "length: 36" in out


@pytest.mark.parametrize("argv,needle", [
    (["--p", "7", "--m", "2", "--N", "5"], "N does not divide p^m - 1"),
    (["--p", "2", "--m", "2", "--N", "1"], "odd prime"),
    (["--p", "9", "--m", "2", "--N", "1"], "odd prime"),
    (["--p", "3", "--m", "0", "--N", "1"], "m must be positive"),
    (["--p", "3", "--m", "2", "--N", "1", "--modulus", "1,0,1"], "NotPrimitive"),
    (["--p", "3", "--m", "2", "--N", "1", "--modulus", "1,1"], "m + 1"),
    (["--p", "3", "--m", "2", "--N", "1", "--theorems", "9.9"], "unknown theorem"),
])
def test_invalid_parameters_exit_2(capsys, argv, needle):
    code, _, err = run(capsys, "construct", *argv)
    assert code == 2 and needle in err


def test_analyze_example_4_8(capsys):
    code, out, _ = run(capsys, "analyze", "--p", "7", "--m", "2", "--N", "3")
    doc = json.loads(out)
    assert code == 0
    rows = {r["weight"]: r["frequency"] for r in doc["lee_enumerator"]["rows"]}
    assert rows == {0: 1, 672: 2352, 686: 48}
    verdicts = {t["theorem"]: t["verdict"] for t in doc["theorems"]}
    for tid in ("4.4", "4.5", "4.7", "5.2"):
        assert verdicts[tid] == "confirmed"
    assert "refuted" not in verdicts.values()
    assert doc["griesmer"]["sum"] == 784 and doc["griesmer"]["equality"]


def test_analyze_table_III(capsys):
    code, out, _ = run(capsys, "analyze", "--p", "5", "--m", "2", "--N", "3", "--theorems", "4.10,2.2")
    doc = json.loads(out)
    assert code == 0
    assert [t["verdict"] for t in doc["theorems"]] == ["confirmed", "confirmed"]
    assert doc["prediction"]["case_tag"] == "TableIII"


def test_analyze_bounds_only(capsys):
    code, out, _ = run(capsys, "analyze", "--p", "3", "--m", "2", "--N", "2")
    doc = json.loads(out)
    assert code == 0 and doc["prediction"]["case_tag"] == "BoundsOnly"
    assert doc["prediction"]["bounds"]["d_lower"] == 18


def test_analyze_csv_and_text(capsys):
    code, out, _ = run(capsys, "analyze", "--p", "3", "--m", "2", "--N", "1", "--format", "csv")
    assert code == 0
    assert list(csv.reader(io.StringIO(out))) == [["weight", "frequency"], ["0", "1"], ["48", "72"], ["54", "8"]]
    code, out, _ = run(capsys, "analyze", "--p", "3", "--m", "2", "--N", "1", "--format", "text")
    assert "Weight | Frequency" in out and "Theorem 4.4: confirmed" in out


def test_budget_exit_4(capsys):
    code, _, err = run(capsys, "analyze", "--p", "7", "--m", "2", "--N", "3", "--budget", "100")
    assert code == 4 and "budget" in err


def test_determinism(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert main(["analyze", "--p", "5", "--m", "2", "--N", "3", "--out", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_export(tmp_path):
    path = tmp_path / "cw.csv"
    assert main(["export", "--p", "3", "--m", "2", "--N", "1", "--out", str(path)]) == 0
    rows = list(csv.reader(path.open()))
    assert len(rows) == 81 and len(rows[0]) == 36
    assert all(cell == "0+0u" for cell in rows[0])
    path = tmp_path / "gray.csv"
    assert main(["export", "--p", "3", "--m", "2", "--N", "1", "--what", "gray", "--out", str(path)]) == 0
    rows = list(csv.reader(path.open()))
    assert len(rows) == 81 and len(rows[0]) == 72


def test_sweep(capsys):
    code, out, _ = run(capsys, "sweep", "--p", "3,5,7", "--m", "2")
    rows = json.loads(out)["rows"]
    assert code == 0 and len(rows) >= 10
    assert not any(r["verdict"] == "refuted" for r in rows)
    assert not any(r["error"] for r in rows)


def test_sweep_odd_m_row():
    rows = sweep([(3, 3, 1)])
    assert rows[0]["case_tag"] == "TableI" and rows[0]["verdict"] == "confirmed"


def test_sweep_empty_and_errors(capsys):
    assert sweep([]) == []
    assert sweep_tuples([], [2], None) == []
    rows = sweep([(7, 2, 5)])
    assert rows[0]["error"] and rows[0]["verdict"] is None
    code, out, _ = run(capsys, "sweep", "--p", "3", "--m", "2", "--N", "1,2", "--format", "csv")
    assert code == 0 and out.splitlines()[0] == "p,m,N,N2,case_tag,verdict,error"


def test_run_config_validation():
    with pytest.raises(ConfigError):
        RunConfig(3, 2, 3).validate()
    with pytest.raises(ConfigError):
        RunConfig(3, 2, 1, wmax_dual=4).validate()
    RunConfig(3, 2, 1).validate()


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "fewweight", "construct", "--p", "3", "--m", "2", "--N", "1"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and json.loads(res.stdout)["spec"]["length"] == 36
