import csv
import json

import numpy as np
import pytest

from pwmra.cli import main


def run(argv):
    return main(argv)


def test_build_rational_family_is_all_rational(tmp_path):
    out = tmp_path / "phi4.json"
    assert run(["build", "--n", "4", "--family", "rational-4n", "--out", str(out)]) == 0
    text = out.read_text()
    assert "sqrt" not in text
    art = json.loads(text)
    assert art["n"] == 4 and art["family"] == "rational-4n"
    assert art["verification"]["passed"] is True
    assert len(art["phi"]["entries"]) == 5 and len(art["psi"]["entries"]) == 5


def test_build_below_range_is_usage_error(capsys):
    assert run(["build", "--n", "2"]) == 2
    assert "error" in capsys.readouterr().err


def test_build_generic_has_sqrt_scalars(tmp_path):
    out = tmp_path / "phi5.json"
    assert run(["build", "--n", "5", "--family", "generic", "--out", str(out)]) == 0
    assert "sqrt(154)" in out.read_text()


def test_build_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(["build", "--n", "3", "--out", str(a)])
    run(["build", "--n", "3", "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_verify_exact_suite(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = run(["verify", "--n", "3..4", "--suite", "exact", "--out", str(out)])
    assert code == 0
    assert "all passed" in capsys.readouterr().out
    rep = json.loads(out.read_text())
    assert rep["passed"] is True
    names = {c["identity"] for c in rep["checks"]}
    assert {"roro", "ppnk", "rep1", "mtfe"} <= names


def test_verify_unknown_suite(capsys):
    assert run(["verify", "--suite", "nonsense"]) == 2


def test_verify_failure_exit_code(capsys):
    # an unreachable tolerance forces oracle-comparison failures
    code = run(["verify", "--n", "1..1", "--suite", "fourier",
                "--tolerance", "1e-30"])
    assert code == 1
    assert "FAIL" in capsys.readouterr().out


def test_runconfig_validation():
    from pwmra.cli import RunConfig, UsageError

    cfg = RunConfig(command="build", n=4, family="rational-4n")
    assert cfg.n == 4
    with pytest.raises(UsageError):
        RunConfig(command="build", n=7, family="rational-4n")
    with pytest.raises(UsageError):
        RunConfig(command="build", n=3, tolerance=-1.0)


def test_verify_fourier_small(capsys):
    assert run(["verify", "--n", "1..2", "--suite", "fourier",
                "--tolerance", "1e-9"]) == 0


def test_eval_mellin_exact_differences(tmp_path):
    out = tmp_path / "mellin.csv"
    code = run(["eval", "--transform", "mellin", "--n", "2", "--m", "1",
                "--z", "1..5", "--out", str(out)])
    assert code == 0
    rows = list(csv.DictReader(out.open()))
    assert len(rows) == 5
    assert all(r["difference"] == "0" for r in rows)


def test_eval_fourier_phi_zero_frequency(tmp_path):
    out = tmp_path / "phi.csv"
    code = run(["eval", "--transform", "fourier-phi", "--n", "2", "--eps", "0",
                "--w", "0", "--out", str(out)])
    assert code == 0
    rows = list(csv.DictReader(out.open()))
    assert rows[0]["value_re"] == "1.3333333333333333"


def test_eval_bad_eps_is_usage_error(capsys):
    assert run(["eval", "--transform", "fourier-u", "--n", "2", "--m", "0",
                "--eps", "2", "--w", "1"]) == 2


def test_transform_round_trip(tmp_path, capsys):
    rng = np.random.default_rng(1)
    data = rng.standard_normal((32, 4)).tolist()
    src = tmp_path / "in.json"
    src.write_text(json.dumps({"coeffs": data}))
    mid = tmp_path / "mid.json"
    code = run(["transform", "--n", "3", "--levels", "3", "--in", str(src),
                "--out", str(mid), "--roundtrip"])
    assert code == 0
    printed = capsys.readouterr().out
    assert "round-trip max error" in printed
    payload = json.loads(mid.read_text())
    assert payload["roundtrip_max_error"] <= 1e-10
    back = tmp_path / "back.json"
    code = run(["transform", "--n", "3", "--levels", "3", "--inverse",
                "--in", str(mid), "--out", str(back)])
    assert code == 0
    rebuilt = json.loads(back.read_text())["coeffs"]
    assert np.abs(np.array(rebuilt) - np.array(data)).max() <= 1e-10


def test_transform_empty_and_bad_width(tmp_path):
    src = tmp_path / "empty.json"
    src.write_text(json.dumps({"coeffs": []}))
    out = tmp_path / "out.json"
    assert run(["transform", "--n", "3", "--in", str(src), "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["approx"] == [] and payload["details"] == []
    src.write_text(json.dumps({"coeffs": [[1.0, 2.0]]}))
    assert run(["transform", "--n", "3", "--in", str(src)]) == 2


def test_report_writes_figures_and_tables(tmp_path):
    outdir = tmp_path / "rep"
    assert run(["report", "--n", "3", "--out-dir", str(outdir),
                "--samples", "50"]) == 0
    names = {p.name for p in outdir.iterdir()}
    assert names == {"phi.csv", "phi.png", "psi.csv", "psi.png", "artifact.json"}
    rows = list(csv.reader((outdir / "phi.csv").open()))
    assert rows[0] == ["t", "phi_0", "phi_1", "phi_2", "phi_3"]
    assert len(rows) == 51


def test_argparse_usage_exit_code():
    with pytest.raises(SystemExit) as exc:
        run(["build"])  # missing required --n
    assert exc.value.code == 2
