import json
from pathlib import Path

import pytest

from ndgtool.cli import main, parse_range
from ndgtool.errors import BadArguments

FIX = Path(__file__).parent / "fixtures"
CPX = str(FIX / "complexes_n3.json")
CAT = str(FIX / "category_n3.json")


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_parse_range():
    assert parse_range("3") == [3]
    assert parse_range("2..5") == [2, 3, 4, 5]
    assert parse_range("-3..-1") == [-3, -2, -1]
    with pytest.raises(BadArguments):
        parse_range("5..2")


def test_check_ok(capsys):
    code, out = run(capsys, "check", CPX)
    assert code == 0
    assert json.loads(out.out)["status"] == "pass"


def test_check_bad_complex(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"field": {"kind": "prime", "N": 2, "p": 5},
                             "complexes": {"Bad": {"dims": {"0": 1, "1": 1, "2": 1},
                                                   "d": {"0": [["1"]], "1": [["1"]]}}}}))
    code, out = run(capsys, "check", str(p))
    assert code == 1
    assert "Bad" in out.out


def test_parse_error_exit_2(tmp_path, capsys):
    p = tmp_path / "x.json"
    p.write_text("{not json")
    code, out = run(capsys, "check", str(p))
    assert code == 2 and "x.json:1:2:" in out.err


def test_usage_errors(capsys):
    assert run(capsys, "homology", CPX)[0] == 2                       # missing --complex
    assert run(capsys, "homology", CPX, "--complex", "Nope")[0] == 2
    assert run(capsys, "verify", "--suite", "nope")[0] == 2
    assert run(capsys, "verify", "--suite", "hexagon", "--N", "x")[0] == 2


def test_homology_of_block_is_zero(capsys):
    code, out = run(capsys, "homology", CPX, "--complex", "J", "--window", "-3..3")
    rows = json.loads(out.out)["results"][0]["summary"]["rows"]
    assert code == 0 and len(rows) == 14 and all(h == 0 for _, _, h in rows)


def test_tsv_output(capsys):
    code, out = run(capsys, "khom", CPX, "--source", "J", "--target", "J", "--format", "tsv")
    lines = out.out.splitlines()
    assert code == 0 and lines[3] == "check\tstatus\tsummary"
    assert json.loads(lines[4].split("\t")[2])["dim"] == 0


def test_contract(capsys):
    code, out = run(capsys, "contract", CPX, "--complex", "A")
    rep = json.loads(out.out)
    assert code == 0
    assert sum(k for _, length, k in rep["results"][1]["summary"] if length == 3) >= 1
    code, _ = run(capsys, "contract", CPX, "--complex", "X")
    assert code == 1


def test_cone_and_adjoint(capsys):
    assert run(capsys, "cone", CPX, "--map", "f")[0] == 0
    assert run(capsys, "adjoint", CAT, "--bimodule", "R", "--left", "M", "--right", "P")[0] == 0
    assert run(capsys, "adjoint", CPX, "--complex", "X", "--space", '{"0": 2}', "--r", "2")[0] == 0
    assert run(capsys, "homspace", CAT, "--source", "M", "--target", "P")[0] == 0


def test_verify_deterministic_and_seed_env(capsys, monkeypatch):
    args = ["verify", "--suite", "hexagon", "--N", "2..3", "--trials", "3"]
    _, a = run(capsys, *args, "--seed", "9")
    _, b = run(capsys, *args, "--seed", "9")
    assert a.out == b.out
    monkeypatch.setenv("NDGTOOL_SEED", "9")
    _, c = run(capsys, *args)
    assert json.loads(c.out)["seed"] == 9
    assert json.loads(c.out)["results"] == json.loads(a.out)["results"]


def test_verify_failure_writes_reproducer(tmp_path, capsys):
    code, out = run(capsys, "verify", "--suite", "dual-generator", "--trials", "4",
                    "--seed", "1", "--reproducer-dir", str(tmp_path))
    assert code == 1
    path = Path(json.loads(out.out)["reproducer"])
    rec = json.loads(path.read_text())
    assert rec["seed"] == 1 and rec["failures"][0]["suite"] == "dual-generator"
