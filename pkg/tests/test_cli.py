import json
import subprocess
import sys
from pathlib import Path

import pytest

from heckesym.cli import main

INST = Path(__file__).resolve().parent.parent / "demos" / "instances"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct(capsys):
    code, out, _ = run(capsys, "construct", INST / "n2_scalar.json", "--json")
    data = json.loads(out)
    assert code == 0 and data["n"] == 2 and data["schema_version"] == 1
    assert data["derived"]["lambda"]


def test_verify_text_and_json_agree(capsys):
    code, out, _ = run(capsys, "verify", INST / "n2_scalar.json", "--json")
    assert code == 0
    data = json.loads(out)
    code_t, text, _ = run(capsys, "verify", INST / "n2_scalar.json")
    assert code_t == 0
    text_keys = {line.split(":")[0] for line in text.splitlines()}
    assert set(data["checks"]) <= text_keys
    statuses = [v["status"] for v in data["checks"].values() if isinstance(v, dict)]
    assert statuses and set(statuses) <= {"pass", "skipped"}
    assert data["checks"]["c"] == "1/s^3" and data["checks"]["scalar_M"] is True


def test_verify_is_reproducible(capsys):
    outs = [run(capsys, "verify", INST / "n3.json", "--json", "--lmax", "3")[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_verify_non_scalar(capsys):
    code, out, _ = run(capsys, "verify", INST / "n2_plain.json", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["checks"]["centrality"]["criterion"] is False


def test_pair_and_act(capsys):
    code, out, _ = run(capsys, "pair", INST / "n2_plain.json", "t[1,1]", "t[1,1]", "--c", "1")
    assert code == 0 and out.strip() == "s^4"
    code, out, _ = run(capsys, "act", INST / "n2_plain.json", "t[1,1]", "1", "--c", "1")
    assert code == 0 and out.strip() == "(s^4)*x[1]"


def test_gram(capsys):
    code, out, _ = run(capsys, "gram", INST / "n3.json", "--json", "--closed-form")
    data = json.loads(out)
    assert code == 0 and data["prop4"]["status"] == "pass"
    assert data["blocks"] == {"one_dimensional": 3, "two_dimensional": 3}
    code, out, _ = run(capsys, "gram", INST / "n2_scalar.json", "--dump-matrix")
    assert code == 0 and "# rows/columns" in out


def test_scan(capsys):
    code, out, _ = run(capsys, "scan", "--n", 3, "--samples", 5, "--json")
    assert code == 0 and json.loads(out)["degenerate_count"] == 0
    code, out, _ = run(capsys, "scan", "--n", 4, "--samples", 3, "--plant", "z=q", "--json")
    assert code == 0 and json.loads(out)["degenerate_count"] == 3
    code, _, err = run(capsys, "scan", "--n", 2)
    assert code == 2 and "always degenerate" in err


def test_poincare(capsys):
    code, out, _ = run(capsys, "poincare", INST / "n3.json", "--lmax", 3, "--json")
    data = json.loads(out)
    assert code == 0 and data["plus"] == [1, 3, 8, 21] and data["minus"] == [1, 3, 1, 0]
    code, _, _ = run(capsys, "poincare", "--n", 4, "--check-eq9", 4)
    assert code == 0
    code, out, _ = run(capsys, "poincare", "--n", 3, "--check-eq9", 4, "--step", 1, "--json")
    assert code == 1 and json.loads(out)["eq9"]["status"] == "fail"
    code, _, _ = run(capsys, "poincare")
    assert code == 2


def test_input_errors(capsys, tmp_path):
    code, _, err = run(capsys, "verify", tmp_path / "missing.json")
    assert code == 2 and "error" in err

    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 2,\n "u": [1, 2\n')
    code, _, err = run(capsys, "construct", bad)
    assert code == 2 and "line" in err

    expr = tmp_path / "expr.json"
    expr.write_text('{"n": 2, "field": {"kind": "ratfunc-sigma"},\n'
                    ' "u": ["1/(1+q)", "q/(1+"],\n "v": ["1", "1"], "branch": "-"}\n')
    code, _, err = run(capsys, "construct", expr)
    assert code == 2 and "line 2" in err

    trace = tmp_path / "trace.json"
    trace.write_text('{"n": 2, "field": {"kind": "ratfunc-sigma"}, "u": ["1", "1"],'
                     ' "v": ["1", "1"], "branch": "-"}')
    code, _, err = run(capsys, "construct", trace)
    assert code == 2 and "trace" in err

    code, _, err = run(capsys, "pair", INST / "n2_plain.json", "t[1,3]", "t[1,1]", "--c", "1")
    assert code == 2
    code, _, err = run(capsys, "pair", INST / "n2_plain.json", "t[1,1]", "t[1,1]")
    assert code == 2 and "--c" in err
    code, _, err = run(capsys, "act", INST / "n2_plain.json", "t[1,1]", "3", "--c", "1")
    assert code == 2


def test_console_script_entry():
    out = subprocess.run([sys.executable, "-m", "heckesym", "poincare", "--n", "3", "--lmax", "2"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and "sym_dim: [1, 3, 8]" in out.stdout
