import json
import subprocess
import sys

import pytest

from arrfactor.cli import main


def run(*args, stdin=None):
    proc = subprocess.run([sys.executable, "-m", "arrfactor", *args], capture_output=True,
                          text=True, input=stdin, timeout=600)
    out = json.loads(proc.stdout) if proc.stdout.strip().startswith("{") else proc.stdout
    return proc.returncode, out, proc.stderr


def test_info_g333():
    code, out, _ = run("info", "--catalog", "G(3,3,3)")
    assert code == 0
    assert out["hyperplanes"] == 9 and out["roots"] == [1, 4, 4]
    assert out["flats_by_rank"] == [1, 9, 12, 1] and out["schema"] == 1


def test_info_boolean_and_g24(capsys):
    assert main(["info", "--catalog", "boolean:3"]) == 0
    assert json.loads(capsys.readouterr().out)["roots"] == [1, 1, 1]
    assert main(["info", "--catalog", "G24"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["hyperplanes"] == 21 and out["roots"] == [1, 9, 11]


def test_check_nice_yes_and_fresh_verify(tmp_path):
    code, out, _ = run("check", "nice", "--catalog", "G(3,3,3)")
    assert code == 0 and out["answer"] == "yes"
    assert sorted(len(b) for b in out["certificate"]["blocks"]) == [1, 4, 4]
    path = tmp_path / "verdict.json"
    path.write_text(json.dumps(out))
    code, res, _ = run("verify", str(path), "--catalog", "G(3,3,3)")
    assert code == 0 and res["valid"]
    code, res, _ = run("verify", str(path), "--catalog", "G(4,4,3)")
    assert code == 1 and not res["valid"]


def test_check_nice_no(capsys):
    assert main(["check", "nice", "--catalog", "H3"]) == 1
    out = json.loads(capsys.readouterr().out)
    assert out["answer"] == "no" and "certificate" not in out


def test_check_user_partition(tmp_path, capsys):
    good = tmp_path / "p.json"
    good.write_text(json.dumps([[0], [1, 2, 3, 6], [4, 5, 7, 8]]))
    assert main(["check", "nice", "--catalog", "G(3,3,3)", "--partition", str(good)]) == 0
    assert json.loads(capsys.readouterr().out)["verified"]
    bad = tmp_path / "q.json"
    bad.write_text(json.dumps([[0, 1, 2], [3, 4, 5], [6, 7, 8]]))
    assert main(["check", "nice", "--catalog", "G(3,3,3)", "--partition", str(bad)]) == 1
    capsys.readouterr()
    broken = tmp_path / "r.json"
    broken.write_text("[[0, 1]]")
    assert main(["check", "nice", "--catalog", "G(3,3,3)", "--partition", str(broken)]) == 2


@pytest.mark.parametrize("prop,name,code", [
    ("supersolvable", "B:3", 0),
    ("supersolvable", "G(3,3,3)", 1),
    ("indfactored", "G(3,3,3)", 1),
    ("indfactored", "braid:3", 0),
    ("indfree", "D:4", 0),
    ("indfree", "G(3,3,3)", 1),
    ("hereditary-nice", "G(3,3,3)", 0),
    ("hereditary-nice", "H3", 1),
])
def test_check_properties(prop, name, code, tmp_path):
    got, out, _ = run("check", prop, "--catalog", name)
    assert got == code, out
    assert out["answer"] == ("yes" if code == 0 else "no")
    if code == 0:
        path = tmp_path / "v.json"
        path.write_text(json.dumps(out))
        vcode, res, _ = run("verify", str(path), "--catalog", name)
        assert vcode == 0 and res["valid"], res


def test_undecided_exit_code(capsys):
    assert main(["check", "indfree", "--catalog", "G(3,3,3)", "--budget", "3"]) == 3
    assert json.loads(capsys.readouterr().out)["answer"] == "undecided"


def test_input_errors(tmp_path, capsys):
    assert main(["info", "--catalog", "G(3,2,3)"]) == 2
    path = tmp_path / "bad.arr"
    path.write_text("dim 2 conductor 1\n1 0 0\n")
    assert main(["info", "--file", str(path)]) == 2
    assert main(["info", "--file", str(tmp_path / "missing.arr")]) == 2
    assert main(["check", "bogus", "--catalog", "H3"]) == 2
    assert main(["verify-paper", "--only", "nope"]) == 2


def test_export_then_info(tmp_path):
    path = tmp_path / "f4.arr"
    code, _, _ = run("export", "--catalog", "F4", "-o", str(path))
    assert code == 0 and path.read_text().startswith("# F4\ndim 4 conductor 1\n")
    code, out, _ = run("info", "--file", str(path))
    assert code == 0 and out["roots"] == [1, 5, 7, 11]
    code, out, _ = run("info", "--file", "-", stdin=path.read_text())
    assert code == 0 and out["hyperplanes"] == 24


def test_output_is_deterministic():
    a = run("check", "nice", "--catalog", "G(4,4,3)")[1]
    b = run("check", "nice", "--catalog", "G(4,4,3)")[1]
    a.pop("seconds"), b.pop("seconds")
    assert a == b


def test_verify_paper_only():
    code, out, err = run("verify-paper", "--only", "grr3", "h3")
    assert code == 0 and out["passed"]
    assert [r["id"] for r in out["results"]] == ["grr3", "h3"]
    assert "PASS grr3" in err
    assert any("[[0], [1, 2], [3, 6], [4, 5, 7, 8]]" in f or "explicit partition" in f
               for f in out["results"][0]["facts"])


def test_verify_paper_list(capsys):
    assert main(["verify-paper", "--list"]) == 0
    ids = json.loads(capsys.readouterr().out)["checks"]
    assert {"grr3", "g31", "summary"} <= set(ids)


def test_threads_env(monkeypatch, capsys):
    monkeypatch.setenv("ARRFACTOR_THREADS", "2")
    assert main(["check", "nice", "--catalog", "G(3,3,3)"]) == 0
    par = json.loads(capsys.readouterr().out)["certificate"]["blocks"]
    monkeypatch.setenv("ARRFACTOR_THREADS", "1")
    assert main(["check", "nice", "--catalog", "G(3,3,3)"]) == 0
    seq = json.loads(capsys.readouterr().out)["certificate"]["blocks"]
    assert par == seq
