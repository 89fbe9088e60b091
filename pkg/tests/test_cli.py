import io
import json
import subprocess
import sys

import pytest

from ratsing import cli, fundcycle
from ratsing.dualgraph import Cycle, parse_tree
from ratsing.families import type_d


def run(argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    out = io.StringIO()
    code = cli.run(argv, out)
    return code, out.getvalue()


@pytest.fixture
def t9_path(tmp_path, t9_text):
    p = tmp_path / "t9.tree"
    p.write_text(t9_text, encoding="utf-8")
    return str(p)


def test_check_t9(t9_path):
    code, out = run(["check", t9_path])
    assert code == 0
    data = json.loads(out)
    assert data["is_rational"] is True and data["artin_sum"] == -2


def test_check_require_rational(tmp_path):
    p = tmp_path / "star.tree"
    p.write_text("vertex C -2\n" + "".join(f"vertex L{i} -3\nedge C L{i}\n" for i in range(1, 5)))
    code, out = run(["check", str(p), "--require-rational"])
    assert code == 1
    assert json.loads(out)["artin_sum"] == 0
    assert run(["check", str(p)])[0] == 0


def test_check_stdin(monkeypatch, t9_text, t9_path):
    code, out = run(["check", "-"], stdin=t9_text, monkeypatch=monkeypatch)
    assert code == 0 and out == run(["check", t9_path])[1]


def test_fundcycle_json_and_pretty(t9_path):
    code, out = run(["fundcycle", t9_path])
    data = json.loads(out)
    assert code == 0 and data["fundamental_cycle"] == {f"E{i}": 1 for i in range(1, 6)}
    assert data["self_pairing"] == -4
    code, out = run(["fundcycle", t9_path, "--pretty"])
    assert out.splitlines()[0].split() == ["curve", "w_i", "a_i", "Z.E_i"]
    assert out.splitlines()[-1] == "Z.Z = -4"


def test_fundcycle_indefinite(tmp_path):
    p = tmp_path / "d4.tree"
    p.write_text("vertex C -2\n" + "".join(f"vertex L{i} -2\nedge C L{i}\n" for i in range(1, 5)))
    assert run(["fundcycle", str(p)])[0] == 1


def test_discrepancy(t9_path):
    code, out = run(["discrepancy", t9_path, "--curves", "E1", "--verify"])
    assert code == 0 and json.loads(out) == {"E1": "-1/3"}
    code, out = run(["discrepancy", t9_path])
    assert set(json.loads(out)) == {f"E{i}" for i in range(1, 6)}


def test_contract_t9(t9_path, tmp_path):
    dot = tmp_path / "ar.dot"
    code, out = run(["contract", t9_path, "--curves", "E3,E5", "--dot", str(dot), "--verify"])
    assert code == 0
    data = json.loads(out)
    assert [c["curves"] for c in data["components"]] == [["E3"], ["E5"]]
    assert [c["ade"]["label"] for c in data["components"]] == ["A1", "A1"]
    assert dot.read_text().startswith("digraph AR {\n")


def test_contract_unknown_curve(t9_path):
    assert run(["contract", t9_path, "--curves", "E3,E9"])[0] == 2


def test_contract_unwritable_dot(t9_path, tmp_path):
    bad = tmp_path / "missing" / "ar.dot"
    assert run(["contract", t9_path, "--curves", "E3", "--dot", str(bad)])[0] == 2


def test_arquiver(t9_path):
    code, out = run(["arquiver", t9_path, "--curves", "E3,E4"])
    assert code == 0 and out.count("->") == 4  # two edges, each with a label
    code, out = run(["arquiver", t9_path, "--format", "json", "--verify"])
    assert len(json.loads(out)["arrows"]) == 8


def test_family_round_trip(tmp_path):
    code, out = run(["family", "typeD", "--n", "3", "--verify"])
    assert code == 0 and parse_tree(out) == type_d(3)
    target = tmp_path / "d3.tree"
    assert run(["family", "typeD", "--n", "3", "-o", str(target)]) == (0, "")
    assert target.read_text() == out


def test_family_bad_spec():
    assert run(["family", "typeD"])[0] == 2
    assert run(["family", "cyclic", "--m", "6", "--q", "3"])[0] == 2


def test_hj():
    assert run(["hj", "--m", "5", "--q", "2"]) == (0, "-3 -2\n")
    assert run(["hj", "--m", "17", "--q", "5", "--verify"])[0] == 0
    assert run(["hj", "--m", "4", "--q", "2"])[0] == 2


def test_lambda():
    code, out = run(["lambda", "--n", "3", "--verify"])
    assert code == 0 and len(json.loads(out)["relations"]) == 5
    code, out = run(["lambda", "--n", "3", "--pretty"])
    assert out.splitlines()[0] == "s2·b·s3 = s3·b·s2"
    assert run(["lambda", "--n", "2"])[0] == 2
    code, out = run(["lambda", "--n", "4", "--non-minimal", "--verify"])
    assert code == 0


def test_census(t9_path):
    code, out = run(["census", t9_path, "--verify"])
    assert code == 0
    assert json.loads(out) == {"deg3_count": 1, "deg4plus_witness": None,
                               "not_pseudo_taut": False, "not_taut": False}


@pytest.mark.parametrize(
    "argv",
    [[], ["nosuch"], ["check"], ["check", "/nonexistent/file.tree"], ["hj", "--m", "x", "--q", "1"],
     ["check", "--bogus", "x"]],
)
def test_usage_errors(argv):
    assert run(argv)[0] == 2


def test_malformed_tree(tmp_path, capsys):
    p = tmp_path / "bad.tree"
    p.write_text("vertex E1 -2\nedge E1 E1\n")
    assert run(["check", str(p)])[0] == 2
    assert "self-loop" in capsys.readouterr().err


def test_global_verify_position(t9_path):
    assert run(["--verify", "check", t9_path]) == run(["check", t9_path, "--verify"])


def test_verify_detects_wrong_cycle(t9_path, monkeypatch, capsys):
    def wrong(tree, choose=fundcycle.smallest_index):
        return Cycle(tree.vertices, (1,) * (len(tree) - 1) + (2,))

    monkeypatch.setattr(fundcycle, "laufer", wrong)
    assert run(["fundcycle", t9_path])[0] == 0
    assert run(["fundcycle", t9_path, "--verify"])[0] == 1
    assert "brute force" in capsys.readouterr().err


def test_verify_large_tree(tmp_path, capsys):
    code, _ = run(["family", "typeD", "--n", "4", "--verify"])
    assert code == 0
    assert "local minimality" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [["check", "{t9}"], ["contract", "{t9}", "--curves", "E3,E4,E5"], ["arquiver", "{t9}"],
     ["lambda", "--n", "5"], ["census", "{t9}"], ["discrepancy", "{t9}"]],
)
def test_byte_determinism(argv, t9_path):
    argv = [a.replace("{t9}", t9_path) for a in argv]
    outputs = [
        subprocess.run([sys.executable, "-m", "ratsing.cli", *argv], capture_output=True, check=True).stdout
        for _ in range(2)
    ]
    assert outputs[0] == outputs[1]
    assert outputs[0] == run(argv)[1].encode("utf-8")
