import json
import subprocess

import pytest

from ncpart.cli import main

from conftest import gens_path

DXX = "up=xx;low=;blocks=u1,u2"
DXX_STAR = "up=;low=xx;blocks=l1,l2"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_op_compose_counts_loop(capsys):
    code, out, _ = run(capsys, "op", "compose", DXX_STAR, DXX)
    assert code == 0 and out == "up=;low=;blocks=\nloops=1\n"


def test_op_rotate_and_tensor(capsys):
    _, out, _ = run(capsys, "op", "rotate", DXX, "--side", "right", "--dir", "down")
    assert out == "up=x;low=x;blocks=u1,l1\n"
    _, out, _ = run(capsys, "op", "tensor", "up=x;low=x;blocks=u1,l1", "up=y;low=y;blocks=u1,l1")
    assert out == "up=xy;low=xy;blocks=u1,l1|u2,l2\n"


def test_op_json(capsys):
    _, out, _ = run(capsys, "op", "involute", DXX, "--format", "json")
    assert json.loads(out) == {"result": DXX_STAR}


def test_closure_dump(capsys):
    code, out, _ = run(capsys, "closure", gens_path("opp"), "--budget", "6")
    assert code == 0 and out.strip()
    _, again, _ = run(capsys, "closure", gens_path("opp"), "--budget", "6", "--workers", "2")
    assert again == out


def test_member_yes_and_no(capsys):
    _, out, _ = run(capsys, "member", gens_path("opp"), "--budget", "6", "up=xyyx;low=;blocks=u1,u2|u3,u4")
    assert out.startswith("verdict: YES\nbound: 6\n") and "result " in out
    _, out, _ = run(capsys, "member", gens_path("opp"), "--budget", "6", "up=xy;low=;blocks=u1,u2")
    assert out == "verdict: NO_UP_TO_BOUND\nbound: 6\n"


def test_member_trace_replays(capsys, tmp_path):
    lit = "up=xyyx;low=;blocks=u1,u2|u3,u4"
    _, out, _ = run(capsys, "member", gens_path("opp"), "--budget", "6", lit)
    trace = tmp_path / "t.txt"
    trace.write_text(out)
    code, out, _ = run(capsys, "replay", gens_path("opp"), str(trace))
    assert code == 0 and out == lit + "\n"


def test_classify_json(capsys):
    _, out, _ = run(capsys, "classify", gens_path("opp"), "--budget", "8", "--format", "json")
    report = json.loads(out)
    assert report["family"] == "O_PLUS_PLUS" and report["parameters"]["k"] == 0
    _, text, _ = run(capsys, "classify", gens_path("opp"), "--budget", "8")
    assert text.startswith("family: O_PLUS_PLUS\n")


def test_tp_and_check(capsys):
    _, out, _ = run(capsys, "tp", DXX, "2")
    assert out == "0 0 1\n0 3 1\n"
    _, out, _ = run(capsys, "tp", DXX, "2", "--format", "json")
    assert json.loads(out) == {"rows": 1, "cols": 4, "entries": [[0, 0, 1], [0, 3, 1]]}
    _, out, _ = run(capsys, "check", DXX_STAR, DXX, "3")
    assert out == "factor=3 ok=true\n"


def test_mordim(capsys):
    _, out, _ = run(capsys, "mordim", gens_path("onc"), "xxx", "xxx", "4", "--budget", "6")
    assert out == "count=5 rank=5\n"
    _, out, _ = run(capsys, "mordim", gens_path("onc"), "-", "-", "3", "--budget", "6")
    assert out == "count=1 rank=1\n"


def test_out_file(capsys, tmp_path):
    target = tmp_path / "o.txt"
    run(capsys, "tp", DXX, "2", "--out", str(target))
    assert target.read_text() == "0 0 1\n0 3 1\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["op", "compose", DXX, DXX],
        ["op", "tensor", DXX],
        ["tp", "garbage", "2"],
        ["closure", "/nonexistent.gens"],
        ["closure", gens_path("q2"), "--budget", "8"],
        ["closure", gens_path("opp"), "--budget", "2"],
        ["tp", "up=xxxxxxxx;low=;blocks=u1|u2|u3|u4|u5|u6|u7|u8", "10"],
    ],
)
def test_errors_exit_two(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err.startswith("error: ")


def test_console_script_is_deterministic():
    argv = ["ncpart", "closure", gens_path("bb"), "--budget", "6"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a
