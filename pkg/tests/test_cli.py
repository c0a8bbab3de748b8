import subprocess
import sys

import pytest

from scrollcodes.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build(capsys, tmp_path):
    code, out, _ = run(capsys, "build", "--field", "5", "--exponents", "1,1", "--out", str(tmp_path))
    assert code == 0 and out.strip() == "n=10 k=4 radius=1 guarantee=2 sags=yes"
    assert (tmp_path / "G.txt").read_text().startswith("4 10 5^1/0,1")
    assert (tmp_path / "R.txt").read_text().startswith("6 10 5^1/0,1")
    code, out2, _ = run(capsys, "build", "--spec", str(tmp_path / "spec.txt"))
    assert out2 == out


def test_encode_decode(capsys):
    _, word, _ = run(capsys, "encode", "--message", "1,2,3,4")
    word = word.strip()
    digits = word.split(",")
    digits[3] = str((int(digits[3]) + 2) % 5)
    code, out, _ = run(capsys, "decode", "--word", ",".join(digits))
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("corrected, 1 errors fibers=1")
    assert lines[1] == word


def test_decode_beyond_radius(capsys):
    _, out, _ = run(capsys, "decode", "--word", "1,0,1,0,0,0,0,0,0,0")
    assert out.split()[0] in ("undecodable", "ambiguous")


def test_mindist(capsys):
    code, out, _ = run(capsys, "mindist", "--hierarchy", "4")
    assert code == 0 and out.splitlines() == ["d=4", "hierarchy=4,5,9,10"]
    code, out, _ = run(capsys, "mindist", "--exponents", "2,1")
    assert out.strip() == "d=3"


def test_mindist_guard(capsys):
    code, _, err = run(capsys, "mindist", "--guard", "10")
    assert code == 2 and err.startswith("error:")


def test_simulate_and_log(capsys, tmp_path):
    log = tmp_path / "log.txt"
    code, out, _ = run(capsys, "simulate", "--trials", "100", "--seed", "3", "--log", str(log))
    assert code == 0 and "success=1.000" in out
    assert len(log.read_text().splitlines()) == 100
    _, again, _ = run(capsys, "simulate", "--trials", "100", "--seed", "3")
    assert again == out


def test_analyze(capsys, tmp_path):
    f = tmp_path / "errs.txt"
    f.write_text("1,0,0,0,0,0,0,0,0,0\n")
    code, out, _ = run(capsys, "analyze", "--errors-file", str(f))
    assert out.strip() == "weight=1 fibers=1 type=(-1,-3,-4) s1=-5 bound=-5 satisfied=yes"
    _, out, _ = run(capsys, "analyze")
    assert "type=(0,-4,-4) s1=-8" in out


@pytest.mark.parametrize("argv", [
    ["build", "--exponents", "3,1", "--num-fibers", "4"],
    ["build", "--field", "2^2/1,0,1"],
    ["build", "--field", "6"],
    ["encode", "--message", "1,2"],
    ["build", "--num-fibers", "9"],
])
def test_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_selftest_entry_point():
    proc = subprocess.run([sys.executable, "-m", "scrollcodes.cli", "selftest"], capture_output=True, text=True)
    assert proc.returncode == 0
    lines = proc.stdout.splitlines()
    assert len(lines) == 7 and all(ln.startswith("PASS") for ln in lines)
