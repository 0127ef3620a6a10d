import subprocess
import sys

import pytest

from thetachain.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_convert(capsys):
    assert run(capsys, "convert", "--from", "seq", "--to", "updown", "0 1 0") == (0, "updown: 1\n")
    assert run(capsys, "convert", "--from", "updown", "--to", "seq", "0") == (0, "dims: 0\n")
    assert run(capsys, "convert", "--from", "seq", "--to", "tree", "0 1 0 1 0") == (0, "(()())\n")
    assert run(capsys, "convert", "--from", "seq", "--to", "tree", "0 2 0")[0] == 1


def test_check(capsys, tmp_path):
    code, out = run(capsys, "check", "0 1 2 1 0")
    assert code == 0 and "fail" not in out
    cycle = tmp_path / "cycle.adc"
    cycle.write_text("adc\n0 deg=0 aug= 1\n1 deg=0 aug= 1\n2 deg=1 boundary= -1*0 1*1\n3 deg=1 boundary= 1*0 -1*1\n")
    code, out = run(capsys, "check", str(cycle))
    assert code == 2 and "strongly-loop-free: fail" in out
    broken = tmp_path / "broken.adc"
    broken.write_text("adc\n0 deg=0 aug= 1\n1 deg=0 aug= 1\n2 deg=1 boundary= -1*0 1*1\n"
                      "3 deg=1 boundary= -1*0 1*1\n4 deg=2 boundary= 1*2\n")
    code, out = run(capsys, "check", str(broken))
    assert code == 1 and out.startswith("structure: fail")


def test_hom(capsys, tmp_path):
    assert run(capsys, "hom", "0 1 0", "0 1 0 1 0", "--count") == (0, "6\n")
    assert run(capsys, "--convention", "swapped", "hom", "0 1 0", "0 1 0") == (0, "3\n")
    code, out = run(capsys, "hom", "0 1 0", "0", "--list")
    assert code == 0 and out.count("morphism") == 1
    path = tmp_path / "f.morph"
    path.write_text(out)
    assert run(capsys, "validate-morphism", str(path)) == (0, "valid\n")


def test_validate_morphism_failures(capsys, tmp_path):
    swap = tmp_path / "swap.morph"
    swap.write_text("morphism 0 1 0 -> 0 1 0\ndeg 0:\n0 1\n1 0\ndeg 1:\n1\n")
    code, out = run(capsys, "validate-morphism", str(swap))
    assert code == 2 and "NotChainMap" in out
    bad = tmp_path / "bad.morph"
    bad.write_text("morphism 0 1 0 -> 0 1 0\ndeg 0:\n1 0\n")
    assert run(capsys, "validate-morphism", str(bad))[0] == 1


def test_cells_and_dual(capsys):
    code, out = run(capsys, "cells", "0 1 0", "--cap", "1")
    assert code == 0 and len(out.splitlines()) == 3
    code, out = run(capsys, "dual", "0 1 0")
    assert out.splitlines()[0] == "cochain" and out.splitlines()[-1] == "eta= 1*0 1*2"


def test_wreath_commands(capsys, tmp_path):
    a = tmp_path / "a.wr"
    a.write_text("m: 2\ndims: 0\ndims: 0 1 0\n")
    b = tmp_path / "b.wr"
    b.write_text("m: 1\ndims: 0\n")
    code, out = run(capsys, "wreath-v", str(a))
    assert code == 0 and len(out.splitlines()) == 8
    code, out = run(capsys, "wreath-check", str(b), str(b))
    assert code == 0 and out == "wreath: 3\ntheta: 3\nfully-faithful: pass\n"


def test_usage_errors_are_invalid_input(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 1


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "thetachain", "hom", "0 1 2 1 0", "0 1 2 1 2 1 0", "--list"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first.count(b"morphism") == 8


@pytest.mark.slow
def test_suite_passes(capsys):
    code, out = run(capsys, "suite")
    assert code == 0
    assert out.count("PASS") == len(out.splitlines()) > 10
