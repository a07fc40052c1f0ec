"""The command-line front end: verbs, formats, exit codes."""

import json
import subprocess
import sys

import pytest

from hypermaps.cli import run
from hypermaps.hmf import read_hmf


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def gen(capsys, tmp_path, family, *extra):
    stem = "_".join([family, *(a.lstrip("-") for a in extra)])
    path = tmp_path / f"{stem}.hmf"
    code, _, _ = invoke(capsys, "gen", family, *extra, "-o", str(path))
    assert code == 0
    return path


def test_info_json(capsys, tmp_path):
    path = gen(capsys, tmp_path, "plane_example")
    code, out, _ = invoke(capsys, "info", str(path), "--json")
    assert code == 0
    data = json.loads(out)
    assert data["chi"] == 2 and data["eps"] == 0
    assert data["v"] == 5 and data["e"] == 3
    assert data["gamma"] == 0


def test_info_human(capsys, tmp_path):
    path = gen(capsys, tmp_path, "torus_example")
    code, out, _ = invoke(capsys, "info", str(path))
    assert code == 0
    assert "chi 0" in out and "eps 2" in out and "genus 1" in out


def test_pdual_fig7(capsys, tmp_path):
    path = gen(capsys, tmp_path, "fig7")
    out_path = tmp_path / "out.hmf"
    code, _, _ = invoke(capsys, "pdual", str(path), "-A", "e1", "-o", str(out_path))
    assert code == 0
    code, out, _ = invoke(capsys, "info", str(out_path), "--json")
    assert json.loads(out)["v"] == 2


def test_pdual_bitmask_equals_names(capsys, tmp_path):
    path = gen(capsys, tmp_path, "fig7")
    a = tmp_path / "a.hmf"
    b = tmp_path / "b.hmf"
    invoke(capsys, "pdual", str(path), "-A", "e1,e3", "-o", str(a))
    invoke(capsys, "pdual", str(path), "-A", "0b0101", "-o", str(b))
    assert read_hmf(a.read_text()) == read_hmf(b.read_text())


def test_dual_roundtrip(capsys, tmp_path):
    path = gen(capsys, tmp_path, "plane_example")
    d1 = tmp_path / "d1.hmf"
    d2 = tmp_path / "d2.hmf"
    invoke(capsys, "dual", str(path), "-o", str(d1))
    invoke(capsys, "dual", str(d1), "-o", str(d2))
    assert read_hmf(d2.read_text()) == read_hmf(path.read_text())


def test_poly_engine_both(capsys, tmp_path):
    path = gen(capsys, tmp_path, "ladder", "4")
    code, out, _ = invoke(capsys, "poly", str(path), "--engine", "both")
    assert code == 0
    data = json.loads(out)
    assert data["engines_agree"] is True
    assert data["polynomial"] == {"0": 2, "2": 6, "4": 6, "6": 2}
    assert data["subsets"] == 16


def test_spectrum(capsys, tmp_path):
    path = gen(capsys, tmp_path, "ladder", "2")
    code, out, _ = invoke(capsys, "spectrum", str(path))
    data = json.loads(out)
    assert data["spectrum"] == [0, 2]
    assert data["gaps"] == [[1, 1, 1]]
    assert data["interpolating"] is False
    assert data["gamma_spectrum"] == [0, 1]


def test_gen_families(capsys, tmp_path):
    for family, extra in [("fig7", ()), ("cycle_hypertree", ("4",)),
                          ("star", ("3",)), ("random_hypertree", ("3", "--seed", "5"))]:
        path = gen(capsys, tmp_path, family, *extra)
        assert read_hmf(path.read_text()).is_connected()


def test_join_verb(capsys, tmp_path):
    a = gen(capsys, tmp_path, "ladder", "2")
    b = gen(capsys, tmp_path, "star", "2")
    h_b = read_hmf(b.read_text())
    out_path = tmp_path / "joined.hmf"
    code, _, _ = invoke(capsys, "join", str(a), str(b),
                        "--at", "x3@1", "--at2", f"v1@{h_b.external(min(h_b.vertex_sets[0]))}",
                        "-o", str(out_path))
    assert code == 0
    joined = read_hmf(out_path.read_text())
    assert joined.e == 3 and joined.counts().eps == 0


def test_amalgamate_verb(capsys, tmp_path):
    a = gen(capsys, tmp_path, "star", "3")
    b = gen(capsys, tmp_path, "star", "2")
    out_path = tmp_path / "amal.hmf"
    code, _, _ = invoke(capsys, "amalgamate", str(a), str(b),
                        "--at", "v1@1,v2@3", "--at2", "v1@1",
                        "--edge1", "e1", "-o", str(out_path))
    assert code == 0
    h = read_hmf(out_path.read_text())
    assert h.e == 3 and h.v == 5


def test_subdivide_verb(capsys, tmp_path):
    path = gen(capsys, tmp_path, "fig7")
    out_path = tmp_path / "sub.hmf"
    code, _, _ = invoke(capsys, "subdivide", str(path), "-e", "e2", "-o", str(out_path))
    assert code == 0
    h = read_hmf(out_path.read_text())
    assert h.e == 6 and h.counts().eps == 2


def test_pendant_verb(capsys, tmp_path):
    path = gen(capsys, tmp_path, "plane_example")
    out_path = tmp_path / "pend.hmf"
    code, _, _ = invoke(capsys, "pendant", str(path), "-e", "e1", "--at", "1",
                        "-o", str(out_path))
    assert code == 0
    h = read_hmf(out_path.read_text())
    assert h.v == 6 and h.counts().eps == 0


def test_domain_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.hmf"
    bad.write_text("hmf 1\nvertex v (1 2) (1 3)\nhyperedge e (1 2) (1 3)\n")
    code, _, err = invoke(capsys, "info", str(bad))
    assert code == 1
    payload = json.loads(err)
    assert payload["error"] == "DuplicateLabel"


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        run(["pdual"])  # missing required arguments
    assert exc.value.code == 2


def test_check_single_file(capsys, tmp_path):
    path = gen(capsys, tmp_path, "fig7")
    code, out, _ = invoke(capsys, "check", str(path))
    assert code == 0
    data = json.loads(out)
    assert data["ok"] is True


def test_check_corrupted_file(capsys, tmp_path):
    bad = tmp_path / "bad.hmf"
    bad.write_text("hmf 1\nvertex v (1 2) (1 3)\nhyperedge e (1 2) (1 3)\n")
    code, _, err = invoke(capsys, "check", str(bad))
    assert code == 1 and json.loads(err)["error"] == "DuplicateLabel"


def test_stdin_stdout_streams(tmp_path):
    script = (
        "from hypermaps.cli import run; import sys; sys.exit(run(sys.argv[1:]))"
    )
    gen_out = subprocess.run(
        [sys.executable, "-c", script, "gen", "fig7"],
        capture_output=True, text=True, check=True,
    )
    info = subprocess.run(
        [sys.executable, "-c", script, "info", "-", "--json"],
        input=gen_out.stdout, capture_output=True, text=True, check=True,
    )
    assert json.loads(info.stdout)["eps"] == 2
