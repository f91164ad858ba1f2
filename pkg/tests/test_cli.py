import pytest

from conftest import run_cli


def test_discharge_grid_text(data):
    code, out, _ = run_cli("discharge", "--rot", data / "grid44.rot")
    assert code == 0
    assert out.decode().strip() == "total = 0/1 (χ=0); negatives: none"


def test_discharge_grid_tsv_golden(data):
    code, out, _ = run_cli("discharge", "--rot", data / "grid44.rot", "--format", "tsv")
    assert code == 0
    assert out == (data / "golden" / "discharge-grid44.tsv").read_bytes()


def test_discharge_ledger_rows(data):
    _, out, _ = run_cli("discharge", "--rot", data / "grid44.rot", "--ledger")
    lines = out.decode().splitlines()
    assert "transfer R1 v0 -> f0 : 1/2" in lines
    assert "final v0 : 0" in lines


def test_solve_k7_chromatic(data):
    code, out, _ = run_cli("solve", "--graph", data / "k7.g6", "--chromatic")
    assert code == 0 and out.decode().strip() == "χ_o = 7"


def test_verify_c4_violations(data):
    code, out, _ = run_cli("verify", "--graph", data / "c4.g6", "--coloring", data / "c4-1212.txt")
    assert code == 1
    assert "odd-violations (4): 0 1 2 3" in out.decode()


def test_verify_pass(tmp_path, data):
    col = tmp_path / "k7.txt"
    col.write_text("".join(f"{v} {v + 1}\n" for v in range(7)))
    code, _, _ = run_cli("verify", "--graph", data / "k7.g6", "--coloring", col, "--k", "7")
    assert code == 0


def test_faces_and_classify(data):
    code, out, _ = run_cli("faces", "--rot", data / "grid44.rot", "--format", "tsv")
    rows = [r.split("\t") for r in out.decode().splitlines()]
    assert code == 0 and rows[-1] == ["euler", "0"] and len(rows) == 17
    code, out, _ = run_cli("classify", "--rot", data / "grid44.rot", "--format", "tsv")
    rows = [r.split("\t") for r in out.decode().splitlines()]
    assert sum(r[0] == "vertex" and r[-1] == "4_0" for r in rows) == 16
    assert sum(r[0] == "face" for r in rows) == 16


def test_screen_is_finding(data):
    code, out, _ = run_cli("screen", "--rot", data / "grid44.rot")
    assert code == 1 and "16 screen matches" in out.decode()


def test_lemma_golden(data):
    code, out, _ = run_cli("lemma", "--id", "L-4040face", "--rot", data / "grid44.rot", "--format", "tsv")
    assert code == 0
    assert out == (data / "golden" / "lemma-4040-grid44.tsv").read_bytes()


def test_lemma_failure_exit(data):
    code, out, _ = run_cli("lemma", "--id", "L-tool3", "--rot", data / "grid44-q7.rot")
    assert code == 1 and "fail=1" in out.decode()


def test_gen_matches_golden(data):
    code, out, _ = run_cli("gen", "subdivide", "--rot", data / "grid44.rot", "--fraction", "1/4", "--seed", "7")
    assert code == 0 and out == (data / "grid44-q7.rot").read_bytes()
    code, out, _ = run_cli("gen", "torus-grid", "4", "4")
    assert out == (data / "grid44.rot").read_bytes()


@pytest.mark.parametrize("args", [
    ("faces", "--rot", "missing.rot"),
    ("solve", "--graph", "missing.g6"),
    ("faces", "--rot", "grid44.rot", "--bogus"),
    ("gen", "torus-grid", "3", "3", "--triangle-free"),
    ("gen", "subdivide", "--rot", "grid44.rot", "--fraction", "x"),
    ("lemma", "--id", "L-4040face", "--graph", "k7.g6"),
    ("verify", "--graph", "c4.g6", "--coloring", "k7.g6"),
])
def test_usage_errors_exit_2(args, data):
    code, _, err = run_cli(*args, cwd=data)
    assert code == 2 and err


def test_bad_graph6_reports_offset(tmp_path):
    bad = tmp_path / "bad.g6"
    bad.write_text("D?\x07\n")
    code, _, err = run_cli("verify", "--graph", bad)
    assert code == 2 and b"offset 2" in err
