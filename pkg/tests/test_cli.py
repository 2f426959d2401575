import json
import subprocess
import sys

import pytest

from parec.cli import main
from parec.diagrams import Diagram, parse_diagram
from parec.scalars import Poly, parse_rational


@pytest.fixture
def matrix_file(tmp_path):
    def write(rows, name="m.json"):
        path = tmp_path / name
        path.write_text(json.dumps({"n": len(rows), "entries": [[str(x) for x in r] for r in rows]}))
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


TABLE1_COLUMN = sorted(["1", "1", "1", "r", "r", "1", "2", "r", "2", "1", "r", "r", "r", "r", "r^2"])


def test_char_table_trivial_shape(capsys):
    code, out, _ = run(capsys, "char-table", "--n", "2", "--shape", "[]")
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()]
    assert len(rows) == 15
    assert sorted(v for _, v in rows) == TABLE1_COLUMN
    assert len({parse_diagram(d) for d, _ in rows}) == 15


def test_char_table_order_one(capsys):
    code, out, _ = run(capsys, "char-table", "--n", "1")
    assert code == 0
    assert out.splitlines() == [
        "[]\t{{1,1'}}\t1",
        "[]\t{{1},{1'}}\tr",
        "[1]\t{{1,1'}}\t1",
        "[1]\t{{1},{1'}}\t0",
    ]


def test_char_table_guard(capsys):
    code, _, err = run(capsys, "char-table", "--n", "5")
    assert code == 2
    assert "order out of supported range" in err


def test_char_table_json_round_trip(capsys):
    code, out, _ = run(capsys, "char-table", "--n", "2", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 4 * 15
    for row in rows:
        Diagram.from_json(row["diagram"])
        Poly.from_json(row["value"])
    empty = {str(Diagram.from_json(r["diagram"])): str(Poly.from_json(r["value"])) for r in rows if r["shape"] == []}
    assert sorted(empty.values()) == TABLE1_COLUMN


def test_char_single(capsys):
    code, out, _ = run(capsys, "char", "--shape", "[1,1]", "--diagram", "{{1,2'},{2,1'}}")
    assert (code, out.strip()) == (0, "-1")


def test_rec(capsys, matrix_file):
    path = matrix_file([[1, 2], [3, 4]])
    assert run(capsys, "rec", "--matrix", path, "--shape", "[]")[:2] == (0, "10*r + 69\n")
    assert run(capsys, "rec", "--matrix", path, "--shape", "[1,1]")[:2] == (0, "-2\n")
    code, out, _ = run(capsys, "rec", "--matrix", path, "--shape", "[]", "--format", "json")
    payload = json.loads(out)
    assert payload["shape"] == [] and Poly.from_json(payload["value"]) == Poly([69, 10])


def test_rec_bounds_and_bad_input(capsys, matrix_file, tmp_path):
    path = matrix_file([[1, 2], [3, 4]])
    assert run(capsys, "rec", "--matrix", path, "--shape", "[3]")[0] == 2
    assert run(capsys, "rec", "--matrix", path, "--shape", "[1,2]")[0] == 1
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "rec", "--matrix", str(bad), "--shape", "[]")[0] == 1
    assert run(capsys, "rec", "--matrix", str(tmp_path / "missing.json"), "--shape", "[]")[0] == 1
    big = matrix_file([[1] * 5] * 5, "big.json")
    assert run(capsys, "rec", "--matrix", big, "--shape", "[]")[0] == 2


def test_imm_det_perm(capsys, matrix_file):
    path = matrix_file([[1, 2], [3, 4]])
    assert run(capsys, "imm", "--matrix", path, "--shape", "[2]")[:2] == (0, "10\n")
    assert run(capsys, "det", "--matrix", path)[:2] == (0, "-2\n")
    code, out, _ = run(capsys, "perm", "--matrix", path, "--format", "json")
    assert parse_rational(json.loads(out)["value"]) == 10
    assert run(capsys, "imm", "--matrix", path, "--shape", "[1]")[0] == 2


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "2")
    assert code == 0 and len(out.splitlines()) == 15
    code, out, _ = run(capsys, "enumerate", "--n", "1", "--format", "json")
    assert [Diagram.from_json(d) for d in json.loads(out)] == [
        parse_diagram("{{1,1'}}"), parse_diagram("{{1},{1'}}"),
    ]


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--n", "2", "--suite", "all", "--seed", "7")
    assert code == 0
    assert "FAIL" not in out


def test_verify_theorem_lists_shapes(capsys):
    code, out, _ = run(capsys, "verify", "--n", "3", "--suite", "theorem", "--seed", "7")
    assert code == 0
    for shape in ("[3]", "[2, 1]", "[1, 1, 1]"):
        assert f"shape {shape}" in out


def test_verify_guard(capsys):
    assert run(capsys, "verify", "--n", "9")[0] == 2
    assert run(capsys, "verify", "--n", "4")[0] == 2


def test_verify_reports_are_reproducible(capsys):
    first = run(capsys, "verify", "--n", "3", "--suite", "traces", "--seed", "5")[1]
    second = run(capsys, "verify", "--n", "3", "--suite", "traces", "--seed", "5")[1]
    assert first == second


def test_usage_error_exits_one(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["char-table", "--n", "two"])
    assert exc.value.code == 1


def test_env_var_raises_guard(capsys, monkeypatch):
    monkeypatch.setenv("PAREC_MAX_N", "5")
    from parec.errors import max_order

    assert max_order(4) == 5
    monkeypatch.setenv("PAREC_MAX_N", "2")
    assert max_order(4) == 4


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "parec", "char", "--shape", "[]", "--diagram", "{{1},{2},{1'},{2'}}"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "r^2"
