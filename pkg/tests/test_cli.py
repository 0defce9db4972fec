from __future__ import annotations

import io
import json

import pytest

from amoeba.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def jsonl(out):
    return [json.loads(line) for line in out.splitlines() if line.strip()]


def test_classify_examples(capsys):
    code, out, _ = run(capsys, "classify", "path(7)", "h(8)", "cycle(6)", "--json")
    assert code == 0
    rows = jsonl(out)
    assert [(r["is_local"], r["is_global"]) for r in rows] == [(True, True), (True, True), (False, False)]
    assert rows[1]["m"] == 16


def test_classify_human_and_witnesses(capsys):
    code, out, _ = run(capsys, "classify", "g(9)", "--witnesses")
    assert code == 0 and "local=no global=yes" in out and "witnesses:" in out


def test_classify_parallel_keeps_order(capsys):
    code, out, _ = run(capsys, "classify", "path(3)", "cycle(5)", "star(4)", "h(5)", "--json", "--jobs", "2")
    assert code == 0
    assert [r["input"] for r in jsonl(out)] == ["path(3)", "cycle(5)", "star(4)", "h(5)"]


def test_stdin_and_files(capsys, monkeypatch, tmp_path):
    monkeypatch.setattr("sys.stdin", io.StringIO("C~\npath(3)\n\n"))
    code, out, _ = run(capsys, "classify", "-", "--json")
    assert code == 0 and [r["n"] for r in jsonl(out)] == [4, 3]
    f = tmp_path / "g.txt"
    f.write_text("4 3\n1 2\n2 3\n3 4\n")
    code, out, _ = run(capsys, "classify", str(f), "--json")
    assert code == 0 and jsonl(out)[0]["group_order"] == "24"
    f2 = tmp_path / "g6.txt"
    f2.write_text("A_\nBw\n")
    code, out, _ = run(capsys, "classify", str(f2), "--json")
    assert code == 0 and len(jsonl(out)) == 2


def test_exit_codes(capsys):
    assert run(capsys, "classify", "path(")[0] == 2
    assert run(capsys, "classify", "not-graph6!")[0] == 2
    assert run(capsys, "classify", "path(20)")[0] == 3
    assert run(capsys, "classify", "path(20)", "--max-n", "21")[0] == 0
    assert run(capsys, "oracle", "path(9)", "--budget", "10")[0] == 3
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_oracle_command(capsys):
    code, out, _ = run(capsys, "oracle", "path(4)", "--host-order", "4", "--json")
    row = jsonl(out)[0]
    assert code == 0 and row["copies"] == 12 and row["components"] == 1 and row["match"]
    code, out, _ = run(capsys, "oracle", "cycle(4)", "--host-order", "4", "--json")
    assert code == 0 and jsonl(out)[0]["components"] == 3
    code, out, _ = run(capsys, "oracle", "path(3)", "--host-order", "5")
    assert code == 0 and "1 component" in out
    assert run(capsys, "oracle", "path(3)", "--host-order", "2")[0] == 2


def test_sweep_command(capsys):
    code, out, _ = run(capsys, "sweep", "4")
    assert code == 0 and out.strip().endswith("11 classes, 0 mismatches")
    code, out, _ = run(capsys, "sweep", "3", "--json")
    assert jsonl(out)[-1] == {"n": 3, "classes": 4, "mismatches": 0}
    assert run(capsys, "sweep", "6")[0] == 2


def test_bounds_command(capsys):
    code, out, _ = run(capsys, "bounds", "g(9)", "--json")
    b = jsonl(out)[0]["bounds"]
    assert code == 0
    assert b["clique"]["value"] == b["chromatic"]["value"] == 5 and b["edges"]["value"] < 20
    code, out, _ = run(capsys, "bounds", "cycle(5)")
    assert code == 0 and "not applicable" in out


def test_construct_command(capsys):
    code, out, _ = run(capsys, "construct", "path(4)")
    assert code == 0 and out.strip() == "Ch"
    code, out, _ = run(capsys, "construct", "fib(3)", "--format", "json")
    assert jsonl(out)[0]["root"] == 1
    code, out, _ = run(capsys, "construct", "path(3)", "--format", "edges")
    assert out == "3 2\n1 2\n2 3\n"
    assert run(capsys, "construct", "cycle(1)")[0] == 2


def test_replacements_and_group_commands(capsys):
    code, out, _ = run(capsys, "replacements", "path(4)", "--json", "--cosets")
    rows = jsonl(out)[0]["replacements"]
    assert code == 0 and len(rows) == 8
    r = next(x for x in rows if x["source"] == [1, 2] and x["target"] == [1, 4])
    assert sorted(r["coset"]) == ["(1 4 3 2)", "(2 4)"]
    code, out, _ = run(capsys, "group", "g(9)", "--json")
    g = jsonl(out)[0]
    assert code == 0 and g["order"] == "40320" and g["orbits"] == [list(range(1, 9)), [9]]


def test_probe_command(capsys):
    code, out, _ = run(capsys, "probe-conjecture", "--max-n", "6", "--fib-max", "5", "--json")
    res = jsonl(out)[0]
    assert code == 0
    assert res["h_missing_for"] == []
    assert all(f["is_global"] for f in res["fibonacci"])
