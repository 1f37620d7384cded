import json
import subprocess
import sys

import pytest

from ncdigraphs.cli import main, parse_score_document, InputError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write_scores(tmp_path, n, arcs):
    path = tmp_path / "scores.json"
    path.write_text(json.dumps({"n": n, "arcs": [{"src": s, "dst": d, "score": x} for s, d, x in arcs]}))
    return str(path)


@pytest.mark.parametrize("family, n, expected", [
    ("acyclic", 6, "101551"),
    ("digraph", 9, "201889939456"),
    ("connected-undirected", 11, "49826712"),
])
def test_count(capsys, family, n, expected):
    assert run(capsys, "count", "--family", family, "--n", str(n)) == (0, expected + "\n", "")


def test_count_rejects_zero(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "--family", "acyclic", "--n", "0"])
    assert exc.value.code == 2
    assert "--n" in capsys.readouterr().err


def test_count_rejects_unknown_family(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "--family", "forest", "--n", "3"])
    assert exc.value.code == 2


def test_count_per_class(capsys):
    code, out, _ = run(capsys, "count", "--family", "acyclic", "--n", "2", "--per-class")
    assert code == 0
    lines = dict(line.split("\t") for line in out.splitlines())
    assert len(lines) == 7
    assert lines["minmax-covered"] == "1"
    assert lines["maxmin-covered"] == "1"
    assert lines["elementary"] == "1"
    assert lines["unconnected"] == "0"


def test_decode(capsys, tmp_path):
    path = write_scores(tmp_path, 2, [(1, 2, 2.0), (2, 1, 3.0)])
    code, out, _ = run(capsys, "decode", "--family", "acyclic", "--input", path)
    assert code == 0
    assert out == '{"n":2,"score":3.0,"arcs":[{"src":2,"dst":1}]}\n'


def test_decode_empty_arcs(capsys, tmp_path):
    path = write_scores(tmp_path, 3, [])
    code, out, _ = run(capsys, "decode", "--family", "acyclic", "--input", path)
    assert code == 0
    assert json.loads(out) == {"n": 3, "score": 0.0, "arcs": []}


def test_decode_arcs_sorted(capsys, tmp_path):
    path = write_scores(tmp_path, 4, [(4, 1, 3), (1, 2, 1), (3, 2, 1), (3, 4, 1)])
    code, out, _ = run(capsys, "decode", "--family", "acyclic", "--input", path)
    arcs = [(a["src"], a["dst"]) for a in json.loads(out)["arcs"]]
    assert arcs == sorted(arcs)
    assert json.loads(out)["score"] == 6.0


def test_decode_matches_oracle(capsys, tmp_path, rng):
    from ncdigraphs import oracle_best
    from conftest import random_table

    table = random_table(4, rng)
    path = write_scores(tmp_path, 4, [(u, v, x) for (u, v), x in table.scores.items()])
    code, out, _ = run(capsys, "decode", "--family", "acyclic", "--input", path)
    assert json.loads(out)["score"] == oracle_best("acyclic", table).score


@pytest.mark.parametrize("doc, field", [
    ("[]", "top level"),
    ("{", "JSON"),
    ('{"n": 0, "arcs": []}', "'n'"),
    ('{"n": true, "arcs": []}', "'n'"),
    ('{"n": 2, "arcs": {}}', "'arcs'"),
    ('{"n": 2, "arcs": [{"src": 1, "dst": 3, "score": 1}]}', "arcs[0].dst"),
    ('{"n": 2, "arcs": [{"src": 1, "dst": 1, "score": 1}]}', "arcs[0]"),
    ('{"n": 2, "arcs": [{"src": 1, "dst": 2, "score": "x"}]}', "arcs[0].score"),
    ('{"n": 2, "arcs": [{"src": 1, "dst": 2, "score": 1}, {"src": 1, "dst": 2, "score": 2}]}', "duplicate"),
])
def test_malformed_score_files(capsys, tmp_path, doc, field):
    path = tmp_path / "bad.json"
    path.write_text(doc)
    code, out, err = run(capsys, "decode", "--family", "acyclic", "--input", str(path))
    assert code == 2
    assert out == ""
    assert field in err


def test_parse_rejects_infinite_score():
    with pytest.raises(InputError):
        parse_score_document('{"n": 2, "arcs": [{"src": 1, "dst": 2, "score": 1e999}]}')


def test_decode_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "decode", "--family", "acyclic", "--input", str(tmp_path / "nope.json"))
    assert code == 2 and "cannot read" in err


@pytest.mark.parametrize("family, n, lines", [
    ("acyclic", 2, 3),
    ("undirected", 3, 8),
    ("connected-acyclic", 4, 242),
    ("digraph", 1, 1),
])
def test_enumerate(capsys, family, n, lines):
    code, out, _ = run(capsys, "enumerate", "--family", family, "--n", str(n))
    assert code == 0
    rows = out.splitlines()
    assert len(rows) == lines == len(set(rows))
    assert all(json.loads(row)["n"] == n for row in rows)


def test_enumerate_cap(capsys):
    code, out, err = run(capsys, "enumerate", "--family", "acyclic", "--n", "9")
    assert code == 2 and out == "" and "8" in err


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--family", "connected-acyclic", "--max-n", "4")
    assert code == 0
    for expected in ("engine=2 ", "engine=18 ", "engine=242 "):
        assert expected in out
    assert "FAIL" not in out


def test_verify_cap(capsys):
    code, _, err = run(capsys, "verify", "--family", "acyclic", "--max-n", "9")
    assert code == 2 and "--max-n" in err


def test_verify_reports_failures(capsys, monkeypatch):
    import ncdigraphs.cli as cli

    monkeypatch.setattr(cli, "oracle_count", lambda family, n: -1)
    code, out, _ = run(capsys, "verify", "--family", "undirected", "--max-n", "3")
    assert code == 1
    assert "FAIL" in out


def test_decode_output_byte_identical_across_processes(tmp_path):
    path = write_scores(tmp_path, 6, [(u, v, (u * 7 + v * 3) % 5 - 2) for u in range(1, 7) for v in range(1, 7) if u != v])
    cmd = [sys.executable, "-m", "ncdigraphs", "decode", "--family", "acyclic", "--input", path]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
