"""Exit criteria for the package, one test per criterion.

Each test records a PASS/FAIL line that is printed in the pytest
terminal summary (see conftest.py).  Run directly with
``python tests/test_acceptance.py`` to get the same lines without pytest.
"""

import random
import subprocess
import sys
import time

import pytest

from ncdigraphs import (
    FAMILY_NAMES, GraphClass, ScoreTable, count, count_by_class, decode, derivations, family,
    fill_chart, goal_value, oracle_best, oracle_count, oracle_enumerate, realize,
)
from ncdigraphs.oracle import is_member

RESULTS = []


def record(number, title, ok, detail=""):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}" + (f"  [{detail}]" if detail else "")
    RESULTS.append(line)
    print(line)
    assert ok, line


def _detail(elapsed, failures):
    return f"{elapsed:.1f}s" + (f" first failures: {failures[:3]}" if failures else "")


ACYCLIC = [1, 3, 25, 335, 5521, 101551, 1998753, 41188543, 877423873, 19166868607]
CONNECTED_ACYCLIC = [1, 2, 18, 242, 3890, 69074, 1306466, 25809826, 526358946, 10997782882]
DIGRAPH = [1, 4, 64, 1792, 62464, 2437120, 101859328, 4459528192, 201889939456]
# First printed term is the empty graph (0 vertices); we start from 1 vertex.
UNDIRECTED = [1, 2, 8, 48, 352, 2880, 25216, 231168, 2190848]
# First printed term is the 2-vertex graph.
CONNECTED_UNDIRECTED = [1, 4, 23, 156, 1162, 9192, 75819, 644908, 5616182, 49826712]


def test_1_count_acyclic():
    start = time.perf_counter()
    got = [count("acyclic", n) for n in range(1, 11)]
    elapsed = time.perf_counter() - start
    record(1, "acyclic counts n=1..10", got == ACYCLIC and elapsed < 1.0, f"{elapsed:.3f}s")


def test_2_count_connected_acyclic():
    got = [count("connected-acyclic", n) for n in range(1, 11)]
    record(2, "connected-acyclic counts n=1..10", got == CONNECTED_ACYCLIC)


def test_3_count_digraph():
    got = [count("digraph", n) for n in range(1, 10)]
    record(3, "unrestricted digraph counts n=1..9", got == DIGRAPH)


def test_4_count_undirected():
    undirected = [count("undirected", n) for n in range(1, 10)]
    connected = [count("connected-undirected", n) for n in range(2, 12)]
    record(4, "undirected n=1..9 and connected-undirected n=2..11",
           undirected == UNDIRECTED and connected == CONNECTED_UNDIRECTED)


def test_5_oracle_equivalence():
    start = time.perf_counter()
    failures = []
    for name in FAMILY_NAMES:
        f = family(name)
        for n in range(2, 6):
            graphs = [realize(d, f) for d in derivations(f, n)]
            if count(name, n) != oracle_count(name, n):
                failures.append(f"{name} n={n} count")
            if len(graphs) != len(set(graphs)):
                failures.append(f"{name} n={n} duplicates")
            if set(graphs) != oracle_enumerate(name, n):
                failures.append(f"{name} n={n} image")
    elapsed = time.perf_counter() - start
    record(5, "engine vs oracle: counts, images, uniqueness (n=2..5)",
           not failures and elapsed < 60, _detail(elapsed, failures))


def test_6_decode_optimality():
    start = time.perf_counter()
    rng = random.Random(6)
    failures = []
    for name in FAMILY_NAMES:
        for n in range(2, 6):
            for trial in range(100):
                table = ScoreTable(n, {
                    (u, v): float(rng.randint(-5, 5))
                    for u in range(1, n + 1) for v in range(1, n + 1) if u != v
                })
                result = decode(name, table)
                if result.score != oracle_best(name, table).score or not is_member(name, result.graph):
                    failures.append(f"{name} n={n} trial={trial}")
    elapsed = time.perf_counter() - start
    record(6, "decode score equals brute-force optimum (2000 trials)",
           not failures and elapsed < 60, _detail(elapsed, failures))


def test_7_class_symmetry():
    ok = True
    for n in range(2, 13):
        c = count_by_class("acyclic", n)
        ok &= c[GraphClass.MIN_MAX_COVERED] == c[GraphClass.MAX_MIN_COVERED]
        ok &= c[GraphClass.MIN_MAX_CONNECTED] == c[GraphClass.MAX_MIN_CONNECTED]
    record(7, "per-class reversal symmetry n=2..12", ok)


def test_8_scale():
    n = 200
    f = family("acyclic")
    start = time.perf_counter()
    chart = fill_chart(f, n)
    value = goal_value(chart, f)
    elapsed = time.perf_counter() - start
    cells = chart.cell_count
    ok = elapsed < 60 and cells == 7 * n * (n - 1) // 2 and value > ACYCLIC[-1]
    record(8, "count(acyclic, 200) with 7*n*(n-1)/2 cells",
           ok, f"{elapsed:.1f}s cells={cells} digits={len(str(value))}")


def _cli(*args):
    return subprocess.run([sys.executable, "-m", "ncdigraphs", *args], capture_output=True, check=True).stdout


def test_9_determinism(tmp_path):
    import json

    rng = random.Random(9)
    doc = {"n": 7, "arcs": [
        {"src": u, "dst": v, "score": rng.randint(-2, 2)}
        for u in range(1, 8) for v in range(1, 8) if u != v
    ]}
    path = tmp_path / "scores.json"
    path.write_text(json.dumps(doc))
    decode_runs = [_cli("decode", "--family", "acyclic", "--input", str(path)) for _ in range(2)]
    enum_runs = [_cli("enumerate", "--family", "acyclic", "--n", "4") for _ in range(2)]
    ok = decode_runs[0] == decode_runs[1] and enum_runs[0] == enum_runs[1] and enum_runs[0].count(b"\n") == 335
    record(9, "decode and enumerate output byte-identical across runs", ok)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
