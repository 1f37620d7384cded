"""Command-line interface: count, decode, enumerate, verify.

Exit codes: 0 ok, 1 verification failure, 2 usage or input error,
3 the family has no member for the input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from .analyses import count, count_by_class, decode
from .engine import ENUMERATION_CAP, derivations, realize
from .families import FAMILY_NAMES, family
from .model import Digraph
from .oracle import is_member, oracle_best, oracle_cap, oracle_count, oracle_enumerate
from .scores import ScoreTable

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_EMPTY = 0, 1, 2, 3

VERIFY_TRIALS = 25


class InputError(ValueError):
    pass


def graph_json(g: Digraph, score: float | None = None) -> str:
    doc: dict = {"n": g.n}
    if score is not None:
        doc["score"] = score
    doc["arcs"] = [{"src": u, "dst": v} for u, v in g.sorted_arcs()]
    return json.dumps(doc, separators=(",", ":"))


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse_score_document(text: str) -> ScoreTable:
    """Parse a score file; raises InputError naming the bad field."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"not valid JSON: {e}") from None
    if not isinstance(doc, dict):
        raise InputError("top level must be an object")
    n = doc.get("n")
    if not _is_int(n) or n < 1:
        raise InputError(f"field 'n' must be an integer >= 1, got {n!r}")
    arcs = doc.get("arcs", [])
    if not isinstance(arcs, list):
        raise InputError("field 'arcs' must be an array")
    scores = {}
    for idx, entry in enumerate(arcs):
        where = f"arcs[{idx}]"
        if not isinstance(entry, dict):
            raise InputError(f"{where} must be an object")
        src, dst, score = entry.get("src"), entry.get("dst"), entry.get("score")
        for name, value in (("src", src), ("dst", dst)):
            if not _is_int(value) or not 1 <= value <= n:
                raise InputError(f"{where}.{name} must be an integer in 1..{n}, got {value!r}")
        if src == dst:
            raise InputError(f"{where}: src and dst are both {src}")
        if isinstance(score, bool) or not isinstance(score, (int, float)):
            raise InputError(f"{where}.score must be a number, got {score!r}")
        if score != score or score in (float("inf"), float("-inf")):
            raise InputError(f"{where}.score must be finite")
        if (src, dst) in scores:
            raise InputError(f"{where}: duplicate arc ({src}, {dst})")
        scores[src, dst] = float(score)
    return ScoreTable(n, scores)


def cmd_count(args) -> int:
    if args.per_class:
        if args.n < 2:
            raise InputError("--per-class needs --n >= 2")
        for cls, value in count_by_class(args.family, args.n).items():
            print(f"{cls}\t{value}")
    else:
        print(count(args.family, args.n))
    return EXIT_OK


def cmd_decode(args) -> int:
    try:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise InputError(f"cannot read {args.input}: {e.strerror}") from None
    table = parse_score_document(text)
    try:
        result = decode(args.family, table)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_EMPTY
    print(graph_json(result.graph, result.score))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.n > ENUMERATION_CAP:
        raise InputError(f"--n must be at most {ENUMERATION_CAP} for enumeration")
    if args.n == 1:
        print(graph_json(Digraph(1)))
        return EXIT_OK
    f = family(args.family)
    out = sys.stdout
    for d in derivations(f, args.n):
        out.write(graph_json(realize(d, f)) + "\n")
    return EXIT_OK


def verify_family(name: str, max_n: int, trials: int = VERIFY_TRIALS) -> list[tuple[int, str, bool, str]]:
    """Cross-check engine against oracle; returns (n, check, ok, detail) rows."""
    f = family(name)
    rows = []
    for n in range(2, max_n + 1):
        engine_count = count(name, n)
        expected = oracle_count(name, n)
        rows.append((n, "count", engine_count == expected, f"engine={engine_count} oracle={expected}"))

        realized = [realize(d, f) for d in derivations(f, n, cap=max(n, ENUMERATION_CAP))]
        distinct = set(realized)
        dupes = len(realized) - len(distinct)
        same = distinct == oracle_enumerate(name, n)
        rows.append((n, "enumerate", same and dupes == 0, f"graphs={len(realized)} duplicates={dupes}"))

        rng = random.Random(f"{name}:{n}")
        bad = 0
        for _ in range(trials):
            table = ScoreTable(n, {
                (u, v): float(rng.randint(-5, 5))
                for u in range(1, n + 1) for v in range(1, n + 1) if u != v
            })
            got = decode(name, table)
            want = oracle_best(name, table)
            if got.score != want.score or not is_member(name, got.graph):
                bad += 1
        rows.append((n, "decode", bad == 0, f"trials={trials} mismatches={bad}"))
    return rows


def cmd_verify(args) -> int:
    cap = oracle_cap(args.family)
    if not 2 <= args.max_n <= cap:
        raise InputError(f"--max-n must be in 2..{cap} for family {args.family}")
    rows = verify_family(args.family, args.max_n)
    print(f"{'family':<22}{'n':>3}  {'check':<10}{'result':<7}detail")
    for n, check, ok, detail in rows:
        print(f"{args.family:<22}{n:>3}  {check:<10}{'pass' if ok else 'FAIL':<7}{detail}")
    return EXIT_OK if all(ok for _, _, ok, _ in rows) else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncdigraphs",
        description="Count, enumerate and decode noncrossing digraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_family(p):
        p.add_argument("--family", required=True, choices=FAMILY_NAMES)

    p = sub.add_parser("count", help="exact number of family members on n vertices")
    add_family(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--per-class", action="store_true", help="one line per graph class")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("decode", help="highest-scoring member for a score file")
    add_family(p)
    p.add_argument("--input", required=True, metavar="PATH")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("enumerate", help="print every member, one JSON object per line")
    add_family(p)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="cross-check the chart engine against brute force")
    add_family(p)
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", 1) < 1:
        parser.error("--n must be at least 1")
    try:
        return args.func(args)
    except InputError as e:
        print(f"{parser.prog} {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
