"""Bottom-up chart filling, backtrace and derivation enumeration.

A chart cell (i, j, kind) holds the semiring sum, over all derivations
of the item `kind` on vertices i..j, of the product of the weights of
the arcs those derivations introduce.  Cells are filled by increasing
span width; within a span the non-covered kinds come first, then the
maxmin-covered kind, then the minmax-covered kind.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterator, Optional, Tuple

from .families import (
    ALL_KINDS,
    COVERED_KINDS,
    ConcatRule,
    CoverRule,
    Direction,
    Family,
    ItemKind,
    max_width,
    min_width,
)
from .model import Digraph
from .semiring import COUNTING, Semiring

ENUMERATION_CAP = 8

AXIOM = "axiom"

EdgeWeightFn = Callable[[int, int], Any]

# Within-span order: everything a cover rule can read comes first.
_SPAN_ORDER = tuple(k for k in ALL_KINDS if k not in COVERED_KINDS) + (
    ItemKind.MAX_MIN_COVERED,
    ItemKind.MIN_MAX_COVERED,
)


@dataclass(frozen=True)
class Derivation:
    """A node of a derivation tree.

    Leaves are elementary axioms (`rule == "axiom"`); cover nodes have
    one child; concatenation nodes have two children split at `split`.
    """

    kind: ItemKind
    i: int
    j: int
    rule: str = AXIOM
    split: Optional[int] = None
    children: Tuple["Derivation", ...] = ()

    def __iter__(self) -> Iterator["Derivation"]:
        yield self
        for child in self.children:
            yield from child


@dataclass
class Chart:
    n: int
    semiring: Semiring
    # rows[kind][i][j - i - 1] is the value of (i, j, kind).
    rows: dict
    backpointers: Optional[dict] = None
    stats: dict = field(default_factory=dict)

    def get(self, i: int, j: int, kind: ItemKind) -> Any:
        if not 1 <= i < j <= self.n:
            raise IndexError(f"span ({i}, {j}) outside 1..{self.n}")
        return self.rows[kind][i][j - i - 1]

    @property
    def cell_count(self) -> int:
        return sum(len(row) for rows in self.rows.values() for row in rows[1:])


def _rule_splits(rule: ConcatRule, i: int, k: int) -> range:
    lo = i + min_width(rule.left)
    hi = k - min_width(rule.right)
    if max_width(rule.left) is not None:
        hi = min(hi, i + max_width(rule.left))
    if max_width(rule.right) is not None:
        lo = max(lo, k - max_width(rule.right))
    return range(lo, hi + 1)


def _arc(direction: Direction, i: int, j: int) -> tuple[int, int]:
    return (i, j) if direction is Direction.MIN_TO_MAX else (j, i)


def fill_chart(
    f: Family,
    n: int,
    weight: Optional[EdgeWeightFn] = None,
    semiring: Semiring = COUNTING,
    record_backpointers: bool = False,
) -> Chart:
    """Fill the chart of family `f` on vertices 1..n.

    `weight(src, dst)` scores each arc introduced by a cover rule; it
    defaults to the semiring's one, which makes the counting semiring
    count graphs.  Backpointers are only kept for selective semirings.
    """
    if n < 2:
        raise ValueError(f"chart filling needs n >= 2, got {n}")
    s = semiring
    zero, one = s.zero, s.one
    times, total = s.times, s.total
    if weight is None:
        weight = lambda u, v: one  # noqa: E731
    keep_bp = record_backpointers and s.selective

    rows = {kind: [None] + [[zero] * (n - i) for i in range(1, n + 1)] for kind in ALL_KINDS}
    # Column mirror of the right operands: cols[kind][k][i - 1] is (i, k, kind).
    right_kinds = {r.right for r in f.concat_rules}
    cols = {kind: [None] + [[zero] * (k - 1) for k in range(1, n + 1)] for kind in right_kinds}
    bp: dict = {} if keep_bp else None

    concat_by_out = {kind: [r for r in f.concat_rules if r.out is kind] for kind in ALL_KINDS}
    cover_by_out = {kind: [r for r in f.cover_rules if r.out is kind] for kind in ALL_KINDS}
    times_count = 0

    def put(i, k, kind, value):
        rows[kind][i][k - i - 1] = value
        if kind in cols:
            cols[kind][k][i - 1] = value

    for width in range(1, n):
        for i in range(1, n - width + 1):
            k = i + width
            for kind in _SPAN_ORDER:
                if kind not in f.kinds:
                    continue
                if width < min_width(kind) or (max_width(kind) is not None and width > max_width(kind)):
                    continue
                if kind is ItemKind.ELEMENTARY:
                    put(i, k, kind, one)
                    if keep_bp:
                        bp[i, k, kind] = (AXIOM, None)
                    continue

                best, best_bp = zero, None
                parts = []
                for rule in concat_by_out[kind]:
                    splits = _rule_splits(rule, i, k)
                    if not splits:
                        continue
                    left = rows[rule.left][i][splits.start - i - 1: splits.stop - i - 1]
                    right = cols[rule.right][k][splits.start - 1: splits.stop - 1]
                    times_count += len(splits)
                    if keep_bp:
                        products = list(map(times, left, right))
                        value = total(products)
                        if s.better(value, best):
                            best = value
                            best_bp = (rule.id, splits.start + products.index(value))
                    else:
                        parts.append(total(map(times, left, right)))
                for rule in cover_by_out[kind]:
                    value = times(rows[rule.source][i][k - i - 1], weight(*_arc(rule.direction, i, k)))
                    times_count += 1
                    if keep_bp:
                        if s.better(value, best):
                            best, best_bp = value, (rule.id, None)
                    else:
                        parts.append(value)

                if keep_bp:
                    put(i, k, kind, best)
                    if best_bp is not None:
                        bp[i, k, kind] = best_bp
                else:
                    put(i, k, kind, total(parts))

    return Chart(n, s, rows, bp, {"times": times_count})


def goal_value(chart: Chart, f: Family) -> Any:
    s = chart.semiring
    return s.total(chart.get(1, chart.n, kind) for kind in f.goal_kinds)


def backtrace(chart: Chart, f: Family) -> Derivation:
    """Recover the best derivation of a chart filled with backpointers.

    Among goal kinds with equal value the earliest in kind order wins;
    inside cells ties were already broken towards the lower rule id and
    then the smaller split vertex while filling.
    """
    if chart.backpointers is None:
        raise ValueError("chart was filled without backpointers")
    s = chart.semiring
    best_kind, best = None, s.zero
    for kind in f.goal_kinds:
        value = chart.get(1, chart.n, kind)
        if s.better(value, best):
            best_kind, best = kind, value
    if best_kind is None:
        raise ValueError("no member graph: goal value is zero")
    return _follow(chart.backpointers, f, best_kind, 1, chart.n)


def _follow(bp: dict, f: Family, kind: ItemKind, i: int, k: int) -> Derivation:
    rule_id, split = bp[i, k, kind]
    if rule_id == AXIOM:
        return Derivation(kind, i, k)
    rule = f.rule(rule_id)
    if isinstance(rule, CoverRule):
        child = _follow(bp, f, rule.source, i, k)
        return Derivation(kind, i, k, rule.id, None, (child,))
    left = _follow(bp, f, rule.left, i, split)
    right = _follow(bp, f, rule.right, split, k)
    return Derivation(kind, i, k, rule.id, split, (left, right))


def derivations(f: Family, n: int, cap: int = ENUMERATION_CAP) -> Iterator[Derivation]:
    """Yield every complete derivation of a goal item on 1..n.

    Order: goal kinds in kind order, then rules by id, then split vertex,
    recursively.  Items with no derivation are pruned using a counting
    chart so the generator never wanders into dead subtrees.
    """
    if not 2 <= n <= cap:
        raise ValueError(f"enumeration needs 2 <= n <= {cap}, got {n}")
    live = fill_chart(f, n, semiring=COUNTING)
    rules_by_out: dict = {kind: [] for kind in ALL_KINDS}
    for rule in sorted(f.concat_rules + f.cover_rules, key=lambda r: r.id):
        rules_by_out[rule.out].append(rule)

    memo: dict = {}

    def derive(kind, i, k):
        # Proper sub-spans are shared by many parents, so they are
        # materialized once; the full span stays lazy.
        if (i, k) == (1, n):
            return generate(kind, i, k)
        key = (kind, i, k)
        if key not in memo:
            memo[key] = list(generate(kind, i, k))
        return memo[key]

    def generate(kind, i, k):
        if not live.get(i, k, kind):
            return
        if kind is ItemKind.ELEMENTARY:
            yield Derivation(kind, i, k)
            return
        for rule in rules_by_out[kind]:
            if isinstance(rule, CoverRule):
                for child in derive(rule.source, i, k):
                    yield Derivation(kind, i, k, rule.id, None, (child,))
                continue
            for j in _rule_splits(rule, i, k):
                if not (live.get(i, j, rule.left) and live.get(j, k, rule.right)):
                    continue
                for left in derive(rule.left, i, j):
                    for right in derive(rule.right, j, k):
                        yield Derivation(kind, i, k, rule.id, j, (left, right))

    for kind in f.goal_kinds:
        yield from derive(kind, 1, n)


def realize(d: Derivation, f: Optional[Family] = None) -> Digraph:
    """The graph built by a derivation, relabelled onto 1..(j - i + 1).

    Concatenation adds no arcs, so the arcs are exactly those introduced
    by the cover nodes.  Rule directions are looked up in `f` when given,
    otherwise in the shared rule vocabulary (all families agree on what
    a given rule id adds).
    """
    offset = d.i - 1
    arcs = set()
    for node in d:
        if node.rule == AXIOM or node.split is not None:
            continue
        direction = _cover_direction(node.rule, f)
        arcs.add(_arc(direction, node.i - offset, node.j - offset))
    return Digraph(d.j - d.i + 1, frozenset(arcs))


def _cover_direction(rule_id: str, f: Optional[Family]) -> Direction:
    if f is not None:
        return f.rule(rule_id).direction
    from .families import family

    return family("digraph" if rule_id == "29a" else "acyclic").rule(rule_id).direction
