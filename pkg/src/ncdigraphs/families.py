"""Rule tables for the five supported graph families.

Each family is plain data: the item kinds it uses, its binary
concatenation rules, its unary cover rules and the kinds whose values
at the full span are summed into the answer.  The engine interprets
the tables; nothing here knows about semirings.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import FrozenSet, Tuple

from .model import GraphClass

ItemKind = GraphClass

R = ItemKind.MIN_MAX_COVERED
L = ItemKind.MAX_MIN_COVERED
SR = ItemKind.MIN_MAX_CONNECTED
SL = ItemKind.MAX_MIN_CONNECTED
SM = ItemKind.MIX_CONNECTED
H = ItemKind.ELEMENTARY
U = ItemKind.UNCONNECTED

ALL_KINDS: Tuple[ItemKind, ...] = tuple(ItemKind)
COVERED_KINDS = frozenset({R, L})

FAMILY_NAMES = (
    "acyclic",
    "connected-acyclic",
    "digraph",
    "undirected",
    "connected-undirected",
)


class Direction(enum.Enum):
    MIN_TO_MAX = "min-to-max"
    MAX_TO_MIN = "max-to-min"


def min_width(kind: ItemKind) -> int:
    """Smallest span width j - i an item of this kind can have."""
    if kind in COVERED_KINDS or kind is H:
        return 1
    return 2


def max_width(kind: ItemKind) -> int | None:
    return 1 if kind is H else None


@dataclass(frozen=True)
class ConcatRule:
    id: str
    left: ItemKind
    right: ItemKind
    out: ItemKind


@dataclass(frozen=True)
class CoverRule:
    id: str
    source: ItemKind
    direction: Direction
    out: ItemKind


@dataclass(frozen=True)
class Family:
    name: str
    kinds: FrozenSet[ItemKind]
    concat_rules: Tuple[ConcatRule, ...]
    cover_rules: Tuple[CoverRule, ...]
    goal_kinds: Tuple[ItemKind, ...]
    # Kinds that are legitimately never derivable in this family.
    unreachable: FrozenSet[ItemKind] = field(default=frozenset())

    def rule(self, rule_id: str) -> ConcatRule | CoverRule:
        for r in self.concat_rules + self.cover_rules:
            if r.id == rule_id:
                return r
        raise KeyError(rule_id)

    def rule_ids(self) -> list[str]:
        return [r.id for r in self.concat_rules + self.cover_rules]


def _concat(*rows: tuple[str, ItemKind, ItemKind, ItemKind]) -> tuple[ConcatRule, ...]:
    return tuple(ConcatRule(*row) for row in rows)


_CONCAT = _concat(
    # two covered graphs
    ("01", R, R, SR),
    ("02", L, L, SL),
    ("03", R, L, SM),
    ("04", L, R, SM),
    # covered graph and the elementary graph
    ("05", R, H, U),
    ("06", H, R, U),
    ("07", L, H, U),
    ("08", H, L, U),
    # connected graph and covered graph
    ("09", SR, R, SR),
    ("10", SR, L, SM),
    ("11", SL, R, SM),
    ("12", SL, L, SL),
    ("13", SM, R, SM),
    ("14", SM, L, SM),
    # connected graph and the elementary graph
    ("15", SR, H, U),
    ("16", SL, H, U),
    ("17", SM, H, U),
    # onto an unconnected graph
    ("18", U, R, U),
    ("19", U, L, U),
    ("20", U, H, U),
    ("20e", H, H, U),
)

_COVER = (
    CoverRule("21", SR, Direction.MIN_TO_MAX, R),
    CoverRule("22", SM, Direction.MIN_TO_MAX, R),
    CoverRule("23", U, Direction.MIN_TO_MAX, R),
    CoverRule("24", SL, Direction.MAX_TO_MIN, L),
    CoverRule("25", SM, Direction.MAX_TO_MIN, L),
    CoverRule("26", U, Direction.MAX_TO_MIN, L),
    CoverRule("27e", H, Direction.MIN_TO_MAX, R),
    CoverRule("28e", H, Direction.MAX_TO_MIN, L),
)

_ANTIPARALLEL = CoverRule("29a", L, Direction.MIN_TO_MAX, R)


def _without(rules, ids):
    return tuple(r for r in rules if r.id not in ids)


def _acyclic() -> Family:
    return Family(
        name="acyclic",
        kinds=frozenset(ALL_KINDS),
        concat_rules=_CONCAT,
        cover_rules=_COVER,
        goal_kinds=ALL_KINDS,
    )


def _connected_acyclic() -> Family:
    base = _acyclic()
    return replace(
        base,
        name="connected-acyclic",
        concat_rules=_without(base.concat_rules, {"20", "20e"}),
        goal_kinds=tuple(k for k in ALL_KINDS if k not in (U, H)),
    )


def _digraph() -> Family:
    concat = []
    for r in _without(_CONCAT, {"09", "10", "11", "12", "15", "16"}):
        if r.id in ("01", "02"):
            r = replace(r, out=SM)
        concat.append(r)
    cover = _without(_COVER, {"21", "24"})
    # Order matters within a span: 29a reads the finished maxmin cell.
    cover = cover + (_ANTIPARALLEL,)
    kinds = frozenset(ALL_KINDS) - {SR, SL}
    return Family(
        name="digraph",
        kinds=kinds,
        concat_rules=tuple(concat),
        cover_rules=cover,
        goal_kinds=tuple(k for k in ALL_KINDS if k in kinds),
    )


def _undirected() -> Family:
    base = _acyclic()
    return replace(
        base,
        name="undirected",
        cover_rules=_without(base.cover_rules, {"24", "25", "26", "28e"}),
        unreachable=frozenset({L, SL, SM}),
    )


def _connected_undirected() -> Family:
    base = _undirected()
    return replace(
        base,
        name="connected-undirected",
        concat_rules=_without(base.concat_rules, {"20", "20e"}),
        goal_kinds=tuple(k for k in ALL_KINDS if k not in (U, H)),
    )


_BUILDERS = {
    "acyclic": _acyclic,
    "connected-acyclic": _connected_acyclic,
    "digraph": _digraph,
    "undirected": _undirected,
    "connected-undirected": _connected_undirected,
}
_CACHE: dict[str, Family] = {}


def family(name: str) -> Family:
    """Look up a family's rule table by name."""
    if name not in _BUILDERS:
        raise ValueError(
            f"unknown family {name!r}; expected one of {', '.join(FAMILY_NAMES)}"
        )
    if name not in _CACHE:
        _CACHE[name] = _BUILDERS[name]()
    return _CACHE[name]


def validate_family(f: Family, max_n: int = 6) -> list[str]:
    """Check the structural invariants of a rule table.

    Returns human-readable diagnostics; an empty list means the table is
    consistent and every goal kind not listed as unreachable gets a
    nonzero count for some n <= `max_n`.
    """
    problems = []
    ids = f.rule_ids()
    for rid in sorted({i for i in ids if ids.count(i) > 1}):
        problems.append(f"duplicate rule id {rid!r}")

    for r in f.concat_rules:
        for role, kind in (("left", r.left), ("right", r.right), ("out", r.out)):
            if kind not in f.kinds:
                problems.append(f"rule {r.id}: {role} kind {kind} not in family kinds")
        if r.out in COVERED_KINDS:
            problems.append(f"rule {r.id}: concatenation cannot produce covered kind {r.out}")
        if r.out is H:
            problems.append(f"rule {r.id}: concatenation cannot produce the elementary kind")
    for r in f.cover_rules:
        for role, kind in (("source", r.source), ("out", r.out)):
            if kind not in f.kinds:
                problems.append(f"rule {r.id}: {role} kind {kind} not in family kinds")
        if r.out not in COVERED_KINDS:
            problems.append(f"rule {r.id}: cover must produce a covered kind, not {r.out}")
        expected = R if r.direction is Direction.MIN_TO_MAX else L
        if r.out is not expected and r is not _ANTIPARALLEL and r.id != _ANTIPARALLEL.id:
            problems.append(f"rule {r.id}: direction {r.direction.value} disagrees with {r.out}")
    for kind in f.goal_kinds:
        if kind not in f.kinds:
            problems.append(f"goal kind {kind} not in family kinds")
    if problems:
        return problems

    from .engine import fill_chart
    from .semiring import COUNTING

    seen: set[ItemKind] = set()
    for n in range(2, max_n + 1):
        chart = fill_chart(f, n, semiring=COUNTING)
        seen.update(k for k in f.goal_kinds if chart.get(1, n, k))
    for kind in f.goal_kinds:
        if kind not in seen and kind not in f.unreachable:
            problems.append(f"goal kind {kind} never derivable for n <= {max_n}")
    return problems
