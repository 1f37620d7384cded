"""Counting and decoding on top of the chart engine."""

from __future__ import annotations

from .engine import backtrace, fill_chart, goal_value, realize
from .families import family
from .model import Digraph, GraphClass
from .scores import DecodeResult, ScoreTable
from .semiring import COUNTING, MAX_PLUS_FEWEST_ARCS

__all__ = ["DecodeResult", "ScoreTable", "count", "count_by_class", "decode"]


def count(family_name: str, n: int) -> int:
    """Exact number of members of a family on n vertices.

    The single-vertex graph is the only member for n = 1 in every family.
    """
    f = family(family_name)
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if n == 1:
        return 1
    return goal_value(fill_chart(f, n, semiring=COUNTING), f)


def count_by_class(family_name: str, n: int) -> dict[GraphClass, int]:
    """Count at the full span for each of the seven classes.

    Classes that are not goal kinds of the family still report their
    chart value (it just isn't part of the family's total).
    """
    f = family(family_name)
    if n < 2:
        raise ValueError(f"per-class counts need n >= 2, got {n}")
    chart = fill_chart(f, n, semiring=COUNTING)
    return {kind: chart.get(1, n, kind) for kind in GraphClass}


def decode(family_name: str, table: ScoreTable) -> DecodeResult:
    """Highest-scoring member of the family under an edge-factored score.

    Equal scores are resolved towards fewer arcs, then towards the lower
    rule id and smaller split vertex, so an all-zero table decodes to the
    empty graph.
    """
    f = family(family_name)
    if table.n == 1:
        return DecodeResult(Digraph(1), 0.0)
    chart = fill_chart(
        f,
        table.n,
        weight=lambda u, v: (table(u, v), -1),
        semiring=MAX_PLUS_FEWEST_ARCS,
        record_backpointers=True,
    )
    graph = realize(backtrace(chart, f), f)
    return DecodeResult(graph, table.score(graph))
