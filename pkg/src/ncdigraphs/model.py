"""Digraphs on the vertices 1..n and their structural predicates.

Vertices are always drawn in order along a line (or a circle), so the
only geometry that matters is the order of the endpoints of each arc.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Iterable, Tuple

Arc = Tuple[int, int]


class GraphClass(enum.Enum):
    MIN_MAX_COVERED = "minmax-covered"
    MAX_MIN_COVERED = "maxmin-covered"
    MIN_MAX_CONNECTED = "minmax-connected"
    MAX_MIN_CONNECTED = "maxmin-connected"
    MIX_CONNECTED = "mix-connected"
    ELEMENTARY = "elementary"
    UNCONNECTED = "unconnected"

    def __str__(self) -> str:
        return self.value

    def reversed(self) -> GraphClass:
        """The class of the graph obtained by flipping every arc."""
        return _REVERSED.get(self, self)


_REVERSED = {
    GraphClass.MIN_MAX_COVERED: GraphClass.MAX_MIN_COVERED,
    GraphClass.MAX_MIN_COVERED: GraphClass.MIN_MAX_COVERED,
    GraphClass.MIN_MAX_CONNECTED: GraphClass.MAX_MIN_CONNECTED,
    GraphClass.MAX_MIN_CONNECTED: GraphClass.MIN_MAX_CONNECTED,
}


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: FrozenSet[Arc] = frozenset()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"vertex count must be positive, got {self.n}")
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        for u, v in arcs:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"arc ({u}, {v}) out of range 1..{self.n}")
        object.__setattr__(self, "arcs", arcs)

    @classmethod
    def of(cls, n: int, arcs: Iterable[Arc] = ()) -> Digraph:
        return cls(n, frozenset(arcs))

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    def reverse(self) -> Digraph:
        return Digraph(self.n, frozenset((v, u) for u, v in self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.sorted_arcs()})"


def _span(arc: Arc) -> Arc:
    u, v = arc
    return (u, v) if u < v else (v, u)


def is_noncrossing(g: Digraph) -> bool:
    spans = {_span(a) for a in g.arcs}
    for (a, b), (c, d) in combinations(spans, 2):
        if a < c < b < d or c < a < d < b:
            return False
    return True


def _successors(g: Digraph) -> dict[int, list[int]]:
    succ: dict[int, list[int]] = {v: [] for v in range(1, g.n + 1)}
    for u, v in g.arcs:
        succ[u].append(v)
    return succ


def is_acyclic(g: Digraph) -> bool:
    # Kahn's algorithm: acyclic iff every vertex gets removed.
    indegree = {v: 0 for v in range(1, g.n + 1)}
    for _, v in g.arcs:
        indegree[v] += 1
    succ = _successors(g)
    stack = [v for v, d in indegree.items() if d == 0]
    removed = 0
    while stack:
        u = stack.pop()
        removed += 1
        for v in succ[u]:
            indegree[v] -= 1
            if indegree[v] == 0:
                stack.append(v)
    return removed == g.n


def has_path(g: Digraph, source: int, target: int) -> bool:
    """Directed reachability from `source` to `target` (a vertex reaches itself)."""
    succ = _successors(g)
    seen = {source}
    stack = [source]
    while stack:
        u = stack.pop()
        if u == target:
            return True
        for v in succ[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return False


def _weak_component(g: Digraph, start: int) -> set[int]:
    neighbours: dict[int, set[int]] = {v: set() for v in range(1, g.n + 1)}
    for u, v in g.arcs:
        neighbours[u].add(v)
        neighbours[v].add(u)
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in neighbours[u] - seen:
            seen.add(v)
            stack.append(v)
    return seen


def is_weakly_connected(g: Digraph) -> bool:
    return len(_weak_component(g, 1)) == g.n


def classify(g: Digraph, allow_antiparallel: bool = False) -> GraphClass:
    """Return the class of a graph with at least two vertices.

    Covering arcs are checked first. Otherwise the graph counts as
    connected when its extremal vertices share a weak component (inner
    vertices may still be isolated), and the direction of a path
    between them picks the connected subclass.

    Both covering arcs together form a 2-cycle and raise, unless
    `allow_antiparallel` is set, in which case the graph is reported as
    minmax-covered (the convention of the unrestricted family).
    """
    n = g.n
    if n < 2:
        raise ValueError("classification needs at least 2 vertices")
    forward = (1, n) in g.arcs
    backward = (n, 1) in g.arcs
    if forward and backward and not allow_antiparallel:
        raise ValueError("both covering arcs present (2-cycle)")
    if forward:
        return GraphClass.MIN_MAX_COVERED
    if backward:
        return GraphClass.MAX_MIN_COVERED
    if n in _weak_component(g, 1):
        if has_path(g, 1, n):
            return GraphClass.MIN_MAX_CONNECTED
        if has_path(g, n, 1):
            return GraphClass.MAX_MIN_CONNECTED
        return GraphClass.MIX_CONNECTED
    if n == 2:
        return GraphClass.ELEMENTARY
    return GraphClass.UNCONNECTED
