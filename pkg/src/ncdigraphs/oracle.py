"""Brute-force enumeration of family members for small n.

This deliberately shares nothing with the chart engine: it walks every
assignment of a state to each vertex pair and keeps the graphs that
pass the structural predicates.
"""

from __future__ import annotations

from functools import lru_cache
from math import fsum
from itertools import combinations, product

from .families import FAMILY_NAMES
from .model import Digraph, is_acyclic, is_noncrossing, is_weakly_connected
from .scores import DecodeResult, ScoreTable

ORACLE_CAP = 5
UNDIRECTED_ORACLE_CAP = 6

# Per-pair states for a pair u < v.
NONE, FORWARD, BACKWARD, BOTH = range(4)

_UNDIRECTED = ("undirected", "connected-undirected")


def oracle_cap(family: str) -> int:
    return UNDIRECTED_ORACLE_CAP if family in _UNDIRECTED else ORACLE_CAP


def _check(family: str, n: int) -> None:
    if family not in FAMILY_NAMES:
        raise ValueError(f"unknown family {family!r}")
    cap = oracle_cap(family)
    if not 1 <= n <= cap:
        raise ValueError(f"oracle for {family} needs 1 <= n <= {cap}, got {n}")


def is_member(family: str, g: Digraph) -> bool:
    """Whether `g` satisfies the defining predicates of `family`."""
    if not is_noncrossing(g):
        return False
    if family in _UNDIRECTED:
        if any(u > v for u, v in g.arcs):
            return False
    elif family != "digraph" and not is_acyclic(g):
        return False
    if family.startswith("connected-"):
        return is_weakly_connected(g)
    return True


def _pairs(n):
    return list(combinations(range(1, n + 1), 2))


def _arcs(pairs, states):
    arcs = []
    for (u, v), state in zip(pairs, states):
        if state in (FORWARD, BOTH):
            arcs.append((u, v))
        if state in (BACKWARD, BOTH):
            arcs.append((v, u))
    return arcs


@lru_cache(maxsize=None)
def _members(family: str, n: int) -> tuple:
    pairs = _pairs(n)
    used_states = (FORWARD,) if family in _UNDIRECTED else (FORWARD, BACKWARD, BOTH)
    found = []
    # Crossing depends only on which pairs are used, so supports that
    # already cross are skipped before directions are assigned.
    for support in product((False, True), repeat=len(pairs)):
        chosen = [p for p, on in zip(pairs, support) if on]
        if not is_noncrossing(Digraph(n, frozenset(chosen))):
            continue
        for dirs in product(used_states, repeat=len(chosen)):
            it = iter(dirs)
            states = tuple(next(it) if on else NONE for on in support)
            g = Digraph(n, frozenset(_arcs(pairs, states)))
            if is_member(family, g):
                found.append((states, g))
    found.sort(key=lambda item: item[0])
    return tuple(g for _, g in found)


def oracle_members(family: str, n: int) -> tuple[Digraph, ...]:
    """Members in canonical order: lexicographic in the per-pair state vector."""
    _check(family, n)
    return _members(family, n)


def oracle_enumerate(family: str, n: int) -> set[Digraph]:
    return set(oracle_members(family, n))


def oracle_count(family: str, n: int) -> int:
    return len(oracle_members(family, n))


def oracle_best(family: str, table: ScoreTable) -> DecodeResult:
    """The first member in canonical order with the highest total score."""
    members = oracle_members(family, table.n)
    if not members:
        raise ValueError(f"family {family} has no member on {table.n} vertices")
    get = table.scores.get
    best, best_score = None, None
    for g in members:
        score = fsum([get(a, 0.0) for a in g.arcs])
        if best is None or score > best_score:
            best, best_score = g, score
    return DecodeResult(best, float(best_score))
