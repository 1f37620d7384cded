"""Tabulation of noncrossing digraphs: counting, enumeration and decoding."""

from .analyses import count, count_by_class, decode
from .engine import Chart, Derivation, backtrace, derivations, fill_chart, goal_value, realize
from .families import FAMILY_NAMES, Direction, Family, ItemKind, family, validate_family
from .model import (
    Digraph,
    GraphClass,
    classify,
    is_acyclic,
    is_noncrossing,
    is_weakly_connected,
)
from .oracle import oracle_best, oracle_count, oracle_enumerate
from .scores import DecodeResult, ScoreTable
from .semiring import BOOLEAN, COUNTING, MAX_PLUS, Semiring

__all__ = [
    "BOOLEAN", "COUNTING", "Chart", "DecodeResult", "Derivation", "Digraph",
    "Direction", "FAMILY_NAMES", "Family", "GraphClass", "ItemKind", "MAX_PLUS",
    "ScoreTable", "Semiring", "backtrace", "classify", "count", "count_by_class",
    "decode", "derivations", "family", "fill_chart", "goal_value", "is_acyclic",
    "is_noncrossing", "is_weakly_connected", "oracle_best", "oracle_count",
    "oracle_enumerate", "realize", "validate_family",
]
