"""Edge-factored score tables and decoding results."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping

from .model import Arc, Digraph


@dataclass(frozen=True)
class ScoreTable:
    """Per-arc scores on vertices 1..n; unlisted arcs score 0.0."""

    n: int
    scores: Mapping[Arc, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"vertex count must be positive, got {self.n}")
        for (u, v), score in self.scores.items():
            if u == v or not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"invalid arc ({u}, {v}) for n={self.n}")
            if not math.isfinite(score):
                raise ValueError(f"score for ({u}, {v}) is not finite")

    def __call__(self, u: int, v: int) -> float:
        return float(self.scores.get((u, v), 0.0))

    def score(self, g: Digraph) -> float:
        # fsum is exact, so the result does not depend on arc order.
        return math.fsum(self(u, v) for u, v in g.arcs)


@dataclass(frozen=True)
class DecodeResult:
    graph: Digraph
    score: float
