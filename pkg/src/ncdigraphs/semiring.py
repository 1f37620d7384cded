"""The weight domains the chart can be filled over."""

from __future__ import annotations

import operator
from dataclasses import dataclass
from functools import reduce
from typing import Any, Callable, Iterable, Optional

# Max-plus "unreachable": below every finite score and absorbing under +.
UNREACHABLE = float("-inf")


@dataclass(frozen=True)
class Semiring:
    name: str
    zero: Any
    one: Any
    plus: Callable[[Any, Any], Any]
    times: Callable[[Any, Any], Any]
    # A plus that always returns one of its arguments (max, or, ...).
    selective: bool = False
    # Optional fast n-ary plus; must agree with folding `plus` from zero.
    _total: Optional[Callable[[Iterable[Any]], Any]] = None

    def total(self, values: Iterable[Any]) -> Any:
        if self._total is not None:
            return self._total(values)
        return reduce(self.plus, values, self.zero)

    def better(self, candidate: Any, incumbent: Any) -> bool:
        """True when a selective plus would pick `candidate` over `incumbent`.

        Ties keep the incumbent, so the first instance seen wins.
        """
        return self.plus(incumbent, candidate) != incumbent


def _max_total(values: Iterable[float]) -> float:
    return max(values, default=UNREACHABLE)


COUNTING = Semiring("counting", 0, 1, operator.add, operator.mul, False, sum)

MAX_PLUS = Semiring("max-plus", UNREACHABLE, 0.0, max, operator.add, True, _max_total)

BOOLEAN = Semiring("boolean", False, True, operator.or_, operator.and_, True, any)


# Lexicographic max-plus over (score, -number of arcs): among equal scores
# the sparser graph wins.  Weights must be given as (score, -1).
_LEX_ZERO = (UNREACHABLE, 0)


def _lex_times(a, b):
    if a[0] == UNREACHABLE or b[0] == UNREACHABLE:
        return _LEX_ZERO
    return (a[0] + b[0], a[1] + b[1])


def _lex_total(values):
    return max(values, default=_LEX_ZERO)


MAX_PLUS_FEWEST_ARCS = Semiring(
    "max-plus (fewest arcs on ties)", _LEX_ZERO, (0.0, 0), max, _lex_times, True, _lex_total
)
