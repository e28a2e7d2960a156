"""Classical nim facts: XOR Grundy values and the two-pile misere outcome."""

from __future__ import annotations

from functools import reduce
from operator import xor
from typing import Sequence

from .conventions import Outcome
from .tables import DEFAULT_MAX_N, TableFunction, ValueTable, build_table


def nim_grundy(piles: Sequence[int]) -> int:
    """Grundy value of a nim position: the XOR over all pile sizes."""
    if any(p < 0 for p in piles):
        raise ValueError("pile sizes must be nonnegative")
    return reduce(xor, piles, 0)


def nim_outcome_normal(piles: Sequence[int]) -> Outcome:
    """Normal-play outcome: P exactly when the XOR of the piles is zero."""
    return Outcome.P if nim_grundy(piles) == 0 else Outcome.N


def misere_two_pile_outcome(
    x: int, y: int, table: ValueTable | None = None
) -> Outcome:
    """Outcome of two-pile nim under misere play, read off the GM1 table.

    Misere two-pile nim behaves like normal play with moves to (0, 0)
    forbidden, which is exactly the game GM1 tabulates; (x, y) is a previous
    player win precisely where GM1 is zero.  Without an explicit ``table`` a
    fresh one is built just large enough for the query.
    """
    if x < 0 or y < 0:
        raise ValueError("pile sizes must be nonnegative")
    if table is None:
        table = build_table(TableFunction.GM1, max(x, y) + 1, max_n=DEFAULT_MAX_N)
    elif table.function is not TableFunction.GM1:
        raise ValueError(f"need a GM1 table, got {table.function.value}")
    return Outcome.P if table.value(x, y) == 0 else Outcome.N
