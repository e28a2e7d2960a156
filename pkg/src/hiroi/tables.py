"""Seeded mex recurrences over pairs of counts.

Four variants of the same dynamic program: every non-seeded cell (x, y) is the
mex of all values earlier in its row and earlier in its column.  They differ
only in which cells are pinned to fixed base values:

    G0       (0,0) -> 0     two-pile nim Grundy values (equals x XOR y)
    G1       (0,0) -> 1     terminal revalued to 1
    GM1      (0,0) -> -1    nim where moving to (0,0) is forbidden
    GM1STAR  (0,0) -> 0,    nim where moving to (0,1) or (1,0) is forbidden
             (0,1) -> -1,
             (1,0) -> -1

The -1 seeds participate in the recurrence but are invisible to mex, which
ranges over nonnegative integers only.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

DEFAULT_MAX_N = 512


class CapacityError(ValueError):
    """A query or build request went past the configured size limit."""

    def __init__(self, message: str, limit: int):
        super().__init__(f"{message} (limit {limit})")
        self.limit = limit


def mex(values: Iterable[int]) -> int:
    """Smallest nonnegative integer not in ``values``.

    Negative entries are allowed and ignored; the empty collection gives 0.
    """
    present = {v for v in values if v >= 0}
    m = 0
    while m in present:
        m += 1
    return m


class TableFunction(Enum):
    """One of the four seed choices for the two-pile mex recurrence."""

    G0 = "G0"
    G1 = "G1"
    GM1 = "GM1"
    GM1STAR = "GM1STAR"

    @property
    def seeds(self) -> dict[tuple[int, int], int]:
        """Cells fixed to base values instead of being computed."""
        return dict(_SEEDS[self])


_SEEDS = {
    TableFunction.G0: {(0, 0): 0},
    TableFunction.G1: {(0, 0): 1},
    TableFunction.GM1: {(0, 0): -1},
    TableFunction.GM1STAR: {(0, 0): 0, (0, 1): -1, (1, 0): -1},
}


@dataclass(frozen=True)
class ValueTable:
    """Completed n x n table of one seeded mex function.

    Immutable once built; -1 appears only at seeded cells.  Rows are indexed
    by x, columns by y.
    """

    function: TableFunction
    n: int
    cells: tuple[tuple[int, ...], ...]

    def value(self, x: int, y: int) -> int:
        if not (0 <= x < self.n and 0 <= y < self.n):
            raise IndexError(
                f"({x}, {y}) is outside the built {self.n}x{self.n} {self.function.value} table"
            )
        return self.cells[x][y]


def build_table(
    function: TableFunction, n: int, *, max_n: int = DEFAULT_MAX_N
) -> ValueTable:
    """Fill the n x n table for ``function`` row by row.

    Row and column contents are tracked as bitmasks with one bit per
    nonnegative value seen, so each cell costs a handful of word operations:
    the mex of a cell is the lowest zero bit of (column mask | row mask).
    Equivalent to scanning the row and column prefixes with a fresh mark
    array per cell, but fast enough to stay interactive at the default
    512 x 512 capacity.
    """
    if n < 1:
        raise ValueError("table size must be at least 1")
    if n > max_n:
        raise CapacityError(f"table size {n} exceeds capacity", max_n)
    seeds = _SEEDS[function]
    col_bits = [0] * n
    rows: list[tuple[int, ...]] = []
    for x in range(n):
        row: list[int] = []
        row_bits = 0
        for y in range(n):
            v = seeds.get((x, y))
            if v is None:
                combined = col_bits[y] | row_bits
                v = ((combined + 1) & ~combined).bit_length() - 1
            row.append(v)
            if v >= 0:
                bit = 1 << v
                col_bits[y] |= bit
                row_bits |= bit
            else:
                # nothing below -1 can ever appear: mex results are >= 0 and
                # the only negative seed value is -1
                assert v == -1, f"seed value {v} below -1 at ({x}, {y})"
        rows.append(tuple(row))
    return ValueTable(function, n, tuple(rows))
