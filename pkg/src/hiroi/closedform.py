"""Closed-form membership tests for the small table values.

Each value class k in {0,1,2,3} of GM1 (the A classes) and of GM1STAR (the
B classes) is a periodic family of (x, y) pairs plus a finite exceptional
set.  Families are stored as offset lists: (dx, dy) with period p and floor
n0 describes the pairs (p*n + dx, p*n + dy) for all n >= n0.  Membership is
O(1) arithmetic; nothing here consults the tables, so agreement with them
is a real check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tables import CapacityError, TableFunction, ValueTable


@dataclass(frozen=True)
class ValueClass:
    """All (x, y) where one table function takes one fixed value."""

    function: TableFunction
    k: int
    period: int
    n_min: int
    offsets: tuple[tuple[int, int], ...]
    exceptions: frozenset[tuple[int, int]]

    def contains(self, x: int, y: int) -> bool:
        if (x, y) in self.exceptions:
            return True
        for dx, dy in self.offsets:
            n, rem = divmod(x - dx, self.period)
            if rem == 0 and n >= self.n_min and y == self.period * n + dy:
                return True
        return False


_DIAGONAL = ((0, 0),)
_NEXT_TO_DIAGONAL_BELOW = ((0, -1), (-1, 0))
_NEXT_TO_DIAGONAL_ABOVE = ((0, 1), (1, 0))

# The k=3 families of GM1 and GM1STAR happen to coincide; they are spelled
# out twice on purpose so each transcription stands on its own.
_A_CLASSES = (
    ValueClass(TableFunction.GM1, 0, 1, 2, _DIAGONAL, frozenset({(0, 1), (1, 0)})),
    ValueClass(
        TableFunction.GM1, 1, 2, 2, _NEXT_TO_DIAGONAL_BELOW, frozenset({(0, 2), (1, 1), (2, 0)})
    ),
    ValueClass(
        TableFunction.GM1,
        2,
        2,
        2,
        _NEXT_TO_DIAGONAL_ABOVE,
        frozenset({(0, 3), (1, 2), (2, 1), (3, 0)}),
    ),
    ValueClass(
        TableFunction.GM1,
        3,
        4,
        2,
        ((-2, 0), (-1, 1), (0, -2), (1, -1)),
        frozenset({(0, 4), (1, 3), (2, 5), (3, 1), (4, 0), (5, 2)}),
    ),
)

_B_CLASSES = (
    ValueClass(TableFunction.GM1STAR, 0, 1, 0, _DIAGONAL, frozenset()),
    ValueClass(
        TableFunction.GM1STAR,
        1,
        2,
        2,
        _NEXT_TO_DIAGONAL_ABOVE,
        frozenset({(0, 2), (1, 3), (2, 0), (3, 1)}),
    ),
    ValueClass(
        TableFunction.GM1STAR,
        2,
        4,
        1,
        ((2, 0), (3, 1), (0, 2), (1, 3)),
        frozenset({(0, 3), (1, 2), (2, 1), (3, 0)}),
    ),
    ValueClass(
        TableFunction.GM1STAR,
        3,
        4,
        2,
        ((-2, 0), (-1, 1), (0, -2), (1, -1)),
        frozenset({(0, 4), (1, 5), (2, 3), (3, 2), (4, 0), (5, 1)}),
    ),
)


def _pick(classes: tuple[ValueClass, ...], k: int) -> ValueClass:
    if not 0 <= k <= 3:
        raise ValueError(f"no closed form for value {k}, only 0..3")
    return classes[k]


def in_A(k: int, x: int, y: int) -> bool:
    """True iff GM1(x, y) = k according to the closed form."""
    return _pick(_A_CLASSES, k).contains(x, y)


def in_B(k: int, x: int, y: int) -> bool:
    """True iff GM1STAR(x, y) = k according to the closed form."""
    return _pick(_B_CLASSES, k).contains(x, y)


def block_symmetric(table: ValueTable, bound: int) -> bool:
    """Check GM1STAR's 2x2 block structure over all n, m <= bound.

    Every block {2n, 2n+1} x {2m, 2m+1} must carry equal values on its two
    diagonals: (2n,2m)=(2n+1,2m+1) and (2n+1,2m)=(2n,2m+1).
    """
    if table.function is not TableFunction.GM1STAR:
        raise ValueError(f"block symmetry is a GM1STAR property, got {table.function.name}")
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if 2 * bound + 1 >= table.n:
        raise CapacityError(f"bound {bound} needs a table larger than {table.n}", (table.n - 2) // 2)
    value = table.value
    for n in range(bound + 1):
        for m in range(bound + 1):
            if value(2 * n, 2 * m) != value(2 * n + 1, 2 * m + 1):
                return False
            if value(2 * n + 1, 2 * m) != value(2 * n, 2 * m + 1):
                return False
    return True
