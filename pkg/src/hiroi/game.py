"""Linear two-player goishi hiroi: positions, legal sweeps, perfect play.

A position is a line of stones A^x B^y A^z: an outer block of x stones, a
middle block of y stones in the other color, and an outer block of z stones.
A move sweeps one or more consecutive same-colored stones off one block
(the sweep stops at a color change, and the player may stop early at will).
Gaps left behind are skipped when tracing, so once the middle block is empty
the two outer blocks act as a single run of x + z same-colored stones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .conventions import Convention, Outcome
from .tables import (
    DEFAULT_MAX_N,
    CapacityError,
    TableFunction,
    ValueTable,
    build_table,
)


class Position(NamedTuple):
    """Block sizes (x, y, z) of the stone line A^x B^y A^z."""

    x: int
    y: int
    z: int

    @property
    def total(self) -> int:
        return self.x + self.y + self.z

    def is_terminal(self) -> bool:
        return self.total == 0


def canonicalize(g: Position) -> Position:
    """Merge the outer blocks once the middle is empty: (x, 0, z) -> (x+z, 0, 0)."""
    if g.y == 0 and g.z > 0:
        return Position(g.x + g.z, 0, 0)
    return g


@dataclass(frozen=True)
class Move:
    """One sweep: the position it leaves behind plus a display description."""

    before: Position
    after: Position
    pickup: str


def _pickup(block: str, count: int) -> str:
    noun = "stone" if count == 1 else "stones"
    return f"sweep {count} {noun} from the {block}"


def iter_moves(g: Position) -> Iterator[Move]:
    """Legal sweeps of ``g`` in engine tie-break order.

    Middle-block reductions come first (increasing remaining count), then
    left-block, then right-block.  With the middle empty the outer blocks
    form one run, swept down to any smaller total and reported canonically
    as (total, 0, 0).
    """
    x, y, z = g
    if y > 0:
        for y2 in range(y):
            yield Move(g, Position(x, y2, z), _pickup("middle block", y - y2))
        for x2 in range(x):
            yield Move(g, Position(x2, y, z), _pickup("left block", x - x2))
        for z2 in range(z):
            yield Move(g, Position(x, y, z2), _pickup("right block", z - z2))
    else:
        for t in range(x + z):
            yield Move(g, Position(t, 0, 0), _pickup("outer run", x + z - t))


def moves(g: Position) -> list[Move]:
    """All legal sweeps as a list; every ``after`` is distinct."""
    return list(iter_moves(g))


_TABLE_FOR = {
    Convention.NORMAL: TableFunction.GM1,
    Convention.MISERE: TableFunction.GM1STAR,
}


class Engine:
    """Perfect play for both conventions, backed by the GM1/GM1STAR tables.

    A position (x, y, z) is a previous-player win exactly when y equals the
    convention's table value at (x, z) plus one; the winning strategy is to
    move onto such a position.  Tables grow on demand up to ``max_n``;
    ``prebuild=True`` builds both to full capacity up front so later queries
    never mutate shared state.
    """

    def __init__(self, max_n: int = DEFAULT_MAX_N, *, prebuild: bool = False):
        if max_n < 1:
            raise ValueError("max_n must be at least 1")
        self.max_n = max_n
        self._tables: dict[TableFunction, ValueTable] = {}
        if prebuild:
            for function in (TableFunction.GM1, TableFunction.GM1STAR):
                self._tables[function] = build_table(function, max_n, max_n=max_n)

    def table(self, convention: Convention, min_n: int = 1) -> ValueTable:
        """The convention's table, grown to cover at least ``min_n`` counts."""
        return self._grown(_TABLE_FOR[convention], min_n)

    def _grown(self, function: TableFunction, need: int) -> ValueTable:
        have = self._tables.get(function)
        if have is not None and have.n >= need:
            return have
        if need > self.max_n:
            raise CapacityError(f"block size {need - 1} exceeds capacity", self.max_n - 1)
        size = 16
        while size < need:
            size *= 2
        table = build_table(function, min(size, self.max_n), max_n=self.max_n)
        self._tables[function] = table
        return table

    def aux_value(self, g: Position, convention: Convention) -> int:
        """Table value at (x, z): the winning middle size minus one."""
        _check_counts(g)
        table = self._grown(_TABLE_FOR[convention], max(g.x, g.z) + 1)
        return table.value(g.x, g.z)

    def outcome(self, g: Position, convention: Convention) -> Outcome:
        """P when the middle block has exactly the table value plus one stones.

        With the middle empty the test degenerates: the -1 cells of each
        table sit exactly where an empty or single-stone run loses for the
        mover, so (x, 0, z) is P iff the run is empty (normal) or a single
        stone (misere).  Deciding that directly keeps merged runs up to
        twice the capacity answerable.
        """
        _check_counts(g)
        if g.y == 0:
            losing_run = 0 if convention is Convention.NORMAL else 1
            return Outcome.P if g.total == losing_run else Outcome.N
        aux = self.aux_value(g, convention)
        return Outcome.P if g.y == aux + 1 else Outcome.N

    def winning_move(self, g: Position, convention: Convention) -> Move | None:
        """First sweep in tie-break order that lands on a P position.

        None when ``g`` is already a P position, and at the terminal
        position, which has no sweeps at all.
        """
        if g.is_terminal() or self.outcome(g, convention) is Outcome.P:
            return None
        for move in iter_moves(g):
            if self.outcome(move.after, convention) is Outcome.P:
                return move
        raise AssertionError(f"N position {g} has no winning sweep")


def _check_counts(g: Position) -> None:
    if g.x < 0 or g.y < 0 or g.z < 0:
        raise ValueError(f"block sizes must be nonnegative, got {tuple(g)}")
