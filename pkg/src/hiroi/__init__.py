"""Exact solver for linear two-player goishi hiroi.

The game is played on a line of stones A^x B^y A^z; a move sweeps any
positive number of stones off one end of one same-colored block, and empty
middles make the outer blocks merge.  Four seeded mex tables decide every
position in O(1) after an O(n^2) build, under both normal and misere play,
and brute-force solvers verify the whole construction on demand.
"""

from .conventions import Convention, Outcome
from .game import Engine, Move, Position, canonicalize, iter_moves, moves
from .nim import misere_two_pile_outcome, nim_grundy, nim_outcome_normal
from .tables import (
    DEFAULT_MAX_N,
    CapacityError,
    TableFunction,
    ValueTable,
    build_table,
    mex,
)

__all__ = [
    "CapacityError",
    "Convention",
    "DEFAULT_MAX_N",
    "Engine",
    "Move",
    "Outcome",
    "Position",
    "TableFunction",
    "ValueTable",
    "build_table",
    "canonicalize",
    "iter_moves",
    "mex",
    "misere_two_pile_outcome",
    "moves",
    "nim_grundy",
    "nim_outcome_normal",
]

__version__ = "0.1.0"
