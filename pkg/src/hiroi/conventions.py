"""Winning conventions and outcome classes for impartial play."""

from enum import Enum


class Convention(Enum):
    """Who wins when the last stone leaves the board.

    NORMAL: the player who makes the last move wins.
    MISERE: the player who makes the last move loses.
    """

    NORMAL = "normal"
    MISERE = "misere"


class Outcome(Enum):
    """P: the previous player (the one who just moved) wins; N: the next player wins."""

    P = "P"
    N = "N"
