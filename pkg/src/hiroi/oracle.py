"""Independent brute-force solvers used to cross-check the table-driven engine.

Everything here works on explicit finite game graphs and plain win/loss or
mex recursion, with no knowledge of the closed-form tables.  Keeping the two
code paths disjoint is the point: agreement between them is the evidence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .conventions import Convention, Outcome
from .game import Position, canonicalize, iter_moves
from .tables import CapacityError, mex

State = tuple[int, ...]


def _identity(state: State) -> State:
    return state


@dataclass(frozen=True)
class GameGraph:
    """A finite game: membership test, option function, optional canonicalizer.

    The option function must strictly decrease total stones, so play always
    terminates, and must stay inside the universe (checked at solve time).
    """

    name: str
    cap: int
    contains: Callable[[State], bool]
    options: Callable[[State], tuple[State, ...]]
    canonical: Callable[[State], State] = field(default=_identity)


class _Solver:
    """Shared memoized depth-first walk over a GameGraph (explicit stack)."""

    def __init__(self, graph: GameGraph):
        self.graph = graph
        self._options: dict[State, tuple[State, ...]] = {}

    def _canon(self, state: State) -> State:
        state = self.graph.canonical(tuple(state))
        if not self.graph.contains(state):
            raise CapacityError(
                f"state {state} is outside the {self.graph.name} graph", self.graph.cap
            )
        return state

    def _option_states(self, state: State) -> tuple[State, ...]:
        cached = self._options.get(state)
        if cached is None:
            canonical = self.graph.canonical
            cached = tuple(canonical(o) for o in self.graph.options(state))
            for option in cached:
                if not self.graph.contains(option):
                    raise ValueError(
                        f"{self.graph.name} graph is not closed: "
                        f"{state} has option {option} outside the universe"
                    )
            self._options[state] = cached
        return cached

    def _walk(self, start: State, memo: dict, combine) -> None:
        stack = [start]
        while stack:
            state = stack[-1]
            if state in memo:
                stack.pop()
                continue
            options = self._option_states(state)
            pending = [o for o in options if o not in memo]
            if pending:
                stack.extend(pending)
            else:
                memo[state] = combine(options, memo)
                stack.pop()


class OutcomeSolver(_Solver):
    """Win/loss by direct recursion: N iff some option is P.

    Terminal states are P under normal play and N under misere play; no
    Grundy theory is involved anywhere.
    """

    def __init__(self, graph: GameGraph, convention: Convention):
        super().__init__(graph)
        self.convention = convention
        self._memo: dict[State, Outcome] = {}
        self._terminal = Outcome.P if convention is Convention.NORMAL else Outcome.N

    def outcome(self, state: State) -> Outcome:
        state = self._canon(state)
        if state not in self._memo:
            self._walk(state, self._memo, self._combine)
        return self._memo[state]

    def _combine(self, options: tuple[State, ...], memo: dict) -> Outcome:
        if not options:
            return self._terminal
        if any(memo[o] is Outcome.P for o in options):
            return Outcome.N
        return Outcome.P


class GrundySolver(_Solver):
    """Normal-play Grundy values by direct mex-of-options recursion."""

    def __init__(self, graph: GameGraph):
        super().__init__(graph)
        self._memo: dict[State, int] = {}

    def grundy(self, state: State) -> int:
        state = self._canon(state)
        if state not in self._memo:
            self._walk(state, self._memo, self._combine)
        return self._memo[state]

    @staticmethod
    def _combine(options: tuple[State, ...], memo: dict) -> int:
        return mex(memo[o] for o in options)


def solve(state: State, graph: GameGraph, convention: Convention) -> Outcome:
    """One-off win/loss classification (fresh memo each call)."""
    return OutcomeSolver(graph, convention).outcome(state)


def grundy(state: State, graph: GameGraph) -> int:
    """One-off normal-play Grundy value (fresh memo each call)."""
    return GrundySolver(graph).grundy(state)


def nim_graph(piles: int, cap: int) -> GameGraph:
    """Plain nim on ``piles`` piles of at most ``cap`` stones each."""
    if piles < 1:
        raise ValueError("nim needs at least one pile")
    if cap < 0:
        raise ValueError("cap must be nonnegative")

    def contains(state: State) -> bool:
        return len(state) == piles and all(0 <= s <= cap for s in state)

    def options(state: State) -> tuple[State, ...]:
        out = []
        for i, pile in enumerate(state):
            for smaller in range(pile):
                out.append(state[:i] + (smaller,) + state[i + 1 :])
        return tuple(out)

    return GameGraph(f"{piles}-pile nim", cap, contains, options)


def forbidden_nim_graph(forbidden: Iterable[State], cap: int) -> GameGraph:
    """Two-pile nim with every move into ``forbidden`` deleted.

    The forbidden states stay in the universe; they just become unreachable.
    With {(0,0)} forbidden, (0,1) and (1,0) have no options at all; with
    {(0,1),(1,0)} forbidden, the same happens one step later at (1,1).
    """
    banned = frozenset(tuple(s) for s in forbidden)
    for state in banned:
        if len(state) != 2 or not all(0 <= s <= cap for s in state):
            raise ValueError(f"forbidden state {state} is not a two-pile state within cap {cap}")

    def contains(state: State) -> bool:
        return len(state) == 2 and all(0 <= s <= cap for s in state)

    def options(state: State) -> tuple[State, ...]:
        x, y = state
        out = [(x2, y) for x2 in range(x) if (x2, y) not in banned]
        out.extend((x, y2) for y2 in range(y) if (x, y2) not in banned)
        return tuple(out)

    return GameGraph("forbidden-move nim", cap, contains, options)


def goishi_graph(cap: int) -> GameGraph:
    """The stone-line game on canonical states with blocks of at most ``cap``.

    Canonical states are (x, y, z) with a nonempty middle block, or a merged
    run (t, 0, 0).  Merged runs go up to 2*cap so the universe stays closed
    when two full outer blocks collapse together.
    """
    if cap < 0:
        raise ValueError("cap must be nonnegative")

    def contains(state: State) -> bool:
        if len(state) != 3 or any(s < 0 for s in state):
            return False
        x, y, z = state
        if y == 0:
            return z == 0 and x <= 2 * cap
        return x <= cap and y <= cap and z <= cap

    def options(state: State) -> tuple[State, ...]:
        g = Position(*state)
        return tuple(tuple(move.after) for move in iter_moves(g))

    def canonical(state: State) -> State:
        return tuple(canonicalize(Position(*state)))

    return GameGraph("stone-line", cap, contains, options, canonical)
