"""Verification sweeps: recompute everything two ways and diff the results.

Each check pits a fast code path (tables, closed forms, the theorem-driven
engine) against an independent slow one (bundled fixtures, brute-force
solvers) and reports every disagreement.  A passing sweep is the machine
half of the correctness argument; the fixed caps keep the brute-force side
tractable.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Any, Iterable

from . import closedform, fixtures, oracle
from .conventions import Convention
from .game import Engine, Position
from .nim import misere_two_pile_outcome
from .tables import DEFAULT_MAX_N, TableFunction, ValueTable, build_table

CHECK_NAMES = ("tables", "theorems", "closedform", "symmetry", "oracle-grundy")

# Brute-force sweeps clamp to these regardless of --max; beyond them the
# oracle side stops being quick enough for a command-line round trip.
THEOREM_CAP = 25
FORBIDDEN_CAP = 60
MISERE_NIM_CAP = 40


@dataclass(frozen=True)
class Mismatch:
    inputs: tuple
    expected: Any
    actual: Any


@dataclass(frozen=True)
class VerifyReport:
    """Result of one named check: what ranged, what disagreed, how long."""

    name: str
    tested: str
    mismatches: tuple[Mismatch, ...]
    elapsed: float

    @property
    def passed(self) -> bool:
        return not self.mismatches


def run_checks(
    checks: Iterable[str] = CHECK_NAMES,
    *,
    max_coord: int = THEOREM_CAP,
    max_n: int = DEFAULT_MAX_N,
) -> list[VerifyReport]:
    """Run the named checks and return one report each, in canonical order.

    ``max_coord`` bounds sweep coordinates where a check has no cheaper cap
    of its own; it never grows a check past its clamp or past table capacity.
    """
    chosen = set(checks)
    unknown = chosen - set(CHECK_NAMES)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}; pick from {CHECK_NAMES}")
    if max_coord < 0:
        raise ValueError("max must be nonnegative")

    runners = {
        "tables": _check_tables,
        "theorems": _check_theorems,
        "closedform": _check_closedform,
        "symmetry": _check_symmetry,
        "oracle-grundy": _check_oracle_grundy,
    }
    reports = []
    for name in CHECK_NAMES:
        if name not in chosen:
            continue
        start = time.perf_counter()
        tested, mismatches = runners[name](max_coord, max_n)
        elapsed = time.perf_counter() - start
        reports.append(VerifyReport(name, tested, tuple(mismatches), elapsed))
    return reports


def _check_tables(max_coord: int, max_n: int) -> tuple[str, list[Mismatch]]:
    """Every generated table matches its hand-transcribed fixture cell-for-cell."""
    n = fixtures.REFERENCE_N
    mismatches = []
    for function in TableFunction:
        generated = build_table(function, n, max_n=max_n)
        reference = fixtures.reference_table(function)
        for x in range(n):
            for y in range(n):
                expected = reference.value(x, y)
                actual = generated.value(x, y)
                if actual != expected:
                    mismatches.append(Mismatch((function.value, x, y), expected, actual))
    return f"{len(TableFunction) * n * n} cells ({n}x{n}, all four functions)", mismatches


def _check_theorems(max_coord: int, max_n: int) -> tuple[str, list[Mismatch]]:
    """Engine classification equals brute-force solve, both conventions."""
    cap = min(max_coord, THEOREM_CAP, max_n - 1)
    engine = Engine(max_n=max_n)
    graph = oracle.goishi_graph(cap)
    mismatches = []
    for convention in Convention:
        solver = oracle.OutcomeSolver(graph, convention)
        for x in range(cap + 1):
            for y in range(cap + 1):
                for z in range(cap + 1):
                    g = Position(x, y, z)
                    expected = solver.outcome(tuple(g))
                    actual = engine.outcome(g, convention)
                    if actual is not expected:
                        mismatches.append(
                            Mismatch((x, y, z, convention.value), expected.value, actual.value)
                        )
    positions = (cap + 1) ** 3
    return f"{positions} positions x 2 conventions (coordinates <= {cap})", mismatches


def _check_closedform(max_coord: int, max_n: int) -> tuple[str, list[Mismatch]]:
    """Membership predicates agree with table values for k in 0..3."""
    cap = min(max_coord, max_n - 1)
    gm1 = build_table(TableFunction.GM1, cap + 1, max_n=max_n)
    gm1star = build_table(TableFunction.GM1STAR, cap + 1, max_n=max_n)
    mismatches = []
    for x in range(cap + 1):
        for y in range(cap + 1):
            value_a = gm1.value(x, y)
            value_b = gm1star.value(x, y)
            for k in range(4):
                in_a = closedform.in_A(k, x, y)
                if in_a != (value_a == k):
                    mismatches.append(Mismatch(("A", k, x, y), value_a == k, in_a))
                in_b = closedform.in_B(k, x, y)
                if in_b != (value_b == k):
                    mismatches.append(Mismatch(("B", k, x, y), value_b == k, in_b))
    pairs = (cap + 1) ** 2
    return f"{pairs} pairs x 8 classes (coordinates <= {cap})", mismatches


def _check_symmetry(max_coord: int, max_n: int) -> tuple[str, list[Mismatch]]:
    """GM1STAR carries equal values on both diagonals of every 2x2 block."""
    bound = min(max_coord, (max_n - 2) // 2)
    table = build_table(TableFunction.GM1STAR, 2 * bound + 2, max_n=max_n)
    mismatches = []
    for n in range(bound + 1):
        for m in range(bound + 1):
            main_a = table.value(2 * n, 2 * m)
            main_b = table.value(2 * n + 1, 2 * m + 1)
            if main_a != main_b:
                mismatches.append(Mismatch((2 * n, 2 * m), main_a, main_b))
            anti_a = table.value(2 * n + 1, 2 * m)
            anti_b = table.value(2 * n, 2 * m + 1)
            if anti_a != anti_b:
                mismatches.append(Mismatch((2 * n + 1, 2 * m), anti_a, anti_b))
    blocks = (bound + 1) ** 2
    return f"{blocks} blocks (n, m <= {bound})", mismatches


def _check_oracle_grundy(max_coord: int, max_n: int) -> tuple[str, list[Mismatch]]:
    """Forbidden-move nim semantics of GM1/GM1STAR, plus the misere nim rule.

    Moves into (0,0) forbidden: Grundy values equal GM1 away from the seed.
    Moves into (0,1)/(1,0) forbidden: values equal GM1STAR away from both
    seeds.  And plain two-pile misere nim is a previous-player win exactly
    where GM1 is zero.
    """
    cap = min(max_coord, FORBIDDEN_CAP, max_n - 1)
    mismatches = []
    comparisons = (
        (TableFunction.GM1, frozenset({(0, 0)})),
        (TableFunction.GM1STAR, frozenset({(0, 1), (1, 0)})),
    )
    for function, forbidden in comparisons:
        table = build_table(function, cap + 1, max_n=max_n)
        solver = oracle.GrundySolver(oracle.forbidden_nim_graph(forbidden, cap))
        for x in range(cap + 1):
            for y in range(cap + 1):
                if (x, y) in forbidden:
                    continue
                expected = solver.grundy((x, y))
                actual = table.value(x, y)
                if actual != expected:
                    mismatches.append(Mismatch((function.value, x, y), expected, actual))

    nim_cap = min(max_coord, MISERE_NIM_CAP, max_n - 1)
    gm1 = build_table(TableFunction.GM1, nim_cap + 1, max_n=max_n)
    solver = oracle.OutcomeSolver(oracle.nim_graph(2, nim_cap), Convention.MISERE)
    for x in range(nim_cap + 1):
        for y in range(nim_cap + 1):
            expected = solver.outcome((x, y))
            actual = misere_two_pile_outcome(x, y, gm1)
            if actual is not expected:
                mismatches.append(Mismatch(("misere-nim", x, y), expected.value, actual.value))
    pairs = 2 * ((cap + 1) ** 2) + (nim_cap + 1) ** 2
    return f"{pairs} pairs (forbidden-move <= {cap}, misere nim <= {nim_cap})", mismatches
