"""Shared fixtures: full-capacity tables and a prebuilt engine, built once."""

from __future__ import annotations

import pytest

from hiroi.conventions import Convention
from hiroi.game import Engine
from hiroi.tables import DEFAULT_MAX_N, TableFunction, ValueTable, build_table


@pytest.fixture(scope="session")
def engine() -> Engine:
    return Engine(max_n=DEFAULT_MAX_N, prebuild=True)


@pytest.fixture(scope="session")
def gm1_full(engine) -> ValueTable:
    return engine.table(Convention.NORMAL, DEFAULT_MAX_N)


@pytest.fixture(scope="session")
def gm1star_full(engine) -> ValueTable:
    return engine.table(Convention.MISERE, DEFAULT_MAX_N)


@pytest.fixture(scope="session")
def g0_full() -> ValueTable:
    return build_table(TableFunction.G0, DEFAULT_MAX_N)


@pytest.fixture(scope="session")
def g1_full() -> ValueTable:
    return build_table(TableFunction.G1, DEFAULT_MAX_N)
