"""Bundled 12x12 reference tables, transcribed by hand and shipped as CSV.

These are the ground truth the generated tables are compared against; they
were typed in independently of the builder so transcription and generation
errors cannot cancel out.
"""

from __future__ import annotations

from importlib import resources

from .tables import TableFunction, ValueTable

REFERENCE_N = 12

_FILES = {
    TableFunction.G0: "g0.csv",
    TableFunction.G1: "g1.csv",
    TableFunction.GM1: "gm1.csv",
    TableFunction.GM1STAR: "gm1star.csv",
}


def reference_table(function: TableFunction) -> ValueTable:
    """The shipped 12x12 table for ``function``."""
    name = _FILES[function]
    text = resources.files(__package__).joinpath("data", name).read_text(encoding="ascii")
    cells = tuple(
        tuple(int(cell) for cell in line.split(","))
        for line in text.splitlines()
        if line.strip()
    )
    if len(cells) != REFERENCE_N or any(len(row) != REFERENCE_N for row in cells):
        raise ValueError(f"{name} is not a {REFERENCE_N}x{REFERENCE_N} table")
    return ValueTable(function, REFERENCE_N, cells)
