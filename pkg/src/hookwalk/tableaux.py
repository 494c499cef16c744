"""Standard Young tableaux of shifted shape.

A tableau assigns the labels 1..m bijectively to the m cells of a shifted
diagram so that rows increase left to right and columns increase top to
bottom.  Entries are stored as ragged rows (one array per diagram row).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .shapes import Cell, StrictPartition, count_syt, remove_cell, removable_cells


class ShiftedTableau:
    """Immutable labeling of a shifted diagram.

    Construction only checks that the row lengths match the shape (the shape
    may be omitted and is then inferred from the row lengths); whether the
    labels actually form a standard tableau is the job of :func:`validate`.
    """

    __slots__ = ("shape", "rows")

    def __init__(self, rows, shape: StrictPartition | None = None):
        rows = tuple(np.asarray(r, dtype=np.int64).reshape(-1) for r in rows)
        if shape is None:
            shape = StrictPartition(len(r) for r in rows)
        else:
            lengths = tuple(len(r) for r in rows)
            if lengths != shape.parts:
                raise ValueError(
                    f"row lengths {lengths} do not match shape {shape.parts}"
                )
        for r in rows:
            r.flags.writeable = False
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("ShiftedTableau is immutable")

    @property
    def size(self) -> int:
        return self.shape.size

    def entry(self, cell: Cell) -> int:
        """Label at cell (i, j); row i starts at column i."""
        i, j = cell
        if cell not in self.shape:
            raise ValueError(f"cell {cell} is not in the shape {self.shape.parts}")
        return int(self.rows[i - 1][j - i])

    def to_lists(self) -> list[list[int]]:
        return [r.tolist() for r in self.rows]

    def reading_word(self) -> tuple[int, ...]:
        """Row-reading word: rows concatenated top to bottom."""
        return tuple(int(x) for r in self.rows for x in r)

    def __eq__(self, other):
        if not isinstance(other, ShiftedTableau):
            return NotImplemented
        return self.shape == other.shape and all(
            np.array_equal(a, b) for a, b in zip(self.rows, other.rows)
        )

    def __hash__(self):
        return hash((self.shape, b"".join(r.tobytes() for r in self.rows)))

    def __repr__(self):
        return f"ShiftedTableau({self.to_lists()!r})"


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of validate(); falsy when a violation was found."""

    ok: bool
    cell: Cell | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def validate(t: ShiftedTableau) -> ValidationReport:
    """Check bijectivity onto 1..m, then row, then column monotonicity.

    Returns a report naming the first offending cell in that phase order;
    within a phase cells are scanned row by row, left to right.
    """
    m = t.size
    if m == 0:
        return ValidationReport(True)
    flat = np.concatenate(t.rows) if t.rows else np.empty(0, dtype=np.int64)
    in_range = (flat >= 1) & (flat <= m)
    counts = np.bincount(flat[in_range], minlength=m + 1)
    if not in_range.all() or (counts[1:] != 1).any():
        seen = set()
        for i in range(1, len(t.shape) + 1):
            row = t.rows[i - 1]
            for off, v in enumerate(row.tolist()):
                cell = (i, i + off)
                if not 1 <= v <= m:
                    return ValidationReport(False, cell, f"label {v} out of range 1..{m}")
                if v in seen:
                    return ValidationReport(False, cell, f"label {v} duplicated")
                seen.add(v)
        raise AssertionError("unreachable: bincount disagreed with scan")
    for i, row in enumerate(t.rows, start=1):
        bad = np.flatnonzero(np.diff(row) <= 0)
        if bad.size:
            off = int(bad[0]) + 1
            return ValidationReport(False, (i, i + off), "row not increasing")
    for i in range(1, len(t.shape)):
        upper, lower = t.rows[i - 1], t.rows[i]
        # row i+1 spans columns i+1 .. row_end(i+1); it sits fully under row i
        overlap = min(len(lower), len(upper) - 1)
        bad = np.flatnonzero(lower[:overlap] <= upper[1 : overlap + 1])
        if bad.size:
            off = int(bad[0])
            return ValidationReport(False, (i + 1, i + 1 + off), "column not increasing")
    return ValidationReport(True)


def max_cell(t: ShiftedTableau) -> Cell:
    """The cell carrying the maximal label m."""
    m = t.size
    if m == 0:
        raise ValueError("empty tableau has no maximal cell")
    for i, row in enumerate(t.rows, start=1):
        hits = np.flatnonzero(row == m)
        if hits.size:
            return (i, i + int(hits[0]))
    raise ValueError(f"label {m} not present; tableau is not standard")


def enumerate_syt(shape: StrictPartition, max_cells: int = 16) -> list[ShiftedTableau]:
    """All standard tableaux of the shape, sorted by row-reading word.

    Backtracks over the placements of m, m-1, ..., 1 into removable corners,
    mirroring the counting recurrence.  Deliberately refuses large shapes:
    this is an enumeration oracle, not a sampler.
    """
    m = shape.size
    if m > max_cells:
        raise ValueError(
            f"enumerate_syt is capped at {max_cells} cells (shape has {m}); "
            "use the hook walk sampler for large shapes"
        )
    if m == 0:
        return [ShiftedTableau([], shape)]

    entries: dict[Cell, int] = {}
    found: list[ShiftedTableau] = []

    def build() -> ShiftedTableau:
        rows = [
            [entries[(i, j)] for j in range(i, shape.row_end(i) + 1)]
            for i in range(1, len(shape) + 1)
        ]
        return ShiftedTableau(rows, shape)

    def place(current: StrictPartition, label: int) -> None:
        if label == 0:
            found.append(build())
            return
        for c in removable_cells(current):
            entries[c] = label
            place(remove_cell(current, c), label - 1)
            del entries[c]

    place(shape, m)
    found.sort(key=ShiftedTableau.reading_word)
    assert len(found) == count_syt(shape)
    return found
