"""Promotion on staircase tableaux and the map to reduced words.

One promotion step: delete the maximal entry at its corner, slide the hole
to (1,1) by repeatedly pulling in the larger of the left and upper
neighbors, add 1 to every entry, and write 1 into (1,1).  Reading off the
max-cell letter before each of the n^2 promotions spells a reduced word of
the longest signed permutation; the first letter is the offset statistic S.
"""

from __future__ import annotations

import numpy as np

from . import _fastpath
from .coxeter import Word
from .sampling import resolve_engine
from .shapes import StrictPartition
from .tableaux import ShiftedTableau, max_cell, validate


def staircase_rank(shape: StrictPartition) -> int:
    """n for the n-row staircase; rejects every other shape."""
    n = len(shape)
    if n == 0 or shape.parts != tuple(range(2 * n - 1, 0, -2)):
        raise ValueError(f"{shape.parts} is not a staircase shape")
    return n


def _checked_rank(t: ShiftedTableau) -> int:
    n = staircase_rank(t.shape)
    report = validate(t)
    if not report:
        raise ValueError(f"invalid tableau: {report.reason} at cell {report.cell}")
    return n


def _find_label(rows: list[list[int]], label: int) -> tuple[int, int]:
    for i, row in enumerate(rows, start=1):
        for off, v in enumerate(row):
            if v == label:
                return i, i + off
    raise ValueError(f"label {label} not found")


def _slide_hole(rows: list[list[int]], i: int, j: int) -> None:
    """Pull larger neighbors into the hole at (i, j) until it reaches (1,1).

    Every non-(1,1) cell of a staircase has a left neighbor (when j-1 >= i)
    or an upper neighbor (when i >= 2), so the loop terminates there.
    """
    while (i, j) != (1, 1):
        has_left = j - 1 >= i
        has_up = i >= 2
        if has_left and has_up:
            take_left = rows[i - 1][j - 1 - i] > rows[i - 2][j - (i - 1)]
        else:
            take_left = has_left
        if take_left:
            rows[i - 1][j - i] = rows[i - 1][j - 1 - i]
            j -= 1
        else:
            rows[i - 1][j - i] = rows[i - 2][j - (i - 1)]
            i -= 1
    rows[0][0] = 0


def promote(t: ShiftedTableau) -> ShiftedTableau:
    """One promotion step; input and output are both valid staircase SYT."""
    n = _checked_rank(t)
    rows = t.to_lists()
    i, j = _find_label(rows, n * n)
    _slide_hole(rows, i, j)
    return ShiftedTableau([[v + 1 for v in row] for row in rows], t.shape)


def first_letter(t: ShiftedTableau) -> int:
    """The offset S with the max label at (n-S, n+S); no promotion needed."""
    n = _checked_rank(t)
    i, j = max_cell(t)
    if i + j != 2 * n:
        raise AssertionError(f"max cell {(i, j)} left the anti-diagonal")
    return (j - i) // 2


def tableau_to_word(t: ShiftedTableau, engine: str = "auto") -> Word:
    """Letters of the max cell under n^2 successive promotions.

    Emits (j - i) / 2 for the max cell of the current tableau, then
    promotes; the first letter equals first_letter(t).
    """
    n = _checked_rank(t)
    engine = resolve_engine(engine)
    m = n * n
    if engine == "jit":
        flat = np.concatenate([np.asarray(r, dtype=np.int32) for r in t.rows])
        offsets = np.zeros(n + 1, dtype=np.int64)
        np.cumsum([len(r) for r in t.rows], out=offsets[1:])
        letters = np.empty(m, dtype=np.int32)
        _fastpath._promotion_word(flat, offsets, n, letters)
        return Word(tuple(int(q) for q in letters), n)
    rows = t.to_lists()
    letters = []
    for _ in range(m):
        i, j = _find_label(rows, m)
        letters.append((j - i) // 2)
        _slide_hole(rows, i, j)
        for row in rows:
            for off in range(len(row)):
                row[off] += 1
    return Word(tuple(letters), n)
