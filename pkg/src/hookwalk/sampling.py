"""Uniform random shifted tableaux via Sagan's hook walk.

A walk starts at a uniform cell and, while the current cell's hook length
exceeds 1, jumps to a uniform cell of the hook minus the current cell; it
stops at a corner.  Filling labels m, m-1, ..., 1 by repeated walks on the
shrinking shape yields a uniform standard tableau.

Both engines (interpreted and compiled) consume the random stream through
the exact same protocol: below(m) to pick the start cell in row-major
order, then below(h-1) per hop with candidates ordered arm, leg, broken
row.  Outputs are therefore bitwise identical for a given (seed, stream).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _fastpath
from .rng import RandomStream
from .shapes import Cell, StrictPartition, removable_cells
from .tableaux import ShiftedTableau


def resolve_engine(engine: str) -> str:
    if engine == "auto":
        return "jit" if _fastpath.HAS_JIT else "python"
    if engine == "jit":
        if not _fastpath.HAS_JIT:
            raise RuntimeError("compiled engine requested but numba is unavailable")
        return "jit"
    if engine == "python":
        return "python"
    raise ValueError(f"unknown engine {engine!r}; expected auto, python, or jit")


@dataclass(frozen=True)
class CornerHistogram:
    """Tally of hook-walk outcomes over the removable cells of a shape."""

    shape: StrictPartition
    counts: dict[Cell, int]
    total: int

    def __post_init__(self):
        if sum(self.counts.values()) != self.total:
            raise ValueError("histogram counts do not sum to the total")
        allowed = set(removable_cells(self.shape))
        if not set(self.counts) <= allowed:
            raise ValueError("histogram key is not a removable cell")


def _padded_column_counts(shape: StrictPartition) -> list[int]:
    # colc[j] = rows covering column j; already 1-based, add one spare slot
    return shape.column_counts() + [0]


def _walk_py(parts, colc, k_cur, i, j, rng: RandomStream):
    """Reference walk; mirrors the compiled kernel hop for hop."""
    while True:
        arm = parts[i - 1] + i - 1 - j
        leg = colc[j] - i
        broken = parts[j] if j < k_cur else 0
        h = arm + leg + 1 + broken
        if h == 1:
            return i, j
        r = rng.below(h - 1)
        if r < arm:
            j = j + 1 + r
        elif r < arm + leg:
            i = i + 1 + (r - arm)
        else:
            off = r - arm - leg
            i, j = j + 1, j + 1 + off


def _start_cell(parts, m_cur, rng: RandomStream):
    idx = rng.below(m_cur)
    i = 1
    while idx >= parts[i - 1]:
        idx -= parts[i - 1]
        i += 1
    return i, i + idx


def hook_walk(shape: StrictPartition, rng: RandomStream) -> Cell:
    """One walk on the full shape; returns the terminal corner."""
    if not shape:
        raise ValueError("hook walk needs a nonempty shape")
    parts = list(shape.parts)
    colc = _padded_column_counts(shape)
    i, j = _start_cell(parts, shape.size, rng)
    return _walk_py(parts, colc, len(parts), i, j, rng)


def sample_syt(
    shape: StrictPartition, rng: RandomStream, engine: str = "auto"
) -> ShiftedTableau:
    """Uniform standard tableau of the shape."""
    if not shape:
        raise ValueError("cannot sample a tableau of the empty shape")
    engine = resolve_engine(engine)
    k = len(shape)
    offsets = [0]
    for p in shape.parts:
        offsets.append(offsets[-1] + p)
    if engine == "jit":
        row_len = np.array(shape.parts, dtype=np.int64)
        col_cnt = np.array(_padded_column_counts(shape), dtype=np.int64)
        off = np.array(offsets, dtype=np.int64)
        flat = np.zeros(shape.size, dtype=np.int32)
        state = _fastpath._fill_tableau(row_len, col_cnt, off, flat, np.uint64(rng.getstate()))
        rng.setstate(int(state))
        rows = [flat[off[i] : off[i + 1]] for i in range(k)]
        return ShiftedTableau(rows, shape)
    parts = list(shape.parts)
    colc = _padded_column_counts(shape)
    rows = [[0] * p for p in shape.parts]
    k_cur, m_cur = k, shape.size
    for label in range(shape.size, 0, -1):
        i, j = _start_cell(parts, m_cur, rng)
        i, j = _walk_py(parts, colc, k_cur, i, j, rng)
        rows[i - 1][j - i] = label
        parts[i - 1] -= 1
        colc[j] -= 1
        if parts[i - 1] == 0:
            k_cur -= 1
        m_cur -= 1
    return ShiftedTableau(rows, shape)


def corner_distribution_empirical(
    shape: StrictPartition, samples: int, rng: RandomStream, engine: str = "auto"
) -> CornerHistogram:
    """Histogram of hook_walk outcomes; deterministic given (seed, stream)."""
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    engine = resolve_engine(engine)
    corners = removable_cells(shape)
    if engine == "jit":
        row_len = np.array(shape.parts, dtype=np.int64)
        col_cnt = np.array(_padded_column_counts(shape), dtype=np.int64)
        counts = np.zeros(len(shape), dtype=np.int64)
        state = _fastpath._corner_walks(
            row_len, col_cnt, len(shape), shape.size, samples, counts, np.uint64(rng.getstate())
        )
        rng.setstate(int(state))
        tally = {c: int(counts[c[0] - 1]) for c in corners}
    else:
        tally = {c: 0 for c in corners}
        for _ in range(samples):
            tally[hook_walk(shape, rng)] += 1
    return CornerHistogram(shape, tally, samples)
