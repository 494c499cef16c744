"""Strict partitions and their shifted Young diagrams.

A strict partition is a strictly decreasing sequence of positive integers
``parts = (p1 > p2 > ... > pk)``.  Its shifted diagram is the set of cells
``(i, j)`` with ``1 <= i <= k`` and ``i <= j <= p_i + i - 1``: row ``i`` is
indented ``i - 1`` steps.  All coordinates are 1-based ``(row, column)``
pairs.

Counting uses the shifted hook length formula: the number of standard
Young tableaux of a shifted shape with ``m`` cells is ``m!`` divided by the
product of all shifted hook lengths.
"""

from __future__ import annotations

import math
from functools import total_ordering

Cell = tuple[int, int]


@total_ordering
class StrictPartition:
    """A strictly decreasing positive integer sequence, alias its shifted diagram.

    Immutable; the empty partition is allowed and denotes the empty diagram.
    """

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        for p in parts:
            if p < 1:
                raise ValueError(f"parts must be positive integers, got {p}")
        for a, b in zip(parts, parts[1:]):
            if a <= b:
                raise ValueError(
                    f"parts must be strictly decreasing, got {a} followed by {b}"
                )
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("StrictPartition is immutable")

    def __repr__(self):
        return f"StrictPartition{self.parts!r}"

    def __eq__(self, other):
        return isinstance(other, StrictPartition) and self.parts == other.parts

    def __lt__(self, other):
        return self.parts < other.parts

    def __hash__(self):
        return hash(self.parts)

    def __len__(self):
        """Number of rows."""
        return len(self.parts)

    def __bool__(self):
        return bool(self.parts)

    @property
    def size(self) -> int:
        """Total number of cells."""
        return sum(self.parts)

    def row_end(self, i: int) -> int:
        """Last column of row i, i.e. p_i + i - 1."""
        return self.parts[i - 1] + i - 1

    def __contains__(self, cell: Cell) -> bool:
        i, j = cell
        return 1 <= i <= len(self.parts) and i <= j <= self.row_end(i)

    def cells(self):
        """Iterate cells row by row, left to right."""
        for i in range(1, len(self.parts) + 1):
            for j in range(i, self.row_end(i) + 1):
                yield (i, j)

    def column_count(self, j: int) -> int:
        """Number of cells in column j.

        Row ends are weakly decreasing, so the rows meeting column j form a
        prefix; the count is capped at j because row i starts at column i.
        """
        t = 0
        for i in range(1, min(j, len(self.parts)) + 1):
            if self.row_end(i) >= j:
                t = i
            else:
                break
        return t

    def column_counts(self) -> list[int]:
        """column_count for every column, one pass; 1-based (slot 0 unused)."""
        if not self.parts:
            return []
        width = self.parts[0]
        counts = [0] * (width + 1)  # 1-based
        for i in range(1, len(self.parts) + 1):
            for j in range(i, self.row_end(i) + 1):
                counts[j] += 1
        return counts


def staircase(n: int) -> StrictPartition:
    """The shifted staircase (2n-1, 2n-3, ..., 3, 1), with n^2 cells."""
    if n < 1:
        raise ValueError(f"staircase rank must be >= 1, got {n}")
    return StrictPartition(range(2 * n - 1, 0, -2))


def _require_cell(shape: StrictPartition, cell: Cell) -> None:
    if cell not in shape:
        raise ValueError(f"cell {cell} is not in the diagram of {shape.parts}")


def hook_cells(shape: StrictPartition, cell: Cell) -> set[Cell]:
    """The shifted hook of a cell.

    Union of three sets: the rest of the row to the right (arm), the rest of
    the column below (leg), and, when the diagram has a row j+1, all of that
    row.  The leg can only reach row j+1's territory through the diagonal
    cell (j, j), so the union is the usual "hook that turns at the diagonal".
    Includes the cell itself.
    """
    _require_cell(shape, cell)
    i, j = cell
    hook: set[Cell] = {(i, jj) for jj in range(j, shape.row_end(i) + 1)}
    for ii in range(i, len(shape.parts) + 1):
        if (ii, j) in shape:
            hook.add((ii, j))
        else:
            break
    if j + 1 <= len(shape.parts):
        hook.update((j + 1, jj) for jj in range(j + 1, shape.row_end(j + 1) + 1))
    return hook


def hook_length(shape: StrictPartition, cell: Cell) -> int:
    """Shifted hook length, computed arithmetically (no set expansion).

    Equals arm + leg + 1 + (length of row j+1 if it exists), where
    arm = p_i + i - 1 - j and leg = number of diagram cells below (i, j)
    in column j.
    """
    _require_cell(shape, cell)
    i, j = cell
    arm = shape.row_end(i) - j
    leg = shape.column_count(j) - i
    broken = shape.parts[j] if j + 1 <= len(shape.parts) else 0
    return arm + leg + 1 + broken


def _hook_lengths_all(shape: StrictPartition) -> list[int]:
    """Hook lengths of all cells, row by row, in O(m) total."""
    k = len(shape.parts)
    counts = shape.column_counts()
    hooks = []
    for i in range(1, k + 1):
        end = shape.row_end(i)
        for j in range(i, end + 1):
            broken = shape.parts[j] if j + 1 <= k else 0
            hooks.append((end - j) + (counts[j] - i) + 1 + broken)
    return hooks


def count_syt(shape: StrictPartition) -> int:
    """Exact number of standard Young tableaux of the shifted shape.

    Arbitrary-precision: staircase counts overflow 64-bit integers already
    around rank 5.  The empty shape counts 1.
    """
    m = shape.size
    return math.factorial(m) // math.prod(_hook_lengths_all(shape))


def log_count_syt(shape: StrictPartition) -> float:
    """Natural log of count_syt, as a float.  For display at large sizes."""
    m = shape.size
    return math.lgamma(m + 1) - sum(math.log(h) for h in _hook_lengths_all(shape))


def removable_cells(shape: StrictPartition) -> list[Cell]:
    """Cells whose removal leaves a strict partition, in row order.

    These are exactly the cells of hook length 1: the last cell of row i
    qualifies iff i is the last row or the gap to the next part is >= 2.
    """
    if not shape:
        raise ValueError("the empty diagram has no removable cells")
    parts = shape.parts
    k = len(parts)
    out = []
    for i in range(1, k + 1):
        if i == k or parts[i - 1] - parts[i] >= 2:
            out.append((i, shape.row_end(i)))
    return out


def remove_cell(shape: StrictPartition, cell: Cell) -> StrictPartition:
    """Shape with one removable corner deleted; a part reaching 0 is dropped."""
    if cell not in removable_cells(shape):
        raise ValueError(f"cell {cell} is not removable from {shape.parts}")
    i = cell[0]
    parts = list(shape.parts)
    parts[i - 1] -= 1
    if parts[i - 1] == 0:
        parts.pop()
    return StrictPartition(parts)


def strict_partitions(m: int):
    """Yield every strict partition of exactly m, largest part first."""
    if m < 0:
        raise ValueError("m must be nonnegative")

    def rec(remaining, max_part, prefix):
        if remaining == 0:
            yield StrictPartition(prefix)
            return
        for p in range(min(remaining, max_part), 0, -1):
            # smaller parts below p must fit: 1+2+...+(p-1) >= remaining - p
            yield from rec(remaining - p, p - 1, prefix + [p])

    yield from rec(m, m, [])
