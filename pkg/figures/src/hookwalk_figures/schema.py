"""Strict readers for the hookwalk CSV export schemas.

These figures are pure consumers: the only coupling to the producer is the
file format, so every reader validates the header verbatim and the row
shape, and refuses files with no data rows.  All failures raise SchemaError.

    frequency     letter,count,normalized
    trajectories  t,card,y
    snapshot      position,card,sign
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np


class SchemaError(ValueError):
    """Input file does not conform to a hookwalk export schema."""


def _read_rows(path, expected_header: list[str]) -> list[list[str]]:
    try:
        with open(path, newline="") as f:
            reader = csv.reader(f)
            try:
                header = next(reader)
            except StopIteration:
                raise SchemaError(f"{path}: empty file, expected header "
                                  f"{','.join(expected_header)}") from None
            if header != expected_header:
                raise SchemaError(
                    f"{path}: header {','.join(header)!r} does not match "
                    f"schema {','.join(expected_header)!r}"
                )
            rows = list(reader)
    except OSError as exc:
        raise SchemaError(f"{path}: {exc}") from None
    if not rows:
        raise SchemaError(f"{path}: no data rows")
    width = len(expected_header)
    for lineno, row in enumerate(rows, start=2):
        if len(row) != width:
            raise SchemaError(f"{path}:{lineno}: expected {width} fields, "
                              f"got {len(row)}")
    return rows


def _column(path, rows, index: int, cast):
    try:
        return np.array([cast(row[index]) for row in rows])
    except ValueError as exc:
        raise SchemaError(f"{path}: non-numeric field: {exc}") from None


@dataclass(frozen=True)
class FrequencyTable:
    """Letter histogram of one word; letters are 0..n-1 in order."""

    letters: np.ndarray
    counts: np.ndarray
    normalized: np.ndarray

    @property
    def n(self) -> int:
        return len(self.letters)


def read_frequency(path) -> FrequencyTable:
    rows = _read_rows(path, ["letter", "count", "normalized"])
    letters = _column(path, rows, 0, int)
    counts = _column(path, rows, 1, int)
    normalized = _column(path, rows, 2, float)
    if letters.tolist() != list(range(len(letters))):
        raise SchemaError(f"{path}: letters must be 0..n-1 in order")
    if (counts < 0).any():
        raise SchemaError(f"{path}: negative count")
    return FrequencyTable(letters, counts, normalized)


@dataclass(frozen=True)
class TrajectoryData:
    """Height series per card on a common time grid."""

    steps: np.ndarray  # shared, ascending
    cards: np.ndarray  # 1..ncards, ascending
    heights: np.ndarray  # heights[k] is the series of cards[k]


def read_trajectories(path) -> TrajectoryData:
    rows = _read_rows(path, ["t", "card", "y"])
    t = _column(path, rows, 0, int)
    card = _column(path, rows, 1, int)
    y = _column(path, rows, 2, int)
    cards = np.unique(card)
    if cards[0] < 1:
        raise SchemaError(f"{path}: card ids must be positive")
    series = []
    steps = None
    for c in cards:
        mask = card == c
        tc = t[mask]
        if steps is None:
            steps = tc
            if (np.diff(steps) <= 0).any():
                raise SchemaError(f"{path}: steps must be strictly increasing")
        elif not np.array_equal(tc, steps):
            raise SchemaError(f"{path}: card {c} has a different time grid")
        series.append(y[mask])
    return TrajectoryData(steps, cards, np.array(series))


@dataclass(frozen=True)
class SnapshotData:
    """One permutation-matrix state: card and sign at each position 1..n."""

    positions: np.ndarray
    cards: np.ndarray
    signs: np.ndarray

    @property
    def n(self) -> int:
        return len(self.positions)


def read_snapshot(path) -> SnapshotData:
    rows = _read_rows(path, ["position", "card", "sign"])
    pos = _column(path, rows, 0, int)
    card = _column(path, rows, 1, int)
    sign = _column(path, rows, 2, int)
    n = len(pos)
    if pos.tolist() != list(range(1, n + 1)):
        raise SchemaError(f"{path}: positions must be 1..n in order")
    if sorted(card.tolist()) != list(range(1, n + 1)):
        raise SchemaError(f"{path}: cards must be a permutation of 1..n")
    if not np.isin(sign, (-1, 1)).all():
        raise SchemaError(f"{path}: signs must be +1 or -1")
    return SnapshotData(pos, card, sign)
