"""Sorting networks: executing a reduced word on a row of signed cards.

States are signed permutations; applying the word's letters one by one
drives the identity to (-1, ..., -n).  Trajectories plot each card's
height y = sign * position, which makes the sign-change generator a
reflection at height 0.  Other height conventions (e.g. tracking the slot
a card occupies, unsigned) draw equally sensible pictures; this module
commits to sign * position, and the README documents that choice.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _fastpath
from .coxeter import (
    SignedPermutation,
    Word,
    apply_generator,
    identity,
    is_reduced_word_of_w0,
    longest_element,
)
from .sampling import resolve_engine


@dataclass(frozen=True)
class NetworkRun:
    """All N+1 states of a word applied to the identity."""

    n: int
    word: Word
    states: tuple[SignedPermutation, ...]


@dataclass(frozen=True)
class Trajectory:
    card: int
    heights: tuple[int, ...]


@dataclass(frozen=True)
class MatrixSnapshot:
    """Permutation-matrix view at one step: (position, card, sign) per slot."""

    step: int
    entries: tuple[tuple[int, int, int], ...]


def run_network(n: int, word: Word, require_reduced: bool = True) -> NetworkRun:
    """Materialize every state; suited to moderate n (use the streaming

    simulator for large instances).  With require_reduced the word must be
    a reduced word of the longest element, checked via its length and the
    computed end state.
    """
    if word.n != n:
        raise ValueError(f"word rank {word.n} does not match n = {n}")
    states = [identity(n)]
    for q in word:
        states.append(apply_generator(states[-1], q))
    if require_reduced and (
        len(word) != n * n or states[-1] != longest_element(n)
    ):
        raise ValueError("word is not a reduced word of the longest element")
    return NetworkRun(n, word, tuple(states))


def trajectories(run: NetworkRun) -> list[Trajectory]:
    """Height sequence y = sign * position for every card."""
    heights: list[list[int]] = [[] for _ in range(run.n)]
    for state in run.states:
        for p, c in enumerate(state, start=1):
            heights[abs(c) - 1].append(p if c > 0 else -p)
    return [Trajectory(i + 1, tuple(h)) for i, h in enumerate(heights)]


def _snapshot_of(state: SignedPermutation, step: int) -> MatrixSnapshot:
    entries = tuple(
        (p, abs(c), 1 if c > 0 else -1) for p, c in enumerate(state, start=1)
    )
    return MatrixSnapshot(step, entries)


def snapshot_steps(total: int, fractions: list[float]) -> list[int]:
    """Map sorted time fractions in [0, 1] onto integer steps of a run."""
    if any(f < 0 or f > 1 for f in fractions):
        raise ValueError("snapshot fractions must lie in [0, 1]")
    if sorted(fractions) != list(fractions):
        raise ValueError("snapshot fractions must be sorted ascending")
    return [int(round(f * total)) for f in fractions]


def snapshots(run: NetworkRun, fractions: list[float]) -> list[MatrixSnapshot]:
    steps = snapshot_steps(len(run.word), fractions)
    return [_snapshot_of(run.states[s], s) for s in steps]


def letter_frequency(word: Word) -> dict[int, int]:
    """Count of each letter 0..n-1; zeros included."""
    counts = dict.fromkeys(range(word.n), 0)
    for q in word:
        counts[q] += 1
    return counts


@dataclass(frozen=True)
class StreamResult:
    """Down-sampled run: heights at sample_steps, states at snap_steps."""

    n: int
    sample_steps: np.ndarray
    heights: np.ndarray  # heights[s, c-1] = y of card c at sample_steps[s]
    snap_steps: np.ndarray
    snap_states: np.ndarray  # snap_states[s, p-1] = signed card at position p
    letter_counts: np.ndarray

    def snapshot(self, index: int) -> MatrixSnapshot:
        state = tuple(int(c) for c in self.snap_states[index])
        return _snapshot_of(state, int(self.snap_steps[index]))


def _run_stream_py(letters, cards, sample_steps, snap_steps, traj, snaps):
    n = len(cards)
    si = qi = 0
    for t in range(len(letters) + 1):
        while si < len(sample_steps) and sample_steps[si] == t:
            for p in range(1, n + 1):
                c = cards[p - 1]
                traj[si, abs(c) - 1] = p if c > 0 else -p
            si += 1
        while qi < len(snap_steps) and snap_steps[qi] == t:
            snaps[qi, :] = cards
            qi += 1
        if t == len(letters):
            break
        q = letters[t]
        if q == 0:
            cards[0] = -cards[0]
        else:
            cards[q - 1], cards[q] = cards[q], cards[q - 1]


def simulate_stream(
    n: int,
    word: Word,
    fractions: list[float] | None = None,
    stride: int | None = None,
    engine: str = "auto",
    require_reduced: bool = True,
) -> StreamResult:
    """Single-pass simulation with down-sampled trajectories.

    Records heights every `stride` steps (default ~2000 samples across the
    run, always including step 0 and step N) plus full states at the
    requested time fractions.  Reducedness is checked from the end state,
    which the pass computes anyway; a failure raises.
    """
    if word.n != n:
        raise ValueError(f"word rank {word.n} does not match n = {n}")
    total = len(word)
    if fractions is None:
        fractions = [0.0, 0.25, 0.5, 0.75, 1.0]
    if stride is None:
        stride = max(1, total // 2000)
    if stride < 1:
        raise ValueError(f"stride must be >= 1, got {stride}")
    sample = list(range(0, total + 1, stride))
    if sample[-1] != total:
        sample.append(total)
    sample_steps = np.asarray(sample, dtype=np.int64)
    snap_steps = np.asarray(snapshot_steps(total, fractions), dtype=np.int64)
    letters = np.asarray(word.letters, dtype=np.int32)
    cards = np.arange(1, n + 1, dtype=np.int32)
    traj = np.zeros((len(sample_steps), n), dtype=np.int32)
    snaps = np.zeros((len(snap_steps), n), dtype=np.int32)
    if resolve_engine(engine) == "jit":
        _fastpath._run_network(letters, cards, sample_steps, snap_steps, traj, snaps)
    else:
        _run_stream_py(letters, cards, sample_steps, snap_steps, traj, snaps)
    if require_reduced and (
        total != n * n or not np.array_equal(cards, -np.arange(1, n + 1))
    ):
        raise ValueError("word is not a reduced word of the longest element")
    counts = np.bincount(letters, minlength=n) if total else np.zeros(n, np.int64)
    return StreamResult(n, sample_steps, traj, snap_steps, snaps, counts)
