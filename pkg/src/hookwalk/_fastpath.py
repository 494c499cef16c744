"""Compiled kernels for large-instance sampling and simulation.

Everything here mirrors a pure-Python reference implementation draw for
draw: the random protocol is fixed (one below(m) for the walk start, one
below(h-1) per hop, candidates ordered arm, then leg, then broken row), so
the compiled and interpreted engines produce bitwise identical results.
Kernels receive and return the raw splitmix64 state so a RandomStream can
hop between engines mid-sequence.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAS_JIT = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAS_JIT = False

    def njit(*args, **kwargs):
        def wrap(f):
            return f

        if args and callable(args[0]):
            return args[0]
        return wrap


_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)
_S30 = np.uint64(30)
_S27 = np.uint64(27)
_S31 = np.uint64(31)
_U0 = np.uint64(0)


@njit(cache=True)
def _mix64(z):
    z = (z ^ (z >> _S30)) * _M1
    z = (z ^ (z >> _S27)) * _M2
    return z ^ (z >> _S31)


@njit(cache=True)
def _below(state, bound):
    # rejection sampling; same acceptance threshold as RandomStream.below
    ub = np.uint64(bound)
    threshold = (_U0 - ub) % ub
    while True:
        state = state + _GOLDEN
        x = _mix64(state)
        if x >= threshold:
            return np.int64(x % ub), state


@njit(cache=True)
def _fen_add(fen, i, delta):
    k = fen.shape[0] - 1
    while i <= k:
        fen[i] += delta
        i += i & (-i)


@njit(cache=True)
def _fen_find(fen, idx, log2k):
    # largest pos with cumsum(pos) <= idx; returns (pos + 1, idx - cumsum(pos))
    pos = np.int64(0)
    rem = idx
    bit = np.int64(1) << log2k
    k = fen.shape[0] - 1
    while bit > 0:
        nxt = pos + bit
        if nxt <= k and fen[nxt] <= rem:
            rem -= fen[nxt]
            pos = nxt
        bit >>= 1
    return pos + 1, rem


@njit(cache=True)
def _walk(row_len, col_cnt, k_cur, i, j, state):
    """One hook walk from (i, j) to a corner of the current shape."""
    while True:
        arm = row_len[i - 1] + i - 1 - j
        leg = col_cnt[j] - i
        broken = row_len[j] if j < k_cur else 0
        h = arm + leg + 1 + broken
        if h == 1:
            return i, j, state
        r, state = _below(state, h - 1)
        if r < arm:
            j = j + 1 + r
        elif r < arm + leg:
            i = i + 1 + (r - arm)
        else:
            off = r - arm - leg
            i = j + 1
            j = j + 1 + off


@njit(cache=True)
def _fill_tableau(row_len, col_cnt, offsets, flat, state):
    """Label cells m..1 by repeated hook walks, removing each chosen corner.

    row_len and col_cnt are consumed (modified in place).  flat is the CSR
    cell storage: cell (i, j) lives at offsets[i-1] + (j - i).
    """
    k = row_len.shape[0]
    log2k = np.int64(0)
    while (np.int64(1) << (log2k + 1)) <= k:
        log2k += 1
    fen = np.zeros(k + 1, dtype=np.int64)
    for i in range(1, k + 1):
        _fen_add(fen, i, row_len[i - 1])
    m_cur = np.int64(0)
    for i in range(k):
        m_cur += row_len[i]
    k_cur = k
    for label in range(m_cur, 0, -1):
        idx, state = _below(state, m_cur)
        i, rem = _fen_find(fen, idx, log2k)
        j = i + rem
        i, j, state = _walk(row_len, col_cnt, k_cur, i, j, state)
        flat[offsets[i - 1] + (j - i)] = label
        row_len[i - 1] -= 1
        col_cnt[j] -= 1
        _fen_add(fen, i, -1)
        if row_len[i - 1] == 0:
            k_cur -= 1
        m_cur -= 1
    return state


@njit(cache=True)
def _corner_walks(row_len, col_cnt, k, m, nwalks, counts, state):
    """nwalks independent hook walks on a fixed shape; tallies terminal rows."""
    for _ in range(nwalks):
        idx, state = _below(state, m)
        i = 1
        while idx >= row_len[i - 1]:
            idx -= row_len[i - 1]
            i += 1
        j = i + idx
        i, j, state = _walk(row_len, col_cnt, k, i, j, state)
        counts[i - 1] += 1
    return state


@njit(cache=True)
def _promotion_word(flat, offsets, n, letters):
    """Emit the letter of the max cell, then promote, n*n times.

    Entries are stored lazily as (true value - promotions done), so the
    global "+1 to everything" step is free; a position index tracks where
    each original label currently sits, giving O(1) max-cell lookup.

    The slide always pulls the larger of the left and upper neighbors into
    the hole; on the diagonal (j == i) only the upper neighbor exists and
    in the top row only the left one, so those cases run branch-free tails.
    """
    m = n * n
    pos = np.empty(m + 1, dtype=np.int32)
    for fi in range(m):
        pos[flat[fi]] = fi
    row_of = np.empty(m, dtype=np.int32)
    for i in range(1, n + 1):
        for fi in range(offsets[i - 1], offsets[i]):
            row_of[fi] = i
    for t in range(m):
        fi = np.int64(pos[m - t])
        i = np.int64(row_of[fi])
        j = i + (fi - offsets[i - 1])
        letters[t] = (j - i) >> 1
        # slide the hole at (i, j) to (1, 1) along larger-neighbor moves
        while i > 1:
            up = offsets[i - 2] + (j - i + 1)
            uv = flat[up]
            if j > i:
                lv = flat[fi - 1]
                if lv > uv:
                    flat[fi] = lv
                    if lv >= 1:
                        pos[lv] = fi
                    fi -= 1
                    j -= 1
                    continue
            flat[fi] = uv
            if uv >= 1:
                pos[uv] = fi
            fi = up
            i -= 1
        while j > 1:
            lv = flat[fi - 1]
            flat[fi] = lv
            if lv >= 1:
                pos[lv] = fi
            fi -= 1
            j -= 1
        flat[fi] = -t  # stored form of the fresh 1 after this promotion


@njit(cache=True)
def _run_network(letters, cards, sample_steps, snap_steps, traj, snaps):
    """Apply the word to the card row, recording y = sign * position.

    cards[p-1] is the signed card at position p.  traj[s, c-1] receives
    card c's height at sample_steps[s]; snaps[s] receives the full state at
    snap_steps[s].  Both step lists must be sorted ascending.
    """
    n = cards.shape[0]
    si = 0
    qi = 0
    nsamp = sample_steps.shape[0]
    nsnap = snap_steps.shape[0]
    nsteps = letters.shape[0]
    for t in range(nsteps + 1):
        while si < nsamp and sample_steps[si] == t:
            for p in range(1, n + 1):
                c = cards[p - 1]
                if c > 0:
                    traj[si, c - 1] = p
                else:
                    traj[si, -c - 1] = -p
            si += 1
        while qi < nsnap and snap_steps[qi] == t:
            for p in range(n):
                snaps[qi, p] = cards[p]
            qi += 1
        if t == nsteps:
            break
        q = letters[t]
        if q == 0:
            cards[0] = -cards[0]
        else:
            tmp = cards[q - 1]
            cards[q - 1] = cards[q]
            cards[q] = tmp
