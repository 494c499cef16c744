"""Distribution of the maximal-cell offset S and its quarter-circle limit.

For the staircase with n rows, S is the offset r such that the maximal label
sits at cell (n-r, n+r).  The exact pmf has a closed form built from the
halved central binomial b(r) = 2^(-2r)*C(2r,r); as n grows, S/n approaches
the quarter-circle density (4/pi)*sqrt(1-x^2) on [0,1].
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .shapes import StrictPartition, count_syt, remove_cell, staircase

_FLOAT_SUM_TOL = 1e-9


@dataclass(frozen=True)
class DistributionTable:
    """Probabilities over offsets r = 0..n-1, exact rationals or floats."""

    n: int
    probs: tuple
    exact: bool

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if len(self.probs) != self.n:
            raise ValueError(f"expected {self.n} entries, got {len(self.probs)}")
        if any(p < 0 for p in self.probs):
            raise ValueError("negative probability entry")
        total = sum(self.probs)
        if self.exact:
            if total != 1:
                raise ValueError(f"exact pmf sums to {total}, not 1")
        elif abs(float(total) - 1.0) > _FLOAT_SUM_TOL:
            raise ValueError(f"float pmf sums to {float(total)!r}")

    @classmethod
    def from_counts(cls, n: int, counts: Sequence[int]) -> "DistributionTable":
        """Empirical table from per-offset counts (float mode)."""
        counts = list(counts)
        total = sum(counts)
        if total <= 0:
            raise ValueError("empty histogram")
        return cls(n, tuple(c / total for c in counts), exact=False)

    def as_floats(self) -> np.ndarray:
        return np.array([float(p) for p in self.probs], dtype=np.float64)

    def __len__(self):
        return self.n

    def __getitem__(self, r):
        return self.probs[r]


def half_binom(r: int) -> Fraction:
    """b(r) = 2^(-2r) * C(2r, r), exactly, via b(k+1) = b(k)*(2k+1)/(2k+2)."""
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    b = Fraction(1)
    for k in range(r):
        b *= Fraction(2 * k + 1, 2 * k + 2)
    return b


def _half_binom_table(top: int) -> list[Fraction]:
    """b(0), b(1), ..., b(top) by the same recurrence."""
    table = [Fraction(1)]
    for k in range(top):
        table.append(table[-1] * Fraction(2 * k + 1, 2 * k + 2))
    return table


def maxcell_pmf_exact(n: int) -> DistributionTable:
    """P(S = r) for the n-row staircase, exact rationals.

    P(S=r) = ((2r+1)(2n-2r-1)/n^2) * b(r)^2 b(n-r-1) b(2r+1) / (b(2r) b(r+n)).
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    b = _half_binom_table(2 * n - 1)
    probs = []
    for r in range(n):
        pref = Fraction((2 * r + 1) * (2 * n - 2 * r - 1), n * n)
        probs.append(pref * b[r] ** 2 * b[n - r - 1] * b[2 * r + 1] / (b[2 * r] * b[r + n]))
    return DistributionTable(n, tuple(probs), exact=True)


def maxcell_pmf_float(n: int) -> DistributionTable:
    """Same pmf in float64, assembled in log space.

    b(r+n) underflows float64 near n ~ 800, so log b is accumulated with an
    extended-precision cumulative sum and the five-term combination is
    exponentiated at the end.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    k = np.arange(2 * n - 1, dtype=np.int64)
    steps = np.log1p(-1.0 / (2.0 * k.astype(np.longdouble) + 2.0))
    logb = np.zeros(2 * n, dtype=np.longdouble)
    np.cumsum(steps, out=logb[1:])
    r = np.arange(n, dtype=np.int64)
    pref = ((2 * r + 1) * (2 * n - 2 * r - 1)).astype(np.longdouble) / (
        np.longdouble(n) * np.longdouble(n)
    )
    logcomb = 2 * logb[r] + logb[n - r - 1] + logb[2 * r + 1] - logb[2 * r] - logb[r + n]
    probs = (pref * np.exp(logcomb)).astype(np.float64)
    return DistributionTable(n, tuple(probs.tolist()), exact=False)


def maxcell_pmf_bruteforce(n: int) -> DistributionTable:
    """P(S = r) as the tableau-count ratio after deleting corner (n-r, n+r).

    Enumeration-free but still exact: a uniform tableau has its maximum at a
    given corner with probability count(shape minus corner)/count(shape).
    Capped small because it exists purely as an oracle for the closed form.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > 8:
        raise ValueError(f"bruteforce pmf is capped at n = 8, got {n}")
    shape = staircase(n)
    total = count_syt(shape)
    probs = tuple(
        Fraction(count_syt(remove_cell(shape, (n - r, n + r))), total) for r in range(n)
    )
    return DistributionTable(n, probs, exact=True)


def _check_unit_interval(x):
    arr = np.asarray(x, dtype=np.float64)
    if np.any(arr < 0.0) or np.any(arr > 1.0):
        raise ValueError("argument outside [0, 1]")
    return arr


def quarter_circle_pdf(x):
    """(4/pi) * sqrt(1 - x^2) on [0, 1]; accepts scalars or arrays."""
    arr = _check_unit_interval(x)
    out = (4.0 / math.pi) * np.sqrt(1.0 - arr * arr)
    return float(out) if np.isscalar(x) or arr.ndim == 0 else out


def quarter_circle_cdf(x):
    """(2/pi) * (x*sqrt(1-x^2) + arcsin x); F(0)=0, F(1)=1."""
    arr = _check_unit_interval(x)
    out = (2.0 / math.pi) * (arr * np.sqrt(1.0 - arr * arr) + np.arcsin(arr))
    return float(out) if np.isscalar(x) or arr.ndim == 0 else out


def quarter_circle_bins(n: int) -> DistributionTable:
    """Quarter-circle mass per bin [r/n, (r+1)/n), r = 0..n-1."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    edges = quarter_circle_cdf(np.arange(n + 1) / n)
    return DistributionTable(n, tuple(np.diff(edges).tolist()), exact=False)


def tv_distance(p: DistributionTable, q: DistributionTable) -> float:
    """Total-variation distance (1/2) * sum |p_r - q_r|."""
    if p.n != q.n:
        raise ValueError(f"support mismatch: {p.n} vs {q.n}")
    if p.exact and q.exact:
        return float(sum(abs(a - b) for a, b in zip(p.probs, q.probs)) / 2)
    return float(np.abs(p.as_floats() - q.as_floats()).sum() / 2.0)


def ks_distance(p: DistributionTable, cdf: Callable[[float], float]) -> float:
    """sup over r of |P(S <= r) - F((r+1)/n)|, the S/n normalization."""
    cum = np.cumsum(p.as_floats())
    grid = np.arange(1, p.n + 1) / p.n
    ref = np.asarray(cdf(grid), dtype=np.float64)
    return float(np.abs(cum - ref).max())
