"""Verification gates: exact cross-checks plus seeded statistical tests.

Each gate condenses to a StatReport row.  Exact gates count violations
(threshold 0); statistical gates compare a chi-square p-value or a
total-variation distance against a frozen threshold.  All randomness is
seeded, so a gate that passes once passes forever.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.stats import chisquare

from .coxeter import enumerate_reduced_words, is_reduced_word_of_w0
from .distributions import maxcell_pmf_bruteforce, maxcell_pmf_exact
from .promotion import first_letter, tableau_to_word
from .rng import RandomStream
from .sampling import corner_distribution_empirical, sample_syt
from .shapes import (
    StrictPartition,
    count_syt,
    hook_cells,
    hook_length,
    removable_cells,
    remove_cell,
    staircase,
    strict_partitions,
)
from .tableaux import enumerate_syt

CHI2_P_THRESHOLD = 0.001
CORNER_P_THRESHOLD = 1e-4


@dataclass(frozen=True)
class StatReport:
    name: str
    kind: str  # exact | chi2-p | tv
    statistic: float
    threshold: float
    passed: bool
    samples: int


def _exact(name: str, violations: int, checked: int) -> StatReport:
    return StatReport(name, "exact", float(violations), 0.0, violations == 0, checked)


def chi2_pvalue(observed, probs) -> float:
    """Goodness-of-fit p-value; a single category is trivially a fit."""
    if len(observed) == 1:
        return 1.0
    expected = np.asarray(probs, dtype=np.float64) * sum(observed)
    return float(chisquare(np.asarray(observed, dtype=np.float64), expected).pvalue)


def _small_shapes(max_cells: int):
    for m in range(1, max_cells + 1):
        yield from strict_partitions(m)


def gate_hook_formula(max_cells: int = 12) -> StatReport:
    bad = checked = 0
    for shape in _small_shapes(max_cells):
        for cell in shape.cells():
            checked += 1
            if hook_length(shape, cell) != len(hook_cells(shape, cell)):
                bad += 1
    return _exact("hook-formula-vs-cells", bad, checked)


def gate_removable(max_cells: int = 12) -> StatReport:
    bad = checked = 0
    for shape in _small_shapes(max_cells):
        checked += 1
        by_hook = [c for c in shape.cells() if hook_length(shape, c) == 1]
        if removable_cells(shape) != by_hook:
            bad += 1
    return _exact("removable-equals-hook1", bad, checked)


def gate_count_recurrence(max_cells: int = 12) -> StatReport:
    bad = checked = 0
    for shape in _small_shapes(max_cells):
        checked += 1
        total = sum(count_syt(remove_cell(shape, c)) for c in removable_cells(shape))
        if count_syt(shape) != total:
            bad += 1
    return _exact("count-recurrence", bad, checked)


def gate_enumeration(max_cells: int = 10) -> StatReport:
    bad = checked = 0
    for shape in _small_shapes(max_cells):
        checked += 1
        if len(enumerate_syt(shape)) != count_syt(shape):
            bad += 1
    return _exact("enumeration-count", bad, checked)


def gate_pmf_equivalence(n_top: int = 6) -> StatReport:
    bad = 0
    for n in range(1, n_top + 1):
        if maxcell_pmf_exact(n).probs != maxcell_pmf_bruteforce(n).probs:
            bad += 1
    return _exact("pmf-closed-form-vs-bruteforce", bad, n_top)


def gate_pmf_normalization(n_top: int = 100) -> StatReport:
    bad = sum(1 for n in range(1, n_top + 1) if sum(maxcell_pmf_exact(n).probs) != 1)
    return _exact("pmf-normalization", bad, n_top)


def gate_word_count(n: int) -> StatReport:
    words = enumerate_reduced_words(n)
    expected = count_syt(staircase(n))
    ok = len(words) == expected and all(is_reduced_word_of_w0(w) for w in words)
    return _exact(f"reduced-word-count-n{n}", 0 if ok else 1, int(expected))


def gate_bijection_image(n: int) -> StatReport:
    tabs = enumerate_syt(staircase(n))
    images = [tableau_to_word(t, engine="python").letters for t in tabs]
    expected = {w.letters for w in enumerate_reduced_words(n)}
    ok = len(set(images)) == len(tabs) and set(images) == expected
    return _exact(f"bijection-image-n{n}", 0 if ok else 1, len(tabs))


def gate_sampled_words_reduced(
    rng: RandomStream, n_top: int = 8, per_n: int = 3, engine: str = "auto"
) -> StatReport:
    bad = checked = 0
    for n in range(1, n_top + 1):
        for _ in range(per_n):
            checked += 1
            word = tableau_to_word(sample_syt(staircase(n), rng, engine), engine)
            if not is_reduced_word_of_w0(word):
                bad += 1
    return _exact("sampled-words-reduced", bad, checked)


def gate_tableau_uniformity(
    rng: RandomStream, samples: int = 70_000, engine: str = "auto"
) -> StatReport:
    shape = StrictPartition((4, 2, 1))
    tabs = enumerate_syt(shape)
    index = {t: i for i, t in enumerate(tabs)}
    counts = [0] * len(tabs)
    for _ in range(samples):
        counts[index[sample_syt(shape, rng, engine)]] += 1
    p = chi2_pvalue(counts, [1 / len(tabs)] * len(tabs))
    return StatReport(
        "tableau-uniformity-chi2", "chi2-p", p, CHI2_P_THRESHOLD,
        p > CHI2_P_THRESHOLD and min(counts) > 0, samples,
    )


def gate_corner_walks(
    rng: RandomStream, max_cells: int = 10, walks: int = 20_000, engine: str = "auto"
) -> StatReport:
    """Hook-walk corner frequencies vs count ratios over every small shape."""
    worst = 1.0
    total_walks = 0
    for shape in _small_shapes(max_cells):
        corners = removable_cells(shape)
        hist = corner_distribution_empirical(shape, walks, rng, engine)
        total_walks += walks
        if len(corners) == 1:
            # single corner: the tally is forced, nothing to test
            continue
        denom = count_syt(shape)
        probs = [count_syt(remove_cell(shape, c)) / denom for c in corners]
        p = chi2_pvalue([hist.counts[c] for c in corners], probs)
        worst = min(worst, p)
    return StatReport(
        "corner-walk-chi2", "chi2-p", worst, CORNER_P_THRESHOLD,
        worst > CORNER_P_THRESHOLD, total_walks,
    )


def gate_first_letter(
    rng: RandomStream, n: int = 4, samples: int = 20_000, engine: str = "auto"
) -> StatReport:
    """Empirical first letters of uniform tableaux against the exact pmf."""
    counts = [0] * n
    for _ in range(samples):
        counts[first_letter(sample_syt(staircase(n), rng, engine))] += 1
    p = chi2_pvalue(counts, [float(q) for q in maxcell_pmf_exact(n).probs])
    return StatReport(
        "first-letter-chi2", "chi2-p", p, CHI2_P_THRESHOLD, p > CHI2_P_THRESHOLD,
        samples,
    )


def run_gates(n_max: int = 3, seed: int = 0, engine: str = "auto") -> list[StatReport]:
    """The full gate suite used by the verify subcommand."""
    if not 1 <= n_max <= 4:
        raise ValueError(f"n_max must be between 1 and 4, got {n_max}")
    rng = RandomStream(seed)
    reports = [
        gate_hook_formula(),
        gate_removable(),
        gate_count_recurrence(),
        gate_enumeration(),
        gate_pmf_equivalence(max(n_max, 6)),
        gate_pmf_normalization(),
    ]
    for n in range(1, n_max + 1):
        reports.append(gate_word_count(n))
    for n in range(1, min(n_max, 3) + 1):
        reports.append(gate_bijection_image(n))
    reports.append(gate_sampled_words_reduced(rng, engine=engine))
    reports.append(gate_tableau_uniformity(rng, engine=engine))
    reports.append(gate_corner_walks(rng, engine=engine))
    reports.append(gate_first_letter(rng, engine=engine))
    return reports
