import pytest

from hookwalk.gates import (
    CHI2_P_THRESHOLD,
    StatReport,
    chi2_pvalue,
    gate_bijection_image,
    gate_count_recurrence,
    gate_enumeration,
    gate_hook_formula,
    gate_pmf_equivalence,
    gate_pmf_normalization,
    gate_removable,
    gate_sampled_words_reduced,
    gate_word_count,
    run_gates,
)
from hookwalk.rng import RandomStream


def test_chi2_pvalue():
    assert chi2_pvalue([50], [1.0]) == 1.0  # single category: trivially a fit
    assert chi2_pvalue([50, 50], [0.5, 0.5]) == 1.0
    assert chi2_pvalue([100, 0], [0.5, 0.5]) < 1e-20
    mid = chi2_pvalue([60, 40], [0.5, 0.5])
    assert 0.0 < mid < 1.0


def test_exact_gates_pass_individually():
    for gate in (
        gate_hook_formula,
        gate_removable,
        gate_count_recurrence,
        gate_enumeration,
        gate_pmf_equivalence,
        gate_pmf_normalization,
    ):
        report = gate()
        assert report.kind == "exact"
        assert report.passed and report.statistic == 0.0, report


def test_word_and_bijection_gates():
    for n in (1, 2, 3):
        assert gate_word_count(n).passed
        assert gate_bijection_image(n).passed


def test_sampled_words_gate_is_seeded():
    a = gate_sampled_words_reduced(RandomStream(0), n_top=5, per_n=2)
    b = gate_sampled_words_reduced(RandomStream(0), n_top=5, per_n=2)
    assert a == b
    assert a.passed and a.samples == 10


def test_run_gates_full_suite():
    reports = run_gates(n_max=3, seed=0)
    assert len(reports) == 16
    assert all(r.passed for r in reports), [r for r in reports if not r.passed]
    names = [r.name for r in reports]
    assert len(set(names)) == len(names)
    kinds = {r.kind for r in reports}
    assert kinds == {"exact", "chi2-p"}
    for r in reports:
        if r.kind == "chi2-p":
            assert r.threshold in (CHI2_P_THRESHOLD, 1e-4)
            assert r.statistic > r.threshold


def test_run_gates_rejects_bad_n_max():
    with pytest.raises(ValueError):
        run_gates(n_max=0)
    with pytest.raises(ValueError):
        run_gates(n_max=5)


def test_statreport_shape():
    r = StatReport("x", "exact", 0.0, 0.0, True, 3)
    assert r.name == "x" and r.passed and r.samples == 3
