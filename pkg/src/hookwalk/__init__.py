"""Shifted staircase tableaux, hook-walk sampling, and type-B sorting networks."""

from .coxeter import (
    SignedPermutation,
    Word,
    apply_generator,
    apply_word,
    enumerate_reduced_words,
    identity,
    is_reduced_word_of_w0,
    longest_element,
)
from .distributions import (
    DistributionTable,
    half_binom,
    ks_distance,
    maxcell_pmf_bruteforce,
    maxcell_pmf_exact,
    maxcell_pmf_float,
    quarter_circle_bins,
    quarter_circle_cdf,
    quarter_circle_pdf,
    tv_distance,
)
from .gates import StatReport, run_gates
from .network import (
    MatrixSnapshot,
    NetworkRun,
    StreamResult,
    Trajectory,
    letter_frequency,
    run_network,
    simulate_stream,
    snapshots,
    trajectories,
)
from .promotion import first_letter, promote, staircase_rank, tableau_to_word
from .rng import RandomStream
from .sampling import (
    CornerHistogram,
    corner_distribution_empirical,
    hook_walk,
    sample_syt,
)
from .shapes import (
    StrictPartition,
    count_syt,
    hook_cells,
    hook_length,
    log_count_syt,
    removable_cells,
    remove_cell,
    staircase,
    strict_partitions,
)
from .tableaux import (
    ShiftedTableau,
    ValidationReport,
    enumerate_syt,
    max_cell,
    validate,
)

__all__ = [
    "SignedPermutation",
    "Word",
    "apply_generator",
    "apply_word",
    "enumerate_reduced_words",
    "identity",
    "is_reduced_word_of_w0",
    "longest_element",
    "DistributionTable",
    "half_binom",
    "ks_distance",
    "maxcell_pmf_bruteforce",
    "maxcell_pmf_exact",
    "maxcell_pmf_float",
    "quarter_circle_bins",
    "quarter_circle_cdf",
    "quarter_circle_pdf",
    "tv_distance",
    "StatReport",
    "run_gates",
    "MatrixSnapshot",
    "NetworkRun",
    "StreamResult",
    "Trajectory",
    "letter_frequency",
    "run_network",
    "simulate_stream",
    "snapshots",
    "trajectories",
    "first_letter",
    "promote",
    "staircase_rank",
    "tableau_to_word",
    "RandomStream",
    "CornerHistogram",
    "corner_distribution_empirical",
    "hook_walk",
    "sample_syt",
    "StrictPartition",
    "count_syt",
    "hook_cells",
    "hook_length",
    "log_count_syt",
    "removable_cells",
    "remove_cell",
    "staircase",
    "strict_partitions",
    "ShiftedTableau",
    "ValidationReport",
    "enumerate_syt",
    "max_cell",
    "validate",
]
