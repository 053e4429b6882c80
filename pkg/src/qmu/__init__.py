"""Proper edge colorings optimized by the number of vertices whose color
spectrum is an interval: graph core, validated colorings, constructive
witnesses, exact branch-and-bound search, and exhaustive structural checks,
with a CLI (`qmu`) tying everything to runnable verification."""

from .graphs import (
    Graph,
    Bipartition,
    InducedStructure,
    GraphError,
    NotBipartiteError,
    hypercube,
    path,
    cycle,
    complete,
    cartesian_product_k2,
    induced_subgraph,
    bipartition,
    matching_decomposition,
)
from .coloring import (
    EdgeColoring,
    SpectrumReport,
    ColoringError,
    AdjacentSameColorError,
    UnusedColorError,
    ColorRangeError,
    SearchCapError,
    validate,
    spectrum,
    is_interval,
    spectrum_report,
    reverse_colors,
    chromatic_index,
    random_bijective_coloring,
    random_proper_coloring,
)
from .constructions import (
    ShiftSequence,
    WitnessCertificate,
    q3_phi,
    q3_psi,
    lift_zero,
    is_harmonic,
    shift_step,
    shift_sequence,
    preserves_interval_at,
    block_harmonic,
    interval_on_part,
    witness_q3_phi,
    witness_q3_psi,
    witness_lift_chain,
    witness_interval_part,
)
from .search import (
    SearchBudget,
    MuResult,
    MuRow,
    Aggregate,
    MuTable,
    FeasibilityResult,
    brute_force_mu,
    mu_exact,
    mu_table,
    closed_form_qn,
    interval_feasible,
    interval_coloring_range,
    mu_inequalities_check,
)
from .patterns import (
    PatternCertificate,
    is_path_forest,
    check_lemma3,
    pattern_masks,
    enumerate_patterns,
    verify_subset_lemma,
    cover_counterexample,
    max_pathforest_subset,
    max_pathforest,
)
from .backend import backend_name, warm_up

__version__ = "0.1.0"
