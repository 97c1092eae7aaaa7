"""Generalized information measures built on quasilinear (Kolmogorov-Nagumo)
means, with an empirical verification lab for the identities that
characterize them and a CLI frontend."""

from .entropy import (
    EntropyReport,
    entropy_report,
    hartley,
    phi_q,
    pmf_digest,
    q_hartley,
    q_quasilinear_entropy,
    quasilinear_entropy,
    renyi,
    shannon,
    tsallis,
)
from .errors import (
    DistributionError,
    DomainError,
    FormatError,
    InfeasibleConstraintError,
    InfiniteInformationError,
    ParameterError,
)
from .knmean import (
    KNFunction,
    KNMeanInput,
    Thresholds,
    affine_image,
    builtin,
    check_homogeneity,
    check_translativity,
    dirichlet_weights,
    exponential,
    kn_equivalent,
    kn_mean,
    linear,
    make_kn_function,
    negated,
    phi_q_function,
    power,
    rng_for,
    sample_mean_input,
    sampling_window,
)
from .pmf import (
    Pmf,
    degenerate,
    from_counts,
    from_csv_text,
    from_json_text,
    load,
    mixture,
    product,
    uniform,
)
from .qalgebra import QParam, as_qparam, pseudo_add, pseudo_sum, q_exp, q_log, q_log_of_exp
from .reports import (
    COUNTEREXAMPLE_FOUND,
    INCONCLUSIVE,
    PASS,
    VerificationReport,
    all_satisfied,
    format_float,
    render_json,
)
from .theoremlab import (
    DEFAULT_BUDGET,
    DEFAULT_CONCAVITY_ALPHAS,
    SUITE_NAMES,
    MaxentResult,
    default_axiom_functions,
    maxent_argmax,
    maxent_search,
    random_pmf,
    random_pmf_pair,
    run_suite,
    search_renyi_concavity_violation,
    verify_axioms,
    verify_corollary2,
    verify_theorem3,
    verify_theorem4,
)

__version__ = "0.1.0"

__all__ = [
    "COUNTEREXAMPLE_FOUND",
    "DEFAULT_BUDGET",
    "DEFAULT_CONCAVITY_ALPHAS",
    "DistributionError",
    "DomainError",
    "EntropyReport",
    "FormatError",
    "INCONCLUSIVE",
    "InfeasibleConstraintError",
    "InfiniteInformationError",
    "KNFunction",
    "KNMeanInput",
    "MaxentResult",
    "PASS",
    "ParameterError",
    "Pmf",
    "QParam",
    "SUITE_NAMES",
    "Thresholds",
    "VerificationReport",
    "affine_image",
    "all_satisfied",
    "as_qparam",
    "builtin",
    "check_homogeneity",
    "check_translativity",
    "default_axiom_functions",
    "degenerate",
    "dirichlet_weights",
    "entropy_report",
    "exponential",
    "format_float",
    "from_counts",
    "from_csv_text",
    "from_json_text",
    "hartley",
    "kn_equivalent",
    "kn_mean",
    "linear",
    "load",
    "make_kn_function",
    "maxent_argmax",
    "maxent_search",
    "mixture",
    "negated",
    "phi_q",
    "phi_q_function",
    "pmf_digest",
    "power",
    "product",
    "pseudo_add",
    "pseudo_sum",
    "q_exp",
    "q_hartley",
    "q_log",
    "q_log_of_exp",
    "q_quasilinear_entropy",
    "quasilinear_entropy",
    "random_pmf",
    "random_pmf_pair",
    "render_json",
    "renyi",
    "rng_for",
    "run_suite",
    "sample_mean_input",
    "sampling_window",
    "search_renyi_concavity_violation",
    "shannon",
    "tsallis",
    "uniform",
    "verify_axioms",
    "verify_corollary2",
    "verify_theorem3",
    "verify_theorem4",
]
