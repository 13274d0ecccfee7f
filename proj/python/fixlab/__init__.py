"""Fixed points of contractions on finite ordered metric spaces.

Thin re-export of the compiled extension; the heavy lifting lives in C++.
"""

from fixlab._core import (
    FixlabError,
    Instance,
    brute_force_chain_metric,
    chain_connected,
    chain_metric,
    check_conditional_F,
    check_theorem,
    check_weak_G,
    classify,
    comparison_profile,
    exact_sum,
    generate_instance,
    minimal_alpha,
    ordered_contraction_factor,
    picard_orbit,
    reduce_to_banach,
    search_counterexamples,
    suzuki_F,
    suzuki_G,
    __version__,
)

__all__ = [
    "FixlabError",
    "Instance",
    "brute_force_chain_metric",
    "chain_connected",
    "chain_metric",
    "check_conditional_F",
    "check_theorem",
    "check_weak_G",
    "classify",
    "comparison_profile",
    "exact_sum",
    "generate_instance",
    "minimal_alpha",
    "ordered_contraction_factor",
    "picard_orbit",
    "reduce_to_banach",
    "search_counterexamples",
    "suzuki_F",
    "suzuki_G",
    "__version__",
]
