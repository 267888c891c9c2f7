"""Incomplete Gauss sums, exponential sums and their limit laws."""

from ._incgauss import (
    DomainError,
    Weight,
    analyze_modulus,
    class_counts,
    discrete_factor_counts,
    empirical_batch,
    epsilon,
    find_nonresidue_witness,
    gauss_sum_closed,
    gauss_sum_direct,
    gauss_sum_fast,
    jacobi,
    kloosterman,
    ks_distance,
    limit_moment,
    limit_series,
    mod_inverse,
    salie,
    sample_limit_law,
    sigma_class,
    twisted_kloosterman,
    weil_bound,
)

__all__ = [
    "DomainError",
    "Weight",
    "analyze_modulus",
    "class_counts",
    "discrete_factor_counts",
    "empirical_batch",
    "epsilon",
    "find_nonresidue_witness",
    "gauss_sum_closed",
    "gauss_sum_direct",
    "gauss_sum_fast",
    "jacobi",
    "kloosterman",
    "ks_distance",
    "limit_moment",
    "limit_series",
    "mod_inverse",
    "salie",
    "sample_limit_law",
    "sigma_class",
    "twisted_kloosterman",
    "weil_bound",
]
