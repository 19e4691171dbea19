"""beta-Laguerre / Wishart eigenvalue sampling toolkit."""

from ._laguerre import (
    RngStream,
    TWGrid,
    airy_ai,
    airy_ai_prime,
    generator_id,
    histogram,
    ks_one_sample,
    ks_two_sample,
    log_joint_density,
    moments,
    pencil_eigen_all,
    pmin_exact,
    sample_batch,
    sturm_count,
    tridiag_eigen_all,
    tw2_cdf,
    tw2_moments,
    tw2_pdf,
    tw_rescale,
    __version__,
)

__all__ = [
    "RngStream",
    "TWGrid",
    "airy_ai",
    "airy_ai_prime",
    "generator_id",
    "histogram",
    "ks_one_sample",
    "ks_two_sample",
    "log_joint_density",
    "moments",
    "pencil_eigen_all",
    "pmin_exact",
    "sample_batch",
    "sturm_count",
    "tridiag_eigen_all",
    "tw2_cdf",
    "tw2_moments",
    "tw2_pdf",
    "tw_rescale",
    "__version__",
]
