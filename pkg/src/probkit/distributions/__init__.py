"""Probability laws, special functions and the deterministic generator."""

from .base import (
    MASS_HORIZON,
    BaseLaw,
    ContinuousLaw,
    DiscreteLaw,
    SupportDescriptor,
    SupportKind,
    require_continuous,
    require_discrete,
)
from .catalog import (
    CLI_LAW_PARAMETERS,
    LAW_ADAPTER,
    LAW_TYPES,
    Law,
    law_from_json,
    law_from_payload,
    law_json_schema,
    law_to_payload,
)
from .continuous import Exponential, Gamma, Normal, Uniform
from .discrete import (
    EXACT_MASS_LIMIT,
    Bernoulli,
    Binomial,
    Degenerate,
    DiscreteUniform,
    Geometric,
    Hypergeometric,
    NegativeBinomial,
    NumFailures,
    Poisson,
)
from .operations import (
    cdf,
    density,
    exact_mass,
    factorial_moment2,
    log_mass,
    mass,
    mean,
    mgf,
    mgf_affine,
    quantile,
    sample,
    second_mgf,
    sf,
    support,
    variance,
)
from .rng import Rng
from .special import (
    invert_cdf,
    log_gamma,
    normal_cdf,
    normal_interval,
    normal_pdf,
    normal_quantile,
    regularized_incomplete_gamma,
    regularized_upper_incomplete_gamma,
)

__all__ = [
    "CLI_LAW_PARAMETERS",
    "EXACT_MASS_LIMIT",
    "LAW_ADAPTER",
    "LAW_TYPES",
    "MASS_HORIZON",
    "BaseLaw",
    "Bernoulli",
    "Binomial",
    "ContinuousLaw",
    "Degenerate",
    "DiscreteLaw",
    "DiscreteUniform",
    "Exponential",
    "Gamma",
    "Geometric",
    "Hypergeometric",
    "Law",
    "NegativeBinomial",
    "Normal",
    "NumFailures",
    "Poisson",
    "Rng",
    "SupportDescriptor",
    "SupportKind",
    "Uniform",
    "cdf",
    "density",
    "exact_mass",
    "factorial_moment2",
    "invert_cdf",
    "law_from_json",
    "law_from_payload",
    "law_json_schema",
    "law_to_payload",
    "log_gamma",
    "log_mass",
    "mass",
    "mean",
    "mgf",
    "mgf_affine",
    "normal_cdf",
    "normal_interval",
    "normal_pdf",
    "normal_quantile",
    "quantile",
    "regularized_incomplete_gamma",
    "regularized_upper_incomplete_gamma",
    "require_continuous",
    "require_discrete",
    "sample",
    "second_mgf",
    "sf",
    "support",
    "variance",
]
