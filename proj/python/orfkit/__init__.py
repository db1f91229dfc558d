"""Random Fourier features and orthogonal random features for the Gaussian kernel.

Thin re-export of the compiled ``_orfkit`` extension.
"""

from ._orfkit import (
    Estimator,
    IoError,
    NumericalFailure,
    __version__,
    bias_bounds,
    bound_constants,
    empirical_moments,
    feature_matrix,
    first_zero,
    gram_matrix,
    mse,
    normalized_bessel,
    normalized_bessel_quadrature,
    normalized_bessel_series,
    orf_bias,
    orf_variance,
    rayleigh_partial,
    rff_bias,
    rff_variance,
    variance_bounds,
    variance_dominance_interval,
    weierstrass_partial,
    weights,
    zeros,
)

__all__ = [
    "Estimator",
    "IoError",
    "NumericalFailure",
    "__version__",
    "bias_bounds",
    "bound_constants",
    "empirical_moments",
    "feature_matrix",
    "first_zero",
    "gram_matrix",
    "mse",
    "normalized_bessel",
    "normalized_bessel_quadrature",
    "normalized_bessel_series",
    "orf_bias",
    "orf_variance",
    "rayleigh_partial",
    "rff_bias",
    "rff_variance",
    "variance_bounds",
    "variance_dominance_interval",
    "weierstrass_partial",
    "weights",
    "zeros",
]
