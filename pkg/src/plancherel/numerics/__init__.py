"""Multiprecision numerics: scalars, special functions, series, solvers."""

from .context import (
    BigRational,
    DEFAULT_PRECISION,
    MPComplex,
    MPReal,
    complexify,
    decimal_str,
    ensure_thread_precision,
    get_precision,
    is_complex,
    noise_floor,
    pi_real,
    rational,
    real,
    set_precision,
)
from .newton import (
    NewtonError,
    NewtonResult,
    NonConvergenceError,
    SingularJacobianError,
    newton_solve,
)
from .qrat import QRat
from .series import (
    INF,
    LocalSeries,
    Poly1,
    TruncatedPowerSeries,
    TruncationError,
    lagrange_invert,
    log_z_germ,
    reciprocal_z_germ,
    sigma_germ,
)
from .special import (
    PoleError,
    bernoulli,
    chebyshev_eval,
    digamma_real,
    gamma_ratio,
    neg_polylog,
    trilog,
)

__all__ = [
    "BigRational",
    "DEFAULT_PRECISION",
    "INF",
    "LocalSeries",
    "MPComplex",
    "MPReal",
    "NewtonError",
    "NewtonResult",
    "NonConvergenceError",
    "Poly1",
    "PoleError",
    "QRat",
    "SingularJacobianError",
    "TruncatedPowerSeries",
    "TruncationError",
    "bernoulli",
    "chebyshev_eval",
    "complexify",
    "decimal_str",
    "digamma_real",
    "ensure_thread_precision",
    "gamma_ratio",
    "get_precision",
    "is_complex",
    "lagrange_invert",
    "log_z_germ",
    "neg_polylog",
    "newton_solve",
    "noise_floor",
    "pi_real",
    "rational",
    "real",
    "reciprocal_z_germ",
    "set_precision",
    "sigma_germ",
    "trilog",
]
