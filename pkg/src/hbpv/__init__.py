"""Numerics and identity verification for the (p,nu)-extended Srivastava
triple hypergeometric function H_{B,p,nu} and its supporting special
functions (extended Beta functions with Bessel kernel, Exton's X_4, K_nu,
double-exponential quadrature)."""

from .errors import DomainError, HbpvError, NonConvergenceError, PoleError, RegionError
from .extbeta import BetaCache, Extension, cached_extended_beta, chaudhry_beta, extended_beta
from .kernels import bessel_k, beta, log_gamma, pochhammer, upper_incomplete_gamma
from .quadrature import QuadResult, integrate_semi_infinite, integrate_unit_interval
from .reps import RepKind, RepVariant, h_b_pv_integral
from .series import (
    EngineConfig,
    EvalResult,
    HbParams,
    Point3,
    h_b,
    h_b_a,
    h_b_pv,
    in_region_hb,
    in_region_x4,
    sum_shells,
    x4,
)

__version__ = "0.1.0"

__all__ = [
    "BetaCache",
    "DomainError",
    "EngineConfig",
    "EvalResult",
    "Extension",
    "HbParams",
    "HbpvError",
    "NonConvergenceError",
    "Point3",
    "PoleError",
    "QuadResult",
    "RegionError",
    "RepKind",
    "RepVariant",
    "bessel_k",
    "beta",
    "cached_extended_beta",
    "chaudhry_beta",
    "extended_beta",
    "h_b",
    "h_b_a",
    "h_b_pv",
    "h_b_pv_integral",
    "in_region_hb",
    "in_region_x4",
    "integrate_semi_infinite",
    "integrate_unit_interval",
    "log_gamma",
    "pochhammer",
    "sum_shells",
    "upper_incomplete_gamma",
    "x4",
    "__version__",
]
