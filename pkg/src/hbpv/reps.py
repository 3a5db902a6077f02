"""Integral representations of the extended triple hypergeometric function.

Five equivalent single-integral forms, each a Bessel-kernel weight times an
X_4 evaluation at kernel-scaled arguments (sigma1*sigma2*x, sigma1*y,
sigma2*z) with sigma1 + sigma2 = 1 along the integration path:

* ``UNIT_INTERVAL``      t in (0,1), sigma2 = t
* ``MOBIUS``             xi in (alpha,beta) through a Mobius map (gamma<alpha<beta)
* ``TRIG``               xi in (0,pi/2), sigma2 = sin^2(xi)
* ``TRIG_LAMBDA_SHIFT``  trig form with a (1+lambda*sin^2)^-1 reweighting, lambda > -1
* ``TRIG_LAMBDA_SCALE``  trig form with a (cos^2+lambda*sin^2)^-1 reweighting, lambda > 0

They are used to cross-validate the series evaluator; all variants are
mapped onto (0,1) and integrated by the shared tanh-sinh rule.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError, RegionError
from .extbeta import Extension, _EXP_DEAD
from .kernels import bessel_k_many, beta as classical_beta
from .quadrature import integrate_unit_interval
from .series import EngineConfig, EvalResult, HbParams, Point3, DEFAULT_CONFIG, sum_shells, x4_term

__all__ = ["RepKind", "RepVariant", "h_b_pv_integral", "x4_precheck"]


class RepKind(Enum):
    UNIT_INTERVAL = "unit_interval"
    MOBIUS = "mobius"
    TRIG = "trig"
    TRIG_LAMBDA_SHIFT = "trig_lambda_shift"
    TRIG_LAMBDA_SCALE = "trig_lambda_scale"


@dataclass(frozen=True)
class RepVariant:
    """A representation choice plus its shape parameters."""

    kind: RepKind
    abg: tuple[float, float, float] | None = None  # (gamma, alpha, beta)
    lam: float | None = None

    def __post_init__(self):
        if self.kind is RepKind.MOBIUS:
            if self.abg is None:
                raise DomainError("Mobius representation needs (gamma, alpha, beta)")
            g, a, b = self.abg
            if not (g < a < b):
                raise DomainError("Mobius parameters need gamma < alpha < beta")
        elif self.kind is RepKind.TRIG_LAMBDA_SHIFT:
            if self.lam is None or self.lam <= -1.0:
                raise DomainError("shifted trig representation needs lambda > -1")
        elif self.kind is RepKind.TRIG_LAMBDA_SCALE:
            if self.lam is None or self.lam <= 0.0:
                raise DomainError("scaled trig representation needs lambda > 0")


def x4_precheck(pt: Point3) -> bool:
    """Conservative worst-case check that every node's X_4 arguments converge.

    Along every representation sigma1+sigma2 = 1, so sigma1*sigma2 <= 1/4 and
    the X_4 region test at (|x|/4, |y|, |z|) covers all nodes.
    """
    ax, ay, az = pt.moduli()
    return math.sqrt(ax) + (math.sqrt(ay) + math.sqrt(az)) ** 2 < 1.0


def _half_sines(t: np.ndarray, tc: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(sin^2, cos^2) of (pi/2)t, the complement computed from 1-t for accuracy."""
    s2 = np.sin(math.pi / 2.0 * t) ** 2
    c2 = np.sin(math.pi / 2.0 * tc) ** 2
    return s2, c2


def h_b_pv_integral(
    variant: RepVariant,
    params: HbParams,
    ext: Extension,
    pt: Point3,
    cfg: EngineConfig | None = None,
) -> EvalResult:
    """Evaluate the extended function through the chosen integral representation."""
    cfg = cfg or DEFAULT_CONFIG
    params.require_positive_b12()
    if not x4_precheck(pt):
        raise RegionError("point fails the worst-case X_4 region precheck")

    p = ext.p
    b1, b2 = params.b1, params.b2
    prefactor = cmath.sqrt(2.0 * p / math.pi) / classical_beta(b1, b2)
    inner_cfg = EngineConfig(
        series_tol=max(1e-15, cfg.quad_tol / 100.0),
        quad_tol=cfg.quad_tol,
        max_shell=cfg.max_shell,
        stall_shells=cfg.stall_shells,
        max_quad_level=cfg.max_quad_level,
    )
    kind = variant.kind
    if kind is RepKind.MOBIUS:
        g, al, be = variant.abg
        prefactor *= (be - g) ** complex(b1 - 0.5) * (al - g) ** complex(b2 - 0.5)
    elif kind is RepKind.TRIG:
        prefactor *= 2.0 * (math.pi / 2.0)
    elif kind is RepKind.TRIG_LAMBDA_SHIFT:
        prefactor *= 2.0 * (math.pi / 2.0) * (1.0 + variant.lam) ** complex(b1 - 0.5)
    elif kind is RepKind.TRIG_LAMBDA_SCALE:
        prefactor *= 2.0 * (math.pi / 2.0) * variant.lam ** complex(b1 - 0.5)

    state = {"max_shells": 0, "inner_converged": True}

    def geometry(t: np.ndarray, tc: np.ndarray):
        """Per-node (sigma1, sigma2, algebraic factor) for the chosen variant."""
        if kind is RepKind.UNIT_INTERVAL:
            alg = t ** complex(b1 - 1.5) * tc ** complex(b2 - 1.5)
            return tc, t, alg
        if kind is RepKind.MOBIUS:
            g, al, be = variant.abg
            xi_minus_g = (al - g) + (be - al) * t
            sigma1 = (al - g) * tc / xi_minus_g
            sigma2 = (be - g) * t / xi_minus_g
            alg = (
                t ** complex(b1 - 1.5) * tc ** complex(b2 - 1.5)
                / xi_minus_g ** complex(b1 + b2 - 1.0)
            )
            return sigma1, sigma2, alg
        s2, c2 = _half_sines(t, tc)
        if kind is RepKind.TRIG:
            alg = s2 ** complex(b1 - 1.0) * c2 ** complex(b2 - 1.0)
            return c2, s2, alg
        if kind is RepKind.TRIG_LAMBDA_SHIFT:
            lam = variant.lam
            den = 1.0 + lam * s2
            alg = s2 ** complex(b1 - 1.0) * c2 ** complex(b2 - 1.0) / den ** complex(b1 + b2 - 1.0)
            return c2 / den, (1.0 + lam) * s2 / den, alg
        lam = variant.lam
        den = c2 + lam * s2
        alg = s2 ** complex(b1 - 1.0) * c2 ** complex(b2 - 1.0) / den ** complex(b1 + b2 - 1.0)
        return c2 / den, lam * s2 / den, alg

    def integrand(t: np.ndarray, tc: np.ndarray) -> np.ndarray:
        # extreme nodes drive sigma1*sigma2 to 0 and the kernel argument to
        # infinity; those entries are zeroed below, so suppress their warnings
        with np.errstate(all="ignore"):
            sigma1, sigma2, alg = geometry(t, tc)
            karg = p / (sigma1 * sigma2)
        alive = np.isfinite(karg.real) & (karg.real <= _EXP_DEAD)
        out = np.zeros(t.shape, dtype=complex)
        if not np.any(alive):
            return out
        kv = bessel_k_many(ext.order, karg[alive], tol=1e-14, max_level=cfg.max_quad_level)
        s1a, s2a = sigma1[alive], sigma2[alive]
        x4v = np.empty(s1a.shape, dtype=complex)
        for idx in range(s1a.size):
            term = x4_term(
                b1 + b2, params.b3, params.c1, params.c2, params.c3,
                Point3(s1a[idx] * s2a[idx] * pt.x, s1a[idx] * pt.y, s2a[idx] * pt.z),
            )
            inner = sum_shells(term, inner_cfg)
            state["max_shells"] = max(state["max_shells"], inner.shells_used)
            state["inner_converged"] &= inner.converged
            x4v[idx] = inner.value
        out[alive] = alg[alive] * kv * x4v
        return out

    res = integrate_unit_interval(integrand, tol=cfg.quad_tol, max_level=cfg.max_quad_level)
    return EvalResult(
        value=prefactor * complex(res.value),
        shells_used=state["max_shells"],
        tail_estimate=abs(prefactor) * res.abs_error_estimate,
        converged=res.converged and state["inner_converged"],
    )
