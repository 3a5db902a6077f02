"""Residual checks for the identities the extended function satisfies.

Each operation evaluates both sides of one identity with independent
machinery (series vs quadrature, finite differences vs parameter shifts) and
reports the relative residual in a :class:`CheckReport`.  Tolerances are
fixed here, next to the checks they gate:

* Mellin transform: the p-integral of the extension against p^(s-1) equals a
  gamma-pair prefactor times the a-shifted series at a = s.
* Derivative formula: mixed partials equal a Pochhammer prefactor times the
  function at integrally shifted parameters.
* Recursions: three/four-term contiguous relations in b3 and each c_j.
* Bound: |H| is strictly below an explicit positive-series majorant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, RegionError
from .extbeta import Extension, MIN_RE_P
from .kernels import bessel_k, pochhammer, upper_incomplete_gamma
from .quadrature import integrate_semi_infinite
from .series import (
    DEFAULT_CONFIG,
    EngineConfig,
    HbParams,
    Point3,
    h_b_a,
    h_b_pv,
    in_region_hb,
)

__all__ = [
    "CheckReport",
    "MELLIN_TOL",
    "DERIVATIVE_TOL",
    "RECURSION_TOL",
    "GAMMA_KERNEL_TOL",
    "mellin_check",
    "mellin_gamma_kernel_check",
    "derivative_check",
    "recursion_b3_check",
    "recursion_b3_multi_check",
    "recursion_c1_check",
    "recursion_c_permuted_check",
    "bound_check",
    "bessel_bound_check",
    "merge_reports",
]

MELLIN_TOL = 1e-5
DERIVATIVE_TOL = 1e-5
RECURSION_TOL = 1e-9
GAMMA_KERNEL_TOL = 1e-8

_MELLIN_QUAD_TOL = 1e-8
_MELLIN_FLOOR = MIN_RE_P  # smallest p the extended Beta machinery accepts
_FD_STEP = 1e-2


@dataclass
class CheckReport:
    """Outcome of one identity check over one or more samples."""

    name: str
    samples: int
    max_rel_residual: float
    passed: bool
    tolerance: float
    details: list[dict] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "samples": self.samples,
            "max_rel_residual": self.max_rel_residual,
            "passed": self.passed,
            "tolerance": self.tolerance,
            "details": self.details,
        }


def merge_reports(name: str, reports: list[CheckReport], tolerance: float) -> CheckReport:
    """Aggregate single-sample reports of the same check into one."""
    if not reports:
        return CheckReport(name, 0, 0.0, True, tolerance, [])
    details = [d for r in reports for d in r.details]
    return CheckReport(
        name=name,
        samples=sum(r.samples for r in reports),
        max_rel_residual=max(r.max_rel_residual for r in reports),
        passed=all(r.passed for r in reports),
        tolerance=tolerance,
        details=details,
    )


def _report(name: str, tol: float, detail: dict, residual: float, passed=None) -> CheckReport:
    ok = (residual <= tol) if passed is None else passed
    return CheckReport(name, 1, residual, ok, tol, [detail])


def _c2s(v: complex) -> list[float]:
    return [v.real, v.imag]


def mellin_check(
    params: HbParams,
    nu: float,
    pt: Point3,
    s: float,
    cfg: EngineConfig | None = None,
) -> CheckReport:
    """Residual of the Mellin transform identity at real transform variable s.

    The p-integral runs over [floor, inf); the missing [0, floor) mass is
    restored analytically from the small-p limit of the Bessel kernel, under
    which the extension collapses onto the a-shifted series at a = nu.
    """
    nu = float(nu)
    s = float(s)
    if not (s > nu > 0.0):
        raise DomainError("mellin_check needs s > nu > 0")
    cfg = cfg or EngineConfig(series_tol=1e-11, quad_tol=1e-11)
    delta = _MELLIN_FLOOR

    small_p_scale = 2.0**nu / math.sqrt(math.pi) * math.gamma(nu + 0.5)
    h_at_nu = h_b_a(params, nu, pt, cfg).value
    correction = small_p_scale * h_at_nu * delta ** (s - nu) / (s - nu)
    correction_err = abs(correction) * delta ** min(1.0, 2.0 * nu)

    def f(uarr: np.ndarray) -> np.ndarray:
        out = np.empty(uarr.shape, dtype=complex)
        for i, u in enumerate(uarr):
            p = delta + float(u)
            hv = h_b_pv(params, Extension(p, nu), pt, cfg).value
            out[i] = p ** (s - 1.0) * hv
        return out

    quad = integrate_semi_infinite(f, tol=_MELLIN_QUAD_TOL, max_level=9)
    lhs = complex(quad.value) + correction
    rhs = (
        2.0 ** (s - 1.0) / math.sqrt(math.pi)
        * math.gamma((s - nu) / 2.0) * math.gamma((s + nu + 1.0) / 2.0)
        * h_b_a(params, s, pt, cfg).value
    )
    residual = abs(lhs - rhs) / abs(rhs)
    detail = {
        "nu": nu, "s": s, "lhs": _c2s(lhs), "rhs": _c2s(rhs), "residual": residual,
        "quad_error": quad.abs_error_estimate + correction_err,
        "quad_converged": quad.converged,
    }
    return _report("mellin", MELLIN_TOL, detail, residual)


def mellin_gamma_kernel_check(s: float = 2.0, alpha: float = 0.5) -> CheckReport:
    """Gamma-pair value of the Bessel-kernel Mellin integral, |alpha| < s."""
    if not abs(alpha) < s:
        raise DomainError("gamma kernel identity needs |alpha| < s")
    order = alpha + 0.5

    def f(w: np.ndarray) -> np.ndarray:
        out = np.zeros(w.shape, dtype=complex)
        alive = w <= 740.0
        from .kernels import bessel_k_many

        out[alive] = w[alive] ** (s - 0.5) * bessel_k_many(order, w[alive].astype(complex))
        return out

    quad = integrate_semi_infinite(f, tol=1e-10)
    rhs = 2.0 ** (s - 1.5) * math.gamma((s - alpha) / 2.0) * math.gamma((s + alpha + 1.0) / 2.0)
    residual = abs(complex(quad.value) - rhs) / abs(rhs)
    detail = {"s": s, "alpha": alpha, "lhs": _c2s(complex(quad.value)), "rhs": [rhs, 0.0],
              "residual": residual}
    return _report("mellin_gamma_kernel", GAMMA_KERNEL_TOL, detail, residual)


_STENCILS = {
    0: ((0, 1.0),),
    1: ((-1, -0.5), (1, 0.5)),
    2: ((-1, 1.0), (0, -2.0), (1, 1.0)),
}


def _mixed_difference(values, orders: tuple[int, int, int], h: float) -> complex:
    """Tensor-product central difference of the cached evaluator ``values``."""
    mx, ny, kz = orders
    total = 0.0 + 0.0j
    for ox, wx in _STENCILS[mx]:
        for oy, wy in _STENCILS[ny]:
            for oz, wz in _STENCILS[kz]:
                total += wx * wy * wz * values(ox, oy, oz, h)
    return total / h ** (mx + ny + kz)


def derivative_check(
    params: HbParams,
    ext: Extension,
    pt: Point3,
    m_order: int,
    n_order: int,
    k_order: int,
    cfg: EngineConfig | None = None,
) -> CheckReport:
    """Mixed-partial residual (orders <= 2 per axis) via Richardson-extrapolated
    central differences against the parameter-shift closed form."""
    for d in (m_order, n_order, k_order):
        if d not in (0, 1, 2):
            raise DomainError("derivative orders must be 0, 1 or 2 per axis")
    cfg = cfg or DEFAULT_CONFIG
    h = _FD_STEP
    orders = (m_order, n_order, k_order)

    # validate the whole stencil up front: near the region boundary a single
    # stray point would otherwise trigger an extremely slow series first
    steps = (h,) if sum(orders) == 0 else (h, 0.5 * h)
    for step in steps:
        for ox, _ in _STENCILS[orders[0]]:
            for oy, _ in _STENCILS[orders[1]]:
                for oz, _ in _STENCILS[orders[2]]:
                    q = Point3(pt.x + ox * step, pt.y + oy * step, pt.z + oz * step)
                    if not in_region_hb(q):
                        raise RegionError(
                            f"finite-difference stencil point {q} leaves the region"
                        )

    cache: dict[tuple[float, float, float], complex] = {}

    def values(ox: int, oy: int, oz: int, step: float) -> complex:
        key = (ox * step, oy * step, oz * step)
        hit = cache.get(key)
        if hit is not None:
            return hit
        q = Point3(pt.x + key[0], pt.y + key[1], pt.z + key[2])
        v = h_b_pv(params, ext, q, cfg).value
        cache[key] = v
        return v
    if sum(orders) == 0:
        lhs = plain = values(0, 0, 0, h)
    else:
        plain = _mixed_difference(values, orders, h)
        lhs = (4.0 * _mixed_difference(values, orders, h / 2.0) - plain) / 3.0

    prefactor = (
        pochhammer(params.b1, m_order + k_order)
        * pochhammer(params.b2, m_order + n_order)
        * pochhammer(params.b3, n_order + k_order)
        / (pochhammer(params.c1, m_order) * pochhammer(params.c2, n_order)
           * pochhammer(params.c3, k_order))
    )
    shifted = params.shifted(
        b1=m_order + k_order, b2=m_order + n_order, b3=n_order + k_order,
        c1=m_order, c2=n_order, c3=k_order,
    )
    rhs = prefactor * h_b_pv(shifted, ext, pt, cfg).value
    residual = abs(lhs - rhs) / abs(rhs)
    detail = {
        "orders": list(orders), "lhs": _c2s(lhs), "rhs": _c2s(rhs),
        "residual": residual,
        "plain_residual": abs(plain - rhs) / abs(rhs),
    }
    return _report("derivative", DERIVATIVE_TOL, detail, residual)


def _recursion_report(name: str, params, ext, pt, cfg, lhs_value, rhs_value, extra) -> CheckReport:
    residual = abs(lhs_value - rhs_value) / abs(lhs_value)
    detail = {"lhs": _c2s(lhs_value), "rhs": _c2s(rhs_value), "residual": residual}
    detail.update(extra)
    return _report(name, RECURSION_TOL, detail, residual)


def recursion_b3_check(
    params: HbParams, ext: Extension, pt: Point3, cfg: EngineConfig | None = None
) -> CheckReport:
    """H(b3+1) = H(b3) + (y b2/c2) H(b2+1,b3+1;c2+1) + (z b1/c3) H(b1+1,b3+1;c3+1)."""
    cfg = cfg or DEFAULT_CONFIG
    lhs = h_b_pv(params.shifted(b3=1), ext, pt, cfg).value
    rhs = (
        h_b_pv(params, ext, pt, cfg).value
        + pt.y * params.b2 / params.c2
        * h_b_pv(params.shifted(b2=1, b3=1, c2=1), ext, pt, cfg).value
        + pt.z * params.b1 / params.c3
        * h_b_pv(params.shifted(b1=1, b3=1, c3=1), ext, pt, cfg).value
    )
    return _recursion_report("recursion_b3", params, ext, pt, cfg, lhs, rhs, {})


def recursion_b3_multi_check(
    params: HbParams, ext: Extension, pt: Point3, steps: int,
    cfg: EngineConfig | None = None,
) -> CheckReport:
    """N-step version: H(b3+N) unwinds into two telescoping sums over b3+l."""
    if steps < 1:
        raise DomainError("recursion_b3_multi_check needs steps >= 1")
    cfg = cfg or DEFAULT_CONFIG
    lhs = h_b_pv(params.shifted(b3=steps), ext, pt, cfg).value
    rhs = h_b_pv(params, ext, pt, cfg).value
    for ell in range(1, steps + 1):
        rhs += (
            pt.y * params.b2 / params.c2
            * h_b_pv(params.shifted(b2=1, b3=ell, c2=1), ext, pt, cfg).value
        )
        rhs += (
            pt.z * params.b1 / params.c3
            * h_b_pv(params.shifted(b1=1, b3=ell, c3=1), ext, pt, cfg).value
        )
    return _recursion_report(
        "recursion_b3_multi", params, ext, pt, cfg, lhs, rhs, {"steps": steps}
    )


def recursion_c1_check(
    params: HbParams, ext: Extension, pt: Point3, cfg: EngineConfig | None = None
) -> CheckReport:
    """Three-term recursion lowering c1, as printed for the first denominator."""
    cfg = cfg or DEFAULT_CONFIG
    lhs = h_b_pv(params, ext, pt, cfg).value
    rhs = (
        h_b_pv(params.shifted(c1=1), ext, pt, cfg).value
        + pt.x * params.b1 * params.b2 / (params.c1 * (params.c1 + 1.0))
        * h_b_pv(params.shifted(b1=1, b2=1, c1=2), ext, pt, cfg).value
    )
    return _recursion_report("recursion_c1", params, ext, pt, cfg, lhs, rhs, {"axis": "c1"})


def recursion_c_permuted_check(
    params: HbParams, ext: Extension, pt: Point3, cfg: EngineConfig | None = None
) -> CheckReport:
    """c2 and c3 analogues of the c1 recursion.

    These two are re-derived rather than copied: repeating the c1 argument on
    the n-sum (respectively k-sum) couples the shift to b2 and b3 (resp. b1
    and b3), giving

      H(c2) = H(c2+1) + (y b2 b3 / (c2(c2+1))) H(b2+1, b3+1; c2+2)
      H(c3) = H(c3+1) + (z b1 b3 / (c3(c3+1))) H(b1+1, b3+1; c3+2)

    and they are gated separately so a failure indicts the derivation, not
    the evaluator.
    """
    cfg = cfg or DEFAULT_CONFIG
    lhs = h_b_pv(params, ext, pt, cfg).value

    rhs_c2 = (
        h_b_pv(params.shifted(c2=1), ext, pt, cfg).value
        + pt.y * params.b2 * params.b3 / (params.c2 * (params.c2 + 1.0))
        * h_b_pv(params.shifted(b2=1, b3=1, c2=2), ext, pt, cfg).value
    )
    rhs_c3 = (
        h_b_pv(params.shifted(c3=1), ext, pt, cfg).value
        + pt.z * params.b1 * params.b3 / (params.c3 * (params.c3 + 1.0))
        * h_b_pv(params.shifted(b1=1, b3=1, c3=2), ext, pt, cfg).value
    )
    res = max(abs(lhs - rhs_c2) / abs(lhs), abs(lhs - rhs_c3) / abs(lhs))
    detail = {
        "lhs": _c2s(lhs),
        "rhs_c2": _c2s(rhs_c2),
        "rhs_c3": _c2s(rhs_c3),
        "residual": res,
    }
    return _report("recursion_c_permuted", RECURSION_TOL, detail, res)


def bound_check(
    params: HbParams, ext: Extension, pt: Point3, cfg: EngineConfig | None = None
) -> CheckReport:
    """Strict majorant: |H(x,y,z)| < scale(p,nu) * H^(nu) at (|x|,|y|,|z|)."""
    cfg = cfg or DEFAULT_CONFIG
    for name in ("b1", "b2", "b3", "c1", "c2", "c3"):
        v = getattr(params, name)
        if v.imag != 0.0 or v.real <= 0.0:
            raise DomainError("bound_check needs real positive parameters")
    nu = ext.nu
    if nu <= 0.0:
        raise DomainError("bound_check needs nu > 0")
    lhs = abs(h_b_pv(params, ext, pt, cfg).value)
    scale = (
        2.0**nu * abs(ext.p) ** (nu + 1.0)
        / (math.sqrt(math.pi) * ext.p.real ** (2.0 * nu + 1.0))
        * math.gamma(nu + 0.5)
    )
    ax, ay, az = pt.moduli()
    majorant = scale * h_b_a(params, nu, Point3(ax, ay, az), cfg).value.real
    ratio = lhs / majorant
    detail = {"lhs": lhs, "rhs": majorant, "ratio": ratio,
              "p": _c2s(ext.p), "nu": nu}
    return _report("bound", 1.0, detail, ratio, passed=ratio < 1.0)


def bessel_bound_check(nu: float, z: complex) -> CheckReport:
    """Strict kernel-level bounds on |K_{nu+1/2}(z)| and their sharpness order."""
    if not 0.0 < nu:
        raise DomainError("bessel_bound_check needs nu > 0")
    z = complex(z)
    if z.real <= 0.0:
        raise DomainError("bessel_bound_check needs Re z > 0")
    kv = abs(bessel_k(nu + 0.5, z))
    x = z.real
    incomplete = upper_incomplete_gamma(2.0 * nu + 1.0, x)
    rhs_sharp = (
        math.sqrt(math.pi) * (abs(z) / 2.0) ** (nu + 0.5) / math.gamma(nu + 1.0)
        * incomplete / x ** (2.0 * nu + 1.0)
    )
    rhs_loose = 0.5 * (2.0 * abs(z) / x**2) ** (nu + 0.5) * math.gamma(nu + 0.5)
    ratio = max(kv / rhs_sharp, kv / rhs_loose)
    ok = kv < rhs_sharp and kv < rhs_loose and rhs_sharp <= rhs_loose
    detail = {
        "nu": nu, "z": _c2s(z), "k_abs": kv,
        "rhs_sharp": rhs_sharp, "rhs_loose": rhs_loose, "ratio": ratio,
        "ordering_ok": rhs_sharp <= rhs_loose,
    }
    return _report("bessel_bounds", 1.0, detail, ratio, passed=ok)
