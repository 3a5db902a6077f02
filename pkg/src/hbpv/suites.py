"""Seeded verification suites driven by the CLI.

Every suite draws its inputs from one SplitMix64 stream, so a (suite,
samples, seed) triple always checks the identical sample set.  Default
sample counts match the acceptance targets; ``samples`` overrides them
uniformly and 0 yields an empty, trivially passing run.
"""

from __future__ import annotations

import cmath
import math

from .analysis import (
    CheckReport,
    DERIVATIVE_TOL,
    MELLIN_TOL,
    RECURSION_TOL,
    bessel_bound_check,
    bound_check,
    derivative_check,
    mellin_check,
    mellin_gamma_kernel_check,
    merge_reports,
    recursion_b3_check,
    recursion_b3_multi_check,
    recursion_c1_check,
    recursion_c_permuted_check,
)
from .extbeta import Extension
from .kernels import bessel_k
from .reps import RepKind, RepVariant, h_b_pv_integral
from .sampling import SplitMix64
from .series import EngineConfig, HbParams, Point3, h_b_pv

__all__ = ["SUITE_NAMES", "run_suite", "run_suites"]

SUITE_NAMES = ("kernels", "reps", "mellin", "derivative", "recursion", "bound")

_REP_CFG = EngineConfig(series_tol=1e-12, quad_tol=1e-9)

_K_HALF_FORMS = {
    0.5: lambda z: cmath.sqrt(math.pi / (2.0 * z)) * cmath.exp(-z),
    1.5: lambda z: cmath.sqrt(math.pi / (2.0 * z)) * cmath.exp(-z) * (1.0 + 1.0 / z),
    2.5: lambda z: cmath.sqrt(math.pi / (2.0 * z)) * cmath.exp(-z) * (1.0 + 3.0 / z + 3.0 / z**2),
}


def sample_params(rng: SplitMix64) -> HbParams:
    return HbParams(
        rng.uniform(0.6, 1.8), rng.uniform(0.6, 1.8), rng.uniform(0.6, 1.8),
        rng.uniform(1.3, 2.8), rng.uniform(1.3, 2.8), rng.uniform(1.3, 2.8),
    )


def sample_extension(rng: SplitMix64, complex_p: bool = False,
                     nu_lo: float = 0.25, nu_hi: float = 1.5) -> Extension:
    mod = rng.uniform(0.4, 1.5)
    arg = rng.uniform(-math.pi / 3.0, math.pi / 3.0) if complex_p else 0.0
    return Extension(mod * cmath.exp(1j * arg), rng.uniform(nu_lo, nu_hi))


def sample_point(rng: SplitMix64, box: float = 0.06, complex_coords: bool = False) -> Point3:
    def coord() -> complex:
        r = rng.uniform(0.0, box)
        if complex_coords:
            return r * cmath.exp(1j * rng.uniform(0.0, 2.0 * math.pi))
        return rng.sign() * r

    return Point3(coord(), coord(), coord())


def _suite_kernels(samples: int, rng: SplitMix64) -> list[CheckReport]:
    closed = []
    zs = [0.5 + i * (19.5 / 19.0) for i in range(20)]
    for z in zs:
        for order, form in _K_HALF_FORMS.items():
            got = bessel_k(order, z)
            want = form(complex(z))
            closed.append(abs(got - want) / abs(want))
    closed_report = CheckReport(
        "kernel_closed_forms", len(closed), max(closed), max(closed) <= 1e-12, 1e-12,
        [{"max_residual": max(closed), "orders": [0.5, 1.5, 2.5]}],
    )

    recur = []
    for _ in range(samples):
        nu = rng.uniform(1.0, 5.0)
        z = rng.uniform(0.5, 20.0)
        lhs = bessel_k(nu + 1.0, z)
        rhs = bessel_k(nu - 1.0, z) + (2.0 * nu / z) * bessel_k(nu, z)
        recur.append(abs(lhs - rhs) / abs(lhs))
    recur_max = max(recur, default=0.0)
    recur_report = CheckReport(
        "kernel_recurrence", len(recur), recur_max, recur_max <= 1e-10, 1e-10,
        [{"max_residual": recur_max}],
    )

    bounds = []
    for _ in range(samples):
        nu = rng.uniform(0.05, 3.0)
        z = rng.uniform(0.5, 20.0) * cmath.exp(1j * rng.uniform(-1.3, 1.3))
        bounds.append(bessel_bound_check(nu, z))
    return [closed_report, recur_report, merge_reports("bessel_bounds", bounds, 1.0)]


def _suite_reps(samples: int, rng: SplitMix64) -> list[CheckReport]:
    series_agree = []
    for _ in range(samples):
        params = sample_params(rng)
        ext = sample_extension(rng)
        pt = sample_point(rng)
        ref = h_b_pv(params, ext, pt, _REP_CFG).value
        got = h_b_pv_integral(RepVariant(RepKind.UNIT_INTERVAL), params, ext, pt, _REP_CFG).value
        res = abs(got - ref) / abs(ref)
        series_agree.append(CheckReport(
            "rep_series_agreement", 1, res, res <= 1e-6, 1e-6,
            [{"residual": res, "lhs": [got.real, got.imag], "rhs": [ref.real, ref.imag]}],
        ))

    variants = [
        RepVariant(RepKind.MOBIUS, abg=(-1.0, 0.0, 1.0)),
        RepVariant(RepKind.MOBIUS, abg=(-2.0, 1.0, 3.0)),
        RepVariant(RepKind.TRIG),
        RepVariant(RepKind.TRIG_LAMBDA_SHIFT, lam=0.5),
        RepVariant(RepKind.TRIG_LAMBDA_SHIFT, lam=2.0),
        RepVariant(RepKind.TRIG_LAMBDA_SCALE, lam=0.5),
        RepVariant(RepKind.TRIG_LAMBDA_SCALE, lam=2.0),
    ]
    cross = []
    for _ in range(max(1, samples // 2) if samples else 0):
        params = sample_params(rng)
        ext = sample_extension(rng)
        pt = sample_point(rng)
        ref = h_b_pv_integral(RepVariant(RepKind.UNIT_INTERVAL), params, ext, pt, _REP_CFG).value
        for var in variants:
            got = h_b_pv_integral(var, params, ext, pt, _REP_CFG).value
            res = abs(got - ref) / abs(ref)
            cross.append(CheckReport(
                "rep_variants_agreement", 1, res, res <= 1e-6, 1e-6,
                [{"variant": var.kind.value, "residual": res}],
            ))

    degen = []
    if samples:
        params = sample_params(rng)
        ext = sample_extension(rng)
        pt = sample_point(rng)
        trig = h_b_pv_integral(RepVariant(RepKind.TRIG), params, ext, pt, _REP_CFG).value
        for var in (RepVariant(RepKind.TRIG_LAMBDA_SHIFT, lam=0.0),
                    RepVariant(RepKind.TRIG_LAMBDA_SCALE, lam=1.0)):
            got = h_b_pv_integral(var, params, ext, pt, _REP_CFG).value
            res = abs(got - trig) / abs(trig)
            degen.append(CheckReport(
                "rep_degenerations", 1, res, res <= 1e-10, 1e-10,
                [{"variant": var.kind.value, "lambda": var.lam, "residual": res}],
            ))

    return [
        merge_reports("rep_series_agreement", series_agree, 1e-6),
        merge_reports("rep_variants_agreement", cross, 1e-6),
        merge_reports("rep_degenerations", degen, 1e-10),
    ]


def _suite_mellin(samples: int, rng: SplitMix64) -> list[CheckReport]:
    nus = (0.25, 0.5, 1.0)
    checks = []
    for i in range(samples):
        nu = nus[i % len(nus)]
        params = sample_params(rng)
        pt = sample_point(rng, box=0.04)
        for ds in (0.5, 1.5):
            checks.append(mellin_check(params, nu, pt, nu + ds))
    out = [merge_reports("mellin", checks, MELLIN_TOL)]
    if samples:
        out.append(mellin_gamma_kernel_check())
    return out


def _suite_derivative(samples: int, rng: SplitMix64) -> list[CheckReport]:
    orders = [
        (m, n, k)
        for m in range(3) for n in range(3) for k in range(3)
        if 1 <= m + n + k <= 3
    ]
    checks = []
    for _ in range(samples):
        params = sample_params(rng)
        ext = sample_extension(rng)
        pt = sample_point(rng, box=0.035)
        for m, n, k in orders:
            checks.append(derivative_check(params, ext, pt, m, n, k))
    return [merge_reports("derivative", checks, DERIVATIVE_TOL)]


def _suite_recursion(samples: int, rng: SplitMix64) -> list[CheckReport]:
    b3, b3n, c1, cperm = [], [], [], []
    for i in range(samples):
        params = sample_params(rng)
        ext = sample_extension(rng)
        pt = sample_point(rng)
        b3.append(recursion_b3_check(params, ext, pt))
        b3n.append(recursion_b3_multi_check(params, ext, pt, 2 + (i % 2)))
        c1.append(recursion_c1_check(params, ext, pt))
        cperm.append(recursion_c_permuted_check(params, ext, pt))
    return [
        merge_reports("recursion_b3", b3, RECURSION_TOL),
        merge_reports("recursion_b3_multi", b3n, RECURSION_TOL),
        merge_reports("recursion_c1", c1, RECURSION_TOL),
        merge_reports("recursion_c_permuted", cperm, RECURSION_TOL),
    ]


def _suite_bound(samples: int, rng: SplitMix64) -> list[CheckReport]:
    checks = []
    for _ in range(samples):
        params = sample_params(rng)
        ext = sample_extension(rng, complex_p=True, nu_lo=0.1, nu_hi=2.0)
        pt = sample_point(rng, complex_coords=True)
        checks.append(bound_check(params, ext, pt))
    return [merge_reports("bound", checks, 1.0)]


_SUITES = {
    "kernels": (_suite_kernels, 200),
    "reps": (_suite_reps, 10),
    "mellin": (_suite_mellin, 3),
    "derivative": (_suite_derivative, 2),
    "recursion": (_suite_recursion, 5),
    "bound": (_suite_bound, 50),
}


def run_suite(name: str, samples: int | None, seed: int) -> list[CheckReport]:
    fn, default = _SUITES[name]
    n = default if samples is None else samples
    if n == 0:
        return []
    return fn(n, SplitMix64(seed))


def run_suites(names: list[str], samples: int | None, seed: int) -> list[CheckReport]:
    out = []
    for name in names:
        out.extend(run_suite(name, samples, seed))
    return out
