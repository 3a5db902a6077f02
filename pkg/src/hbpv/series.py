"""Triple hypergeometric series engine and the four series-defined functions.

All four functions share one summation strategy: terms are grouped into
total-degree shells m+n+k = N, shells are accumulated until several
consecutive ones are negligible, and a geometric extrapolation of the last
shells provides the tail estimate.  Term values come from lazily grown
product tables (rising factorials, factorials, monomial powers), which keep
integer-shift arithmetic exact; deep shells whose table entries overflow
double precision transparently fall back to a log-gamma evaluation of the
same term.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError, PoleError, RegionError
from .extbeta import BetaCache, Extension, cached_extended_beta
from .kernels import beta as classical_beta
from .kernels import log_gamma

__all__ = [
    "EngineConfig",
    "HbParams",
    "Point3",
    "EvalResult",
    "in_region_hb",
    "in_region_x4",
    "sum_shells",
    "h_b",
    "h_b_a",
    "x4",
    "h_b_pv",
]


@dataclass(frozen=True)
class EngineConfig:
    """Single source of numerical policy for series and quadrature."""

    series_tol: float = 1e-12
    quad_tol: float = 1e-12
    max_shell: int = 400
    stall_shells: int = 3
    max_quad_level: int = 12

    def __post_init__(self):
        if self.series_tol <= 0 or self.quad_tol <= 0:
            raise DomainError("tolerances must be positive")
        if self.max_shell <= 0 or self.max_quad_level <= 0:
            raise DomainError("depth caps must be positive")
        if self.stall_shells < 1:
            raise DomainError("stall_shells must be >= 1")


DEFAULT_CONFIG = EngineConfig()


def _reject_nonpositive_integer(name: str, v: complex) -> None:
    if abs(v.imag) <= 1e-12:
        r = round(v.real)
        if r <= 0 and abs(v.real - r) <= 1e-12:
            raise PoleError(f"{name} must not be a nonpositive integer, got {v}")


@dataclass(frozen=True)
class HbParams:
    """The six parameters (b1,b2,b3;c1,c2,c3) shared by the H_B family."""

    b1: complex
    b2: complex
    b3: complex
    c1: complex
    c2: complex
    c3: complex

    def __post_init__(self):
        for f in ("b1", "b2", "b3", "c1", "c2", "c3"):
            object.__setattr__(self, f, complex(getattr(self, f)))
        for f in ("c1", "c2", "c3"):
            _reject_nonpositive_integer(f, getattr(self, f))

    def shifted(self, b1=0, b2=0, b3=0, c1=0, c2=0, c3=0) -> "HbParams":
        """New parameter set with the given additive offsets."""
        return HbParams(
            self.b1 + b1, self.b2 + b2, self.b3 + b3,
            self.c1 + c1, self.c2 + c2, self.c3 + c3,
        )

    def require_positive_b12(self) -> None:
        if self.b1.real <= 0.0 or self.b2.real <= 0.0:
            raise DomainError("this evaluation needs Re(b1) > 0 and Re(b2) > 0")


@dataclass(frozen=True)
class Point3:
    """Evaluation point (x, y, z); region membership is a separate query."""

    x: complex
    y: complex
    z: complex

    def __post_init__(self):
        for f in ("x", "y", "z"):
            object.__setattr__(self, f, complex(getattr(self, f)))

    def moduli(self) -> tuple[float, float, float]:
        return abs(self.x), abs(self.y), abs(self.z)


@dataclass
class EvalResult:
    """Computed value plus truncation/quadrature diagnostics."""

    value: complex
    shells_used: int
    tail_estimate: float
    converged: bool


def in_region_hb(pt: Point3) -> bool:
    """Convergence region of the H_B family: |x|+|y|+|z|+2*sqrt(|x||y||z|) < 1."""
    ax, ay, az = pt.moduli()
    return ax + ay + az + 2.0 * math.sqrt(ax * ay * az) < 1.0


def in_region_x4(pt: Point3) -> bool:
    """Convergence region of the X_4 series: 2*sqrt(|x|) + (sqrt(|y|)+sqrt(|z|))**2 < 1."""
    ax, ay, az = pt.moduli()
    return 2.0 * math.sqrt(ax) + (math.sqrt(ay) + math.sqrt(az)) ** 2 < 1.0


class _Poch:
    """Lazily grown table of rising-factorial values (lam)_q."""

    __slots__ = ("lam", "vals")

    def __init__(self, lam: complex):
        self.lam = complex(lam)
        self.vals = [1.0 + 0.0j]

    def __call__(self, q: int) -> complex:
        vals = self.vals
        while len(vals) <= q:
            vals.append(vals[-1] * (self.lam + (len(vals) - 1)))
        return vals[q]


class _Pow:
    """Lazily grown table of integer powers base**q."""

    __slots__ = ("base", "vals")

    def __init__(self, base: complex):
        self.base = complex(base)
        self.vals = [1.0 + 0.0j]

    def __call__(self, q: int) -> complex:
        vals = self.vals
        while len(vals) <= q:
            vals.append(vals[-1] * self.base)
        return vals[q]


class _Fact:
    """Lazily grown factorial table."""

    __slots__ = ("vals",)

    def __init__(self):
        self.vals = [1.0]

    def __call__(self, q: int) -> float:
        vals = self.vals
        while len(vals) <= q:
            vals.append(vals[-1] * len(vals))
        return vals[q]


def _log_poch_ratio(lam: complex, q: int) -> complex:
    """log((lam)_q) assuming the value is nonzero."""
    if q == 0:
        return 0.0 + 0.0j
    return log_gamma(lam + q) - log_gamma(lam)


def _log_monomial(base: complex, q: int) -> complex:
    return q * cmath.log(base) if q else 0.0 + 0.0j


def _is_zero_poch(lam: complex, q: int) -> bool:
    """True when (lam)_q vanishes: lam a nonpositive integer with -lam < q."""
    if q == 0 or abs(lam.imag) > 0.0:
        return False
    r = round(lam.real)
    return lam.real == r and r <= 0 and -r < q


def _log_term(nums, dens, monos, extra: complex, m: int, n: int, k: int) -> complex:
    """Overflow-proof term evaluation through log-gamma; exact zeros short-circuit."""
    for lam, q in nums:
        if _is_zero_poch(lam, q):
            return 0.0 + 0.0j
    for base, q in monos:
        if base == 0.0 and q > 0:
            return 0.0 + 0.0j
    s = extra
    for lam, q in nums:
        s += _log_poch_ratio(lam, q)
    for lam, q in dens:
        s -= _log_poch_ratio(lam, q)
    for base, q in monos:
        s += _log_monomial(base, q)
    s -= math.lgamma(m + 1) + math.lgamma(n + 1) + math.lgamma(k + 1)
    return cmath.exp(s)


def _finite(v: complex) -> bool:
    return math.isfinite(v.real) and math.isfinite(v.imag)


def sum_shells(term, cfg: EngineConfig | None = None) -> EvalResult:
    """Sum term(m,n,k) over the whole octant by total-degree shells.

    Stops once ``stall_shells`` consecutive shells (and their geometric tail
    extrapolation) fall below ``series_tol * (1 + |sum|)``; a single small
    shell is not trusted because shells can vanish by cancellation.
    """
    cfg = cfg or DEFAULT_CONFIG
    total = 0.0 + 0.0j
    stall = 0
    prev_mag = 0.0
    last_mag = 0.0
    tail_now = 0.0
    shells = 0
    converged = False
    for big_n in range(cfg.max_shell + 1):
        s = 0.0 + 0.0j
        for m in range(big_n + 1):
            for n in range(big_n - m + 1):
                s += term(m, n, big_n - m - n)
        total += s
        shells = big_n + 1
        mag = abs(s)
        if mag > 0.0:
            prev_mag, last_mag = last_mag, mag
        # an exactly-zero shell continues geometrically to zero; otherwise the
        # extrapolated tail must itself be negligible before we trust a stall
        tail_now = _tail(prev_mag, last_mag) if mag > 0.0 else 0.0
        thresh = cfg.series_tol * (1.0 + abs(total))
        if mag <= thresh and tail_now <= thresh:
            stall += 1
            if stall >= cfg.stall_shells:
                converged = True
                break
        else:
            stall = 0
    return EvalResult(total, shells, tail_now, converged)


def _tail(prev_mag: float, last_mag: float) -> float:
    """Geometric tail bound from the last two nonzero shell magnitudes."""
    if last_mag == 0.0 or prev_mag == 0.0:
        return 0.0
    r = min(0.99, last_mag / prev_mag)
    return last_mag * r / (1.0 - r)


def hb_term(params: HbParams, pt: Point3):
    """Termwise form of H_B with decoupled numerator parameters."""
    pb1, pb2, pb3 = _Poch(params.b1), _Poch(params.b2), _Poch(params.b3)
    pc1, pc2, pc3 = _Poch(params.c1), _Poch(params.c2), _Poch(params.c3)
    px, py, pz = _Pow(pt.x), _Pow(pt.y), _Pow(pt.z)
    fact = _Fact()

    def term(m: int, n: int, k: int) -> complex:
        v = (
            pb1(m + k) * pb2(m + n) * pb3(n + k)
            / (pc1(m) * pc2(n) * pc3(k))
            * px(m) * py(n) * pz(k)
            / (fact(m) * fact(n) * fact(k))
        )
        if _finite(v):
            return v
        return _log_term(
            [(params.b1, m + k), (params.b2, m + n), (params.b3, n + k)],
            [(params.c1, m), (params.c2, n), (params.c3, k)],
            [(pt.x, m), (pt.y, n), (pt.z, k)],
            0.0 + 0.0j, m, n, k,
        )

    return term


def hb_beta_form_term(params: HbParams, pt: Point3):
    """Termwise Beta-ratio form of H_B: identical values, different factorization."""
    return hba_term(params, 0.0, pt)


class _BetaRatio:
    """R(i,j) = B(b1+a+i, b2+a+j) / B(b1,b2) via exact one-step recurrences."""

    def __init__(self, b1: complex, b2: complex, a: complex):
        self.u = b1 + a
        self.v = b2 + a
        self.s = b1 + b2 + 2.0 * a
        self.log_b0 = log_gamma(b1) + log_gamma(b2) - log_gamma(b1 + b2)
        r00 = cmath.exp(log_gamma(self.u) + log_gamma(self.v) - log_gamma(self.s) - self.log_b0)
        self.table: dict[tuple[int, int], complex] = {(0, 0): r00}

    def __call__(self, i: int, j: int) -> complex:
        hit = self.table.get((i, j))
        if hit is not None:
            return hit
        if i > 0:
            v = self(i - 1, j) * (self.u + (i - 1)) / (self.s + (i - 1) + j)
        else:
            v = self(0, j - 1) * (self.v + (j - 1)) / (self.s + (j - 1))
        self.table[(i, j)] = v
        return v

    def log_value(self, i: int, j: int) -> complex:
        return (
            log_gamma(self.u + i) + log_gamma(self.v + j)
            - log_gamma(self.s + i + j) - self.log_b0
        )


def hba_term(params: HbParams, a: complex, pt: Point3):
    """Termwise form of H_B^(a): coupled (b1+b2) factor times a shifted Beta ratio."""
    a = complex(a)
    psum = _Poch(params.b1 + params.b2)
    pb3 = _Poch(params.b3)
    pc1, pc2, pc3 = _Poch(params.c1), _Poch(params.c2), _Poch(params.c3)
    px, py, pz = _Pow(pt.x), _Pow(pt.y), _Pow(pt.z)
    fact = _Fact()
    ratio = _BetaRatio(params.b1, params.b2, a)

    def term(m: int, n: int, k: int) -> complex:
        v = (
            psum(2 * m + n + k) * pb3(n + k)
            / (pc1(m) * pc2(n) * pc3(k))
            * ratio(m + k, m + n)
            * px(m) * py(n) * pz(k)
            / (fact(m) * fact(n) * fact(k))
        )
        if _finite(v):
            return v
        return _log_term(
            [(params.b1 + params.b2, 2 * m + n + k), (params.b3, n + k)],
            [(params.c1, m), (params.c2, n), (params.c3, k)],
            [(pt.x, m), (pt.y, n), (pt.z, k)],
            ratio.log_value(m + k, m + n), m, n, k,
        )

    return term


def x4_term(b1: complex, b2: complex, c1: complex, c2: complex, c3: complex, pt: Point3):
    """Termwise form of the X_4 series."""
    pb1, pb2 = _Poch(b1), _Poch(b2)
    pc1, pc2, pc3 = _Poch(c1), _Poch(c2), _Poch(c3)
    px, py, pz = _Pow(pt.x), _Pow(pt.y), _Pow(pt.z)
    fact = _Fact()

    def term(m: int, n: int, k: int) -> complex:
        v = (
            pb1(2 * m + n + k) * pb2(n + k)
            / (pc1(m) * pc2(n) * pc3(k))
            * px(m) * py(n) * pz(k)
            / (fact(m) * fact(n) * fact(k))
        )
        if _finite(v):
            return v
        return _log_term(
            [(b1, 2 * m + n + k), (b2, n + k)],
            [(c1, m), (c2, n), (c3, k)],
            [(pt.x, m), (pt.y, n), (pt.z, k)],
            0.0 + 0.0j, m, n, k,
        )

    return term


def _require_region_hb(pt: Point3) -> None:
    if not in_region_hb(pt):
        ax, ay, az = pt.moduli()
        f = ax + ay + az + 2.0 * math.sqrt(ax * ay * az)
        raise RegionError(f"point outside H_B convergence region (constraint value {f:.6g} >= 1)")


def h_b(params: HbParams, pt: Point3, cfg: EngineConfig | None = None) -> EvalResult:
    """Srivastava's triple hypergeometric function H_B."""
    _require_region_hb(pt)
    return sum_shells(hb_term(params, pt), cfg)


def h_b_a(params: HbParams, a: complex, pt: Point3, cfg: EngineConfig | None = None) -> EvalResult:
    """H_B^(a): H_B with both Beta-ratio arguments shifted by a."""
    _require_region_hb(pt)
    a = complex(a)
    if (params.b1 + a).real <= 0.0 or (params.b2 + a).real <= 0.0:
        raise DomainError("h_b_a needs Re(b1+a) > 0 and Re(b2+a) > 0")
    return sum_shells(hba_term(params, a, pt), cfg)


def x4(
    b1: complex, b2: complex,
    c1: complex, c2: complex, c3: complex,
    pt: Point3, cfg: EngineConfig | None = None,
) -> EvalResult:
    """Exton's triple hypergeometric function X_4."""
    if not in_region_x4(pt):
        raise RegionError("point outside X_4 convergence region")
    for name, c in (("c1", c1), ("c2", c2), ("c3", c3)):
        _reject_nonpositive_integer(name, complex(c))
    return sum_shells(x4_term(b1, b2, c1, c2, c3, pt), cfg)


def h_b_pv(
    params: HbParams,
    ext: Extension,
    pt: Point3,
    cfg: EngineConfig | None = None,
    _cache: BetaCache | None = None,
) -> EvalResult:
    """The (p,nu)-extended H_B: Beta ratio replaced by the Bessel-kernel Beta."""
    cfg = cfg or DEFAULT_CONFIG
    _require_region_hb(pt)
    params.require_positive_b12()
    cache = _cache or BetaCache(
        params.b1, params.b2, ext, tol=cfg.quad_tol, max_level=cfg.max_quad_level
    )
    psum = _Poch(params.b1 + params.b2)
    pb3 = _Poch(params.b3)
    pc1, pc2, pc3 = _Poch(params.c1), _Poch(params.c2), _Poch(params.c3)
    px, py, pz = _Pow(pt.x), _Pow(pt.y), _Pow(pt.z)
    fact = _Fact()
    inv_b0 = 1.0 / classical_beta(params.b1, params.b2)

    def term(m: int, n: int, k: int) -> complex:
        bv = cached_extended_beta(cache, m + k, m + n)
        if bv == 0.0:
            return 0.0 + 0.0j
        v = (
            psum(2 * m + n + k) * pb3(n + k)
            / (pc1(m) * pc2(n) * pc3(k))
            * bv * inv_b0
            * px(m) * py(n) * pz(k)
            / (fact(m) * fact(n) * fact(k))
        )
        if _finite(v):
            return v
        return _log_term(
            [(params.b1 + params.b2, 2 * m + n + k), (params.b3, n + k)],
            [(params.c1, m), (params.c2, n), (params.c3, k)],
            [(pt.x, m), (pt.y, n), (pt.z, k)],
            cmath.log(bv) + cmath.log(inv_b0), m, n, k,
        )

    return sum_shells(term, cfg)
