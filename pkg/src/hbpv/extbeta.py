"""Extended Beta functions: exponential-kernel B(x,y;p) and Bessel-kernel B_{p,nu}(x,y).

``B_{p,nu}(x, y) = sqrt(2p/pi) int_0^1 t^{x-3/2} (1-t)^{y-3/2}
K_{nu+1/2}(p / (t(1-t))) dt`` with Re p > 0, nu >= 0.  At nu = 0 the kernel
collapses (K_{1/2} closed form) and the function reduces to the
exponential-kernel extension ``B(x, y; p)``.

The triple series needs the whole family ``B_{p,nu}(x+i, y+j)`` over integer
shifts (i, j); :class:`BetaCache` computes the Bessel kernel once per
quadrature level and reuses it for every shift, so each new (i, j) costs one
set of power evaluations and a dot product.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NonConvergenceError
from .kernels import bessel_k_many
from .quadrature import _tanh_sinh_level, integrate_unit_interval

__all__ = ["Extension", "BetaCache", "chaudhry_beta", "extended_beta", "cached_extended_beta"]

MIN_RE_P = 1e-6  # below this the interior peak outruns the quadrature depth
_EXP_DEAD = 745.0
_KERNEL_TOL = 1e-14


@dataclass(frozen=True)
class Extension:
    """The (p, nu) pair of the Bessel-kernel Beta extension."""

    p: complex
    nu: float

    def __post_init__(self):
        object.__setattr__(self, "p", complex(self.p))
        object.__setattr__(self, "nu", float(self.nu))
        if self.p.real < MIN_RE_P:
            raise DomainError(f"Extension needs Re(p) >= {MIN_RE_P}, got {self.p}")
        if self.nu < 0.0:
            raise DomainError(f"Extension needs nu >= 0, got {self.nu}")

    @property
    def order(self) -> float:
        """Order nu + 1/2 of the Bessel kernel."""
        return self.nu + 0.5


def chaudhry_beta(
    x: complex, y: complex, p: complex, tol: float = 1e-12, max_level: int = 12
) -> complex:
    """Exponential-kernel extended Beta: the Beta integrand damped by exp(-p/(t(1-t)))."""
    p = complex(p)
    if p.real <= 0.0:
        raise DomainError("chaudhry_beta needs Re(p) > 0")
    x = complex(x)
    y = complex(y)

    def integrand(t: np.ndarray, tc: np.ndarray) -> np.ndarray:
        karg = p / (t * tc)
        alive = karg.real <= _EXP_DEAD
        vals = np.zeros(t.shape, dtype=complex)
        ta, tca = t[alive], tc[alive]
        with np.errstate(under="ignore"):
            vals[alive] = ta ** (x - 1.0) * tca ** (y - 1.0) * np.exp(-karg[alive])
        return vals

    res = integrate_unit_interval(integrand, tol=tol, max_level=max_level)
    if not res.converged:
        raise NonConvergenceError("chaudhry_beta quadrature did not converge")
    return complex(res.value)


class BetaCache:
    """Memoised B_{p,nu}(b1+i, b2+j) over nonnegative integer offsets (i, j).

    Kernel values on the quadrature nodes depend only on (p, nu) and are
    computed once per level, lazily; each offset pair then runs the usual
    level-doubling convergence loop over the precomputed arrays.  Values are
    bitwise-reproducible for a fixed (b1, b2, ext, tol, max_level).
    """

    def __init__(
        self,
        b1: complex,
        b2: complex,
        ext: Extension,
        tol: float = 1e-12,
        max_level: int = 12,
    ):
        self.b1 = complex(b1)
        self.b2 = complex(b2)
        self.ext = ext
        self.tol = float(tol)
        self.max_level = int(max_level)
        self.prefactor = cmath.sqrt(2.0 * ext.p / math.pi)
        self._levels: list[tuple[np.ndarray, np.ndarray, np.ndarray]] = []
        self.table: dict[tuple[int, int], complex] = {}

    def _level(self, level: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        while len(self._levels) <= level:
            t, tc, w = _tanh_sinh_level(len(self._levels))
            karg = self.ext.p / (t * tc)
            alive = karg.real <= _EXP_DEAD
            kv = np.zeros(t.shape, dtype=complex)
            kv[alive] = bessel_k_many(self.ext.order, karg[alive], tol=_KERNEL_TOL)
            wk = w * kv
            keep = wk != 0.0
            if not np.all(np.isfinite(wk[keep])):
                raise FloatingPointError("non-finite Bessel kernel value on quadrature nodes")
            self._levels.append((t[keep], tc[keep], wk[keep]))
        return self._levels[level]

    def value(self, i: int, j: int) -> complex:
        key = (int(i), int(j))
        hit = self.table.get(key)
        if hit is not None:
            return hit
        ex = self.b1 + key[0] - 1.5
        ey = self.b2 + key[1] - 1.5
        total = 0.0 + 0.0j
        prev = None
        for level in range(self.max_level + 1):
            t, tc, wk = self._level(level)
            with np.errstate(under="ignore"):
                partial = complex(np.sum(t**ex * tc**ey * wk))
            h = 0.5**level
            total = partial * h if level == 0 else 0.5 * total + h * partial
            if level >= 2 and abs(total - prev) <= self.tol * (1.0 + abs(total)):
                out = self.prefactor * total
                self.table[key] = out
                return out
            prev = total
        raise NonConvergenceError(
            f"extended_beta quadrature did not converge for offsets {key}"
        )


def cached_extended_beta(cache: BetaCache, i: int, j: int) -> complex:
    """B_{p,nu}(b1+i, b2+j) through the cache; computes and stores on miss."""
    if i < 0 or j < 0:
        raise DomainError("cached_extended_beta needs nonnegative offsets")
    return cache.value(i, j)


def extended_beta(
    x: complex, y: complex, ext: Extension, tol: float = 1e-12, max_level: int = 12
) -> complex:
    """Bessel-kernel extended Beta B_{p,nu}(x, y)."""
    return cached_extended_beta(BetaCache(x, y, ext, tol=tol, max_level=max_level), 0, 0)
