"""Scalar kernel checks: gamma machinery, incomplete gamma, Bessel K."""

import cmath
import math
import random

import mpmath as mp
import pytest

from hbpv.errors import DomainError, PoleError
from hbpv.kernels import (
    bessel_k,
    beta,
    log_gamma,
    pochhammer,
    upper_incomplete_gamma,
)

mp.mp.dps = 30

LN_SQRT_PI = 0.5723649429247000870717136756765293558236
K_ONE_ONE = 0.6019072301972345747375400015356173392616


class TestLogGamma:
    def test_at_one(self):
        assert abs(log_gamma(1.0)) < 1e-14

    def test_at_half(self):
        assert abs(log_gamma(0.5) - LN_SQRT_PI) < 1e-14

    def test_at_five(self):
        assert abs(log_gamma(5.0) - math.log(24.0)) < 1e-13

    def test_pole_errors(self):
        for z in (0.0, -1.0, -2.0, -7.0, -3.0 + 1e-13j):
            with pytest.raises(PoleError):
                log_gamma(z)

    def test_exp_recovers_gamma_on_complex_grid(self):
        rng = random.Random(7)
        for _ in range(60):
            z = complex(rng.uniform(-4.0, 6.0), rng.uniform(-4.0, 4.0))
            if abs(z.imag) < 1e-6 and abs(z.real - round(z.real)) < 1e-6 and z.real < 0.5:
                continue
            got = cmath.exp(log_gamma(z))
            want = complex(mp.gamma(mp.mpc(z.real, z.imag)))
            assert abs(got - want) <= 1e-13 * abs(want)


class TestPochhammer:
    def test_empty_product(self):
        assert pochhammer(3.7, 0) == 1.0

    def test_factorial_case(self):
        assert abs(pochhammer(1.0, 6) - 720.0) < 1e-12

    def test_three_two(self):
        assert abs(pochhammer(3.0, 2) - 12.0) < 1e-14

    def test_nonpositive_integer_lambda_vanishes(self):
        assert pochhammer(-3.0, 5) == 0.0
        assert pochhammer(-3.0, 100) == 0.0

    def test_large_n_ratio_path(self):
        got = pochhammer(1.5 + 0.5j, 120)
        want = complex(mp.rf(mp.mpc(1.5, 0.5), 120))
        assert abs(got - want) <= 1e-12 * abs(want)

    def test_addition_formula(self):
        rng = random.Random(11)
        # exact for integer inputs while products stay below 2**53
        for _ in range(10):
            lam = float(rng.randint(1, 4))
            m, n = rng.randint(0, 6), rng.randint(0, 6)
            assert pochhammer(lam, m + n) == pochhammer(lam, m) * pochhammer(lam + m, n)
        # 1e-14 otherwise
        for _ in range(30):
            lam = complex(rng.uniform(0.2, 3.0), rng.uniform(-1.0, 1.0))
            m, n = rng.randint(0, 20), rng.randint(0, 20)
            lhs = pochhammer(lam, m + n)
            rhs = pochhammer(lam, m) * pochhammer(lam + m, n)
            assert abs(lhs - rhs) <= 1e-14 * abs(lhs)

    def test_negative_n_rejected(self):
        with pytest.raises(DomainError):
            pochhammer(1.0, -1)


class TestBeta:
    def test_one_one(self):
        assert abs(beta(1.0, 1.0) - 1.0) < 1e-14

    def test_half_half(self):
        assert abs(beta(0.5, 0.5) - math.pi) < 1e-13 * math.pi

    def test_two_three(self):
        assert abs(beta(2.0, 3.0) - 1.0 / 12.0) < 1e-14

    def test_symmetry(self):
        a, b = 1.3 + 0.2j, 2.6 - 0.7j
        assert beta(a, b) == beta(b, a)

    def test_contiguous_identity(self):
        rng = random.Random(3)
        for _ in range(25):
            a = complex(rng.uniform(0.3, 3.0), rng.uniform(-0.5, 0.5))
            b = complex(rng.uniform(0.3, 3.0), rng.uniform(-0.5, 0.5))
            lhs = beta(a, b)
            rhs = (a + b) * (a + b + 1.0) / (a * b) * beta(a + 1.0, b + 1.0)
            assert abs(lhs - rhs) <= 1e-12 * abs(lhs)

    def test_pole(self):
        with pytest.raises(PoleError):
            beta(-1.0, 0.5)


class TestUpperIncompleteGamma:
    def test_full_integral(self):
        assert abs(upper_incomplete_gamma(2.5, 0.0) - math.gamma(2.5)) < 1e-14

    def test_exponential_case(self):
        assert abs(upper_incomplete_gamma(1.0, 1.0) - math.exp(-1.0)) < 1e-15

    def test_linear_case(self):
        assert abs(upper_incomplete_gamma(2.0, 1.0) - 2.0 * math.exp(-1.0)) < 1e-15

    def test_against_mpmath(self):
        rng = random.Random(5)
        for _ in range(40):
            a = rng.uniform(0.1, 8.0)
            x = rng.uniform(0.0, 30.0)
            got = upper_incomplete_gamma(a, x)
            want = float(mp.gammainc(a, x))
            assert abs(got - want) <= 1e-12 * max(abs(want), 1e-280)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            upper_incomplete_gamma(0.0, 1.0)
        with pytest.raises(DomainError):
            upper_incomplete_gamma(1.0, -0.5)


class TestBesselK:
    def test_half_order_closed_form(self):
        got = bessel_k(0.5, 2.0)
        want = math.sqrt(math.pi / 4.0) * math.exp(-2.0)
        assert abs(got - want) <= 1e-13 * want

    def test_three_halves_closed_form(self):
        got = bessel_k(1.5, 1.0)
        want = 2.0 * math.sqrt(math.pi / 2.0) * math.exp(-1.0)
        assert abs(got - want) <= 1e-13 * want

    def test_order_one_fixture(self):
        got = bessel_k(1.0, 1.0)
        assert abs(got - K_ONE_ONE) <= 1e-13 * K_ONE_ONE

    def test_relative_accuracy_across_contract_range(self):
        for z in (1e-3, 0.02, 0.7, 5.0, 29.0, 31.0, 120.0, 700.0):
            for order in (0.0, 0.75, 2.0, 5.5):
                got = bessel_k(order, z)
                want = complex(mp.besselk(order, mp.mpf(z)))
                assert abs(got - want) <= 1e-12 * abs(want), (order, z)

    def test_complex_argument(self):
        rng = random.Random(17)
        for _ in range(25):
            z = rng.uniform(0.5, 25.0) * cmath.exp(1j * rng.uniform(-1.3, 1.3))
            order = rng.uniform(0.0, 4.0)
            got = bessel_k(order, z)
            want = complex(mp.besselk(order, mp.mpc(z.real, z.imag)))
            assert abs(got - want) <= 1e-12 * abs(want)

    def test_recurrence(self):
        rng = random.Random(23)
        for _ in range(40):
            nu = rng.uniform(1.0, 5.0)
            z = rng.uniform(0.5, 20.0)
            lhs = bessel_k(nu + 1.0, z)
            rhs = bessel_k(nu - 1.0, z) + (2.0 * nu / z) * bessel_k(nu, z)
            assert abs(lhs - rhs) <= 1e-10 * abs(lhs)

    def test_half_integer_ladder(self):
        # K_{k+1/2} from K_{1/2} via the recurrence, k = 0, 1, 2
        for z in (0.5, 1.7, 8.0, 20.0):
            k_half = cmath.sqrt(math.pi / (2.0 * z)) * cmath.exp(-z)
            ladder = [k_half, k_half * (1.0 + 1.0 / z)]
            ladder.append(ladder[0] + (2.0 * 1.5 / z) * ladder[1])
            for k, want in enumerate(ladder):
                got = bessel_k(k + 0.5, z)
                assert abs(got - want) <= 1e-12 * abs(want)

    def test_underflow_flag(self):
        value, underflowed = bessel_k(0.5, 800.0, return_flag=True)
        assert value == 0.0
        assert underflowed

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            bessel_k(0.5, -1.0)
        with pytest.raises(DomainError):
            bessel_k(0.5, 1j)
        with pytest.raises(DomainError):
            bessel_k(-0.5, 1.0)
