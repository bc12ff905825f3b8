"""Special-function bedrock: Bessel pairs, log-gamma, digamma, Kummer U."""

import cmath
import math

import mpmath
import pytest
import scipy.special as sps

from indefspec.errors import ArgumentError, OutOfRegimeError, PoleError
from indefspec.specfun import (
    bessel_jy,
    digamma,
    gamma_ln,
    kummer_u_integral,
    kummer_u_integral_scaled,
    kummer_u_temme_scaled,
)

# Bernoulli numbers B_2 .. B_30 for the independent Stirling oracle
_BERNOULLI_ORACLE = (
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0, 43867.0 / 798.0,
    -174611.0 / 330.0, 854513.0 / 138.0, -236364091.0 / 2730.0,
    8553103.0 / 6.0, -23749461029.0 / 870.0, 8615841276005.0 / 14322.0,
)


def _stirling_log_gamma(z: complex) -> complex:
    """Independent 30-term Stirling oracle with upward recurrence shift."""
    shift = 0.0 + 0.0j
    while z.real < 40.0:
        shift -= cmath.log(z)
        z = z + 1.0
    out = (z - 0.5) * cmath.log(z) - z + 0.5 * math.log(2.0 * math.pi)
    for k, b in enumerate(_BERNOULLI_ORACLE, start=1):
        out += b / (2.0 * k * (2.0 * k - 1.0) * z ** (2 * k - 1))
    return out + shift


class TestBessel:
    def test_matches_scipy_on_grid(self):
        for nu in range(4):
            for i in range(1, 81):
                x = 0.25 * i
                j, y = bessel_jy(nu, x)
                assert j == pytest.approx(sps.jv(nu, x), rel=1e-10, abs=1e-12)
                assert y == pytest.approx(sps.yv(nu, x), rel=1e-10, abs=1e-12)

    def test_wronskian_identity(self):
        # J_{nu+1} Y_nu - J_nu Y_{nu+1} = 2/(pi x)
        for nu in range(3):
            for i in range(1, 41):
                x = 0.5 * i
                jn, yn = bessel_jy(nu, x)
                jm, ym = bessel_jy(nu + 1, x)
                assert jm * yn - jn * ym == pytest.approx(
                    2.0 / (math.pi * x), rel=1e-10
                )

    def test_recurrence_identity(self):
        # C_{nu-1} + C_{nu+1} = (2 nu / x) C_nu for both kinds
        for i in range(1, 41):
            x = 0.5 * i
            j0, y0 = bessel_jy(0, x)
            j1, y1 = bessel_jy(1, x)
            j2, y2 = bessel_jy(2, x)
            assert j0 + j2 == pytest.approx(2.0 * j1 / x, rel=1e-10, abs=1e-12)
            assert y0 + y2 == pytest.approx(2.0 * y1 / x, rel=1e-10, abs=1e-12)

    def test_order_out_of_range(self):
        with pytest.raises(ArgumentError):
            bessel_jy(4, 1.0)


class TestGammaLn:
    def test_against_stirling_oracle(self):
        pts = [0.5, 1.0, 3.7, 12.0, complex(2.0, 5.0), complex(0.3, -9.0),
               complex(30.0, 30.0), complex(1.0, 80.0)]
        for z in pts:
            ours = gamma_ln(complex(z))
            oracle = _stirling_log_gamma(complex(z))
            assert abs(ours - oracle) <= 1e-11 * max(1.0, abs(oracle))


class TestDigamma:
    def test_against_mpmath(self):
        pts = [0.3, 1.0, 7.5, complex(2.0, 3.0), complex(0.5, -20.0),
               complex(-4.3, 0.7), complex(15.0, 0.0)]
        for z in pts:
            ours = digamma(complex(z))
            ref = complex(mpmath.digamma(complex(z)))
            assert abs(ours - ref) <= 1e-12 * max(1.0, abs(ref))

    def test_pole_raises(self):
        with pytest.raises(PoleError):
            digamma(0.0 + 0.0j)
        with pytest.raises(PoleError):
            digamma(-3.0 + 0.0j)


class TestKummerU:
    def test_integral_against_mpmath(self):
        cases = [
            (1.5 + 0.0j, 2.0, 0.7 + 0.0j),
            (0.3 - 2.0j, 2.0, 1.0 + 1.0j),
            (1.0 - 6.25j, 2.0, 0.1 + 0.4j),
            (-3.0 + 0.0j, 0.0, 2.0 + 0.0j),
            (2.0 + 5.0j, 3.0, 0.5 - 0.5j),
        ]
        for a, b, z in cases:
            ours = kummer_u_integral(a, b, z)
            ref = complex(mpmath.hyperu(complex(a), complex(b), complex(z)))
            assert abs(ours - ref) <= 1e-10 * max(1.0, abs(ref))

    def test_small_argument_oscillatory_regime(self):
        # small |z| with large |Im a|: the ascending-series leg must engage
        for mu in (0.02 + 0.005j, 0.004 + 0.0004j):
            s = cmath.sqrt(-mu)
            a = 1.0 - 2.5 / (2.0 * s)
            z = 2.0 * s
            for b in (2.0, 3.0):
                ours = kummer_u_integral(a if b == 2.0 else a + 1.0, b, z)
                ref = complex(mpmath.hyperu(
                    complex(a if b == 2.0 else a + 1.0), b, complex(z)))
                assert abs(ours - ref) <= 1e-9 * max(1.0, abs(ref))

    def test_scaled_consistency(self):
        a, b, z = 0.3 - 2.0j, 2.0, 1.0 + 1.0j
        m, ls = kummer_u_integral_scaled(a, b, z)
        assert m * math.exp(ls) == pytest.approx(
            kummer_u_integral(a, b, z), rel=1e-13
        )


class TestTemme:
    def test_below_regime_raises(self):
        with pytest.raises(OutOfRegimeError):
            kummer_u_temme_scaled(1.0, 0, 2.5)

    def test_bad_c_raises(self):
        with pytest.raises(ArgumentError):
            kummer_u_temme_scaled(20.0, 2, 2.5)

    @pytest.mark.parametrize("c", [0, -1])
    @pytest.mark.parametrize("gamma", [0.5, 2.5, 10.0])
    def test_second_order_accuracy(self, c, gamma):
        # relative error against the integral representation decays like a^-2
        errs = []
        a_vals = [10.0 * 2.0**k for k in range(6)]
        for a in a_vals:
            m_t, l_t, _ = kummer_u_temme_scaled(a, c, gamma)
            m_e, l_e = kummer_u_integral_scaled(-a, float(c), gamma / a)
            errs.append(abs(m_t * cmath.exp(l_t - l_e) - m_e) / abs(m_e))
        slope = (math.log(errs[-1]) - math.log(errs[0])) / (
            math.log(a_vals[-1]) - math.log(a_vals[0])
        )
        assert slope == pytest.approx(-2.0, abs=0.3)
