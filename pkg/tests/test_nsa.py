"""Complex eigenvalues of the indefinite operator and the accumulation laws."""

import cmath
import math

import pytest

from indefspec.errors import (
    ArgumentError,
    BranchError,
    RealAxisError,
    SampleError,
)
from indefspec.nsa import (
    ComplexEigenvalue,
    CurveParams,
    _winding,
    curve_check,
    determinant_checked,
    determinant_expanded,
    determinant_m,
    jost_at_zero,
    locate_complex_eigs,
    m_function,
    q_of_gamma,
    symmetry_extend,
    tau_curve,
    upsilon_mp,
)

GAMMA = 2.5


class TestCurveParameters:
    def test_q_small_gamma_log_law(self):
        # q(gamma) ~ -log(gamma)/pi as gamma -> 0; the next correction is
        # 2*euler_gamma/log(gamma), so the ratio approaches 1 from below and
        # enters [0.9, 1.1] only for gamma <= 1e-6
        ratios = []
        for k in range(6, 15, 2):
            g = 10.0 ** (-k)
            ratios.append(q_of_gamma(g) * (-math.pi / math.log(g)))
        assert all(0.9 <= r <= 1.1 for r in ratios)
        assert all(a < b for a, b in zip(ratios, ratios[1:]))
        euler = 0.5772156649015329
        g = 1e-10
        assert q_of_gamma(g) * (-math.pi / math.log(g)) == pytest.approx(
            1.0 + 2.0 * euler / math.log(g), abs=5e-3
        )

    def test_q_large_gamma_oscillation(self):
        # q(gamma) ~ 1/(4 sqrt(gamma)) - 3 cos(4 sqrt(gamma))/(512 gamma)
        errs = []
        for k in range(2, 6):
            g = 10.0 ** k
            approx = 1.0 / (4.0 * math.sqrt(g)) - 3.0 * math.cos(
                4.0 * math.sqrt(g)) / (512.0 * g)
            errs.append(abs(q_of_gamma(g) - approx) * math.sqrt(g))
        assert errs[-1] < errs[0]
        assert errs[-1] < 1e-3

    def test_imaginary_parts_coincide(self):
        for i in range(100):
            g = 0.05 * (50.0 / 0.05) ** (i / 99.0)
            um, up, ups = upsilon_mp(g)
            assert abs(um.imag - up.imag) <= 1e-12 * max(1.0, abs(um.imag))
            assert um.imag == pytest.approx(ups, rel=1e-12)

    def test_difference_is_real(self):
        for g in (0.1, 1.0, 2.5, 20.0):
            um, up, _ = upsilon_mp(g)
            assert abs((um - up).imag) <= 1e-12 * max(1.0, abs(um - up))

    def test_signed_value_is_negative_log(self):
        g = 2.5
        q = q_of_gamma(g)
        _, _, ups = upsilon_mp(g)
        assert ups == pytest.approx(
            math.log(q * q / (1.0 + q * q)) / (math.pi * g), rel=1e-14
        )
        assert ups < 0.0

    def test_tau_curve_shared_imaginary_part(self):
        t = 0.01
        tm = tau_curve(GAMMA, "minus", t)
        tp = tau_curve(GAMMA, "plus", t)
        assert tm.imag == pytest.approx(tp.imag, rel=1e-14)
        assert tau_curve(GAMMA, "minus", 1e-9) / 1e-9 == pytest.approx(
            1.0, abs=1e-4
        )
        with pytest.raises(ArgumentError):
            tau_curve(GAMMA, "minus", -1.0)
        with pytest.raises(ArgumentError):
            tau_curve(GAMMA, "sideways", 0.1)


class TestJost:
    def test_conjugation_symmetry(self):
        mu = 0.02 + 0.003j
        a = jost_at_zero(mu, GAMMA)
        b = jost_at_zero(mu.conjugate(), GAMMA)
        assert a.value_at_0.conjugate() == pytest.approx(b.value_at_0, rel=1e-13)
        assert a.derivative_at_0.conjugate() == pytest.approx(
            b.derivative_at_0, rel=1e-13
        )

    def test_ode_method_agrees_with_integral(self):
        for mu in (-0.04 + 0.0j, 0.02 + 0.005j, 0.5 + 0.3j):
            ji = jost_at_zero(mu, GAMMA, "integral")
            jo = jost_at_zero(mu, GAMMA, "ode")
            assert abs(jo.value_at_0 - ji.value_at_0) <= 1e-6 * abs(ji.value_at_0)
            assert abs(jo.derivative_at_0 - ji.derivative_at_0) <= (
                1e-6 * abs(ji.derivative_at_0)
            )

    def test_temme_method_second_order_agreement(self):
        # the uniform expansion is truncated at relative order |a|^-2 (the
        # next coefficient pair has no closed form); assert the honest bound
        mu = 1e-4 * cmath.exp(1j * math.pi / 4.0)
        a_mag = GAMMA / (2.0 * abs(cmath.sqrt(-mu)))
        jt = jost_at_zero(mu, GAMMA, "temme")
        ji = jost_at_zero(mu, GAMMA, "integral")
        bound = 20.0 / a_mag**2
        assert abs(jt.value_at_0 - ji.value_at_0) <= bound * abs(ji.value_at_0)
        assert abs(jt.derivative_at_0 - ji.derivative_at_0) <= (
            bound * abs(ji.derivative_at_0)
        )

    def test_branch_violation(self):
        with pytest.raises(BranchError):
            jost_at_zero(0.3 + 0.0j, GAMMA)

    def test_bad_method(self):
        with pytest.raises(ArgumentError):
            jost_at_zero(0.02 + 0.01j, GAMMA, "magic")


class TestDeterminant:
    def test_dual_route_self_check(self):
        for mu in (0.02 + 0.005j, 0.05 + 0.01j, 0.02 + 0.001j):
            d = determinant_checked(mu, GAMMA)
            assert d == pytest.approx(determinant_expanded(mu, GAMMA), rel=1e-8)

    def test_conjugate_symmetry(self):
        mu = 0.02 + 0.001j
        assert determinant_m(mu.conjugate(), GAMMA) == pytest.approx(
            determinant_m(mu, GAMMA).conjugate(), rel=1e-12
        )

    def test_real_axis_rejected(self):
        with pytest.raises(RealAxisError):
            determinant_m(0.1 + 0.0j, GAMMA)
        with pytest.raises(RealAxisError):
            determinant_expanded(-0.1 + 0.0j, GAMMA)

    def test_m_function_identity(self):
        mu = 0.03 + 0.004j
        ji = jost_at_zero(mu, GAMMA)
        jm = jost_at_zero(-mu, GAMMA)
        assert m_function(mu, GAMMA) * ji.value_at_0 * jm.value_at_0 == (
            pytest.approx(determinant_m(mu, GAMMA), rel=1e-12)
        )


@pytest.fixture(scope="module")
def roots():
    return locate_complex_eigs(GAMMA, (0.03, 0.12), "I")


class TestRootLocation:
    def test_expected_count_and_window(self, roots):
        # lambda_n ~ gamma^2/4n^2 in [0.03, 0.12] covers n = 4..7
        assert len(roots) == 4
        for ev in roots:
            assert 0.03 <= ev.mu.real <= 0.12
            assert 0.0 < ev.mu.imag < 2.0 * GAMMA

    def test_predictions_second_order(self, roots):
        for ev in roots:
            lam = ev.predicted_D.real
            assert abs(ev.mu - ev.predicted_D) <= 0.5 * lam * lam
            assert abs(ev.mu - ev.predicted_N) <= 0.5 * lam * lam

    def test_winding_counts_known_roots(self, roots):
        assert _winding(GAMMA, (0.03, 0.12, 1e-6, 2.0 * GAMMA)) == len(roots)
        assert _winding(GAMMA, (0.3, 0.9, 1e-6, 2.0 * GAMMA)) == 1  # n = 2

    def test_quadrant_two_mirror(self, roots):
        left = locate_complex_eigs(GAMMA, (0.03, 0.12), "II")
        assert len(left) == len(roots)
        for lv, rv in zip(sorted(left, key=lambda e: e.n),
                          sorted(roots, key=lambda e: e.n)):
            assert lv.mu == pytest.approx(-rv.mu.conjugate(), rel=1e-8)

    def test_symmetry_extension(self, roots):
        ext = symmetry_extend(roots)
        assert len(ext) == 4 * len(roots)
        assert len(symmetry_extend(ext)) == len(ext)
        mus = {ev.mu for ev in ext}
        for ev in roots:
            assert ev.mu.conjugate() in mus
            assert -ev.mu.conjugate() in mus

    def test_bad_window(self):
        with pytest.raises(ArgumentError):
            locate_complex_eigs(GAMMA, (0.2, 0.1), "I")
        with pytest.raises(ArgumentError):
            locate_complex_eigs(GAMMA, (0.01, 0.1), "III")


class TestCurveFit:
    def test_synthetic_points_give_exact_slope(self):
        params = CurveParams.from_gamma(GAMMA)
        roots = []
        for n in range(3, 12):
            t = GAMMA**2 / (4.0 * n * n)
            mu = complex(t, abs(params.upsilon) * t**1.5)
            roots.append(ComplexEigenvalue(
                mu=mu, quadrant="I", n=n, residual=0.0,
                predicted_D=mu, predicted_N=mu,
            ))
        fit = curve_check(roots, params)
        assert fit.slope == pytest.approx(1.5, abs=1e-9)
        assert fit.prefactor == pytest.approx(abs(params.upsilon), rel=1e-12)

    def test_sample_error(self):
        with pytest.raises(SampleError):
            curve_check([], CurveParams.from_gamma(GAMMA))
