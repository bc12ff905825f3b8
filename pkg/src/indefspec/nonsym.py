"""Indefinite operator with different couplings on the two half lines.

For V(x) = -gamma_+/(1+|x|) on x > 0 and -gamma_-/(1+|x|) on x < 0, the
operator sgn(x)(-d^2/dx^2 + V) loses the mu -> -conj mu symmetry of the
equal-coupling case: eigenvalues still come in conjugate pairs, but the
accumulation curves in the right and left half planes carry different
coefficients

    Upsilon_-+(gamma_+, gamma_-) = (4/pi) * gamma_-^{-1} arctan(1/f_-+(gamma_+, gamma_-))   (Re mu > 0)
                                 = (4/pi) * gamma_+^{-1} arctan(1/f_-+(gamma_-, gamma_+))   (Re mu < 0)

built from the Bessel combinations f_-+(nu, eta).  At gamma_+ = gamma_- both
reduce to the symmetric coefficients of the equal-coupling accumulation law.
For Re mu > 0 the roots are pinned by the gamma_- half line (it supplies the
bound-state quantization), so gamma_- dominates there and gamma_+ only enters
through the bounded Bessel term; the situation is mirrored for Re mu < 0.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import ArgumentError, DomainError, PoleError, RealAxisError
from .nsa import _jost_scaled_integral
from .sa import HalfLineProblem, solve_sa_spectrum

__all__ = [
    "AsymPotential",
    "f_pm",
    "upsilon_nonsym",
    "m_nonsym",
    "determinant_nonsym",
    "locate_nonsym_eigs",
]

SIGNS = ("minus", "plus")
HALVES = ("Re_positive", "Re_negative")


@dataclass(frozen=True)
class AsymPotential:
    """Couplings of -gamma_+/(1+|x|) (x>0) and -gamma_-/(1+|x|) (x<0)."""

    gamma_plus: float
    gamma_minus: float

    def __post_init__(self):
        if self.gamma_plus <= 0.0 or self.gamma_minus <= 0.0:
            raise DomainError(
                f"couplings must be positive, got ({self.gamma_plus}, {self.gamma_minus})"
            )


def _bessel_block(nu: float) -> tuple[float, float]:
    # (J_1^2 + J_0^2, pi sqrt(nu) (J_0 J_1 + Y_0 Y_1)) at argument 2 sqrt(nu)
    from .specfun import bessel_jy

    w = 2.0 * math.sqrt(nu)
    j0, y0 = bessel_jy(0, w)
    j1, y1 = bessel_jy(1, w)
    return j1 * j1 + j0 * j0, math.pi * math.sqrt(nu) * (j0 * j1 + y0 * y1)


def f_pm(nu: float, eta: float, sign: str) -> complex:
    """f_-+(nu, eta): the Bessel combination entering the asymmetric coefficients.

    f_-(nu,eta) = r(eta)/r(nu) * (i - p(nu)) - p(eta) and
    f_+(nu,eta) = r(eta)/r(nu) * (i + p(nu)) + p(eta), where
    r(x) = J_1^2(2 sqrt(x)) + J_0^2(2 sqrt(x)) and
    p(x) = pi sqrt(x) (J_0 J_1 + Y_0 Y_1)(2 sqrt(x)).  At nu = eta = gamma the
    ratio collapses to 1 and f_-+ = i -+ 2 q(gamma).
    """
    if nu <= 0.0 or eta <= 0.0:
        raise ArgumentError(f"nu, eta must be positive, got ({nu}, {eta})")
    if sign not in SIGNS:
        raise ArgumentError(f"sign must be in {SIGNS}, got {sign!r}")
    r_nu, p_nu = _bessel_block(nu)
    r_eta, p_eta = _bessel_block(eta)
    ratio = r_eta / r_nu
    if sign == "minus":
        return ratio * (1j - p_nu) - p_eta
    return ratio * (1j + p_nu) + p_eta


def upsilon_nonsym(potential: AsymPotential, sign: str, half: str) -> complex:
    """Quadrant-dependent curve coefficient Upsilon_-+(gamma_+, gamma_-).

    For Re mu > 0 the coefficient is (4/pi) gamma_-^{-1} arctan(1/f_-+(gamma_+,
    gamma_-)); for Re mu < 0 the couplings swap roles, including the inverse
    prefactor.  Reduces to the symmetric coefficients at gamma_+ = gamma_-.
    """
    if half not in HALVES:
        raise ArgumentError(f"half must be in {HALVES}, got {half!r}")
    gp, gm = potential.gamma_plus, potential.gamma_minus
    if half == "Re_positive":
        return 4.0 / math.pi / gm * cmath.atan(1.0 / f_pm(gp, gm, sign))
    return 4.0 / math.pi / gp * cmath.atan(1.0 / f_pm(gm, gp, sign))


def m_nonsym(mu: complex, potential: AsymPotential) -> complex:
    """Interface m-function for the two-coupling potential.

    m(mu) = phi'_{mu, gamma_+}(0)/phi_{mu, gamma_+}(0)
          + phi'_{-mu, gamma_-}(0)/phi_{-mu, gamma_-}(0);
    its zeros are the eigenvalues away from Jost-value zeros.
    """
    mu = complex(mu)
    if mu.imag == 0.0:
        raise RealAxisError(f"mu = {mu} is real; both Jost branches need Im mu != 0")
    vp, dp, _ = _jost_scaled_integral(mu, potential.gamma_plus)
    vm, dm, _ = _jost_scaled_integral(-mu, potential.gamma_minus)
    if abs(vp) < 1e-13 * abs(dp) or abs(vm) < 1e-13 * abs(dm):
        raise PoleError(f"Jost boundary value vanishes near mu = {mu}")
    return dp / vp + dm / vm


def _determinant_nonsym_scaled(
    mu: complex, potential: AsymPotential
) -> tuple[complex, float]:
    vp, dp, lp = _jost_scaled_integral(mu, potential.gamma_plus)
    vm, dm, lm = _jost_scaled_integral(-mu, potential.gamma_minus)
    return dp * vm + dm * vp, lp + lm


def determinant_nonsym(mu: complex, potential: AsymPotential) -> complex:
    """Matching determinant of the two-coupling operator (zeros = eigenvalues)."""
    mu = complex(mu)
    if mu.imag == 0.0:
        raise RealAxisError(f"mu = {mu} is real; no real eigenvalues exist")
    m, scale = _determinant_nonsym_scaled(mu, potential)
    if scale > 690.0:
        from .errors import AccuracyError

        raise AccuracyError(
            f"determinant at mu = {mu} overflows doubles", achieved=scale
        )
    return m * math.exp(scale)


def _newton_nonsym(
    potential: AsymPotential, seed: complex, re_sign: float,
    tol: float = 1e-10, max_iter: int = 60,
) -> complex | None:
    mu = seed
    for _ in range(max_iter):
        f, _ = _determinant_nonsym_scaled(mu, potential)
        h = 1e-6 * abs(mu)
        fp, _ = _determinant_nonsym_scaled(mu + h, potential)
        fm, _ = _determinant_nonsym_scaled(mu - h, potential)
        df = (fp - fm) / (2.0 * h)
        if df == 0.0:
            return None
        step = f / df
        mu = mu - step
        if mu.imag <= 0.0 or mu.real * re_sign <= 0.0:
            return None
        if abs(step) <= tol * abs(mu):
            return mu
    return None


def locate_nonsym_eigs(
    potential: AsymPotential,
    re_window: tuple[float, float],
    quadrant: str = "I",
) -> list[complex]:
    """Upper-half-plane eigenvalues with |Re mu| in re_window.

    Quadrant I (Re > 0): the quantizing half line carries gamma_-, so seeds are
    t_n + Upsilon^-(Re>0) t_n^{3/2} with t_n the Dirichlet levels of gamma_-
    (imaginary part flipped positive, as in the symmetric case).  Quadrant II
    mirrors this with gamma_+ levels and the Re<0 coefficient.  Each seed is
    refined by Newton on the matching determinant; lower-half roots follow by
    conjugation.
    """
    re_lo, re_hi = re_window
    if not 0.0 < re_lo < re_hi:
        raise ArgumentError(f"window must satisfy 0 < re_lo < re_hi, got {re_window}")
    if quadrant not in ("I", "II"):
        raise ArgumentError("locate in quadrant I or II; conjugate for III/IV")

    if quadrant == "I":
        g_quant = potential.gamma_minus
        ups = upsilon_nonsym(potential, "minus", "Re_positive")
    else:
        g_quant = potential.gamma_plus
        ups = upsilon_nonsym(potential, "minus", "Re_negative")
    n_lo = max(1, int(g_quant / (2.0 * math.sqrt(re_hi))) - 2)
    n_hi = int(g_quant / (2.0 * math.sqrt(re_lo))) + 3
    levels = {
        ev.n: ev.lam
        for ev in solve_sa_spectrum(HalfLineProblem(g_quant, "dirichlet"),
                                    n_hi, "char_exact")
    }
    roots: list[complex] = []
    for n in range(n_lo, n_hi + 1):
        t = levels[n]
        if not re_lo <= t <= re_hi:
            continue
        if quadrant == "I":
            seed = complex(t + ups.real * t ** 1.5, abs(ups.imag) * t ** 1.5)
            re_sign = 1.0
        else:
            seed = complex(-(t + ups.real * t ** 1.5), abs(ups.imag) * t ** 1.5)
            re_sign = -1.0
        mu = _newton_nonsym(potential, seed, re_sign)
        if mu is None or not re_lo <= abs(mu.real) <= re_hi:
            continue
        if any(abs(mu - other) < 1e-6 * abs(mu) for other in roots):
            continue
        roots.append(mu)
    roots.sort(key=lambda m: -abs(m.real))
    return roots
