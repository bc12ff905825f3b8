"""Complex eigenvalues of the indefinite operator sgn(x)(-d^2/dx^2 - gamma/(1+|x|)).

The eigenvalues are the zeros of the 2x2 matching determinant

    M(mu) = phi'_mu(0) phi_{-mu}(0) + phi'_{-mu}(0) phi_mu(0),

where phi_mu is the Jost (decaying) solution of the half-line problem at
spectral parameter mu.  They come in quadruples {mu, conj mu, -mu, -conj mu},
stay off the real axis, obey |Im mu| < 2*gamma, and accumulate at 0 along
the curves |Im mu| = |Im Upsilon| * |Re mu|^{3/2} with

    Upsilon_-+(gamma) = (4/(pi gamma)) arctan(1/(i -+ 2 q(gamma))),
    q(gamma) = pi sqrt(gamma) (J_0 J_1 + Y_0 Y_1)(2 sqrt(gamma)).

This module evaluates the Jost boundary data by three independent methods
(uniform Bessel-type expansion, exact integral/series representation,
adaptive ODE integration), evaluates M and the associated m-function, locates
all zeros in a window by argument-principle winding counts plus Newton
refinement, and fits the located roots against the accumulation law.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    AccuracyError,
    ArgumentError,
    BranchError,
    DomainSizeError,
    IncompleteSearchError,
    PoleError,
    RealAxisError,
    RegionError,
    SampleError,
)
from .oracle import IntegrationConfig, integrate_schrodinger
from .sa import HalfLineProblem, solve_sa_spectrum
from .specfun import bessel_jy, kummer_u_integral_scaled, kummer_u_temme_scaled

__all__ = [
    "CurveParams",
    "ComplexEigenvalue",
    "JostEvaluation",
    "q_of_gamma",
    "upsilon_mp",
    "tau_curve",
    "jost_at_zero",
    "determinant_m",
    "determinant_expanded",
    "m_function",
    "locate_complex_eigs",
    "symmetry_extend",
    "curve_check",
]

JOST_METHODS = ("temme", "integral", "ode")
QUADRANTS = ("I", "II", "III", "IV")


# ---------------------------------------------------------------------------
# accumulation-curve parameters
# ---------------------------------------------------------------------------

def q_of_gamma(gamma: float) -> float:
    """q(gamma) = pi sqrt(gamma) (J_0 J_1 + Y_0 Y_1) at argument 2 sqrt(gamma)."""
    if gamma <= 0.0:
        raise ArgumentError(f"gamma must be positive, got {gamma}")
    w = 2.0 * math.sqrt(gamma)
    j0, y0 = bessel_jy(0, w)
    j1, y1 = bessel_jy(1, w)
    return math.pi * math.sqrt(gamma) * (j0 * j1 + y0 * y1)


def upsilon_mp(gamma: float) -> tuple[complex, complex, float]:
    """(Upsilon_minus, Upsilon_plus, upsilon_signed) of the accumulation law.

    Upsilon_-+ = (4/(pi gamma)) arctan(1/(i -+ 2q)) with the principal complex
    arctan; upsilon_signed = (1/(pi gamma)) log(q^2/(1+q^2)), which is
    negative and equals the common imaginary part Im Upsilon_-+ (asserted to
    1e-12).  Located roots in the upper half plane follow the positive
    prefactor |upsilon_signed|.
    """
    q = q_of_gamma(gamma)
    um = 4.0 / (math.pi * gamma) * _arctan(1.0 / (1j - 2.0 * q))
    up = 4.0 / (math.pi * gamma) * _arctan(1.0 / (1j + 2.0 * q))
    upsilon = math.log(q * q / (1.0 + q * q)) / (math.pi * gamma)
    if abs(um.imag - up.imag) > 1e-12 * max(1.0, abs(um.imag)):
        raise AccuracyError(
            "imaginary parts of Upsilon_- and Upsilon_+ disagree",
            achieved=abs(um.imag - up.imag),
        )
    return um, up, upsilon


def _arctan(w: complex) -> complex:
    # principal branch, arctan w = (1/2i) log((1+iw)/(1-iw))
    return cmath.atan(w)


@dataclass(frozen=True)
class CurveParams:
    """Parameters of the eigenvalue accumulation curves for one coupling."""

    gamma: float
    q: float
    upsilon: float  # signed value (negative); |upsilon| is the curve prefactor
    upsilon_minus: complex
    upsilon_plus: complex

    @classmethod
    def from_gamma(cls, gamma: float) -> "CurveParams":
        um, up, ups = upsilon_mp(gamma)
        return cls(
            gamma=gamma,
            q=q_of_gamma(gamma),
            upsilon=ups,
            upsilon_minus=um,
            upsilon_plus=up,
        )


def tau_curve(gamma: float, branch: str, t: float) -> complex:
    """Parametric accumulation curve tau_-+(t) = t + Upsilon_-+ t^{3/2}."""
    if t <= 0.0:
        raise ArgumentError(f"t must be positive, got {t}")
    if branch not in ("minus", "plus"):
        raise ArgumentError(f"branch must be 'minus' or 'plus', got {branch!r}")
    um, up, _ = upsilon_mp(gamma)
    ups = um if branch == "minus" else up
    return t + ups * t ** 1.5


# ---------------------------------------------------------------------------
# Jost boundary data and the determinant
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class JostEvaluation:
    """Boundary data of the decaying solution phi_mu at x = 0."""

    mu: complex
    gamma: float
    value_at_0: complex
    derivative_at_0: complex
    method: str


def _check_branch(mu: complex) -> complex:
    mu = complex(mu)
    if mu.imag == 0.0 and mu.real >= 0.0:
        raise BranchError(
            f"mu = {mu} on [0, inf): the decaying branch sqrt(-mu) degenerates"
        )
    return mu


def _jost_scaled_integral(mu: complex, gamma: float) -> tuple[complex, complex, float]:
    # (value, derivative, log_scale): phi = value*e^scale, phi' = derivative*e^scale
    s = cmath.sqrt(-mu)
    a = 1.0 - gamma / (2.0 * s)
    z = 2.0 * s
    m0, l0 = kummer_u_integral_scaled(a, 2.0, z)
    m1, l1 = kummer_u_integral_scaled(a + 1.0, 3.0, z)
    scale = max(l0, l1)
    u0 = m0 * math.exp(l0 - scale)
    u1 = m1 * math.exp(l1 - scale)
    pref = gamma * cmath.exp(-s)
    value = pref * u0
    # phi'(0) = gamma e^{-s} [(1-s) U(a,2,2s) - 2s a U(a+1,3,2s)]
    deriv = pref * ((1.0 - s) * u0 - 2.0 * s * a * u1)
    return value, deriv, scale


def _jost_scaled_temme(mu: complex, gamma: float) -> tuple[complex, complex, float]:
    s = cmath.sqrt(-mu)
    a_t = gamma / (2.0 * s)
    z = 2.0 * s
    # U(a,2,z) = z^{-1} U(-a_t, 0, z); U(a+1,3,z) = z^{-2} U(-a_t, -1, z)
    m0, l0, _ = kummer_u_temme_scaled(a_t, 0, gamma)
    m1, l1, _ = kummer_u_temme_scaled(a_t, -1, gamma)
    # the scaled logs are complex; split off a common real scale
    scale = max(l0.real, l1.real)
    u0 = m0 * cmath.exp(l0 - scale) / z
    u1 = m1 * cmath.exp(l1 - scale) / (z * z)
    pref = gamma * cmath.exp(-s)
    a = 1.0 - a_t
    value = pref * u0
    deriv = pref * ((1.0 - s) * u0 - 2.0 * s * a * u1)
    return value, deriv, scale


def _jost_scaled_ode(mu: complex, gamma: float) -> tuple[complex, complex, float]:
    try:
        g0, g0p, log_scale = integrate_schrodinger(
            mu, gamma, IntegrationConfig(seed_rel_tol=1e-9)
        )
    except DomainSizeError as exc:
        raise RegionError(
            f"ODE method out of regime at mu = {mu}: {exc}", margin=abs(mu)
        ) from exc
    # integrate_schrodinger normalizes the far-field seed to unit modulus and
    # reports the discarded real log-amplitude; U(a,2,w) ~ w^{-a} for large w
    # makes the seed match phi = gamma (1+x) e^{-s(1+x)} U(...) up to e^scale
    return gamma * g0, gamma * g0p, log_scale


def jost_at_zero(mu: complex, gamma: float, method: str = "integral") -> JostEvaluation:
    """phi_mu(gamma, 0) and phi'_mu(gamma, 0) with principal branches.

    phi_mu(x) = gamma (1+x) e^{-sqrt(-mu)(1+x)} U(1 - gamma/(2 sqrt(-mu)), 2;
    2(1+x) sqrt(-mu)); the derivative follows from dU/dz = -a U(a+1, b+1, z).
    Methods: "integral" (exact representation, default), "temme" (uniform
    large-parameter expansion), "ode" (adaptive inward integration).
    """
    mu = _check_branch(mu)
    if gamma <= 0.0:
        raise ArgumentError(f"gamma must be positive, got {gamma}")
    if method not in JOST_METHODS:
        raise ArgumentError(f"method must be one of {JOST_METHODS}, got {method!r}")
    if method == "integral":
        v, d, scale = _jost_scaled_integral(mu, gamma)
    elif method == "temme":
        v, d, scale = _jost_scaled_temme(mu, gamma)
    else:
        v, d, scale = _jost_scaled_ode(mu, gamma)
    if scale > 690.0:
        raise AccuracyError(
            f"Jost values at mu = {mu} overflow doubles (log scale {scale:.1f}); "
            "work with determinant winding instead",
            achieved=scale,
        )
    factor = math.exp(scale)
    return JostEvaluation(
        mu=mu,
        gamma=gamma,
        value_at_0=v * factor,
        derivative_at_0=d * factor,
        method=method,
    )


def _determinant_scaled(
    mu: complex, gamma: float, method: str = "integral"
) -> tuple[complex, float]:
    jost = {
        "integral": _jost_scaled_integral,
        "temme": _jost_scaled_temme,
        "ode": _jost_scaled_ode,
    }[method]
    vp, dp, lp = jost(mu, gamma)
    vm, dm, lm = jost(-mu, gamma)
    return dp * vm + dm * vp, lp + lm


def determinant_m(mu: complex, gamma: float, method: str = "integral") -> complex:
    """Matching determinant M(mu); its zeros are the eigenvalues.

    M(mu) = phi'_mu(0) phi_{-mu}(0) + phi'_{-mu}(0) phi_mu(0).  Real mu is
    rejected: one of the two Jost branches fails to decay there, so the
    operator has no real eigenvalues.
    """
    mu = complex(mu)
    if mu.imag == 0.0:
        raise RealAxisError(f"mu = {mu} is real; no real eigenvalues exist")
    m, scale = _determinant_scaled(mu, gamma, method)
    if scale > 690.0:
        raise AccuracyError(
            f"determinant at mu = {mu} overflows doubles", achieved=scale
        )
    return m * math.exp(scale)


def determinant_expanded(mu: complex, gamma: float) -> complex:
    """M(mu) through the expanded Kummer form (independent route).

    gamma^2 sqrt(-mu) e^{-sqrt(-mu)-sqrt(mu)} / (8 mu^{5/2}) * [
      (gamma sqrt(-mu) + 2 mu) U(-g/2sm, -1; 2sm) U(-g/2sp, 0; 2sp)
      + (2 mu - gamma sqrt(mu)) U(-g/2sm, 0; 2sm) U(-g/2sp, -1; 2sp)
      + 2 mu (sqrt(-mu) + sqrt(mu) - 2) U(-g/2sm, 0; 2sm) U(-g/2sp, 0; 2sp) ]
    with sm = sqrt(-mu), sp = sqrt(mu).
    """
    mu = complex(mu)
    if mu.imag == 0.0:
        raise RealAxisError(f"mu = {mu} is real; no real eigenvalues exist")
    sm = cmath.sqrt(-mu)
    sp = cmath.sqrt(mu)
    um0, lm0 = kummer_u_integral_scaled(-gamma / (2.0 * sm), 0.0, 2.0 * sm)
    um1, lm1 = kummer_u_integral_scaled(-gamma / (2.0 * sm), -1.0, 2.0 * sm)
    up0, lp0 = kummer_u_integral_scaled(-gamma / (2.0 * sp), 0.0, 2.0 * sp)
    up1, lp1 = kummer_u_integral_scaled(-gamma / (2.0 * sp), -1.0, 2.0 * sp)
    scale = max(lm0 + lp0, lm1 + lp0, lm0 + lp1)
    bracket = (
        (gamma * sm + 2.0 * mu) * um1 * up0 * math.exp(lm1 + lp0 - scale)
        + (2.0 * mu - gamma * sp) * um0 * up1 * math.exp(lm0 + lp1 - scale)
        + 2.0 * mu * (sm + sp - 2.0) * um0 * up0 * math.exp(lm0 + lp0 - scale)
    )
    pref = gamma * gamma * sm * cmath.exp(-sm - sp) / (8.0 * mu ** 2.5)
    value = pref * bracket
    if scale > 690.0:
        raise AccuracyError("expanded determinant overflows doubles", achieved=scale)
    return value * math.exp(scale)


def determinant_checked(mu: complex, gamma: float, rel_tol: float = 1e-8) -> complex:
    """M(mu) with the dual-route self-check (matching form vs expanded form)."""
    direct = determinant_m(mu, gamma)
    expanded = determinant_expanded(mu, gamma)
    if abs(direct - expanded) > rel_tol * max(abs(direct), abs(expanded)):
        raise AccuracyError(
            f"determinant self-check failed at mu = {mu}: "
            f"direct {direct}, expanded {expanded}",
            achieved=abs(direct - expanded) / max(abs(direct), abs(expanded)),
        )
    return direct


def m_function(mu: complex, gamma: float) -> complex:
    """Interface m-function: sum of the two Jost logarithmic derivatives at 0.

    m(mu) = phi'_mu(0)/phi_mu(0) + phi'_{-mu}(0)/phi_{-mu}(0); zeros coincide
    with determinant zeros wherever both denominators are nonzero.
    """
    mu = _check_branch(mu)
    vp, dp, _ = _jost_scaled_integral(mu, gamma)
    vm, dm, _ = _jost_scaled_integral(-mu, gamma)
    if abs(vp) < 1e-13 * abs(dp) or abs(vm) < 1e-13 * abs(dm):
        raise PoleError(
            f"Jost boundary value vanishes near mu = {mu}; use determinant_m"
        )
    return dp / vp + dm / vm


# ---------------------------------------------------------------------------
# root location
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ComplexEigenvalue:
    mu: complex
    quadrant: str
    n: int
    residual: float
    predicted_D: complex
    predicted_N: complex

    def __post_init__(self):
        if self.quadrant not in QUADRANTS:
            raise ArgumentError(f"quadrant must be in {QUADRANTS}")
        if self.mu.imag == 0.0:
            raise ArgumentError("eigenvalues cannot be real")


# target phase change per contour sample; the local oscillation rate of M
# is |d arg M / d mu| ~ gamma*pi/(2 |mu|^{3/2}) (the m-function period)
_PHASE_TARGET = 0.4
_MAX_BISECT_DEPTH = 30


def _edge_samples(gamma: float, p0: complex, p1: complex) -> list[complex]:
    # a priori sampling whose local step keeps the expected phase change per
    # step below _PHASE_TARGET; excludes the endpoint p1
    length = abs(p1 - p0)
    direction = (p1 - p0) / length
    pts = [p0]
    travelled = 0.0
    while True:
        p = pts[-1]
        rate = gamma * math.pi / (2.0 * max(abs(p), 1e-12) ** 1.5)
        step = min(_PHASE_TARGET / rate, length / 16.0)
        travelled += step
        if travelled >= length:
            return pts
        pts.append(p0 + direction * travelled)


def _winding(gamma: float, rect: tuple[float, float, float, float]) -> int:
    """Winding number of M around a rectangle (re_lo, re_hi, im_lo, im_hi).

    The scaled determinant mantissa carries the full phase of M (the scale is
    a real exponent), so arg M is accumulated from mantissas alone.  Edges are
    pre-sampled at the density set by the local oscillation rate of M, then
    every interval is bisected until both the phase step and the log-modulus
    step are small; the total must land on an integer multiple of 2 pi.  A
    root on (or hugging) the contour exhausts the bisection depth and raises.
    """
    re_lo, re_hi, im_lo, im_hi = rect

    def fval(p: complex) -> tuple[complex, float]:
        m, sc = _determinant_scaled(p, gamma)
        if m == 0.0 or not (math.isfinite(m.real) and math.isfinite(m.imag)):
            raise IncompleteSearchError(
                f"determinant vanished on the contour at {p}", rectangle=rect
            )
        return m, math.log(abs(m)) + sc

    def seg_arg(p0, v0, p1, v1, depth) -> float:
        d = cmath.phase(v1[0] / v0[0])
        if abs(d) < 2.0 * _PHASE_TARGET and abs(v1[1] - v0[1]) < 0.7:
            return d
        if depth >= _MAX_BISECT_DEPTH:
            raise IncompleteSearchError(
                f"phase tracking failed to converge near {0.5 * (p0 + p1)}",
                rectangle=rect,
            )
        pm = 0.5 * (p0 + p1)
        vm = fval(pm)
        return seg_arg(p0, v0, pm, vm, depth + 1) + seg_arg(pm, vm, p1, v1, depth + 1)

    corners = [
        complex(re_lo, im_lo), complex(re_hi, im_lo),
        complex(re_hi, im_hi), complex(re_lo, im_hi), complex(re_lo, im_lo),
    ]
    pts: list[complex] = []
    for c0, c1 in zip(corners, corners[1:]):
        pts.extend(_edge_samples(gamma, c0, c1))
    pts.append(corners[0])
    vals = [fval(p) for p in pts]
    total = 0.0
    for (p0, v0), (p1, v1) in zip(zip(pts, vals), zip(pts[1:], vals[1:])):
        total += seg_arg(p0, v0, p1, v1, 0)
    wind = total / (2.0 * math.pi)
    if abs(wind - round(wind)) > 0.02:
        raise IncompleteSearchError(
            f"winding {wind:.4f} is not an integer; contour phase unresolved",
            rectangle=rect,
        )
    return int(round(wind))


def _newton(gamma: float, seed: complex, tol: float = 1e-10,
            max_iter: int = 60) -> complex | None:
    mu = seed
    for _ in range(max_iter):
        f, _ = _determinant_scaled(mu, gamma)
        h = 1e-6 * abs(mu)
        fp, _ = _determinant_scaled(mu + h, gamma)
        fm, _ = _determinant_scaled(mu - h, gamma)
        df = (fp - fm) / (2.0 * h)
        if df == 0.0:
            return None
        step = f / df
        mu = mu - step
        if mu.imag <= 0.0 or mu.real <= 0.0:
            return None
        if abs(step) <= tol * abs(mu):
            return mu
    return None


def _predictions(gamma: float, re_window: tuple[float, float]):
    """Quadrant-I predictions mu_n = lambda_n^# + Upsilon_-+ (lambda_n^#)^{3/2}.

    The signed Upsilon_-+ of the printed formulas has negative imaginary part
    and lands in the lower half plane; upper half plane (quadrant I) roots sit
    at the conjugate points, so the imaginary part is flipped to positive.
    """
    re_lo, re_hi = re_window
    n_lo = max(1, int(gamma / (2.0 * math.sqrt(re_hi))) - 2)
    n_hi = int(gamma / (2.0 * math.sqrt(re_lo))) + 3
    um, up, _ = upsilon_mp(gamma)
    dir_prob = HalfLineProblem(gamma, "dirichlet")
    neu_prob = HalfLineProblem(gamma, "neumann")
    lam_d = {ev.n: ev.lam for ev in solve_sa_spectrum(dir_prob, n_hi, "char_exact")}
    lam_n = {ev.n: ev.lam for ev in solve_sa_spectrum(neu_prob, n_hi + 1, "char_exact")}
    preds = {}
    for n in range(n_lo, n_hi + 1):
        # the interlacing partner of lambda_n^D on the Neumann side is the
        # next Neumann eigenvalue below it (lambda_n^N > lambda_n^D >
        # lambda_{n+1}^N); with this pairing both predictions sit within
        # O(lambda^2) of the same root, empirically ~0.28 lambda^2
        ld, ln = lam_d[n], lam_n[n + 1]
        pd = ld + um * ld ** 1.5
        pn = ln + up * ln ** 1.5
        preds[n] = (complex(pd.real, abs(pd.imag)), complex(pn.real, abs(pn.imag)))
    return preds


def locate_complex_eigs(
    gamma: float,
    re_window: tuple[float, float],
    quadrant: str = "I",
) -> list[ComplexEigenvalue]:
    """All eigenvalues with Re mu in re_window in the requested quadrant.

    Quadrant-I roots are found by Newton iterations on M seeded from the
    accumulation-law predictions, then certified complete by the
    argument-principle winding count of M over the strip rectangle
    [re_lo, re_hi] x [im_floor, 2 gamma] (with adaptive edge sampling and
    subdivision when roots approach an edge).  Quadrant-II roots are the
    mirror images mu -> -conj mu, re-refined on M to confirm them honestly.
    """
    if gamma <= 0.0:
        raise ArgumentError(f"gamma must be positive, got {gamma}")
    re_lo, re_hi = re_window
    if not 0.0 < re_lo < re_hi:
        raise ArgumentError(f"window must satisfy 0 < re_lo < re_hi, got {re_window}")
    if quadrant not in ("I", "II"):
        raise ArgumentError("locate in quadrant I or II; others follow by conjugation")

    preds = _predictions(gamma, (re_lo, re_hi))
    roots: dict[int, complex] = {}
    for n, (pd, _pn) in sorted(preds.items()):
        if not re_lo <= pd.real <= re_hi:
            continue
        mu = _newton(gamma, pd)
        if mu is None or not (re_lo <= mu.real <= re_hi):
            continue
        if any(abs(mu - other) < 1e-6 * abs(mu) for other in roots.values()):
            continue
        roots[n] = mu

    # completeness certificate: the winding count over the strip must equal
    # the number of refined roots strictly inside
    im_floor = 1e-5 * re_lo
    rect = (re_lo, re_hi, im_floor, 2.0 * gamma)
    wind = _winding(gamma, rect)
    inside = {n: mu for n, mu in roots.items()
              if re_lo < mu.real < re_hi and im_floor < mu.imag < 2.0 * gamma}
    if wind != len(inside):
        raise IncompleteSearchError(
            f"winding count {wind} != {len(inside)} refined roots", rectangle=rect
        )

    out = []
    for n, mu in sorted(inside.items()):
        pd, pn = preds[n]
        if quadrant == "II":
            # mirror seed (mu -> -conj mu symmetry) and re-refine honestly
            mu_seed = complex(-mu.real, mu.imag)
            mu_ref = _newton_general(gamma, mu_seed)
            if mu_ref is None:
                raise IncompleteSearchError(
                    f"mirror refinement lost the root near {mu_seed}", rectangle=rect
                )
            mu_out = mu_ref
            pd = complex(-pd.real, pd.imag)
            pn = complex(-pn.real, pn.imag)
        else:
            mu_out = mu
        m_val, m_scale = _determinant_scaled(mu_out, gamma)
        out.append(
            ComplexEigenvalue(
                mu=mu_out,
                quadrant=quadrant,
                n=n,
                residual=abs(m_val) * math.exp(min(m_scale, 690.0)),
                predicted_D=pd,
                predicted_N=pn,
            )
        )
    out.sort(key=lambda ev: -ev.mu.real if quadrant == "I" else ev.mu.real)
    return out


def _newton_general(gamma: float, seed: complex, tol: float = 1e-10,
                    max_iter: int = 60) -> complex | None:
    # Newton without the quadrant-I positivity guard (used for mirrored seeds)
    mu = seed
    for _ in range(max_iter):
        f, _ = _determinant_scaled(mu, gamma)
        h = 1e-6 * abs(mu)
        fp, _ = _determinant_scaled(mu + h, gamma)
        fm, _ = _determinant_scaled(mu - h, gamma)
        df = (fp - fm) / (2.0 * h)
        if df == 0.0:
            return None
        step = f / df
        mu = mu - step
        if mu.imag <= 0.0:
            return None
        if abs(step) <= tol * abs(mu):
            return mu
    return None


def symmetry_extend(roots: list[ComplexEigenvalue]) -> list[ComplexEigenvalue]:
    """Close a quadrant-I root list under mu -> conj mu and mu -> -conj mu."""
    out = []
    for ev in roots:
        mu = ev.mu
        if mu.real == 0.0 or mu.imag == 0.0:
            raise ArgumentError(f"root {mu} lies on an axis")
        images = {
            "I": complex(abs(mu.real), abs(mu.imag)),
            "II": complex(-abs(mu.real), abs(mu.imag)),
            "III": complex(-abs(mu.real), -abs(mu.imag)),
            "IV": complex(abs(mu.real), -abs(mu.imag)),
        }
        for quad, image in images.items():
            pd = ev.predicted_D
            pn = ev.predicted_N
            sign_re = 1.0 if image.real > 0 else -1.0
            sign_im = 1.0 if image.imag > 0 else -1.0
            out.append(
                ComplexEigenvalue(
                    mu=image,
                    quadrant=quad,
                    n=ev.n,
                    residual=ev.residual,
                    predicted_D=complex(sign_re * abs(pd.real), sign_im * abs(pd.imag)),
                    predicted_N=complex(sign_re * abs(pn.real), sign_im * abs(pn.imag)),
                )
            )
    # dedupe (idempotence when called on an already extended list)
    unique: list[ComplexEigenvalue] = []
    for ev in out:
        if not any(abs(ev.mu - u.mu) < 1e-12 * max(abs(ev.mu), 1e-300) for u in unique):
            unique.append(ev)
    return unique


@dataclass(frozen=True)
class CurveFit:
    slope: float
    slope_stderr: float
    prefactor: float
    prefactor_target: float
    n_roots: int


def curve_check(roots: list[ComplexEigenvalue], params: CurveParams) -> CurveFit:
    """Regression of log |Im mu| on log |Re mu| against the 3/2-power law.

    The slope comes from the full sample; the prefactor |Im mu|/|Re mu|^{3/2}
    is estimated on the smallest-|mu| half, where the O((Re mu)^2) remainder
    is weakest, and compared against |Im Upsilon_-+|.
    """
    if len(roots) < 5:
        raise SampleError(f"need at least 5 roots for the curve fit, got {len(roots)}")
    x = np.array([math.log(abs(ev.mu.real)) for ev in roots])
    y = np.array([math.log(abs(ev.mu.imag)) for ev in roots])
    coeffs, cov = np.polyfit(x, y, 1, cov=True)
    slope = float(coeffs[0])
    stderr = float(math.sqrt(cov[0, 0]))
    order = np.argsort([abs(ev.mu) for ev in roots])
    half = [roots[i] for i in order[: max(5, len(roots) // 2)]]
    pref = float(
        np.mean([abs(ev.mu.imag) / abs(ev.mu.real) ** 1.5 for ev in half])
    )
    return CurveFit(
        slope=slope,
        slope_stderr=stderr,
        prefactor=pref,
        prefactor_target=abs(params.upsilon),
        n_roots=len(roots),
    )
