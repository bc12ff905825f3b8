"""Negative spectrum of the self-adjoint half-line operators.

For the operator -d^2/dx^2 - gamma/(1+x) on (0, inf) with a Dirichlet or
Neumann condition at 0, the eigenvalues are -lambda_n with lambda_n > 0
decreasing to zero.  They are the roots of a transcendental characteristic
equation in the Kummer function U: writing a = gamma/(2 sqrt(lambda)),

    Dirichlet:  U(-a, 0; 2 sqrt(lambda)) = 0,
    Neumann:    (gamma - 2 sqrt(lambda)) U(-a, -1; 2 sqrt(lambda))
                  + 2 sqrt(lambda) (1 - sqrt(lambda)) U(-a, 0; 2 sqrt(lambda)) = 0,

with nonvanishing prefactors stripped.  The module evaluates a normalized
characteristic function whose zero crossings are exactly the eigenvalues,
a small-lambda tangent reduction in terms of Bessel functions, the sharp
two-term index asymptotics

    lambda_n = (gamma^2 / 4n^2) (1 + (2/pi n) Theta + O(n^-2)),

and a solver that assembles indexed spectra by any of the four methods.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from scipy.optimize import brentq

from .errors import (
    ArgumentError,
    ExcludedParameterError,
    IndexingError,
    OutOfRegimeError,
    PoleError,
)
from .oracle import (
    DIRICHLET,
    NEUMANN,
    HalfLineProblem,
    IntegrationConfig,
    fd_matrix_eigs,
    shoot_eigenvalue,
    suggested_domain,
)
from .specfun import bessel_jy, gamma_ln, kummer_u_integral_scaled
from .theta import branched, theta_of

__all__ = [
    "HalfLineProblem",
    "SAEigenvalue",
    "char_value",
    "char_reduced",
    "lambda_asymptotic",
    "solve_sa_spectrum",
]

METHODS = ("char_exact", "char_reduced", "asymptotic", "oracle")

# reduction regime lambda <= gamma^2/100, i.e. a = gamma/(2 sqrt(lambda)) >= 5
_REDUCED_LAMBDA_FRACTION = 1.0 / 100.0


@dataclass(frozen=True)
class SAEigenvalue:
    """One indexed eigenvalue magnitude; the eigenvalue itself is -lam."""

    n: int
    lam: float
    method: str
    residual: float

    def __post_init__(self):
        if self.n < 1:
            raise ArgumentError(f"index must be >= 1, got {self.n}")
        if self.lam <= 0.0:
            raise ArgumentError(f"lambda must be positive, got {self.lam}")
        if self.method not in METHODS:
            raise ArgumentError(f"unknown method {self.method!r}")


def char_value(problem: HalfLineProblem, lam: float) -> float:
    """Normalized characteristic function; its zeros are the eigenvalues.

    Evaluates the exact Kummer-U combination through the Laplace integral
    representation with stable downward recurrence, then divides by the
    positive envelope beta^{1-c} Gamma(a+1) e^{gamma/(2a)} so that the value
    oscillates with O(1) amplitude for small lambda.
    """
    if lam <= 0.0:
        raise ArgumentError(f"lambda must be positive, got {lam}")
    gamma = problem.gamma
    sl = math.sqrt(lam)
    a = gamma / (2.0 * sl)
    z = gamma / (a * a)  # = 4 lambda / gamma
    log_beta = math.log(math.sqrt(z) * (1.0 + z / 24.0))
    log_env = gamma_ln(a + 1.0).real + gamma / (2.0 * a)

    m0, l0 = kummer_u_integral_scaled(-a, 0.0, 2.0 * sl)
    if problem.bc == DIRICHLET:
        return float((m0 * math.exp(l0 - log_env - log_beta)).real)
    m1, l1 = kummer_u_integral_scaled(-a, -1.0, 2.0 * sl)
    t1 = (gamma - 2.0 * sl) * (m1 * math.exp(l1 - log_env - 2.0 * log_beta)).real
    t0 = 2.0 * sl * (1.0 - sl) * (m0 * math.exp(l0 - log_env - 2.0 * log_beta)).real
    return float(t1 + t0)


def _reduced_rhs(problem: HalfLineProblem, lam: float) -> float:
    gamma = problem.gamma
    w = 2.0 * math.sqrt(gamma)
    if problem.bc == DIRICHLET:
        j1, y1 = bessel_jy(1, w)
        return -j1 / y1
    sl = math.sqrt(lam)
    sg = math.sqrt(gamma)
    j1, y1 = bessel_jy(1, w)
    j2, y2 = bessel_jy(2, w)
    j3, y3 = bessel_jy(3, w)
    p = gamma * (1.0 - sl) * j1 - sg * (gamma - 2.0 * sl) * j2 - sl * (gamma - 2.0 * sl) * j3
    q = gamma * (1.0 - sl) * y1 - sg * (gamma - 2.0 * sl) * y2 - sl * (gamma - 2.0 * sl) * y3
    return -p / q


def char_reduced(problem: HalfLineProblem, lam: float) -> tuple[float, float]:
    """Small-lambda tangent reduction (tan_lhs, rhs) of the characteristic equation.

    tan_lhs = tan(gamma pi / (2 sqrt(lambda))).  For Dirichlet the right-hand
    side is the constant -J_1(2 sqrt(gamma))/Y_1(2 sqrt(gamma)); for Neumann
    it is -P(gamma,lambda)/Q(gamma,lambda) with

        P = gamma (1-sqrt(lambda)) J_1 - sqrt(gamma)(gamma-2 sqrt(lambda)) J_2
              - sqrt(lambda)(gamma-2 sqrt(lambda)) J_3,

    all Bessel functions at 2 sqrt(gamma), and Q the same with Y_k.  At
    lambda = 0 the Neumann ratio collapses to -J_0/Y_0 through the three-term
    recurrence, and the sqrt(lambda) coefficient of the ratio cancels
    identically, so both sides agree to O(lambda) at the eigenvalues.
    """
    if lam <= 0.0:
        raise ArgumentError(f"lambda must be positive, got {lam}")
    gamma = problem.gamma
    if lam > gamma * gamma * _REDUCED_LAMBDA_FRACTION:
        raise OutOfRegimeError(
            f"lambda = {lam:g} above reduction regime gamma^2/100 = "
            f"{gamma * gamma * _REDUCED_LAMBDA_FRACTION:g}",
            suggestion="char_value",
        )
    tan_lhs = math.tan(gamma * math.pi / (2.0 * math.sqrt(lam)))
    return tan_lhs, _reduced_rhs(problem, lam)


@lru_cache(maxsize=256)
def _theta_branch(k: int, gamma: float):
    def ratio(x: float) -> float:
        j, y = bessel_jy(k, 2.0 * math.sqrt(x))
        return j / y
    return branched(ratio, gamma * (1.0 + 1e-9), grid=4000)


def _theta_r(k: int, gamma: float):
    """ThetaValue of R_k(x) = J_k(2 sqrt x)/Y_k(2 sqrt x) at x = gamma."""
    f = _theta_branch(k, gamma)
    try:
        return theta_of(f, gamma, pole_tol=1e-9 * max(gamma, 1.0))
    except PoleError as exc:
        raise ExcludedParameterError(
            f"gamma = {gamma:g} is a pole of R_{k} (zero of Y_{k}(2 sqrt(gamma)))"
        ) from exc


def lambda_asymptotic(problem: HalfLineProblem, n: int) -> float:
    """Two-term eigenvalue asymptotics (gamma^2/4n^2)(1 + (2/pi n) Theta_eff).

    Theta_eff is the continuous arctan branch of R_1 at gamma for Dirichlet
    and of R_0 plus pi for Neumann (the pi accounts for the one-cell index
    offset of the Neumann root sequence); both pinned against the shooting
    and finite-difference oracles.
    """
    if n < 1:
        raise ArgumentError(f"index must be >= 1, got {n}")
    gamma = problem.gamma
    if problem.bc == DIRICHLET:
        theta_eff = _theta_r(1, gamma).theta
    else:
        theta_eff = _theta_r(0, gamma).theta + math.pi
    return (gamma * gamma / (4.0 * n * n)) * (1.0 + 2.0 * theta_eff / (math.pi * n))


def _solve_char_exact(problem: HalfLineProblem, n_max: int) -> list[SAEigenvalue]:
    gamma = problem.gamma

    def char_of_a(a: float) -> float:
        return char_value(problem, gamma * gamma / (4.0 * a * a))

    out: list[SAEigenvalue] = []
    a_lo = 0.45 * math.sqrt(gamma)  # below the ground state (lambda_1 < gamma)
    step = 0.2
    f_lo = char_of_a(a_lo)
    a = a_lo
    # successive sign changes of the characteristic function, scanned toward
    # larger a (smaller lambda); the eigenvalue index counts them from 1
    while len(out) < n_max:
        if a > n_max + 4.0:
            raise IndexingError(
                f"only {len(out)} sign changes found up to a = {a:g}", len(out) + 1
            )
        b = a + step
        f_hi = char_of_a(b)
        if f_lo == 0.0 or (math.copysign(1.0, f_lo) != math.copysign(1.0, f_hi)):
            root_a = brentq(char_of_a, a, b, xtol=1e-14, rtol=1e-12)
            lam = gamma * gamma / (4.0 * root_a * root_a)
            out.append(
                SAEigenvalue(
                    n=len(out) + 1,
                    lam=lam,
                    method="char_exact",
                    residual=abs(char_value(problem, lam)),
                )
            )
        a, f_lo = b, f_hi
    return out


def _solve_oracle(problem: HalfLineProblem, n_max: int) -> list[SAEigenvalue]:
    x_max, points = suggested_domain(problem.gamma, n_max)
    neg = fd_matrix_eigs(problem, x_max, points)
    if len(neg) < n_max:
        raise IndexingError(
            f"matrix oracle resolved only {len(neg)} bound states", len(neg) + 1
        )
    out = []
    for i in range(n_max):
        lam_fd = -neg[i]
        lam = shoot_eigenvalue(problem, (lam_fd * (1.0 - 2e-3), lam_fd * (1.0 + 2e-3)))
        out.append(
            SAEigenvalue(
                n=i + 1,
                lam=lam,
                method="oracle",
                residual=abs(lam - lam_fd) / lam,
            )
        )
    return out


def _solve_reduced(problem: HalfLineProblem, n_max: int) -> list[SAEigenvalue]:
    gamma = problem.gamma
    if problem.bc == DIRICHLET:
        tv = _theta_r(1, gamma)
        cell_shift = -tv.index  # root of index n sits in tangent cell n - Z
        g0 = -math.tan(tv.arctan_part)  # = -R_1(gamma)
    else:
        tv = _theta_r(0, gamma)
        cell_shift = -tv.index - 1
        g0 = -math.tan(tv.arctan_part)
    a_min_corr = 0.5 * math.sqrt(gamma) / math.sqrt(_REDUCED_LAMBDA_FRACTION)

    out = []
    for n in range(1, n_max + 1):
        m = n + cell_shift
        if m < 1:
            raise IndexingError(f"tangent cell {m} out of range for index {n}", n)

        def wrapped(a: float) -> float:
            lam = gamma * gamma / (4.0 * a * a)
            rhs = _reduced_rhs(problem, lam) if a >= a_min_corr else g0
            return math.pi * a - math.pi * m - math.atan(rhs)

        lo = m - 0.5 + 1e-9
        hi = m + 0.5 - 1e-9
        root_a = brentq(wrapped, lo, hi, xtol=1e-14, rtol=1e-13)
        lam = gamma * gamma / (4.0 * root_a * root_a)
        rhs = _reduced_rhs(problem, lam) if root_a >= a_min_corr else g0
        out.append(
            SAEigenvalue(
                n=n,
                lam=lam,
                method="char_reduced",
                residual=abs(math.tan(math.pi * root_a) - rhs),
            )
        )
    return out


def solve_sa_spectrum(
    problem: HalfLineProblem, n_max: int, method: str = "char_exact"
) -> list[SAEigenvalue]:
    """First n_max eigenvalue magnitudes, ordered by index (lam decreasing).

    Methods: "char_exact" scans and refines the normalized characteristic
    function; "char_reduced" solves the tangent reduction cell by cell;
    "asymptotic" evaluates the two-term formula; "oracle" brackets with the
    finite-difference matrix and refines by shooting.
    """
    if n_max < 1:
        raise ArgumentError(f"n_max must be >= 1, got {n_max}")
    if method == "char_exact":
        out = _solve_char_exact(problem, n_max)
    elif method == "oracle":
        out = _solve_oracle(problem, n_max)
    elif method == "char_reduced":
        out = _solve_reduced(problem, n_max)
    elif method == "asymptotic":
        out = []
        for n in range(1, n_max + 1):
            lam = lambda_asymptotic(problem, n)
            if lam <= 0.0:
                # the two-term correction exceeds 1 at small n
                raise OutOfRegimeError(
                    f"two-term asymptotics nonpositive at n = {n}",
                    suggestion="char_exact",
                )
            out.append(
                SAEigenvalue(n=n, lam=lam, method="asymptotic", residual=math.nan)
            )
    else:
        raise ArgumentError(f"unknown method {method!r}; choose from {METHODS}")
    if method != "asymptotic":
        # the two-term formula may be non-monotone at small n; root-finding
        # methods must produce a strictly decreasing sequence
        lams = [ev.lam for ev in out]
        if any(b >= a for a, b in zip(lams, lams[1:])):
            raise IndexingError("computed spectrum is not strictly decreasing", 0)
    return out
