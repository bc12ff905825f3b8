"""Continuous-branch arctan machinery for functions with sign-alternating poles.

For a piecewise smooth F on the positive half line with F(0) = 0 and a
discrete set of poles at which the one-sided limits are infinite with
opposite signs, the continuous branch of Arctan(F) through 0 is

    Theta_F(x) = arctan(F(x)) + pi * Z_F(x),

where the total signed index Z_F(x) counts the +inf -> -inf jumps in (0, x]
minus the -inf -> +inf jumps.  This module detects the poles numerically,
evaluates Z_F and Theta_F, and solves the large-root asymptotics of
tan(gamma*kappa) = G(kappa) equations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .errors import BracketError, DomainError, NotInClassError, PoleError

# jump direction tags
DOWN = -1  # +inf -> -inf  (contributes +1 to Z)
UP = +1    # -inf -> +inf  (contributes -1 to Z)


@dataclass(frozen=True)
class Singularity:
    x: float
    direction: int  # DOWN or UP


@dataclass(frozen=True)
class BranchedFunction:
    """A scalar function with pre-analyzed sign-alternating poles on (0, domain_end]."""

    evaluate: Callable[[float], float]
    singularities: tuple[Singularity, ...]
    domain_end: float

    def __post_init__(self):
        xs = [s.x for s in self.singularities]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise NotInClassError("singularities must be strictly increasing")


@dataclass(frozen=True)
class ThetaValue:
    x: float
    arctan_part: float
    index: int
    theta: float = field(default=math.nan)

    def __post_init__(self):
        object.__setattr__(self, "theta", self.arctan_part + math.pi * self.index)


_POLE_MAGNITUDE = 1e7


def detect_singularities(
    f: Callable[[float], float],
    x_max: float,
    grid: int = 4000,
    rel_tol: float = 1e-12,
) -> list[Singularity]:
    """Locate the sign-alternating poles of f on (0, x_max].

    Poles show up as sign changes of 1/f (equivalently of f) at which |f|
    blows up; sign changes with small |f| are ordinary zeros and are skipped.
    Each candidate is refined by bisection on the sign of 1/f to an interval
    of width rel_tol * x_max, then classified from one-sided samples.  A grid
    point where |f| is pole-like but no sign change occurs nearby violates the
    alternating-sign class and raises NotInClassError.
    """
    if x_max <= 0.0:
        raise DomainError("x_max must be positive")
    if grid < 8:
        raise DomainError("grid too coarse")
    h = x_max / grid
    xs = [h * (i + 1) for i in range(grid)]
    vals = [f(x) for x in xs]

    found: list[Singularity] = []
    for i in range(len(xs) - 1):
        a, b = xs[i], xs[i + 1]
        fa, fb = vals[i], vals[i + 1]
        if fa == 0.0 or fb == 0.0 or math.copysign(1.0, fa) == math.copysign(1.0, fb):
            continue
        # bisection on sign of 1/f (== sign of f)
        sa = math.copysign(1.0, fa)
        lo, hi = a, b
        while hi - lo > rel_tol * x_max:
            mid = 0.5 * (lo + hi)
            fm = f(mid)
            if fm == 0.0:
                break
            if math.copysign(1.0, fm) == sa:
                lo = mid
            else:
                hi = mid
        x_star = 0.5 * (lo + hi)
        eps = max(10.0 * rel_tol * x_max, 1e-13 * max(x_star, 1.0))
        f_left, f_right = f(x_star - eps), f(x_star + eps)
        # scale-free classification: halving the distance to a simple pole
        # doubles |f|, while near a simple zero it halves it
        r_left = abs(f_left) / max(abs(f(x_star - 2.0 * eps)), 1e-300)
        r_right = abs(f_right) / max(abs(f(x_star + 2.0 * eps)), 1e-300)
        if r_left < 1.4 or r_right < 1.4:
            # sign change of f with bounded magnitude: a zero, not a pole
            continue
        if math.copysign(1.0, f_left) == math.copysign(1.0, f_right):
            raise NotInClassError(
                f"infinite one-sided limits at x = {x_star:.6g} have the same sign"
            )
        found.append(Singularity(x_star, DOWN if f_left > 0 else UP))
    return found


def branched(
    f: Callable[[float], float], x_max: float, grid: int = 4000
) -> BranchedFunction:
    """Analyze f on (0, x_max] and wrap it as a BranchedFunction."""
    return BranchedFunction(
        evaluate=f,
        singularities=tuple(detect_singularities(f, x_max, grid)),
        domain_end=x_max,
    )


def signed_index(f: BranchedFunction, x: float) -> int:
    """Total signed index Z_F(x): (+inf -> -inf) minus (-inf -> +inf) jumps in (0, x]."""
    if x > f.domain_end:
        raise DomainError(f"x = {x:g} beyond analyzed domain end {f.domain_end:g}")
    z = 0
    for s in f.singularities:
        if s.x > x:
            break
        z += 1 if s.direction == DOWN else -1
    return z


def theta_of(f: BranchedFunction, x: float, pole_tol: float = 0.0) -> ThetaValue:
    """Theta_F(x) = arctan(F(x)) + pi * Z_F(x).

    Raises PoleError when x coincides with a detected pole (within pole_tol);
    the continuous extension there is +-pi/2 + pi*Z(x-), available from the
    left limit.
    """
    for s in f.singularities:
        if abs(x - s.x) <= pole_tol:
            raise PoleError(
                f"x = {x:g} is a pole of F; the continuous limit is "
                f"{'+' if s.direction == DOWN else '-'}pi/2 + pi*Z(x-)"
            )
    return ThetaValue(x=x, arctan_part=math.atan(f.evaluate(x)), index=signed_index(f, x))


def tan_roots(
    gamma: float,
    g0: float,
    corrections: Callable[[float], float] | None = None,
    n_range: Sequence[int] = (1,),
    tol: float = 1e-12,
) -> list[tuple[int, float, float]]:
    """Indexed large roots kappa_n of tan(gamma*kappa) = G(kappa).

    G(kappa) = g0 + corrections(kappa) (corrections defaults to 0).  The n-th
    root lives in the period cell gamma*kappa in (pi*n - pi/2, pi*n + pi/2)
    shifted by arctan(G); the initial guess kappa = (pi*n + arctan(g0))/gamma
    is refined by Newton iteration on

        W(kappa) = gamma*kappa - pi*n - arctan(G(kappa)),

    which is smooth across the tangent poles, with a bisection fallback when
    Newton leaves the cell.  Returns (n, kappa_n, residual) with residual
    |tan(gamma*kappa_n) - G(kappa_n)|.
    """
    if gamma <= 0.0:
        raise DomainError("gamma must be positive")
    corr = corrections if corrections is not None else (lambda kappa: 0.0)

    def g(kappa: float) -> float:
        return g0 + corr(kappa)

    out = []
    for n in n_range:
        def wrapped(kappa: float) -> float:
            return gamma * kappa - math.pi * n - math.atan(g(kappa))

        kappa = (math.pi * n + math.atan(g0)) / gamma
        cell_lo = (math.pi * n - 0.5 * math.pi) / gamma
        cell_hi = (math.pi * n + 0.5 * math.pi) / gamma
        ok = False
        for _ in range(60):
            w = wrapped(kappa)
            if abs(w) < tol:
                ok = True
                break
            dk = max(1e-7 * abs(kappa), 1e-9)
            dw = (wrapped(kappa + dk) - wrapped(kappa - dk)) / (2.0 * dk)
            if dw == 0.0:
                break
            step = w / dw
            new = kappa - step
            if not (cell_lo < new < cell_hi):
                break
            if abs(step) < tol * max(abs(kappa), 1.0):
                kappa = new
                ok = True
                break
            kappa = new
        if not ok:
            # bisection on W over the (open) period cell
            eps = 1e-12 * (cell_hi - cell_lo)
            lo, hi = cell_lo + eps, cell_hi - eps
            wlo, whi = wrapped(lo), wrapped(hi)
            if wlo == 0.0:
                kappa = lo
            elif whi == 0.0:
                kappa = hi
            elif math.copysign(1.0, wlo) == math.copysign(1.0, whi):
                raise BracketError(
                    f"no root of tan(gamma*kappa)=G in period cell n={n}"
                )
            else:
                for _ in range(200):
                    kappa = 0.5 * (lo + hi)
                    wm = wrapped(kappa)
                    if abs(hi - lo) < tol * max(abs(kappa), 1.0):
                        break
                    if math.copysign(1.0, wm) == math.copysign(1.0, wlo):
                        lo = kappa
                    else:
                        hi = kappa
        residual = abs(math.tan(gamma * kappa) - g(kappa))
        out.append((n, kappa, residual))
    return out
