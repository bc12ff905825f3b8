"""ODE shooting and finite-difference matrix oracles for the half-line problem."""

import cmath
import math

import mpmath
import pytest

from indefspec.errors import BracketError, BranchError, DomainError, DomainSizeError
from indefspec.oracle import (
    DIRICHLET,
    NEUMANN,
    HalfLineProblem,
    IntegrationConfig,
    fd_matrix_eigs,
    integrate_schrodinger,
    shoot_eigenvalue,
    suggested_domain,
)


def _exact_jost(mu: complex, gamma: float) -> tuple[complex, complex]:
    # phi(0)/gamma and phi'(0)/gamma from the Kummer-U representation
    s = cmath.sqrt(-mu)
    a = 1.0 - gamma / (2.0 * s)
    u0 = complex(mpmath.hyperu(complex(a), 2, complex(2.0 * s)))
    u1 = complex(mpmath.hyperu(complex(a + 1.0), 3, complex(2.0 * s)))
    pref = cmath.exp(-s)
    return pref * u0, pref * ((1.0 - s) * u0 - 2.0 * s * a * u1)


class TestIntegrateSchrodinger:
    @pytest.mark.parametrize("mu", [-0.04 + 0.0j, -1.0 + 0.0j,
                                    0.02 + 0.005j, 0.5 + 0.3j])
    def test_matches_exact_jost_solution(self, mu):
        gamma = 2.5
        g0, g0p, log_scale = integrate_schrodinger(
            mu, gamma, IntegrationConfig(seed_rel_tol=1e-9)
        )
        v_ref, d_ref = _exact_jost(mu, gamma)
        factor = math.exp(log_scale)
        assert abs(g0 * factor - v_ref) <= 1e-8 * abs(v_ref)
        assert abs(g0p * factor - d_ref) <= 1e-8 * abs(d_ref)

    def test_branch_rejected_on_positive_axis(self):
        with pytest.raises(BranchError):
            integrate_schrodinger(0.3 + 0.0j, 2.5)

    def test_bad_gamma(self):
        with pytest.raises(DomainError):
            integrate_schrodinger(-1.0 + 0.0j, -2.5)

    def test_seed_tolerance_unreachable_raises(self):
        # tiny |mu|: the far-field series stalls far above the tolerance
        with pytest.raises(DomainSizeError):
            integrate_schrodinger(
                1e-4 * cmath.exp(1j * math.pi / 4), 2.5,
                IntegrationConfig(seed_rel_tol=1e-9),
            )


class TestEigenvalueOracles:
    def test_shooting_and_matrix_agree(self):
        gamma = 2.5
        for bc in (DIRICHLET, NEUMANN):
            problem = HalfLineProblem(gamma, bc)
            x_max, points = suggested_domain(gamma, 6)
            fd = sorted((-v for v in fd_matrix_eigs(problem, x_max, points)),
                        reverse=True)[:6]
            for lam_fd in fd:
                lam = shoot_eigenvalue(
                    problem, (lam_fd * (1.0 - 2e-3), lam_fd * (1.0 + 2e-3))
                )
                assert lam == pytest.approx(lam_fd, rel=1e-6)

    def test_dirichlet_neumann_interlace(self):
        gamma = 2.5
        x_max, points = suggested_domain(gamma, 8)
        lam_d = sorted((-v for v in fd_matrix_eigs(
            HalfLineProblem(gamma, DIRICHLET), x_max, points)), reverse=True)
        lam_n = sorted((-v for v in fd_matrix_eigs(
            HalfLineProblem(gamma, NEUMANN), x_max, points)), reverse=True)
        for k in range(6):
            assert lam_n[k] > lam_d[k] > lam_n[k + 1]

    def test_bad_bracket(self):
        problem = HalfLineProblem(2.5, DIRICHLET)
        with pytest.raises(BracketError):
            shoot_eigenvalue(problem, (0.3, 0.1))
        with pytest.raises(BracketError):
            # no eigenvalue inside this narrow slice
            shoot_eigenvalue(problem, (0.30, 0.31))

    def test_grid_too_coarse_rejected(self):
        with pytest.raises(DomainError):
            fd_matrix_eigs(HalfLineProblem(2.5, DIRICHLET), 100.0, points=100)

    def test_bad_problem(self):
        with pytest.raises(DomainError):
            HalfLineProblem(2.5, "robin")
        with pytest.raises(DomainError):
            HalfLineProblem(0.0, DIRICHLET)
