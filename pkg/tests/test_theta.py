"""Continuous arctan branches, pole detection, and tangent-equation roots."""

import math

import pytest

from indefspec.errors import BracketError, DomainError, NotInClassError, PoleError
from indefspec.theta import (
    DOWN,
    UP,
    BranchedFunction,
    Singularity,
    branched,
    detect_singularities,
    signed_index,
    tan_roots,
    theta_of,
)


class TestDetectSingularities:
    def test_tan_poles_found_and_classified(self):
        # tan jumps +inf -> -inf at pi/2 + k pi
        sings = detect_singularities(math.tan, 10.0)
        expected = [0.5 * math.pi + k * math.pi for k in range(3)]
        assert len(sings) == 3
        for s, x in zip(sings, expected):
            assert s.x == pytest.approx(x, abs=1e-9)
            assert s.direction == DOWN

    def test_zeros_are_not_poles(self):
        # sin changes sign at pi, 2pi, 3pi with bounded magnitude
        sings = detect_singularities(math.sin, 10.0)
        assert sings == []

    def test_up_direction(self):
        sings = detect_singularities(lambda x: -math.tan(x), 3.0)
        assert len(sings) == 1 and sings[0].direction == UP

    def test_bad_domain(self):
        with pytest.raises(DomainError):
            detect_singularities(math.tan, -1.0)


class TestBranch:
    def test_signed_index_accumulates(self):
        f = branched(math.tan, 10.0)
        assert signed_index(f, 1.0) == 0
        assert signed_index(f, 2.0) == 1
        assert signed_index(f, 5.0) == 2
        assert signed_index(f, 8.5) == 3

    def test_theta_is_continuous_across_poles(self):
        f = branched(math.tan, 10.0)
        eps = 1e-5
        left = theta_of(f, 0.5 * math.pi - eps).theta
        right = theta_of(f, 0.5 * math.pi + eps).theta
        assert abs(left - right) < 1e-4
        # theta(tan) == x on the principal domain by construction
        assert theta_of(f, 4.0).theta == pytest.approx(4.0, abs=1e-9)

    def test_pole_raises(self):
        f = branched(math.tan, 10.0)
        with pytest.raises(PoleError):
            theta_of(f, f.singularities[0].x, pole_tol=1e-8)

    def test_unsorted_singularities_rejected(self):
        with pytest.raises(NotInClassError):
            BranchedFunction(
                evaluate=math.tan,
                singularities=(Singularity(2.0, DOWN), Singularity(1.0, DOWN)),
                domain_end=5.0,
            )


class TestTanRoots:
    def test_constant_rhs_closed_form(self):
        # tan(gamma kappa) = g0 has roots kappa_n = (pi n + arctan g0)/gamma
        g0 = 0.7
        for n, kappa, res in tan_roots(2.0, g0, n_range=range(1, 6)):
            assert kappa == pytest.approx(
                (math.pi * n + math.atan(g0)) / 2.0, rel=1e-12
            )
            assert res < 1e-10

    def test_kappa_dependent_corrections(self):
        roots = tan_roots(1.5, 0.2, corrections=lambda k: 1.0 / k,
                          n_range=(3, 4, 5))
        for n, kappa, res in roots:
            assert res < 1e-9
            assert math.tan(1.5 * kappa) == pytest.approx(
                0.2 + 1.0 / kappa, abs=1e-9
            )

    def test_bad_gamma(self):
        with pytest.raises(DomainError):
            tan_roots(-1.0, 0.0)
