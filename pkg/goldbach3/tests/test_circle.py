"""Tests for exponential sums, arcs and the grid identity."""

import math

import numpy as np
import pytest

from goldbach3.app.core.exceptions import InvalidArgumentError
from goldbach3.app.schemas.ramanujan import Constraint
from goldbach3.app.services import (
    circle_service,
    counting_service,
    progressions_service,
    singular_service,
)

CONSTRAINT = Constraint(n=101, a1=1, q1=4, a2=3, q2=4, a3=1, q3=2)


def test_exp_sum_at_zero_is_psi(small_table):
    """Test that S_j(0) is the Chebyshev sum of the progression."""
    value = circle_service.exp_sum(1, 0.0, CONSTRAINT, small_table)

    assert value.re == pytest.approx(progressions_service.psi(101, 4, 1, small_table))
    assert value.im == pytest.approx(0.0, abs=1e-9)


def test_exp_sum_rejects_index(small_table):
    """Test j in {1, 2, 3}."""
    with pytest.raises(InvalidArgumentError):
        circle_service.exp_sum(4, 0.1, CONSTRAINT, small_table)


def test_m_sum():
    """Test the geometric sum M(α)."""
    assert circle_service.m_sum(0.0, 50).re == pytest.approx(50)
    # a full period sums to 0
    value = circle_service.m_sum(1 / 10, 10)
    assert abs(value.to_complex()) == pytest.approx(0.0, abs=1e-9)


def test_grid_matches_direct_sums(small_table):
    """Test the FFT grid against direct evaluation at a few frequencies."""
    N = 203
    grid = circle_service.exp_sum_grid(CONSTRAINT, N, small_table)

    for k in (0, 1, 17, 101, 202):
        for j in (1, 2, 3):
            direct = circle_service.exp_sum(j, k / N, CONSTRAINT, small_table).to_complex()
            assert grid.s(j)[k] == pytest.approx(direct, abs=1e-8), (j, k)
        assert grid.m[k] == pytest.approx(circle_service.m_sum(k / N, 101).to_complex(), abs=1e-8)


@pytest.mark.parametrize("extra", [0, 1, 50])
def test_dft_identity_recovers_j3(small_table, extra):
    """Test that the grid identity equals the exact count for N >= 2n+1."""
    N = 2 * CONSTRAINT.n + 1 + extra
    direct = counting_service.count_direct(CONSTRAINT, small_table).j3

    value = circle_service.dft_identity(CONSTRAINT, N, small_table)
    assert value == pytest.approx(direct, rel=1e-9)


def test_dft_identity_on_random_constraints(small_table, random_constraints):
    """Test the grid identity against exact J3 on seeded constraints with n <= 2000."""
    for c in random_constraints(31, 50, 2000, 30):
        direct = counting_service.count_direct(c, small_table).j3

        value = circle_service.dft_identity(c, 2 * c.n + 1, small_table)
        assert value == pytest.approx(direct, rel=1e-9, abs=1e-6), c


def test_dft_identity_rejects_aliasing_grid(small_table):
    """Test that N < 2n+1 is refused."""
    with pytest.raises(InvalidArgumentError):
        circle_service.dft_identity(CONSTRAINT, 2 * CONSTRAINT.n, small_table)


def test_grid_mask_small_case(small_table):
    """Test major-arc membership for n = 6, R = 1, N = 13."""
    mask = circle_service.arc_membership_mask(np.arange(13) / 13, 6, 1)

    assert np.nonzero(mask)[0].tolist() == [0, 1, 2, 11, 12]

    integral = circle_service.major_arc_integral(Constraint(n=6), 1, 13, small_table)
    assert integral.major_points == 5
    assert integral.minor_points == 8


def test_arcs_build():
    """Test the arc list and its geometry."""
    arcs = circle_service.arcs_build(50, 3.3)

    assert [(arc.a, arc.q) for arc in arcs.arcs] == [(1, 1), (1, 2), (1, 3), (2, 3)]
    assert arcs.arcs[0].halfwidth == pytest.approx(3.3 / 50)
    assert arcs.disjoint()
    assert arcs.domain == pytest.approx((-3.3 / 50, 1 - 3.3 / 50))

    with pytest.raises(InvalidArgumentError):
        circle_service.arcs_build(50, 0.5)


def test_membership_agrees_with_arc_set():
    """Test grid, float and interval membership against each other."""
    n, R, N = 50, 3.3, 101
    arcs = circle_service.arcs_build(n, R)
    alphas = np.arange(N) / N
    mask = circle_service.arc_membership_mask(alphas, n, R)

    assert mask.tolist() == [arcs.contains(alpha) for alpha in alphas]
    assert mask.tolist() == circle_service._grid_mask(n, R, N).tolist()


def test_major_minor_split(small_table):
    """Test that the major and minor parts add up to J3."""
    integral = circle_service.major_arc_integral(CONSTRAINT, 2.5, 203, small_table)
    direct = counting_service.count_direct(CONSTRAINT, small_table).j3

    assert integral.j3 == pytest.approx(direct, rel=1e-9)
    assert integral.j3_major + integral.j3_minor == pytest.approx(integral.j3)
    assert integral.major_points + integral.minor_points == 203


def test_j2_arc_profiles_sum(small_table):
    """Test that the J2 major and minor parts add up to J2."""
    major, minor = circle_service.j2_arc_profiles(CONSTRAINT, 2.5, 203, small_table)
    j2 = counting_service.j2_profile(CONSTRAINT, small_table)

    assert np.allclose(major + minor, j2, atol=1e-8)


def test_minor_arc_sup(small_table):
    """Test the sup of |S_3|^2 over minor grid points."""
    N, R = 203, 2.5
    sup = circle_service.minor_arc_sup(CONSTRAINT, R, N, small_table)
    grid = circle_service.exp_sum_grid(CONSTRAINT, N, small_table)
    minor = ~circle_service.arc_membership_mask(np.arange(N) / N, CONSTRAINT.n, R)

    assert sup.value == pytest.approx(float(np.max(np.abs(grid.s3[minor]) ** 2)))
    assert not circle_service.arcs_build(CONSTRAINT.n, R).contains(sup.alpha)


def test_truncated_H():
    """Test H(n) truncated at R against the partial singular series."""
    c = Constraint(n=1001, a1=1, q1=4)
    partial = singular_service.series_partial_sum(c, 7).value

    assert circle_service.truncated_H(c, 7.9) == pytest.approx(partial * 1001**2 / 4)


def test_arc_report(small_table):
    """Test the assembled report."""
    report = circle_service.arc_report(CONSTRAINT, 2.5, 203, small_table, pmax=1000)

    assert report.n == 101
    assert report.j3 == pytest.approx(report.j3_major + report.j3_minor)
    assert report.major_deviation == pytest.approx(abs(report.j3_major - report.main_term))
    assert report.s3_minor_sup >= 0
    assert math.isfinite(report.H_truncated)


def test_m_sum_at_half():
    """Test the alternating sum M(1/2)."""
    assert circle_service.m_sum(0.5, 11).re == pytest.approx(-1.0)
    assert abs(circle_service.m_sum(0.5, 10).to_complex()) == pytest.approx(0.0, abs=1e-9)


def test_exp_sum_at_half(small_table):
    """Test S(1/2) for n = 10: even prime powers count +, odd ones -."""
    value = circle_service.exp_sum(1, 0.5, Constraint(n=10), small_table)
    expected = 3 * math.log(2) - (2 * math.log(3) + math.log(5) + math.log(7))

    assert value.re == pytest.approx(expected)
    assert value.im == pytest.approx(0.0, abs=1e-9)


def test_arcs_build_small_R():
    """Test n = 100 with R = 2 and R = 1."""
    arcs = circle_service.arcs_build(100, 2)

    assert [(arc.a, arc.q) for arc in arcs.arcs] == [(1, 1), (1, 2)]
    assert arcs.arcs[0].halfwidth == pytest.approx(2 / 100)
    assert arcs.arcs[1].halfwidth == pytest.approx(2 / 200)
    assert arcs.contains(0.5)
    assert arcs.contains(0.995)
    assert not arcs.contains(0.25)

    assert [(arc.a, arc.q) for arc in circle_service.arcs_build(100, 1).arcs] == [(1, 1)]


@pytest.mark.parametrize(
    ("n", "N", "expected"),
    [
        (6, 13, math.log(2) ** 3),
        (3, 7, 0.0),
        (9, 19, 6.81274),
    ],
)
def test_dft_identity_small(small_table, n, N, expected):
    """Test the grid identity at the smallest grids."""
    value = circle_service.dft_identity(Constraint(n=n), N, small_table)

    assert value == pytest.approx(expected, abs=1e-4)


def test_arcs_covering_whole_domain(small_table):
    """Test that arcs covering every grid point leave nothing on the minor arcs."""
    c = Constraint(n=6)
    integral = circle_service.major_arc_integral(c, 2.9, 13, small_table)

    assert integral.minor_points == 0
    assert integral.j3_minor == 0.0
    assert integral.j3_major == pytest.approx(math.log(2) ** 3)

    sup = circle_service.minor_arc_sup(c, 2.9, 13, small_table)
    assert sup.value == 0.0
    assert sup.alpha is None


def test_major_minor_split_n9(small_table):
    """Test that j3_major + j3_minor = J3(9)."""
    integral = circle_service.major_arc_integral(Constraint(n=9), 2, 19, small_table)

    assert integral.j3_major + integral.j3_minor == pytest.approx(6.81274, abs=1e-4)


def test_parseval(small_table):
    """Test (1/N) Σ_k |S_j(k/N)|^2 = Σ Λ(m)^2 over the progression."""
    N = CONSTRAINT.n + 1
    grid = circle_service.exp_sum_grid(CONSTRAINT, N, small_table)

    for j, (a_j, q_j) in enumerate(CONSTRAINT.pairs, start=1):
        weights = counting_service.progression_weights(a_j, q_j, CONSTRAINT.n, small_table)
        energy = float(np.sum(np.abs(grid.s(j)) ** 2)) / N
        assert energy == pytest.approx(float(np.sum(weights**2)), rel=1e-9)


def test_truncated_H_limits():
    """Test R = 1 and convergence to the main term for large R."""
    c = Constraint(n=1001, a1=1, q1=4)
    assert circle_service.truncated_H(c, 1) == pytest.approx(1001**2 / 4)

    s3 = singular_service.singular_series(c).midpoint
    far = circle_service.truncated_H(c, 5000)
    assert far == pytest.approx(counting_service.main_term(c, s3), rel=1e-2)


def test_truncated_H_includes_cancelling_prime():
    """Test that an E prime below R contributes λ(p) = -1."""
    c = Constraint(n=9, a1=1, q1=3, a2=2, q2=3)
    scale = 9**2 / (2 * 2 * 2)

    below = circle_service.truncated_H(c, 2.5) / scale
    above = circle_service.truncated_H(c, 3) / scale
    assert above - below == pytest.approx(-1.0)
