import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wisealice.game import PayoffMatrix
from wisealice.quantum import MeasurementFrame, StrategyAngle, payoff_kernel
from wisealice.solver import (
    best_response_alice,
    best_response_bob,
    find_equilibria,
    grid_nash_audit,
    reaction_curve,
    verify_nash_quantum,
)

frame_angles = st.floats(min_value=1.0, max_value=89.0,
                         allow_nan=False, allow_infinity=False)
angles = st.floats(min_value=0.0, max_value=180.0, exclude_max=True,
                   allow_nan=False, allow_infinity=False)
payoffs = st.floats(min_value=0.1, max_value=10.0,
                    allow_nan=False, allow_infinity=False)

GRID_001 = np.arange(0.0, 180.0, 0.01)


def circle_dist(a: float, b: float) -> float:
    d = abs(a - b) % 180.0
    return min(d, 180.0 - d)


def brute_best_alice(h, frames, beta: float) -> float:
    """Argmax of the payoff over a 0.01-degree grid, straight from the trig form."""
    values = payoff_kernel(h, frames[0], frames[1], GRID_001, beta)
    return float(GRID_001[np.argmax(values)])


def brute_best_bob(h, frames, alpha: float) -> float:
    values = payoff_kernel(h, frames[0], frames[1], alpha, GRID_001)
    return float(GRID_001[np.argmin(values)])


# --- best responses ----------------------------------------------------------

def test_alice_best_response_unit_instance(unit_instance):
    h, frames = unit_instance
    response = best_response_alice(h, frames, StrategyAngle(0))
    assert response.angle.degrees == pytest.approx(90.0)
    assert not response.degenerate


def test_bob_best_response_matches_grid_unit_instance(unit_instance):
    h, frames = unit_instance
    response = best_response_bob(h, frames, StrategyAngle(90))
    assert circle_dist(response.angle.degrees,
                       brute_best_bob(h, frames, 90.0)) <= 0.01


@settings(max_examples=60, deadline=None)
@given(payoffs, payoffs, payoffs, payoffs, frame_angles, frame_angles, angles)
def test_analytic_responses_match_grid(a, b, c, d, ta, tb, opponent):
    h = PayoffMatrix(a, b, c, d)
    frames = (MeasurementFrame(ta), MeasurementFrame(tb))
    alice = best_response_alice(h, frames, StrategyAngle(opponent))
    if not alice.degenerate:
        assert circle_dist(alice.angle.degrees,
                           brute_best_alice(h, frames, opponent)) <= 0.01
    bob = best_response_bob(h, frames, StrategyAngle(opponent))
    if not bob.degenerate:
        assert circle_dist(bob.angle.degrees,
                           brute_best_bob(h, frames, opponent)) <= 0.01


def test_bob_response_definitional_minimum(two_eq_instance):
    h, frames = two_eq_instance
    rng = np.random.default_rng(3)
    for alpha in rng.uniform(0.0, 180.0, size=5):
        best = best_response_bob(h, frames, StrategyAngle(alpha))
        f_best = payoff_kernel(h, frames[0], frames[1], alpha, best.angle.degrees)
        for mu in rng.uniform(0.0, 180.0, size=100):
            assert f_best <= payoff_kernel(h, frames[0], frames[1], alpha, mu) + 1e-12


def test_alice_response_definitional_maximum(two_eq_instance):
    h, frames = two_eq_instance
    rng = np.random.default_rng(4)
    for beta in rng.uniform(0.0, 180.0, size=5):
        best = best_response_alice(h, frames, StrategyAngle(beta))
        f_best = payoff_kernel(h, frames[0], frames[1], best.angle.degrees, beta)
        for lam in rng.uniform(0.0, 180.0, size=100):
            assert f_best >= payoff_kernel(h, frames[0], frames[1], lam, beta) - 1e-12


def test_degenerate_response_flagged():
    theta_b = 70.0
    beta = math.radians(30.0)
    q1, q3 = math.cos(beta) ** 2, math.sin(beta) ** 2
    q2 = math.cos(beta - math.radians(theta_b)) ** 2
    q4 = math.sin(beta - math.radians(theta_b)) ** 2
    h = PayoffMatrix(q1 / q3, q2 / q4, 1.0, 1.0)
    frames = (MeasurementFrame(25), MeasurementFrame(theta_b))
    response = best_response_alice(h, frames, StrategyAngle(30.0))
    assert response.degenerate
    assert response.angle.degrees == 0.0


def test_scaling_leaves_responses_unchanged(two_eq_instance):
    h, frames = two_eq_instance
    for lam in (0.5, 2.0, 10.0):
        scaled = h.scaled(lam)
        for beta in (0.0, 59.4, 150.0):
            assert circle_dist(
                best_response_alice(scaled, frames, StrategyAngle(beta)).angle.degrees,
                best_response_alice(h, frames, StrategyAngle(beta)).angle.degrees,
            ) <= 1e-9
        for alpha in (0.0, 53.5, 145.4):
            assert circle_dist(
                best_response_bob(scaled, frames, StrategyAngle(alpha)).angle.degrees,
                best_response_bob(h, frames, StrategyAngle(alpha)).angle.degrees,
            ) <= 1e-9


# --- reaction curves ---------------------------------------------------------

def test_unit_instance_alice_curve_jumps_at_90(unit_instance):
    h, frames = unit_instance
    curve = reaction_curve("alice", h, frames, resolution=0.05)
    assert curve.player == "alice"
    assert any(abs(j - 90.0) <= 0.05 for j in curve.discontinuities), \
        curve.discontinuities


def test_unit_instance_bob_curve_is_continuous(unit_instance):
    h, frames = unit_instance
    curve = reaction_curve("bob", h, frames, resolution=0.05)
    assert curve.discontinuities == ()


def test_unit_instance_curves_are_half_period_shifts(unit_instance):
    h, frames = unit_instance
    alice = reaction_curve("alice", h, frames, resolution=0.5)
    bob = reaction_curve("bob", h, frames, resolution=0.5)
    for sa, sb in zip(alice.samples, bob.samples):
        assert circle_dist(sa.response_deg, sb.response_deg + 90.0) <= 1e-9


def test_two_eq_instance_alice_curve_is_discontinuous(two_eq_instance):
    h, frames = two_eq_instance
    curve = reaction_curve("alice", h, frames, resolution=0.05)
    assert len(curve.discontinuities) > 0


def test_reaction_curve_inputs_strictly_increasing(two_eq_instance):
    h, frames = two_eq_instance
    curve = reaction_curve("bob", h, frames, resolution=0.5)
    inputs = [s.input_deg for s in curve.samples]
    assert inputs == sorted(inputs)
    assert len(set(inputs)) == len(inputs)
    assert inputs[0] == 0.0 and inputs[-1] < 180.0


def test_reaction_curve_samples_satisfy_optimality(two_eq_instance):
    h, frames = two_eq_instance
    curve = reaction_curve("alice", h, frames, resolution=11.0)
    rng = np.random.default_rng(5)
    for s in curve.samples:
        if s.degenerate:
            continue
        f_best = payoff_kernel(h, frames[0], frames[1], s.response_deg, s.input_deg)
        probes = rng.uniform(0.0, 180.0, size=10)
        assert np.all(
            f_best >= payoff_kernel(h, frames[0], frames[1], probes, s.input_deg) - 1e-12
        )


def test_responses_are_half_turn_periodic(two_eq_instance):
    h, frames = two_eq_instance
    for t in (0.0, 33.3, 90.0):
        a = best_response_alice(h, frames, StrategyAngle(t))
        b = best_response_alice(h, frames, StrategyAngle(t + 180.0))
        assert a.angle == b.angle


def test_reaction_curve_rejects_bad_resolution(two_eq_instance):
    h, frames = two_eq_instance
    with pytest.raises(ValueError):
        reaction_curve("alice", h, frames, resolution=0.0)
    with pytest.raises(ValueError):
        reaction_curve("carol", h, frames, resolution=1.0)


# --- Nash verification -------------------------------------------------------

def test_residual_zero_at_two_eq_equilibrium(two_eq_instance):
    h, frames = two_eq_instance
    eq = find_equilibria(h, frames)[0]
    assert verify_nash_quantum(h, frames, eq.alpha, eq.beta) < 1e-12


def test_residual_positive_off_equilibrium(two_eq_instance):
    h, frames = two_eq_instance
    assert verify_nash_quantum(h, frames, StrategyAngle(0), StrategyAngle(0)) > 0.1


def test_unit_instance_origin_is_not_an_equilibrium(unit_instance):
    # F(alpha, 0) = sin^2(alpha) + 1/2: the origin pays 0.5 but a unilateral
    # move to 90 degrees pays 1.5, so the residual is exactly 1
    h, frames = unit_instance
    residual = verify_nash_quantum(h, frames, StrategyAngle(0), StrategyAngle(0))
    assert residual == pytest.approx(1.0, abs=1e-12)


def test_residual_invariant_under_half_turns(two_eq_instance):
    h, frames = two_eq_instance
    base = verify_nash_quantum(h, frames, StrategyAngle(30), StrategyAngle(40))
    shifted = verify_nash_quantum(h, frames, StrategyAngle(210), StrategyAngle(220))
    assert shifted == pytest.approx(base, abs=1e-12)


# --- equilibrium search ------------------------------------------------------

# frozen by hand-refined bisection plus an independent 0.0005-degree
# brute-force deviation check on the raw trigonometric payoff
TWO_EQ_POINT = (145.4422305099, 59.3824150044, 2.451521021507)
CLOSE_FRAMES_POINT = (53.5073962816, 51.6622967369, 2.706545984924)
INTERIOR_POINT = (140.4312309346, 55.8243721293, 2.567797609698)


def assert_single_equilibrium(eqs, expected):
    alpha, beta, value = expected
    assert len(eqs) == 1
    eq = eqs[0]
    assert eq.alpha.degrees == pytest.approx(alpha, abs=1e-6)
    assert eq.beta.degrees == pytest.approx(beta, abs=1e-6)
    assert eq.value == pytest.approx(value, abs=1e-9)
    assert eq.residual <= 1e-8 * 12.0


def test_find_equilibria_two_eq_instance(two_eq_instance):
    h, frames = two_eq_instance
    assert_single_equilibrium(find_equilibria(h, frames), TWO_EQ_POINT)


def test_find_equilibria_unit_instance_is_empty(unit_instance):
    # maxmin = 0.5 < minmax = 1.5: the best-response maps form a cycle
    # (Alice answers beta + 90, Bob matches alpha), so no fixed point exists
    h, frames = unit_instance
    assert find_equilibria(h, frames) == []


def test_find_equilibria_close_frames_instance(close_frames_instance):
    h, frames = close_frames_instance
    assert_single_equilibrium(find_equilibria(h, frames), CLOSE_FRAMES_POINT)


def test_find_equilibria_interior_instance(interior_instance):
    h, frames = interior_instance
    assert_single_equilibrium(find_equilibria(h, frames), INTERIOR_POINT)


def test_equilibrium_value_consistent_with_surface(two_eq_instance):
    h, frames = two_eq_instance
    eq = find_equilibria(h, frames)[0]
    assert eq.value == pytest.approx(
        payoff_kernel(h, frames[0], frames[1],
                      eq.alpha.degrees, eq.beta.degrees),
        abs=1e-12,
    )


def test_equilibria_verified_by_brute_force_deviations(two_eq_instance,
                                                       close_frames_instance,
                                                       interior_instance):
    for h, frames in (two_eq_instance, close_frames_instance, interior_instance):
        for eq in find_equilibria(h, frames):
            f0 = payoff_kernel(h, frames[0], frames[1],
                               eq.alpha.degrees, eq.beta.degrees)
            best_dev_alice = payoff_kernel(
                h, frames[0], frames[1], GRID_001, eq.beta.degrees
            ).max() - f0
            best_dev_bob = f0 - payoff_kernel(
                h, frames[0], frames[1], eq.alpha.degrees, GRID_001
            ).min()
            assert best_dev_alice <= 1e-6
            assert best_dev_bob <= 1e-6


def test_equilibrium_set_invariant_under_scaling(two_eq_instance):
    h, frames = two_eq_instance
    base = find_equilibria(h, frames)
    for lam in (0.5, 2.0, 10.0):
        scaled = find_equilibria(h.scaled(lam), frames)
        assert len(scaled) == len(base)
        for eq_b, eq_s in zip(base, scaled):
            assert circle_dist(eq_b.alpha.degrees, eq_s.alpha.degrees) <= 1e-9
            assert circle_dist(eq_b.beta.degrees, eq_s.beta.degrees) <= 1e-9
            assert eq_s.value == pytest.approx(lam * eq_b.value, rel=1e-9)


def test_steep_crossing_is_not_mistaken_for_a_wrap():
    # the composed defect swings ~91 degrees per 0.05-degree step at this
    # crossing, the same signature as a representative wrap; bisection plus
    # verification must still find the equilibrium (frozen from a fuzzing
    # run with an independent duality-gap audit)
    h = PayoffMatrix(0.21567360739370703, 3.879623576993435,
                     0.9145567564246947, 6.239475458641274)
    frames = (MeasurementFrame(12.235840976241876),
              MeasurementFrame(50.05798855781285))
    eqs = find_equilibria(h, frames)
    assert len(eqs) == 1
    assert eqs[0].alpha.degrees == pytest.approx(153.9746, abs=1e-3)
    assert eqs[0].beta.degrees == pytest.approx(100.9789, abs=1e-3)
    assert eqs[0].residual <= 1e-8 * h.scale


def test_find_equilibria_rejects_bad_settings(two_eq_instance):
    h, frames = two_eq_instance
    with pytest.raises(ValueError):
        find_equilibria(h, frames, scan_resolution=0.0)
    with pytest.raises(ValueError):
        find_equilibria(h, frames, refine_tolerance=-1.0)


# --- independent grid audit --------------------------------------------------

def grid_cluster_count(hits, step=0.1) -> int:
    """Group passing grid points into connected clusters on the torus."""
    clusters: list[list[tuple[float, float]]] = []
    for alpha, beta, _ in hits:
        for cluster in clusters:
            if any(
                circle_dist(alpha, a) <= 2 * step and circle_dist(beta, b) <= 2 * step
                for a, b in cluster
            ):
                cluster.append((alpha, beta))
                break
        else:
            clusters.append([(alpha, beta)])
    return len(clusters)


def test_grid_audit_matches_solver_counts(two_eq_instance, unit_instance,
                                          close_frames_instance):
    # local-deviation tolerance sized to the grid: a true equilibrium within
    # half a step of a grid point leaves a residual of order curvature*step^2
    step = 0.1
    for h, frames in (two_eq_instance, unit_instance, close_frames_instance):
        tol = 4.0 * h.scale * (step * math.pi / 180.0) ** 2
        hits = grid_nash_audit(h, frames, step=step, tol=tol)
        assert grid_cluster_count(hits, step) == len(find_equilibria(h, frames))


def test_grid_audit_rejects_everything_at_solver_tolerance(unit_instance):
    h, frames = unit_instance
    assert grid_nash_audit(h, frames, step=0.1, tol=1e-8 * h.scale) == []
