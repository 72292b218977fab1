"""Best responses, reaction curves, and Nash equilibria on the strategy torus.

For a fixed opponent angle the payoff is a single-harmonic sinusoid, so
both best-response maps are analytic: Alice's maximizer satisfies
2*alpha = atan2(V, U) and Bob's minimizer is the antipode.  Equilibria
are fixed points of the composed map, located by scanning

    g(alpha) = wrap180(R_A(R_B(alpha)) - alpha)

for sign changes, bisecting each bracket, and verifying every candidate
against the analytic unilateral optima.  A sign change whose endpoints
swing by more than 90 degrees may be the composed map's representative
wrapping across +-90 rather than a zero crossing, so its flanking sample
points are verified as well; bisection on such a bracket converges
either to a genuine zero (kept) or to the wrap pole (rejected by
verification), so the distinction never costs an equilibrium.

Every returned equilibrium carries the verification residual

    max( max_l F(l, beta) - F(alpha, beta),  F(alpha, beta) - min_m F(alpha, m) )

so callers never need to trust the fixed-point argument itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, NamedTuple

import numpy as np

from wisealice.game import PayoffMatrix
from wisealice.quantum import (
    MeasurementFrame,
    OutcomeWeights,
    StrategyAngle,
    harmonic_coefficients,
    harmonic_coefficients_in_beta,
    outcome_weights,
    payoff_kernel,
    payoff_surface,
)

Frames = tuple[MeasurementFrame, MeasurementFrame]

# consecutive reaction-curve samples further apart than this are flagged
JUMP_THRESHOLD_DEG = 5.0
# relative amplitude below which a best response is treated as indifferent
DEGENERACY_RATIO = 1e-12

DEFAULT_SCAN_RESOLUTION_DEG = 0.05
DEFAULT_REFINE_TOLERANCE_DEG = 1e-9
DEFAULT_MERGE_DISTANCE_DEG = 0.2


class BestResponse(NamedTuple):
    angle: StrategyAngle
    amplitude: float
    degenerate: bool


class CurveSample(NamedTuple):
    input_deg: float
    response_deg: float
    amplitude: float
    degenerate: bool


@dataclass(frozen=True)
class ReactionCurve:
    """Sampled best-response map of one player over [0, 180)."""

    player: Literal["alice", "bob"]
    samples: tuple[CurveSample, ...]
    discontinuities: tuple[float, ...]


@dataclass(frozen=True)
class Equilibrium:
    alpha: StrategyAngle
    beta: StrategyAngle
    value: float
    weights_a: OutcomeWeights
    weights_b: OutcomeWeights
    residual: float


def _wrap90(x):
    """Reduce an angle difference to [-90, 90) on the half-turn circle."""
    return (x + 90.0) % 180.0 - 90.0


def _alice_response_array(
    h: PayoffMatrix, frames: Frames, beta_deg: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    k, u, v = harmonic_coefficients(h, frames[0], frames[1], beta_deg)
    angle = (0.5 * np.degrees(np.arctan2(v, u))) % 180.0
    return angle, np.hypot(u, v)


def _bob_response_array(
    h: PayoffMatrix, frames: Frames, alpha_deg: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    k, u, v = harmonic_coefficients_in_beta(h, frames[0], frames[1], alpha_deg)
    angle = (0.5 * np.degrees(np.arctan2(v, u)) + 90.0) % 180.0
    return angle, np.hypot(u, v)


def best_response_alice(
    h: PayoffMatrix, frames: Frames, beta: StrategyAngle
) -> BestResponse:
    """Maximizer of F(., beta); degenerate when F is flat in alpha."""
    _, u, v = harmonic_coefficients(h, frames[0], frames[1], beta)
    amplitude = math.hypot(u, v)
    if amplitude < DEGENERACY_RATIO * h.scale:
        return BestResponse(StrategyAngle(0.0), amplitude, True)
    angle = (0.5 * math.degrees(math.atan2(v, u))) % 180.0
    return BestResponse(StrategyAngle(angle), amplitude, False)


def best_response_bob(
    h: PayoffMatrix, frames: Frames, alpha: StrategyAngle
) -> BestResponse:
    """Minimizer of F(alpha, .); the phase is the antipode of Alice's rule."""
    _, u, v = harmonic_coefficients_in_beta(h, frames[0], frames[1], alpha)
    amplitude = math.hypot(u, v)
    if amplitude < DEGENERACY_RATIO * h.scale:
        return BestResponse(StrategyAngle(0.0), amplitude, True)
    angle = (0.5 * math.degrees(math.atan2(v, u)) + 90.0) % 180.0
    return BestResponse(StrategyAngle(angle), amplitude, False)


def reaction_curve(
    player: Literal["alice", "bob"],
    h: PayoffMatrix,
    frames: Frames,
    resolution: float = 1.0,
) -> ReactionCurve:
    """Sample a best-response map and flag jumps between adjacent samples.

    A jump is any change of the [0, 180) representative larger than
    JUMP_THRESHOLD_DEG; this flags both genuinely steep stretches and
    crossings of the 0/180 plot boundary, matching how the curves are
    drawn on the square.
    """
    if resolution <= 0:
        raise ValueError(f"resolution must be positive, got {resolution}")
    inputs = np.arange(0.0, 180.0, resolution)
    if player == "alice":
        responses, amplitudes = _alice_response_array(h, frames, inputs)
    elif player == "bob":
        responses, amplitudes = _bob_response_array(h, frames, inputs)
    else:
        raise ValueError(f"unknown player: {player!r}")

    degenerate = amplitudes < DEGENERACY_RATIO * h.scale
    samples = tuple(
        CurveSample(float(t), float(r), float(a), bool(g))
        for t, r, a, g in zip(inputs, responses, amplitudes, degenerate)
    )
    jumps = []
    for i in range(len(samples) - 1):
        if abs(samples[i + 1].response_deg - samples[i].response_deg) > JUMP_THRESHOLD_DEG:
            jumps.append((samples[i].input_deg + samples[i + 1].input_deg) / 2.0)
    return ReactionCurve(player, samples, tuple(jumps))


def verify_nash_quantum(
    h: PayoffMatrix,
    frames: Frames,
    alpha: StrategyAngle,
    beta: StrategyAngle,
) -> float:
    """Worst unilateral improvement at (alpha, beta), from analytic optima.

    Zero (up to roundoff) exactly at Nash points; invariant under
    180-degree shifts of either angle.
    """
    value = payoff_surface(h, frames[0], frames[1], alpha, beta)
    ka, ua, va = harmonic_coefficients(h, frames[0], frames[1], beta)
    kb, ub, vb = harmonic_coefficients_in_beta(h, frames[0], frames[1], alpha)
    alice_gain = (ka + math.hypot(ua, va)) - value
    bob_gain = value - (kb - math.hypot(ub, vb))
    return max(alice_gain, bob_gain, 0.0)


def _composed_defect(h: PayoffMatrix, frames: Frames, alpha_deg):
    """g(alpha) = wrap180(R_A(R_B(alpha)) - alpha) on scalars or arrays."""
    rb, _ = _bob_response_array(h, frames, np.asarray(alpha_deg, dtype=float))
    ra, _ = _alice_response_array(h, frames, rb)
    return _wrap90(ra - np.asarray(alpha_deg, dtype=float))


def _make_equilibrium(
    h: PayoffMatrix, frames: Frames, alpha_deg: float, beta_deg: float
) -> Equilibrium:
    alpha = StrategyAngle(alpha_deg)
    beta = StrategyAngle(beta_deg)
    return Equilibrium(
        alpha=alpha,
        beta=beta,
        value=payoff_surface(h, frames[0], frames[1], alpha, beta),
        weights_a=outcome_weights(alpha, frames[0]),
        weights_b=outcome_weights(beta, frames[1]),
        residual=verify_nash_quantum(h, frames, alpha, beta),
    )


def _circle_dist(a: float, b: float) -> float:
    d = abs(a - b) % 180.0
    return min(d, 180.0 - d)


def find_equilibria(
    h: PayoffMatrix,
    frames: Frames,
    scan_resolution: float = DEFAULT_SCAN_RESOLUTION_DEG,
    refine_tolerance: float = DEFAULT_REFINE_TOLERANCE_DEG,
    nash_tolerance: float | None = None,
) -> list[Equilibrium]:
    """All verified Nash equilibria, deduplicated and sorted by alpha.

    An empty list is a valid outcome.  Candidates come from zero
    crossings of the composed best-response defect; each one must pass
    verify_nash_quantum at nash_tolerance (default 1e-8 * total payoff)
    before it is reported, so wrap artifacts and near-miss crossings are
    never returned.
    """
    if scan_resolution <= 0 or refine_tolerance <= 0:
        raise ValueError("scan_resolution and refine_tolerance must be positive")
    tol = nash_tolerance if nash_tolerance is not None else 1e-8 * h.scale

    alphas = np.arange(0.0, 180.0, scan_resolution)
    g = _composed_defect(h, frames, alphas)
    n = len(alphas)

    candidates: list[float] = []
    for i in range(n):
        j = (i + 1) % n
        lo, hi = float(alphas[i]), float(alphas[i]) + scan_resolution
        gi, gj = float(g[i]), float(g[j])
        if gi == 0.0:
            candidates.append(lo)
            continue
        if gi * gj >= 0.0:
            continue
        if abs(gj - gi) > 90.0:
            # the sign change may come from the wrap at +-90 rather than
            # from a zero crossing; the flanking samples stand in for the
            # jump itself
            for flank in (lo, hi % 180.0):
                candidates.append(flank)
        # bisect regardless: on a wrap bracket this homes in on the pole
        # and verification rejects it, while a crossing steeper than the
        # sampling still gets found
        flo = gi
        for _ in range(200):
            if hi - lo <= refine_tolerance:
                break
            mid = (lo + hi) / 2.0
            fm = float(_composed_defect(h, frames, mid))
            if flo * fm <= 0.0:
                hi = mid
            else:
                lo, flo = mid, fm
        candidates.append((lo + hi) / 2.0)

    verified: list[Equilibrium] = []
    rb_angles, _ = _bob_response_array(h, frames, np.asarray(candidates, dtype=float))
    for alpha_deg, beta_deg in zip(candidates, rb_angles):
        eq = _make_equilibrium(h, frames, float(alpha_deg), float(beta_deg))
        if eq.residual <= tol:
            verified.append(eq)

    verified.sort(key=lambda e: e.alpha.degrees)
    merged: list[Equilibrium] = []
    for eq in verified:
        for i, kept in enumerate(merged):
            if (
                _circle_dist(eq.alpha.degrees, kept.alpha.degrees)
                < DEFAULT_MERGE_DISTANCE_DEG
                and _circle_dist(eq.beta.degrees, kept.beta.degrees)
                < DEFAULT_MERGE_DISTANCE_DEG
            ):
                if eq.residual < kept.residual:
                    merged[i] = eq
                break
        else:
            merged.append(eq)
    merged.sort(key=lambda e: e.alpha.degrees)
    return merged


def grid_nash_audit(
    h: PayoffMatrix,
    frames: Frames,
    step: float = 0.1,
    tol: float | None = None,
) -> list[tuple[float, float, float]]:
    """Independent 2-D sweep: grid points whose unilateral gain is below tol.

    The payoff grid is built straight from the trigonometric definition
    and compared against the analytic per-row/per-column optima, so this
    audit shares no code path with the fixed-point scan.  Returns
    (alpha, beta, deviation) for every passing grid point.
    """
    if tol is None:
        tol = 1e-8 * h.scale
    alphas = np.arange(0.0, 180.0, step)
    betas = np.arange(0.0, 180.0, step)
    ka, ua, va = harmonic_coefficients(h, frames[0], frames[1], betas)
    fmax_by_beta = ka + np.hypot(ua, va)
    kb, ub, vb = harmonic_coefficients_in_beta(h, frames[0], frames[1], alphas)
    fmin_by_alpha = kb - np.hypot(ub, vb)

    surface = payoff_kernel(
        h, frames[0], frames[1], alphas[:, None], betas[None, :]
    )
    deviation = np.maximum(
        fmax_by_beta[None, :] - surface, surface - fmin_by_alpha[:, None]
    )
    hits = np.argwhere(deviation <= tol)
    return [
        (float(alphas[i]), float(betas[j]), float(deviation[i, j])) for i, j in hits
    ]
