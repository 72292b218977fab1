"""Angle-parameterized quantum strategies and the payoff function F.

A pure strategy is a unit vector in a two-dimensional state space; only
squared amplitudes enter the payoff, so the angle of the vector on the
half-turn circle [0, 180) is the complete state.  Each player measures in
two bases whose principal directions differ by the frame angle theta, and
the four outcome weights form two coupled binary distributions:

    p1 = cos^2(alpha)            p3 = sin^2(alpha)
    p2 = cos^2(alpha - theta)    p4 = sin^2(alpha - theta)

Alice's expected payoff against Bob's weights q is

    F = a p1 q3 + c p3 q1 + b p2 q4 + d p4 q2

which, for either angle held fixed, is a single-harmonic sinusoid in
twice the other angle; the reduction K + U cos 2a + V sin 2a drives the
analytic best responses in the solver.

Angles are degrees at every interface and radians only inside the
trigonometric kernels.  The kernels broadcast over numpy arrays so the
solver can sweep thousands of angles at once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from wisealice.game import PayoffMatrix

_PAIR_TOL = 1e-12

ArrayLike = Union[float, np.ndarray]


@dataclass(frozen=True)
class MeasurementFrame:
    """Angle between a player's two measurement bases, in (0, 90) degrees."""

    theta_deg: float

    def __post_init__(self) -> None:
        if not 0.0 < self.theta_deg < 90.0:
            raise ValueError(
                f"theta_deg must lie strictly inside (0, 90), got {self.theta_deg}"
            )


@dataclass(frozen=True)
class StrategyAngle:
    """An angle on the half-turn circle; 180-degree shifts compare equal."""

    degrees: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "degrees", self.degrees % 180.0)

    @property
    def radians(self) -> float:
        return math.radians(self.degrees)


@dataclass(frozen=True)
class OutcomeWeights:
    """Squared amplitudes of the four outcomes: two binary distributions.

    p1 + p3 = 1 and p2 + p4 = 1; the four weights total 2 because they
    describe two measurements, not one four-outcome distribution.
    """

    p1: float
    p2: float
    p3: float
    p4: float

    def __post_init__(self) -> None:
        if abs(self.p1 + self.p3 - 1.0) > _PAIR_TOL:
            raise ValueError(f"p1 + p3 must equal 1, got {self.p1 + self.p3}")
        if abs(self.p2 + self.p4 - 1.0) > _PAIR_TOL:
            raise ValueError(f"p2 + p4 must equal 1, got {self.p2 + self.p4}")

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.p1, self.p2, self.p3, self.p4)


def outcome_weights(strategy: StrategyAngle, frame: MeasurementFrame) -> OutcomeWeights:
    """Squared amplitudes of a strategy angle in the given frame."""
    a = strategy.radians
    t = math.radians(frame.theta_deg)
    c1, s1 = math.cos(a), math.sin(a)
    c2, s2 = math.cos(a - t), math.sin(a - t)
    return OutcomeWeights(c1 * c1, c2 * c2, s1 * s1, s2 * s2)


def quantum_payoff(h: PayoffMatrix, p: OutcomeWeights, q: OutcomeWeights) -> float:
    """Expected payoff to Alice: a p1 q3 + c p3 q1 + b p2 q4 + d p4 q2."""
    return (
        h.a * p.p1 * q.p3
        + h.c * p.p3 * q.p1
        + h.b * p.p2 * q.p4
        + h.d * p.p4 * q.p2
    )


def _degrees(angle: Union[StrategyAngle, ArrayLike]) -> ArrayLike:
    return getattr(angle, "degrees", angle)


def payoff_kernel(
    h: PayoffMatrix,
    frame_a: MeasurementFrame,
    frame_b: MeasurementFrame,
    alpha_deg: ArrayLike,
    beta_deg: ArrayLike,
) -> ArrayLike:
    """F(alpha, beta) for scalar or broadcastable array angles in degrees."""
    al = np.radians(alpha_deg)
    be = np.radians(beta_deg)
    ta = math.radians(frame_a.theta_deg)
    tb = math.radians(frame_b.theta_deg)
    return (
        h.a * np.cos(al) ** 2 * np.sin(be) ** 2
        + h.c * np.sin(al) ** 2 * np.cos(be) ** 2
        + h.b * np.cos(al - ta) ** 2 * np.sin(be - tb) ** 2
        + h.d * np.sin(al - ta) ** 2 * np.cos(be - tb) ** 2
    )


def payoff_surface(
    h: PayoffMatrix,
    frame_a: MeasurementFrame,
    frame_b: MeasurementFrame,
    alpha: StrategyAngle,
    beta: StrategyAngle,
) -> float:
    """F(alpha, beta), by definition the composition of weights and payoff."""
    return quantum_payoff(
        h, outcome_weights(alpha, frame_a), outcome_weights(beta, frame_b)
    )


def harmonic_coefficients(
    h: PayoffMatrix,
    frame_a: MeasurementFrame,
    frame_b: MeasurementFrame,
    beta: Union[StrategyAngle, ArrayLike],
) -> tuple[ArrayLike, ArrayLike, ArrayLike]:
    """(K, U, V) with F(alpha, beta) = K + U cos 2alpha + V sin 2alpha.

    Obtained from the half-angle identities; exact for every alpha.
    Accepts a scalar or an array of beta angles in degrees.
    """
    be = np.radians(_degrees(beta))
    tb = math.radians(frame_b.theta_deg)
    s1 = h.a * np.sin(be) ** 2           # coefficient of cos^2(alpha)
    c1 = h.c * np.cos(be) ** 2           # coefficient of sin^2(alpha)
    s2 = h.b * np.sin(be - tb) ** 2      # coefficient of cos^2(alpha - theta_a)
    c2 = h.d * np.cos(be - tb) ** 2      # coefficient of sin^2(alpha - theta_a)
    two_ta = 2.0 * math.radians(frame_a.theta_deg)
    k = (s1 + c1 + s2 + c2) / 2.0
    u = (s1 - c1) / 2.0 + (s2 - c2) / 2.0 * math.cos(two_ta)
    v = (s2 - c2) / 2.0 * math.sin(two_ta)
    return k, u, v


def harmonic_coefficients_in_beta(
    h: PayoffMatrix,
    frame_a: MeasurementFrame,
    frame_b: MeasurementFrame,
    alpha: Union[StrategyAngle, ArrayLike],
) -> tuple[ArrayLike, ArrayLike, ArrayLike]:
    """(K, U, V) with F(alpha, beta) = K + U cos 2beta + V sin 2beta."""
    al = np.radians(_degrees(alpha))
    ta = math.radians(frame_a.theta_deg)
    s1 = h.a * np.cos(al) ** 2           # coefficient of sin^2(beta)
    c1 = h.c * np.sin(al) ** 2           # coefficient of cos^2(beta)
    s2 = h.b * np.cos(al - ta) ** 2      # coefficient of sin^2(beta - theta_b)
    c2 = h.d * np.sin(al - ta) ** 2      # coefficient of cos^2(beta - theta_b)
    two_tb = 2.0 * math.radians(frame_b.theta_deg)
    k = (s1 + c1 + s2 + c2) / 2.0
    u = (c1 - s1) / 2.0 + (c2 - s2) / 2.0 * math.cos(two_tb)
    v = (c2 - s2) / 2.0 * math.sin(two_tb)
    return k, u, v
