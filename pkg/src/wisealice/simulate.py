"""Monte Carlo check of the payoff rule and a round-by-round automaton.

One simulated round plays both question pairs: Alice's outcome on the
{1,3} pair is drawn with weights (p1, p3) and Bob's with (q1, q3), the
payoff cell is scored, and the {2,4} pair is drawn independently with
(p2, p4) and (q2, q4).  Summing both sub-rounds makes the per-round
expectation equal the quantum payoff exactly, with no extra factor.

Randomness is counter-based: round i consumes the four SplitMix64 outputs
at counters 4i..4i+3 under the run's seed, so any subset of rounds can be
generated independently (or vectorized) with identical results.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

import numpy as np

from wisealice.game import PayoffMatrix, SquareGeometry, bob_outcome
from wisealice.quantum import MeasurementFrame, StrategyAngle, outcome_weights

_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_U53 = float(1 << 53)


def _mix64(x: np.ndarray) -> np.ndarray:
    """SplitMix64 finalizer; a bijection on 64-bit words."""
    z = x
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


def _uniforms(seed: int, counters: np.ndarray) -> np.ndarray:
    """Uniform [0, 1) doubles at the given stream counters."""
    key = np.uint64(seed & 0xFFFFFFFFFFFFFFFF)
    counters = np.asarray(counters, dtype=np.uint64)
    words = _mix64((counters + np.uint64(1)) * _GAMMA + key)
    return (words >> np.uint64(11)).astype(np.float64) / _U53


@dataclass(frozen=True)
class SimulationConfig:
    rounds: int
    seed: int
    payoffs: PayoffMatrix
    frame_a: MeasurementFrame
    frame_b: MeasurementFrame
    alpha: StrategyAngle
    beta: StrategyAngle

    def __post_init__(self) -> None:
        if self.rounds < 1:
            raise ValueError(f"rounds must be >= 1, got {self.rounds}")


class RoundDraw(NamedTuple):
    alice_13: int   # 1 or 3
    bob_13: int
    alice_24: int   # 2 or 4
    bob_24: int
    payoff_13: float
    payoff_24: float


def _draw_round(config: SimulationConfig, uniforms: Sequence[float]) -> RoundDraw:
    h = config.payoffs
    p = outcome_weights(config.alpha, config.frame_a)
    q = outcome_weights(config.beta, config.frame_b)
    a13 = 1 if uniforms[0] < p.p1 else 3
    b13 = 1 if uniforms[1] < q.p1 else 3
    a24 = 2 if uniforms[2] < p.p2 else 4
    b24 = 2 if uniforms[3] < q.p2 else 4
    pay13 = h.a if (a13, b13) == (1, 3) else h.c if (a13, b13) == (3, 1) else 0.0
    pay24 = h.b if (a24, b24) == (2, 4) else h.d if (a24, b24) == (4, 2) else 0.0
    return RoundDraw(a13, b13, a24, b24, pay13, pay24)


def sample_round(config: SimulationConfig, round_index: int) -> float:
    """Payoff of one round: both question pairs drawn and scored."""
    if not 0 <= round_index < config.rounds:
        raise ValueError(f"round_index out of range: {round_index}")
    us = _uniforms(config.seed, 4 * round_index + np.arange(4))
    draw = _draw_round(config, us)
    return draw.payoff_13 + draw.payoff_24


@dataclass(frozen=True)
class SimulationResult:
    rounds: int
    mean: float
    std_error: float | None   # None when a single round leaves it undefined
    analytic_value: float

    def z_score(self) -> float | None:
        if self.std_error is None or self.std_error == 0.0:
            return None
        return (self.mean - self.analytic_value) / self.std_error


def _payoff_vector(config: SimulationConfig) -> np.ndarray:
    """Vectorized per-round payoffs; bit-identical to sample_round calls."""
    h = config.payoffs
    p = outcome_weights(config.alpha, config.frame_a)
    q = outcome_weights(config.beta, config.frame_b)
    counters = np.arange(config.rounds, dtype=np.uint64) * np.uint64(4)
    u0 = _uniforms(config.seed, counters)
    u1 = _uniforms(config.seed, counters + np.uint64(1))
    u2 = _uniforms(config.seed, counters + np.uint64(2))
    u3 = _uniforms(config.seed, counters + np.uint64(3))
    pay13 = np.where(
        (u0 < p.p1) & ~(u1 < q.p1), h.a, np.where(~(u0 < p.p1) & (u1 < q.p1), h.c, 0.0)
    )
    pay24 = np.where(
        (u2 < p.p2) & ~(u3 < q.p2), h.b, np.where(~(u2 < p.p2) & (u3 < q.p2), h.d, 0.0)
    )
    return pay13 + pay24


def simulate(config: SimulationConfig) -> SimulationResult:
    """Run every round and report the empirical mean against the exact value."""
    from wisealice.quantum import payoff_surface

    payoffs = _payoff_vector(config)
    mean = float(payoffs.mean())
    if config.rounds > 1:
        se = float(payoffs.std(ddof=1) / np.sqrt(config.rounds))
    else:
        se = None
    analytic = payoff_surface(
        config.payoffs, config.frame_a, config.frame_b, config.alpha, config.beta
    )
    return SimulationResult(config.rounds, mean, se, analytic)


class TranscriptRow(NamedTuple):
    round_index: int
    pair: str               # "13" or "24"
    alice_outcome: int
    bob_outcome: int
    payoff: float


def transcript_rows(config: SimulationConfig) -> Iterator[TranscriptRow]:
    """Two rows per round, one per question pair, in round order."""
    for i in range(config.rounds):
        us = _uniforms(config.seed, 4 * i + np.arange(4))
        draw = _draw_round(config, us)
        yield TranscriptRow(i, "13", draw.alice_13, draw.bob_13, draw.payoff_13)
        yield TranscriptRow(i, "24", draw.alice_24, draw.bob_24, draw.payoff_24)


class AutomatonStep(NamedTuple):
    question: int
    answer: str
    payoff: float
    ball: int


def run_automaton(
    geometry: SquareGeometry,
    payoffs: PayoffMatrix,
    questions: Sequence[int],
    initial_ball: int,
) -> list[AutomatonStep]:
    """Play a question sequence with the ball reset before every round.

    Each round starts from initial_ball (rounds are independent plays of
    the one-shot game); the recorded ball is where Bob left it.
    """
    geometry.require_vertex(initial_ball)
    steps = []
    for question in questions:
        answer, new_ball = bob_outcome(geometry, question, initial_ball)
        payoff = payoffs.row_payoff(question) if answer == "no" else 0.0
        steps.append(AutomatonStep(question, answer, payoff, new_ball))
    return steps
