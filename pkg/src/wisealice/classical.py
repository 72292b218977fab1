"""Classical mixed-strategy baseline for the 4x4 zero-sum game.

The solver enumerates equal-size support pairs (69 in total for a 4x4
matrix), solves the indifference equations on each candidate support
directly, and keeps the feasible profiles.  Exact at this size and
dependency-free, so it doubles as its own oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from wisealice.game import PayoffMatrix

_SIMPLEX_TOL = 1e-12


@dataclass(frozen=True)
class MixedProfile:
    """A mixed-strategy pair with the resulting expected payoff to Alice."""

    x: tuple[float, float, float, float]
    y: tuple[float, float, float, float]
    value: float

    def __post_init__(self) -> None:
        for name, vec in (("x", self.x), ("y", self.y)):
            if len(vec) != 4 or min(vec) < -_SIMPLEX_TOL:
                raise ValueError(f"{name} must be a nonnegative 4-vector")
            if abs(sum(vec) - 1.0) > _SIMPLEX_TOL:
                raise ValueError(f"{name} must sum to 1, got {sum(vec)}")


def expected_payoff(
    h: PayoffMatrix,
    x: Sequence[float],
    y: Sequence[float],
    tol: float = 1e-9,
) -> float:
    """Bilinear form sum_jk h[j][k] x_j y_k."""
    xv = np.asarray(x, dtype=float)
    yv = np.asarray(y, dtype=float)
    for name, v in (("x", xv), ("y", yv)):
        if v.shape != (4,):
            raise ValueError(f"{name} must have 4 entries")
        if v.min() < -tol or abs(v.sum() - 1.0) > tol:
            raise ValueError(f"{name} is not on the probability simplex")
    return float(xv @ h.as_array() @ yv)


def _support_solution(
    arr: np.ndarray, rows: tuple[int, ...], cols: tuple[int, ...]
) -> tuple[np.ndarray, np.ndarray, float] | None:
    """Solve the indifference equations on one support pair, or None.

    Unknowns are Alice's weights on ``rows`` plus the value v, constrained
    so every column in ``cols`` earns exactly v; symmetrically for Bob.
    """
    k = len(rows)
    ax = np.zeros((k + 1, k + 1))
    bx = np.zeros(k + 1)
    for i, col in enumerate(cols):
        ax[i, :k] = arr[rows, col]
        ax[i, k] = -1.0
    ax[k, :k] = 1.0
    bx[k] = 1.0

    ay = np.zeros((k + 1, k + 1))
    by = np.zeros(k + 1)
    for i, row in enumerate(rows):
        ay[i, :k] = arr[row, cols]
        ay[i, k] = -1.0
    ay[k, :k] = 1.0
    by[k] = 1.0

    try:
        solx = np.linalg.solve(ax, bx)
        soly = np.linalg.solve(ay, by)
    except np.linalg.LinAlgError:
        return None
    if abs(solx[k] - soly[k]) > 1e-9 * (1.0 + abs(solx[k])):
        return None

    x = np.zeros(4)
    y = np.zeros(4)
    x[list(rows)] = solx[:k]
    y[list(cols)] = soly[:k]
    return x, y, float(solx[k])


def solve_zero_sum(h: PayoffMatrix) -> MixedProfile:
    """Optimal mixed strategies and game value by support enumeration.

    Among all feasible equilibria the one with lexicographically smallest
    (row support, column support) is returned, which makes ties (e.g. the
    all-ones matrix) deterministic.
    """
    arr = h.as_array()
    slack = 1e-9 * h.scale
    feasible: list[tuple[tuple[int, ...], tuple[int, ...], np.ndarray, np.ndarray, float]] = []

    for k in range(1, 5):
        for rows in itertools.combinations(range(4), k):
            for cols in itertools.combinations(range(4), k):
                sol = _support_solution(arr, rows, cols)
                if sol is None:
                    continue
                x, y, value = sol
                if x.min() < -slack or y.min() < -slack:
                    continue
                # no unplayed column may pay Bob less than the value,
                # no unplayed row may pay Alice more
                col_payoffs = x @ arr
                row_payoffs = arr @ y
                if col_payoffs.min() < value - slack:
                    continue
                if row_payoffs.max() > value + slack:
                    continue
                feasible.append((rows, cols, x, y, value))

    if not feasible:
        raise RuntimeError("support enumeration found no equilibrium")
    rows, cols, x, y, value = min(feasible, key=lambda f: (f[0], f[1]))
    x = np.clip(x, 0.0, None)
    y = np.clip(y, 0.0, None)
    x /= x.sum()
    y /= y.sum()
    return MixedProfile(tuple(x), tuple(y), value)


def verify_nash_classical(
    h: PayoffMatrix, profile: MixedProfile, tol: float = 1e-9
) -> bool:
    """Check the equilibrium inequalities against all pure deviations."""
    arr = h.as_array()
    x = np.asarray(profile.x)
    y = np.asarray(profile.y)
    value = float(x @ arr @ y)
    alice_deviations = arr @ y          # H_A(e_j, y)
    bob_deviations = -(x @ arr)         # H_B(x, e_k)
    return bool(
        np.all(value >= alice_deviations - tol)
        and np.all(-value >= bob_deviations - tol)
    )
