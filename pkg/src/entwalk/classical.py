"""Classical reference models: the binomial walk on a line, the correlation
coefficient of a pair of coins, and exact or sampled walks driven by a
correlated coin pair.

Outcomes of a coin-pair toss are keyed "hh", "ht", "th", "tt" (first symbol
is coin 1).  The move map assigns an integer displacement to each outcome;
the default moves on double heads / double tails and rests on mixed
outcomes, mirroring the rest-site structure of the entangled-coin shift.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Distribution

__all__ = [
    "DEFAULT_MOVES",
    "OUTCOMES",
    "JointCoinDistribution",
    "binomial_walk_distribution",
    "correlated_walk_distribution",
    "correlation",
    "sample_endpoints",
    "sample_walk",
]

OUTCOMES = ("hh", "ht", "th", "tt")

DEFAULT_MOVES = {"hh": 1, "ht": 0, "th": 0, "tt": -1}

_SUM_TOL = 1e-12


@dataclass(frozen=True)
class JointCoinDistribution:
    """Joint outcome probabilities of one toss of a coin pair."""

    p_hh: float
    p_ht: float
    p_th: float
    p_tt: float

    def __post_init__(self) -> None:
        probs = (self.p_hh, self.p_ht, self.p_th, self.p_tt)
        if any(not 0.0 <= p <= 1.0 for p in probs):
            raise ValueError(f"outcome probabilities must lie in [0, 1], got {probs}")
        total = sum(probs)
        if abs(total - 1.0) > _SUM_TOL:
            raise ValueError(f"outcome probabilities sum to {total!r}, expected 1")

    @classmethod
    def from_correlation(cls, rho: float) -> "JointCoinDistribution":
        """Fair-marginal pair with correlation coefficient ``rho``.

        With both marginals fair the joint distribution is determined by rho
        alone: p_hh = p_tt = (1 + rho)/4 and p_ht = p_th = (1 - rho)/4.
        """
        if not -1.0 <= rho <= 1.0:
            raise ValueError(f"correlation must lie in [-1, 1], got {rho}")
        same = (1.0 + rho) / 4.0
        diff = (1.0 - rho) / 4.0
        return cls(p_hh=same, p_ht=diff, p_th=diff, p_tt=same)

    def outcome_probs(self) -> tuple[float, float, float, float]:
        """Probabilities in OUTCOMES order."""
        return (self.p_hh, self.p_ht, self.p_th, self.p_tt)


def binomial_walk_distribution(n: int, p: float) -> Distribution:
    """Exact n-step distribution of the independent ±1 walk.

    Each step moves +1 with probability ``p``, else -1, so position k is
    reached by h = (k + n)/2 up-steps: P(k) = C(n, h) p^h (1-p)^(n-h).
    Support is {-n, -n+2, ..., n}; all other positions have probability 0.
    Binomial coefficients are exact integers, so this stays accurate at
    n = 200 where naive factorials would overflow.
    """
    if n < 0:
        raise ValueError(f"step count must be nonnegative, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"step probability must lie in [0, 1], got {p}")
    q = 1.0 - p
    probs = {}
    for h in range(n + 1):
        probs[2 * h - n] = float(math.comb(n, h)) * p**h * q ** (n - h)
    return Distribution(probs)


def correlation(j: JointCoinDistribution) -> float:
    """Correlation coefficient of the two coins under H = 0, T = 1.

    Any affine re-encoding of the outcome values yields the same number.

    Raises
    ------
    ValueError
        A deterministic marginal (zero variance) leaves the coefficient
        undefined.
    """
    t1 = j.p_th + j.p_tt
    t2 = j.p_ht + j.p_tt
    var1 = t1 * (1.0 - t1)
    var2 = t2 * (1.0 - t2)
    if var1 <= 0.0 or var2 <= 0.0:
        raise ValueError("correlation undefined: a coin marginal is deterministic")
    cov = j.p_tt - t1 * t2
    return cov / math.sqrt(var1 * var2)


def _step_distribution(j: JointCoinDistribution, moves: dict) -> dict[int, float]:
    step: dict[int, float] = {}
    for outcome, prob in zip(_checked_outcomes(moves), j.outcome_probs()):
        d = int(moves[outcome])
        step[d] = step.get(d, 0.0) + prob
    return step


def correlated_walk_distribution(
    n: int, j: JointCoinDistribution, moves: dict = DEFAULT_MOVES
) -> Distribution:
    """Exact n-step distribution of the walk driven by a correlated pair.

    Convolves the single-step displacement distribution n times by dynamic
    programming; no sampling is involved.
    """
    if n < 0:
        raise ValueError(f"step count must be nonnegative, got {n}")
    step = _step_distribution(j, moves)
    current = {0: 1.0}
    for _ in range(n):
        nxt: dict[int, float] = {}
        for pos, prob in current.items():
            for d, w in step.items():
                if w == 0.0:
                    continue
                key = pos + d
                nxt[key] = nxt.get(key, 0.0) + prob * w
        current = nxt
    return Distribution(current)


def sample_walk(n: int, j: JointCoinDistribution, moves: dict = DEFAULT_MOVES, seed: int = 0) -> int:
    """One sampled endpoint of the n-step correlated-pair walk.

    Draws the n tosses from a generator seeded with ``seed``; identical
    arguments give the identical endpoint.
    """
    if n < 0:
        raise ValueError(f"step count must be nonnegative, got {n}")
    step_moves = np.array([int(moves[o]) for o in _checked_outcomes(moves)])
    rng = np.random.default_rng(seed)
    draws = rng.choice(4, size=n, p=np.array(j.outcome_probs()))
    return int(np.sum(step_moves[draws]))


def sample_endpoints(
    n: int, j: JointCoinDistribution, moves: dict = DEFAULT_MOVES, count: int = 1, seed: int = 0
) -> np.ndarray:
    """``count`` independent sampled endpoints of the n-step walk.

    Each endpoint depends only on how many times each outcome occurred, so
    the per-sample outcome counts are drawn in one multinomial batch; the
    result is distributed identically to ``count`` runs of n sequential
    tosses, at a fraction of the cost.
    """
    if n < 0:
        raise ValueError(f"step count must be nonnegative, got {n}")
    if count < 0:
        raise ValueError(f"sample count must be nonnegative, got {count}")
    step_moves = np.array([int(moves[o]) for o in _checked_outcomes(moves)])
    rng = np.random.default_rng(seed)
    counts = rng.multinomial(n, np.array(j.outcome_probs()), size=count)
    return counts @ step_moves


def _checked_outcomes(moves: dict) -> tuple[str, ...]:
    missing = [o for o in OUTCOMES if o not in moves]
    if missing:
        raise ValueError(f"move map must cover all four outcomes, missing {missing}")
    return OUTCOMES
