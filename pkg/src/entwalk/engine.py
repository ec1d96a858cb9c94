"""Walk evolution: compose a coin operator and a conditional shift into one
step, iterate it, and read out marginal probability distributions.

One step applies the coin unitary to the coin vector at every occupied
position, then moves each component by the shift's displacement table.  No
renormalization is ever applied, so any unitarity defect accumulates visibly
in the state norm instead of being hidden.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import CoinOperator, CoinState, Distribution, WalkState
from .shifts import DisplacementTable, _shift_amplitudes

__all__ = [
    "WalkConfig",
    "coin_distribution",
    "evolve",
    "initial_state",
    "position_distribution",
    "sample_positions",
    "step",
]


@dataclass(frozen=True)
class WalkConfig:
    """Complete description of a walk run.

    Fields must agree: coin state, coin operator and shift share one qubit
    count, and the initial position (default: origin) has one coordinate per
    lattice dimension of the shift.
    """

    coin_state: CoinState
    coin_op: CoinOperator
    shift: DisplacementTable
    steps: int
    initial_position: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.coin_state.qubits != self.coin_op.qubits:
            raise ValueError(
                f"coin state has {self.coin_state.qubits} qubit(s) "
                f"but operator acts on {self.coin_op.qubits}"
            )
        if self.shift.qubits != self.coin_state.qubits:
            raise ValueError(
                f"shift conditions on {self.shift.qubits} qubit(s) "
                f"but coin holds {self.coin_state.qubits}"
            )
        if self.steps < 0:
            raise ValueError(f"step count must be nonnegative, got {self.steps}")
        pos = self.initial_position
        if pos is None:
            pos = (0,) * self.shift.dims
        elif isinstance(pos, int):
            pos = (pos,)
        else:
            pos = tuple(int(x) for x in pos)
        if len(pos) != self.shift.dims:
            raise ValueError(
                f"initial position {pos} does not have {self.shift.dims} component(s)"
            )
        object.__setattr__(self, "initial_position", pos)


def initial_state(cfg: WalkConfig) -> WalkState:
    """Product state: the coin state attached to a single lattice site."""
    return WalkState(
        dims=cfg.shift.dims,
        qubits=cfg.coin_state.qubits,
        amplitudes={cfg.initial_position: cfg.coin_state.amplitudes.copy()},
    )


def step(state: WalkState, coin_op: CoinOperator, shift: DisplacementTable) -> WalkState:
    """One walk step: coin unitary on every site, then the conditional shift."""
    if coin_op.qubits != state.qubits:
        raise ValueError(f"operator acts on {coin_op.qubits} qubit(s), state holds {state.qubits}")
    if shift.qubits != state.qubits:
        raise ValueError(f"shift conditions on {shift.qubits} qubit(s), state holds {state.qubits}")
    if shift.dims != state.dims:
        raise ValueError(f"shift is {shift.dims}D, state is {state.dims}D")
    mat = coin_op.matrix
    tossed = {pos: mat @ vec for pos, vec in state.amplitudes.items()}
    return WalkState(dims=state.dims, qubits=state.qubits, amplitudes=_shift_amplitudes(tossed, shift))


def evolve(cfg: WalkConfig) -> WalkState:
    """State after ``cfg.steps`` applications of the step operator."""
    state = initial_state(cfg)
    for _ in range(cfg.steps):
        state = step(state, cfg.coin_op, cfg.shift)
    return state


def position_distribution(state: WalkState) -> Distribution:
    """Marginal over the coin: P(pos) = sum_c |amplitude(pos, c)|^2.

    1D positions are labeled by plain ints, 2D positions by (x, y) tuples.
    """
    probs = {}
    for pos, vec in state.amplitudes.items():
        label = pos[0] if state.dims == 1 else pos
        probs[label] = float(np.vdot(vec, vec).real)
    return Distribution(probs)


def coin_distribution(state: WalkState) -> Distribution:
    """Marginal over position: P(c) = sum_pos |amplitude(pos, c)|^2."""
    dim = 2**state.qubits
    totals = np.zeros(dim)
    for vec in state.amplitudes.values():
        totals += np.abs(vec) ** 2
    return Distribution({c: float(totals[c]) for c in range(dim) if totals[c] > 0.0})


def sample_positions(dist: Distribution, count: int, seed: int) -> list:
    """Draw ``count`` position labels from a distribution, reproducibly.

    Same seed, same distribution, same draws.  Provided for Monte-Carlo-style
    output parity with the classical sampler; evolution itself is exact.
    """
    if count < 0:
        raise ValueError(f"sample count must be nonnegative, got {count}")
    labels = dist.support()
    weights = np.array([dist[label] for label in labels])
    rng = np.random.default_rng(seed)
    picks = rng.choice(len(labels), size=count, p=weights / weights.sum())
    return [labels[i] for i in picks]
