"""Shared containers for coin states, coin operators, joint walk states and
probability distributions.

Amplitudes are plain ``complex128`` throughout.  Coin basis states are indexed
by reading the ket label as a binary numeral with the leftmost symbol most
significant, so ``|01>`` is index 1 and ``|10>`` is index 2; the same ordering
is used for operator rows/columns and for displacement tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "MAX_QUBITS",
    "UNITARITY_TOL",
    "CoinOperator",
    "CoinState",
    "Distribution",
    "WalkState",
    "basis_index",
    "basis_label",
    "check_unitary",
    "state_norm",
    "tensor_product",
]

MAX_QUBITS = 3

# Construction-time tolerance for custom unitaries and state normalization.
UNITARITY_TOL = 1e-12

DISTRIBUTION_SUM_TOL = 1e-10


def basis_label(index: int, qubits: int) -> str:
    """Binary ket label of a coin basis index, e.g. ``basis_label(2, 2) == "10"``."""
    if not 0 <= index < 2**qubits:
        raise ValueError(f"basis index {index} out of range for {qubits} qubit(s)")
    return format(index, f"0{qubits}b")


def basis_index(label: str) -> int:
    """Inverse of :func:`basis_label`: ``basis_index("10") == 2``."""
    if not label or any(ch not in "01" for ch in label):
        raise ValueError(f"not a binary ket label: {label!r}")
    return int(label, 2)


def _as_complex_matrix(entries) -> np.ndarray:
    m = np.array(entries, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.view(float))):
        raise ValueError("matrix entries must be finite")
    return m


def check_unitary(matrix, tol: float = UNITARITY_TOL) -> bool:
    """Return True iff ``max |M M^dag - I| <= tol`` entrywise.

    Accepts any square array-like; used internally to validate operators at
    construction and available for checking user-supplied matrices.
    """
    m = _as_complex_matrix(matrix)
    defect = m @ m.conj().T - np.eye(m.shape[0])
    return float(np.max(np.abs(defect))) <= tol


@dataclass(frozen=True)
class CoinState:
    """Normalized pure state of a coin register of 1 to 3 qubits.

    Parameters
    ----------
    qubits : int
        Register size, 1 <= qubits <= MAX_QUBITS.
    amplitudes : array-like of complex, length ``2**qubits``
        Basis amplitudes in ket-label order.  Must be normalized within
        ``UNITARITY_TOL``.
    """

    qubits: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if not 1 <= self.qubits <= MAX_QUBITS:
            raise ValueError(f"coin register must hold 1..{MAX_QUBITS} qubits, got {self.qubits}")
        amps = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if amps.shape[0] != 2**self.qubits:
            raise ValueError(
                f"expected {2**self.qubits} amplitudes for {self.qubits} qubit(s), got {amps.shape[0]}"
            )
        if not np.all(np.isfinite(amps.view(float))):
            raise ValueError("amplitudes must be finite")
        norm_sq = float(np.vdot(amps, amps).real)
        if abs(norm_sq - 1.0) > UNITARITY_TOL:
            raise ValueError(f"amplitudes are not normalized: |psi|^2 = {norm_sq!r}")
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return 2**self.qubits


@dataclass(frozen=True)
class CoinOperator:
    """Unitary acting on the coin space, validated at construction.

    The matrix must be square with dimension ``2**q`` for q in 1..MAX_QUBITS
    and unitary within ``UNITARITY_TOL`` (max entry of ``|U U^dag - I|``).
    """

    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = _as_complex_matrix(self.matrix)
        dim = m.shape[0]
        if dim & (dim - 1) or not 2 <= dim <= 2**MAX_QUBITS:
            raise ValueError(f"coin operator dimension must be 2^q with q in 1..{MAX_QUBITS}, got {dim}")
        if not check_unitary(m):
            defect = float(np.max(np.abs(m @ m.conj().T - np.eye(dim))))
            raise ValueError(f"matrix is not unitary: max |U U^dag - I| = {defect:.3e}")
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def qubits(self) -> int:
        return self.dim.bit_length() - 1


def tensor_product(a: CoinOperator, b: CoinOperator) -> CoinOperator:
    """Kronecker product of two coin operators.

    Row/column index of the result is ``(i_a, i_b)`` read row-major, i.e. the
    factor ``a`` owns the most significant ket symbols, consistent with
    :func:`basis_label`.  Coins larger than MAX_QUBITS are rejected.
    """
    if a.dim * b.dim > 2**MAX_QUBITS:
        raise ValueError(
            f"tensor product of dimensions {a.dim} x {b.dim} exceeds the "
            f"supported coin size 2^{MAX_QUBITS}"
        )
    return CoinOperator(np.kron(a.matrix, b.matrix))


@dataclass(frozen=True)
class WalkState:
    """Joint walker/coin amplitude assignment, stored sparsely by position.

    ``amplitudes`` maps a lattice position (tuple of ``dims`` ints) to the
    complex coin vector of length ``2**qubits`` attached to that site.
    Instances are treated as immutable values; evolution produces new ones.
    """

    dims: int
    qubits: int
    amplitudes: dict[tuple[int, ...], np.ndarray] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.dims not in (1, 2):
            raise ValueError(f"lattice dimensionality must be 1 or 2, got {self.dims}")
        if not 1 <= self.qubits <= MAX_QUBITS:
            raise ValueError(f"coin register must hold 1..{MAX_QUBITS} qubits, got {self.qubits}")
        dim = 2**self.qubits
        frozen: dict[tuple[int, ...], np.ndarray] = {}
        for pos, vec in self.amplitudes.items():
            key = tuple(int(x) for x in pos)
            if len(key) != self.dims:
                raise ValueError(f"position {pos} does not have {self.dims} component(s)")
            v = np.array(vec, dtype=complex).reshape(-1)
            if v.shape[0] != dim:
                raise ValueError(f"coin vector at {key} has length {v.shape[0]}, expected {dim}")
            if not np.all(np.isfinite(v.view(float))):
                raise ValueError(f"coin vector at {key} has non-finite entries")
            v.flags.writeable = False
            frozen[key] = v
        object.__setattr__(self, "amplitudes", frozen)

    def amplitude(self, position, coin_index: int) -> complex:
        """Amplitude at ``(position, coin_index)``; zero if the site is unoccupied."""
        key = (position,) if isinstance(position, int) else tuple(position)
        vec = self.amplitudes.get(key)
        return complex(vec[coin_index]) if vec is not None else 0j

    def positions(self) -> list[tuple[int, ...]]:
        return sorted(self.amplitudes)

    def norm(self) -> float:
        return state_norm(self)


def state_norm(state: WalkState) -> float:
    """Total probability weight ``sum |amplitude|^2`` of a walk state."""
    return float(sum(np.vdot(v, v).real for v in state.amplitudes.values()))


@dataclass(frozen=True)
class Distribution:
    """Probability assignment over lattice positions or coin basis indices.

    Labels are ints for 1D positions and coin indices, ``(x, y)`` tuples for
    2D positions.  Entries must be nonnegative and sum to 1 within 1e-10.
    """

    probs: dict

    def __post_init__(self) -> None:
        clean = {}
        total = 0.0
        for label, p in self.probs.items():
            p = float(p)
            if not np.isfinite(p) or p < 0.0:
                raise ValueError(f"invalid probability {p!r} at {label!r}")
            key = tuple(int(x) for x in label) if isinstance(label, (tuple, list)) else int(label)
            clean[key] = p
            total += p
        if abs(total - 1.0) > DISTRIBUTION_SUM_TOL:
            raise ValueError(f"probabilities sum to {total!r}, expected 1")
        object.__setattr__(self, "probs", clean)

    def __getitem__(self, label) -> float:
        key = tuple(label) if isinstance(label, (tuple, list)) else label
        return self.probs.get(key, 0.0)

    def items_sorted(self) -> list:
        """(label, probability) pairs sorted ascending by label."""
        return sorted(self.probs.items())

    def support(self) -> list:
        return sorted(self.probs)
