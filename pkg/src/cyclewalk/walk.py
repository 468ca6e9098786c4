"""Coined discrete-time quantum walks on k-cycle graphs.

The walker lives in the tensor product of a k-site position register and a
two-state coin. Amplitude vectors use the flat index ``2*i + s`` for position
``i`` and coin ``s`` (position-major). One walk step applies the coin to the
internal qubit, then shifts the position one site down (coin 0) or up (coin 1)
around the cycle, so the step operator is ``shift @ kron(I_k, coin)``.

All operators are dense complex numpy arrays and all functions are pure.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    InvalidParams,
    InvalidSize,
    NotBlockCirculant,
)

# Construction-time tolerances; long evolutions are allowed to drift to 1e-10.
DEFAULT_UNITARY_TOL = 1e-12
DEFAULT_NORM_TOL = 1e-10


@dataclass(frozen=True)
class CoinParams:
    """Parameters of the two-state coin unitary.

    ``rho`` in [0, 1] sets the weight kept on the coin's current face, and
    ``alpha``, ``beta`` are phase angles in radians. Validation restricts
    the angles to the conventional [0, pi] window; construction is unitary
    for any real angles, so ``allow_wide_angles=True`` lifts that check.
    """

    rho: float
    alpha: float = 0.0
    beta: float = 0.0
    allow_wide_angles: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        for name in ("rho", "alpha", "beta"):
            if not math.isfinite(getattr(self, name)):
                raise InvalidParams(f"{name} must be finite")
        if not 0.0 <= self.rho <= 1.0:
            raise InvalidParams(f"rho must lie in [0, 1], got {self.rho}")
        if not self.allow_wide_angles:
            for name in ("alpha", "beta"):
                angle = getattr(self, name)
                if not 0.0 <= angle <= math.pi:
                    raise InvalidParams(
                        f"{name}={angle} outside [0, pi]; pass "
                        "allow_wide_angles=True to permit arbitrary angles"
                    )


@dataclass(frozen=True)
class WalkerState:
    """Normalized amplitude vector over the position-coin basis of a k-cycle."""

    k: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if self.k < 1:
            raise InvalidSize(f"cycle size must be >= 1, got {self.k}")
        amp = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        if amp.shape != (2 * self.k,):
            raise DimensionMismatch(
                f"expected {2 * self.k} amplitudes for k={self.k}, got {amp.size}"
            )
        object.__setattr__(self, "amplitudes", amp)
        norm = float(np.linalg.norm(amp))
        if abs(norm - 1.0) > DEFAULT_NORM_TOL:
            raise InvalidParams(f"state is not normalized: |psi| = {norm!r}")

    @classmethod
    def basis(cls, k: int, position: int, coin: int) -> "WalkerState":
        """Basis state |position>|coin>."""
        if not 0 <= position < k:
            raise IndexOutOfRange(f"position {position} outside 0..{k - 1}")
        if coin not in (0, 1):
            raise IndexOutOfRange(f"coin must be 0 or 1, got {coin}")
        amp = np.zeros(2 * k, dtype=np.complex128)
        amp[2 * position + coin] = 1.0
        return cls(k, amp)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def position_distribution(self) -> np.ndarray:
        """Probability per site, coin traced out."""
        p = np.abs(self.amplitudes) ** 2
        return p.reshape(self.k, 2).sum(axis=1)


@dataclass(frozen=True)
class CoinSequence:
    """Named coins plus the repeating application pattern, e.g. "AABB".

    The pattern is read left to right in temporal order: the first letter
    names the coin applied on the first step.
    """

    coins: Mapping[str, CoinParams]
    pattern: str

    def __post_init__(self) -> None:
        if not self.pattern:
            raise InvalidParams("pattern must be nonempty")
        object.__setattr__(self, "coins", dict(self.coins))
        missing = sorted(set(self.pattern) - set(self.coins))
        if missing:
            raise InvalidParams(f"pattern letters without a coin: {missing}")

    @classmethod
    def single(cls, params: CoinParams, name: str = "C") -> "CoinSequence":
        """One-coin sequence repeating the same operator every step."""
        return cls({name: params}, name)

    def letter_at(self, step: int) -> str:
        """Coin letter applied on step ``step + 1`` (0-based schedule index)."""
        return self.pattern[step % len(self.pattern)]


def is_unitary(matrix: np.ndarray, tol: float = DEFAULT_UNITARY_TOL) -> bool:
    """True when matrix @ matrix^dagger = I within max-abs entry tolerance."""
    matrix = np.asarray(matrix)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        return False
    eye = np.eye(matrix.shape[0])
    return bool(np.max(np.abs(matrix @ matrix.conj().T - eye)) < tol)


def build_coin(params: CoinParams) -> np.ndarray:
    """Dense 2x2 coin unitary for the given parameters.

    Row layout: [sqrt(rho), sqrt(1-rho) e^{i alpha};
                 sqrt(1-rho) e^{i beta}, -sqrt(rho) e^{i (alpha+beta)}].
    """
    r, a, b = params.rho, params.alpha, params.beta
    sr = math.sqrt(r)
    st = math.sqrt(1.0 - r)
    return np.array(
        [
            [sr, st * cmath.exp(1j * a)],
            [st * cmath.exp(1j * b), -sr * cmath.exp(1j * (a + b))],
        ],
        dtype=np.complex128,
    )


def build_shift(k: int) -> np.ndarray:
    """Coin-conditioned cyclic shift: |i>|s> -> |(i + 2s - 1) mod k>|s>."""
    if k < 1:
        raise InvalidSize(f"cycle size must be >= 1, got {k}")
    shift = np.zeros((2 * k, 2 * k), dtype=np.complex128)
    for i in range(k):
        for s in (0, 1):
            shift[2 * ((i + 2 * s - 1) % k) + s, 2 * i + s] = 1.0
    return shift


def build_walk_unitary(k: int, params: CoinParams) -> np.ndarray:
    """One-step walk operator: shift after a position-independent coin toss."""
    return build_shift(k) @ np.kron(np.eye(k), build_coin(params))


def circulant_blocks(
    matrix: np.ndarray, k: int, tol: float = DEFAULT_UNITARY_TOL
) -> list[np.ndarray]:
    """Defining 2x2 blocks of a block-circulant matrix, one per cyclic offset.

    Block (m, j) of the input must equal ``blocks[(j - m) mod k]`` for every
    block row m and block column j; otherwise NotBlockCirculant is raised.
    For a walk unitary only offsets 1 and k-1 are populated (offset 1 holds
    the top coin row, offset k-1 the bottom one).
    """
    matrix = np.asarray(matrix)
    if k < 1:
        raise InvalidSize(f"cycle size must be >= 1, got {k}")
    if matrix.shape != (2 * k, 2 * k):
        raise DimensionMismatch(
            f"expected a {2 * k}x{2 * k} matrix for k={k}, got {matrix.shape}"
        )
    blocks = [matrix[0:2, 2 * o : 2 * o + 2].copy() for o in range(k)]
    for m in range(k):
        for j in range(k):
            expected = blocks[(j - m) % k]
            got = matrix[2 * m : 2 * m + 2, 2 * j : 2 * j + 2]
            err = float(np.max(np.abs(got - expected)))
            if err > tol:
                raise NotBlockCirculant(
                    f"block ({m}, {j}) deviates from offset block by {err:.3e}"
                )
    return blocks


def step(state: WalkerState, unitary: np.ndarray) -> WalkerState:
    """Apply one operator to the state."""
    unitary = np.asarray(unitary)
    if unitary.shape != (2 * state.k, 2 * state.k):
        raise DimensionMismatch(
            f"operator shape {unitary.shape} does not match state dimension "
            f"{2 * state.k}"
        )
    return WalkerState(state.k, unitary @ state.amplitudes)


def sequence_unitaries(seq: CoinSequence, k: int) -> dict[str, np.ndarray]:
    """Walk unitary per named coin of the sequence."""
    return {name: build_walk_unitary(k, params) for name, params in seq.coins.items()}


def evolve_sequence(
    initial: WalkerState, seq: CoinSequence, steps: int
) -> list[WalkerState]:
    """Trajectory [psi(0), psi(1), ..., psi(steps)] under the repeating schedule."""
    if steps < 0:
        raise InvalidParams(f"steps must be >= 0, got {steps}")
    unitaries = sequence_unitaries(seq, initial.k)
    trajectory = [initial]
    state = initial
    for t in range(steps):
        state = step(state, unitaries[seq.letter_at(t)])
        trajectory.append(state)
    return trajectory


def site_probability(state: WalkerState, site: int) -> float:
    """Probability of finding the walker at a site, coin traced out."""
    if not 0 <= site < state.k:
        raise IndexOutOfRange(f"site {site} outside 0..{state.k - 1}")
    a0 = state.amplitudes[2 * site]
    a1 = state.amplitudes[2 * site + 1]
    return float(abs(a0) ** 2 + abs(a1) ** 2)


def compose_sequence(seq: CoinSequence, k: int) -> np.ndarray:
    """Operator for one pass through the pattern.

    The temporally first letter is the rightmost factor, so applying the
    result once equals stepping through the whole pattern.
    """
    unitaries = sequence_unitaries(seq, k)
    composed = np.eye(2 * k, dtype=np.complex128)
    for letter in seq.pattern:
        composed = unitaries[letter] @ composed
    return composed
