"""Encryption demo built from chaotic cycle walks.

Alice publishes |psi_PK> = B^2 |l>|s> using a chaotic walk operator B, so the
key looks scrambled while l stays hidden. Bob encodes a message m in 0..k-1
by rotating positions with T_m (which commutes with every walk operator on
the cycle). Alice decrypts with D = (AABB)^4 AA, built so that D B^2 equals
the identity because the matrix-ordered pattern operator M = A A B B
satisfies M^5 = I; the result is the basis state |l + m mod k>|s>, measured
projectively and unshifted by l.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    InvalidMessage,
    InvalidPosition,
    NotPositionEigenstate,
)
from .presets import instance_coins
from .walk import CoinParams, WalkerState, build_walk_unitary, site_probability

DEFAULT_MEASURE_TOL = 1e-6


@dataclass(frozen=True)
class ProtocolConfig:
    """Cycle size, the chaotic coin pair, and the pattern period p with
    (AABB)^p = I."""

    k: int
    coin_a: CoinParams
    coin_b: CoinParams
    pattern_period: int = 5

    @classmethod
    def for_cycle(cls, k: int) -> "ProtocolConfig":
        """Config from the built-in solved coin pair for k = 3 or 4."""
        coins = instance_coins(k)
        return cls(k=k, coin_a=coins["A"], coin_b=coins["B"])


@dataclass(frozen=True)
class PublicKey:
    """Scrambled initial state BB|l>|s> together with its provenance."""

    state: WalkerState
    k: int
    l: int
    generator: str


def message_shift(k: int, m: int) -> np.ndarray:
    """Position rotation T_m tensored with the coin identity."""
    if not 0 <= m < k:
        raise InvalidMessage(f"message must lie in 0..{k - 1}, got {m}")
    rotation = np.zeros((k, k))
    for i in range(k):
        rotation[(i + m) % k, i] = 1.0
    return np.kron(rotation, np.eye(2))


def gen_public_key(l: int, s: int, cfg: ProtocolConfig) -> PublicKey:
    """Two applications of the chaotic B walk to the secret basis state."""
    if not 0 <= l < cfg.k:
        raise InvalidPosition(f"position must lie in 0..{cfg.k - 1}, got {l}")
    if s not in (0, 1):
        raise InvalidPosition(f"coin basis state must be 0 or 1, got {s}")
    walk_b = build_walk_unitary(cfg.k, cfg.coin_b)
    state = WalkerState(cfg.k, walk_b @ walk_b @ WalkerState.basis(cfg.k, l, s).amplitudes)
    return PublicKey(state=state, k=cfg.k, l=l, generator="B^2")


def encrypt(pk: PublicKey, m: int) -> WalkerState:
    """Encode the message by rotating the public key's position register."""
    return WalkerState(pk.k, message_shift(pk.k, m) @ pk.state.amplitudes)


def decryption_operator(cfg: ProtocolConfig) -> np.ndarray:
    """D = M^(p-1) A A with M = A A B B in matrix order, so D B B = M^p = I."""
    walk_a = build_walk_unitary(cfg.k, cfg.coin_a)
    walk_b = build_walk_unitary(cfg.k, cfg.coin_b)
    pattern = walk_a @ walk_a @ walk_b @ walk_b
    return np.linalg.matrix_power(pattern, cfg.pattern_period - 1) @ walk_a @ walk_a


def decrypt(ct: WalkerState, cfg: ProtocolConfig) -> WalkerState:
    """Undo the key generation; the result is |l + m mod k>|s>."""
    operator = decryption_operator(cfg)
    if operator.shape != (2 * ct.k, 2 * ct.k):
        raise DimensionMismatch(
            f"ciphertext lives on a {ct.k}-cycle but the config is for k={cfg.k}"
        )
    return WalkerState(ct.k, operator @ ct.amplitudes)


def measure_position(state: WalkerState, tol: float = DEFAULT_MEASURE_TOL) -> int:
    """Site holding essentially all probability.

    Raises NotPositionEigenstate when no site exceeds 1 - tol, which signals
    protocol misuse (mismatched keys or a non-basis input).
    """
    for site in range(state.k):
        if site_probability(state, site) > 1.0 - tol:
            return site
    raise NotPositionEigenstate(
        f"no site carries probability above {1.0 - tol}; state is spread out"
    )


def recover_message(m_prime: int, l: int, k: int) -> int:
    """Undo the secret position offset: m = m' - l mod k."""
    if not 0 <= m_prime < k:
        raise InvalidPosition(f"measured site must lie in 0..{k - 1}, got {m_prime}")
    if not 0 <= l < k:
        raise InvalidPosition(f"position must lie in 0..{k - 1}, got {l}")
    return (m_prime - l) % k
