"""State-overlap distance and Lyapunov exponent for walk schedules.

The exponent is -log2 |<psi(t)|psi(t0)>| / (t - t0): zero whenever the
accumulated operator over the interval is the identity, positive when the
walker never fully returns. This classifies schedules independently of the
return-probability criterion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DegenerateInterval, DimensionMismatch
from .walk import CoinSequence, WalkerState, sequence_unitaries, step


@dataclass(frozen=True)
class LyapunovReport:
    """Exponent estimate over one time interval.

    ``exponent`` is in bits per coin step. ``distance`` is the overlap
    distance |2 - 2<psi(t)|psi(t0)>| between the endpoint states; it is 0
    exactly at recurrences and can reach 4 when the overlap is -1.
    """

    exponent: float
    t0: int
    t: int
    distance: float
    label: Optional[str] = None


def distance(a: WalkerState, b: WalkerState) -> float:
    """Overlap distance |2 - 2<a|b>| between two normalized states.

    Zero iff the states are identical; 2 for orthogonal states. The modulus
    is taken of the full complex expression.
    """
    if a.k != b.k:
        raise DimensionMismatch(f"states live on different cycles: {a.k} vs {b.k}")
    overlap = complex(np.vdot(a.amplitudes, b.amplitudes))
    return abs(2.0 - 2.0 * overlap)


def lyapunov_exponent(
    seq: CoinSequence,
    initial: WalkerState,
    t0: int = 0,
    t: int = 20,
    label: Optional[str] = None,
) -> LyapunovReport:
    """Exponent -log2 |<psi(t)|psi(t0)>| / (t - t0) along one trajectory.

    The schedule's letter index keeps running across t0, so psi(t0) and
    psi(t) sit on the same trajectory started from ``initial``.
    """
    if t0 < 0:
        raise DegenerateInterval(f"t0 must be >= 0, got {t0}")
    if t <= t0:
        raise DegenerateInterval(f"need t > t0, got t={t}, t0={t0}")
    unitaries = sequence_unitaries(seq, initial.k)
    state = initial
    state_t0 = initial
    for current in range(t):
        if current == t0:
            state_t0 = state
        state = step(state, unitaries[seq.letter_at(current)])
    overlap = complex(np.vdot(state.amplitudes, state_t0.amplitudes))
    modulus = abs(overlap)
    exponent = math.inf if modulus == 0.0 else -math.log2(modulus) / (t - t0)
    return LyapunovReport(
        exponent=exponent,
        t0=t0,
        t=t,
        distance=abs(2.0 - 2.0 * overlap),
        label=label if label is not None else seq.pattern,
    )
