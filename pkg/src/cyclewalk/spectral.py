"""Spectral analysis of cycle walks: Fourier block diagonalization, analytic
block eigenvalues, rational phase recovery, and minimal-period search.

A walk unitary on a k-cycle is block circulant, so conjugating by
``kron(F_k, I_2)`` (F_k the symmetric discrete Fourier matrix) collapses it
to k independent 2x2 blocks. A walk is periodic exactly when every
eigenvalue phase is a rational multiple of 2*pi; the minimal period is the
lcm of the reduced denominators. Period searches here always run two
independent routes, iterated matrix powers and rational phase recovery, and
refuse to answer if the routes disagree.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .errors import (
    IndexOutOfRange,
    InvalidParams,
    InvalidSize,
    MethodDisagreement,
    NotBlockCirculant,
    NotUnitModulus,
)
from .walk import (
    CoinParams,
    CoinSequence,
    compose_sequence,
    is_unitary,
    sequence_unitaries,
)

DEFAULT_IDENTITY_TOL = 1e-9
DEFAULT_N_MAX = 1000
DEFAULT_Q_MAX = 4096
DEFAULT_PHASE_TOL = 1e-9

_OFF_BLOCK_TOL = 1e-12


@dataclass(frozen=True)
class SpectralBlock:
    """One 2x2 diagonal block of the Fourier-rotated walk operator."""

    l: int
    block: np.ndarray
    eigenvalues: tuple[complex, complex]


@dataclass(frozen=True)
class PhaseRational:
    """Reduced fraction m/n approximating a unit-circle phase over 2*pi."""

    m: int
    n: int
    residual: float


@dataclass(frozen=True)
class PeriodReport:
    """Outcome of a periodicity search.

    ``period`` counts coin steps and is present iff the verdict is periodic.
    ``method`` records which routes support the verdict ("both" whenever the
    spectral cross-check applies).
    """

    verdict: str
    period: Optional[int]
    method: str
    n_max: int
    tolerance: float

    @property
    def is_periodic(self) -> bool:
        return self.verdict == "periodic"

    def to_dict(self) -> dict:
        return asdict(self)


def fourier_matrix(dim: int) -> np.ndarray:
    """Symmetric unitary Fourier matrix with entries e^{2 pi i mn/dim}/sqrt(dim)."""
    if dim < 1:
        raise InvalidSize(f"dimension must be >= 1, got {dim}")
    grid = np.outer(np.arange(dim), np.arange(dim))
    return np.exp(2j * np.pi * grid / dim) / math.sqrt(dim)


def block_diagonalize(matrix: np.ndarray, k: int) -> list[SpectralBlock]:
    """Rotate a block-circulant operator into its k independent 2x2 blocks.

    Conjugates by kron(F_k, I_2) and checks that everything off the block
    diagonal is annihilated; leakage above 1e-12 raises NotBlockCirculant.
    """
    matrix = np.asarray(matrix, dtype=np.complex128)
    if k < 1:
        raise InvalidSize(f"cycle size must be >= 1, got {k}")
    if matrix.shape != (2 * k, 2 * k):
        raise InvalidSize(
            f"expected a {2 * k}x{2 * k} matrix for k={k}, got {matrix.shape}"
        )
    fourier = np.kron(fourier_matrix(k), np.eye(2))
    rotated = fourier @ matrix @ fourier.conj().T
    mask = np.ones_like(rotated, dtype=bool)
    for l in range(k):
        mask[2 * l : 2 * l + 2, 2 * l : 2 * l + 2] = False
    leakage = float(np.max(np.abs(rotated[mask]))) if k > 1 else 0.0
    if leakage > _OFF_BLOCK_TOL:
        raise NotBlockCirculant(
            f"off-block leakage {leakage:.3e} exceeds {_OFF_BLOCK_TOL}"
        )
    blocks = []
    for l in range(k):
        sub = rotated[2 * l : 2 * l + 2, 2 * l : 2 * l + 2].copy()
        ev = np.linalg.eigvals(sub)
        blocks.append(SpectralBlock(l, sub, (complex(ev[0]), complex(ev[1]))))
    return blocks


def analytic_block_eigenvalues(
    k: int, l: int, params: CoinParams
) -> tuple[complex, complex]:
    """Closed-form eigenvalue pair of Fourier block ``l`` of a walk unitary.

    With delta = alpha + beta and w = 2*pi*l/k the pair is

        (1/2) e^{-i w} [ (1 - e^{i(2w + delta)}) sqrt(rho)
                         +/- 2 sqrt(e^{i(2w + delta)} (1 - rho sin^2(w + delta/2))) ]

    which lands on the unit circle for any valid parameters.
    """
    if not 0 <= l < k:
        raise IndexOutOfRange(f"block index {l} outside 0..{k - 1}")
    delta = params.alpha + params.beta
    w = 2.0 * math.pi * l / k
    phase = cmath.exp(1j * (2.0 * w + delta))
    trace_part = (1.0 - phase) * math.sqrt(params.rho)
    half_angle = w + delta / 2.0
    radical = 2.0 * cmath.sqrt(phase * (1.0 - params.rho * math.sin(half_angle) ** 2))
    front = 0.5 * cmath.exp(-1j * w)
    return (front * (trace_part + radical), front * (trace_part - radical))


def phase_to_rational(
    value: complex,
    q_max: int = DEFAULT_Q_MAX,
    tol: float = DEFAULT_PHASE_TOL,
) -> Optional[PhaseRational]:
    """Recover the reduced fraction m/n with value ~ e^{2 pi i m/n}, if any.

    Searches continued-fraction convergents (Fraction.limit_denominator) for
    a denominator at most ``q_max`` whose phase matches within ``tol`` of a
    full turn. Returns None when no such fraction exists, which is the
    signature of a chaotic eigenvalue.
    """
    if q_max < 1:
        raise InvalidParams(f"q_max must be >= 1, got {q_max}")
    modulus = abs(complex(value))
    if abs(modulus - 1.0) > 1e-9:
        raise NotUnitModulus(f"|value| = {modulus!r} is not 1 within 1e-9")
    turns = (cmath.phase(complex(value)) / (2.0 * math.pi)) % 1.0
    approx = Fraction(turns).limit_denominator(q_max)
    residual = abs(turns - float(approx))
    if residual >= tol:
        return None
    return PhaseRational(approx.numerator % approx.denominator, approx.denominator, residual)


def _brute_force_period(
    unitary: np.ndarray, n_max: int, tol: float
) -> Optional[int]:
    """Smallest n <= n_max with max|U^n - I| < tol, by iterated multiplication."""
    dim = unitary.shape[0]
    eye = np.eye(dim)
    power = np.eye(dim, dtype=np.complex128)
    for n in range(1, n_max + 1):
        power = unitary @ power
        if float(np.max(np.abs(power - eye))) < tol:
            return n
    return None


def _rational_spectrum_period(
    unitary: np.ndarray, n_max: int, q_max: int, phase_tol: float
) -> Optional[int]:
    """Period from rational phase recovery: lcm of denominators, capped at n_max."""
    denominators = []
    for ev in np.linalg.eigvals(unitary):
        rational = phase_to_rational(ev, q_max=q_max, tol=phase_tol)
        if rational is None:
            return None
        denominators.append(rational.n)
    period = math.lcm(*denominators)
    return period if period <= n_max else None


def min_period(
    unitary: np.ndarray,
    n_max: int = DEFAULT_N_MAX,
    tol: float = DEFAULT_IDENTITY_TOL,
    *,
    q_max: int = DEFAULT_Q_MAX,
    phase_tol: float = DEFAULT_PHASE_TOL,
) -> PeriodReport:
    """Minimal N <= n_max with U^N = I, or a chaotic verdict.

    Runs both iterated powers and rational phase recovery; the two must
    agree or MethodDisagreement is raised. The identity test is exact
    identity, not identity up to a global phase.
    """
    unitary = np.asarray(unitary, dtype=np.complex128)
    if not is_unitary(unitary, tol=1e-9):
        raise InvalidParams("min_period requires a unitary matrix")
    if n_max < 1:
        raise InvalidParams(f"n_max must be >= 1, got {n_max}")
    brute = _brute_force_period(unitary, n_max, tol)
    spectral = _rational_spectrum_period(unitary, n_max, q_max, phase_tol)
    if brute != spectral:
        raise MethodDisagreement(
            f"iterated powers found period {brute} but rational phase "
            f"recovery found {spectral} (n_max={n_max})"
        )
    if brute is None:
        return PeriodReport("chaotic", None, "both", n_max, tol)
    return PeriodReport("periodic", brute, "both", n_max, tol)


def sequence_min_period(
    seq: CoinSequence,
    k: int,
    n_max: int = DEFAULT_N_MAX,
    tol: float = DEFAULT_IDENTITY_TOL,
    *,
    q_max: int = DEFAULT_Q_MAX,
    phase_tol: float = DEFAULT_PHASE_TOL,
) -> PeriodReport:
    """Smallest step count at which the accumulated schedule operator is I.

    The accumulated product is checked after every coin step, so recurrences
    inside a pattern repetition are found too. Whenever the answer lands on
    a whole number of pattern passes it is cross-checked against rational
    phase recovery on the one-pass operator; disagreement raises.
    """
    unitaries = sequence_unitaries(seq, k)
    pattern_len = len(seq.pattern)
    eye = np.eye(2 * k)
    accumulated = np.eye(2 * k, dtype=np.complex128)
    brute = None
    for t in range(1, n_max + 1):
        accumulated = unitaries[seq.letter_at(t - 1)] @ accumulated
        if float(np.max(np.abs(accumulated - eye))) < tol:
            brute = t
            break

    composed = compose_sequence(seq, k)
    spectral_passes = _rational_spectrum_period(
        composed, max(n_max // pattern_len, 1), q_max, phase_tol
    )
    spectral = None if spectral_passes is None else spectral_passes * pattern_len
    if spectral is not None and spectral > n_max:
        spectral = None

    if brute is not None and brute % pattern_len != 0:
        # Recurrence mid-pattern; the one-pass operator cannot see it.
        return PeriodReport("periodic", brute, "brute-force", n_max, tol)
    if brute != spectral:
        raise MethodDisagreement(
            f"accumulated-operator search found period {brute} but rational "
            f"phase recovery on the pattern operator implies {spectral}"
        )
    if brute is None:
        return PeriodReport("chaotic", None, "both", n_max, tol)
    return PeriodReport("periodic", brute, "both", n_max, tol)
