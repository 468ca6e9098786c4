"""Conditions under which deterministic schedules of chaotic coins turn
periodic.

Matching the per-block eigenvalue half-sums of a two-coin schedule against
those of a single reference coin (all phase angles equal) reduces to small
algebraic systems in the rho parameters. For the alternating schedule AB the
system forces rho1 = rho2 = rho, so nothing new appears. For AABB it has the
closed-form solution pair

    rho_{1,2} = 3 rho - 4 rho^2 +/- 2 sqrt(2) sqrt(rho^2 (1 - 3 rho + 2 rho^2))

valid for rho = 0 and 1/3 <= rho <= 1/2. Outside that window the pair stops
solving the system: the discriminant factor (1 - rho)(1 - 2 rho) goes
negative for 1/2 < rho < 1, and below 1/3 the squaring step used to derive
the closed form flips the sign of the cross term, so the candidate pair
fails both the written equations and the underlying per-block eigenvalue
matching (checked numerically). Inside the window the roots lie in [0, 1],
multiply to rho^2, and generically give two individually chaotic coins
whose AABB schedule is periodic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import IndexOutOfRange, OutOfDomain, OutOfRange, RootOutOfRange
from .spectral import PeriodReport, block_diagonalize, sequence_min_period
from .walk import CoinParams, CoinSequence, compose_sequence

_ROOT_CLAMP = 1e-12


@dataclass(frozen=True)
class MatchResidual:
    """Absolute left/right differences of the matching equations."""

    values: tuple[float, ...]

    def __iter__(self) -> Iterator[float]:
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    @property
    def worst(self) -> float:
        return max(self.values)


@dataclass(frozen=True)
class ParrondoSolution:
    """One sign branch of the AABB matching system."""

    rho1: float
    rho2: float
    rho: float
    branch: str
    degenerate: bool


def block_half_trace(seq: CoinSequence, k: int, l: int) -> complex:
    """Half the trace of Fourier block ``l`` of the one-pass schedule operator.

    Equals the average of the block's two eigenvalues, the quantity matched
    between candidate schedules and a periodic reference.
    """
    if not 0 <= l < k:
        raise IndexOutOfRange(f"block index {l} outside 0..{k - 1}")
    blocks = block_diagonalize(compose_sequence(seq, k), k)
    return complex(np.trace(blocks[l].block)) / 2.0


def _check_unit_interval(**values: float) -> None:
    for name, value in values.items():
        if not 0.0 <= value <= 1.0:
            raise OutOfRange(f"{name} must lie in [0, 1], got {value}")


def ab_residual(rho1: float, rho2: float, rho: float) -> MatchResidual:
    """Residuals of the two AB matching equations.

    The equations are rho1*rho2 = rho^2 and
    sqrt(1-rho1)*sqrt(1-rho2) = 1-rho; their only simultaneous zero is the
    trivial rho1 = rho2 = rho.
    """
    _check_unit_interval(rho1=rho1, rho2=rho2, rho=rho)
    first = abs(rho1 * rho2 - rho**2)
    second = abs(math.sqrt(1.0 - rho1) * math.sqrt(1.0 - rho2) - (1.0 - rho))
    return MatchResidual((first, second))


def aabb_residuals(rho1: float, rho2: float, rho: float) -> MatchResidual:
    """Residuals of the three AABB matching equations.

    Only two equations are independent: the third (rho1*rho2 = rho^2) is the
    difference of the first two, so its residual never exceeds their sum.
    """
    _check_unit_interval(rho1=rho1, rho2=rho2, rho=rho)
    cross = 2.0 * math.sqrt((1.0 - rho1) * (1.0 - rho2) * rho1 * rho2)
    first = abs(rho1 + rho2 - 2.0 * rho1 * rho2 + cross - (4.0 * rho - 4.0 * rho**2))
    second = abs(rho1 + rho2 - rho1 * rho2 + cross - (4.0 * rho - 3.0 * rho**2))
    third = abs(rho1 * rho2 - rho**2)
    return MatchResidual((first, second, third))


def solve_aabb(rho: float) -> tuple[ParrondoSolution, ParrondoSolution]:
    """Both sign branches of the closed-form AABB solution for a reference rho.

    Raises OutOfDomain outside rho = 0 or 1/3 <= rho <= 1/2: above 1/2 the
    discriminant rho^2 (1-rho)(1-2 rho) is negative, and in (0, 1/3) the
    closed form is a squaring artifact whose pair no longer satisfies the
    matching system. Raises RootOutOfRange when a root escapes [0, 1]
    (for example rho = 1, where both roots are -1). The two returned
    solutions carry the same root pair with the plus branch assigned to
    rho1 first.
    """
    _check_unit_interval(rho=rho)
    discriminant = rho**2 * (1.0 - 3.0 * rho + 2.0 * rho**2)
    if discriminant < 0.0:
        raise OutOfDomain(
            f"rho={rho} is out of domain: discriminant "
            f"rho^2(1-rho)(1-2rho) = {discriminant:.3e} < 0"
        )
    if 0.0 < rho < 1.0 / 3.0:
        # The pre-squared matching equations need 3*rho - 1 >= 0; below that
        # the candidate pair solves only the sign-flipped system.
        raise OutOfDomain(
            f"rho={rho} is out of domain: the closed-form pair satisfies the "
            "matching system only for rho = 0 or 1/3 <= rho <= 1/2"
        )
    base = 3.0 * rho - 4.0 * rho**2
    offset = 2.0 * math.sqrt(2.0) * math.sqrt(discriminant)
    roots = []
    for raw in (base + offset, base - offset):
        if not -_ROOT_CLAMP <= raw <= 1.0 + _ROOT_CLAMP:
            raise RootOutOfRange(f"root {raw} for rho={rho} escapes [0, 1]")
        roots.append(min(max(raw, 0.0), 1.0))
    plus, minus = roots
    degenerate = offset <= _ROOT_CLAMP
    return (
        ParrondoSolution(plus, minus, rho, "plus", degenerate),
        ParrondoSolution(minus, plus, rho, "minus", degenerate),
    )


def classify_strategy(
    seq: CoinSequence, k: int, n_max: int = 1000, tol: float = 1e-9
) -> tuple[str, PeriodReport]:
    """Label a schedule ordered or chaotic, with the underlying period report."""
    report = sequence_min_period(seq, k, n_max=n_max, tol=tol)
    return ("ordered" if report.is_periodic else "chaotic", report)


def sequence_match_residual(
    seq: CoinSequence, k: int, reference: CoinParams
) -> np.ndarray:
    """Per-block half-trace mismatch between a schedule and a reference coin.

    Compares the schedule's one-pass operator against the reference coin
    repeated for the same number of steps. A schedule can only mimic the
    reference's periodicity if every entry is zero; useful for grid searches
    over patterns (ABB, ABBB, ...) that have no known closed form.
    """
    ref_seq = CoinSequence({"C": reference}, "C" * len(seq.pattern))
    return np.array(
        [
            abs(block_half_trace(seq, k, l) - block_half_trace(ref_seq, k, l))
            for l in range(k)
        ]
    )
