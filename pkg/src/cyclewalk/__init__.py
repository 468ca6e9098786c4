"""Coined quantum walks on k-cycle graphs.

Simulation of coined walks on cycles, periodic/chaotic classification via
brute-force powers and rational eigenphase recovery, closed-form solution of
the AABB chaos-combining conditions, Lyapunov exponents from state overlaps,
and a walk-based encryption demo.
"""

from .errors import (
    CycleWalkError,
    DegenerateInterval,
    DimensionMismatch,
    IndexOutOfRange,
    InvalidMessage,
    InvalidParams,
    InvalidPosition,
    InvalidSize,
    MethodDisagreement,
    NotBlockCirculant,
    NotPositionEigenstate,
    NotUnitModulus,
    OutOfDomain,
    OutOfRange,
    RootOutOfRange,
)
from .walk import (
    CoinParams,
    CoinSequence,
    WalkerState,
    build_coin,
    build_shift,
    build_walk_unitary,
    circulant_blocks,
    compose_sequence,
    evolve_sequence,
    is_unitary,
    site_probability,
    step,
)
from .spectral import (
    PeriodReport,
    PhaseRational,
    SpectralBlock,
    analytic_block_eigenvalues,
    block_diagonalize,
    fourier_matrix,
    min_period,
    phase_to_rational,
    sequence_min_period,
)
from .parrondo import (
    MatchResidual,
    ParrondoSolution,
    ab_residual,
    aabb_residuals,
    block_half_trace,
    classify_strategy,
    sequence_match_residual,
    solve_aabb,
)
from .lyapunov import LyapunovReport, distance, lyapunov_exponent
from .crypto import (
    ProtocolConfig,
    PublicKey,
    decrypt,
    decryption_operator,
    encrypt,
    gen_public_key,
    measure_position,
    message_shift,
    recover_message,
)
from .presets import COIN_PRESETS, HADAMARD, coin_preset, instance_coins

__version__ = "0.1.0"
