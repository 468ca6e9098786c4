"""Built-in coin parameter sets.

The 3-cycle and 4-cycle instances pin the reference coins C at
rho = (5 - sqrt 5)/6 and (5 - sqrt 5)/8 (both give ten-step periodic walks)
and derive A and B from the AABB closed form at full double precision, so
identity checks hold to roundoff rather than to the six printed decimals.
A and B are individually chaotic; their AABB schedule is periodic.
"""

from __future__ import annotations

import math

from .errors import InvalidParams
from .parrondo import solve_aabb
from .walk import CoinParams

HADAMARD = CoinParams(0.5, 0.0, 0.0)

K3_ORDERED_RHO = (5.0 - math.sqrt(5.0)) / 6.0
K4_ORDERED_RHO = (5.0 - math.sqrt(5.0)) / 8.0

# k=3 labels the smaller root A (0.264734...); k=4 labels the larger root
# A (0.998489...). Kept as published so the B-driven protocol matches.
_K3_PLUS, _ = solve_aabb(K3_ORDERED_RHO)
_K4_PLUS, _ = solve_aabb(K4_ORDERED_RHO)

COIN_PRESETS: dict[str, CoinParams] = {
    "hadamard": HADAMARD,
    "k3-A": CoinParams(_K3_PLUS.rho2),
    "k3-B": CoinParams(_K3_PLUS.rho1),
    "k3-C": CoinParams(K3_ORDERED_RHO),
    "k4-A": CoinParams(_K4_PLUS.rho1),
    "k4-B": CoinParams(_K4_PLUS.rho2),
    "k4-C": CoinParams(K4_ORDERED_RHO),
}


def coin_preset(name: str) -> CoinParams:
    """Look up a named preset, raising with the available names on a miss."""
    try:
        return COIN_PRESETS[name]
    except KeyError:
        raise InvalidParams(
            f"unknown coin preset {name!r}; available: {sorted(COIN_PRESETS)}"
        ) from None


def instance_coins(k: int) -> dict[str, CoinParams]:
    """Letter table {A, B, C, H} for the built-in k-cycle instances."""
    if k not in (3, 4):
        raise InvalidParams(
            f"no built-in A/B/C coins for k={k}; define coins explicitly"
        )
    return {
        "A": COIN_PRESETS[f"k{k}-A"],
        "B": COIN_PRESETS[f"k{k}-B"],
        "C": COIN_PRESETS[f"k{k}-C"],
        "H": HADAMARD,
    }
