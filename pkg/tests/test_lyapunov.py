import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cyclewalk import (
    CoinParams,
    CoinSequence,
    DegenerateInterval,
    DimensionMismatch,
    WalkerState,
    build_walk_unitary,
    distance,
    instance_coins,
    lyapunov_exponent,
)


def overlap_exponent_oracle(k, params, t):
    """Independent route: overlap via a dense matrix power, not stepping."""
    power = np.linalg.matrix_power(build_walk_unitary(k, params), t)
    psi0 = WalkerState.basis(k, 0, 1).amplitudes
    return -math.log2(abs(np.vdot(power @ psi0, psi0))) / t


class TestDistance:
    def test_identical_states_zero(self):
        a = WalkerState.basis(3, 1, 0)
        assert distance(a, a) == 0.0

    def test_orthogonal_states_two(self):
        a = WalkerState.basis(3, 0, 0)
        b = WalkerState.basis(3, 1, 1)
        assert distance(a, b) == pytest.approx(2.0, abs=1e-15)

    def test_periodic_schedule_returns_to_zero_distance(self):
        seq = CoinSequence(instance_coins(3), "AABB")
        initial = WalkerState.basis(3, 0, 1)
        report = lyapunov_exponent(seq, initial, t0=0, t=20)
        assert report.distance < 1e-9

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            distance(WalkerState.basis(3, 0, 0), WalkerState.basis(4, 0, 0))


class TestLyapunovExponent:
    def test_periodic_schedule_zero_at_period(self):
        seq = CoinSequence(instance_coins(3), "AABB")
        initial = WalkerState.basis(3, 0, 1)
        report = lyapunov_exponent(seq, initial, t0=0, t=20)
        assert abs(report.exponent) < 1e-9
        assert report.label == "AABB"

    @pytest.mark.parametrize("t", [40, 60])
    def test_periodic_schedule_zero_at_period_multiples(self, t):
        seq = CoinSequence(instance_coins(3), "AABB")
        report = lyapunov_exponent(seq, WalkerState.basis(3, 0, 1), t0=0, t=t)
        assert abs(report.exponent) < 1e-9

    def test_chaotic_coins_match_matrix_power_oracle(self):
        # Frozen values computed from the dense-power oracle at t=20:
        # coin A (rho 0.264734) gives 0.08184, coin B (rho 0.801571) 0.03294.
        coins = instance_coins(3)
        for letter, frozen in (("A", 0.08183902047686388), ("B", 0.03294310426716829)):
            seq = CoinSequence(coins, letter)
            report = lyapunov_exponent(seq, WalkerState.basis(3, 0, 1), t0=0, t=20)
            oracle = overlap_exponent_oracle(3, coins[letter], 20)
            assert report.exponent == pytest.approx(oracle, abs=1e-12)
            assert report.exponent == pytest.approx(frozen, abs=1e-9)
            assert report.exponent > 0.0

    @pytest.mark.parametrize("letter", ["A", "B"])
    def test_chaotic_coins_positive_at_all_sampled_intervals(self, letter):
        seq = CoinSequence(instance_coins(3), letter)
        initial = WalkerState.basis(3, 0, 1)
        for t in range(4, 101, 4):
            report = lyapunov_exponent(seq, initial, t0=0, t=t)
            assert report.exponent > 0.0

    def test_nonzero_t0_uses_same_trajectory(self):
        seq = CoinSequence(instance_coins(3), "AABB")
        initial = WalkerState.basis(3, 0, 1)
        report = lyapunov_exponent(seq, initial, t0=20, t=40)
        assert abs(report.exponent) < 1e-9
        assert (report.t0, report.t) == (20, 40)

    def test_degenerate_interval_rejected(self):
        seq = CoinSequence.single(CoinParams(0.5))
        initial = WalkerState.basis(3, 0, 1)
        with pytest.raises(DegenerateInterval):
            lyapunov_exponent(seq, initial, t0=5, t=5)
        with pytest.raises(DegenerateInterval):
            lyapunov_exponent(seq, initial, t0=7, t=3)
        with pytest.raises(DegenerateInterval):
            lyapunov_exponent(seq, initial, t0=-1, t=3)

    @given(st.floats(0.0, 1.0), st.integers(min_value=1, max_value=40))
    @settings(max_examples=40)
    def test_exponent_never_meaningfully_negative(self, rho, t):
        # |overlap| <= 1 up to roundoff, so the exponent sits above -1e-9.
        seq = CoinSequence.single(CoinParams(rho))
        report = lyapunov_exponent(seq, WalkerState.basis(3, 0, 1), t0=0, t=t)
        assert report.exponent > -1e-9
