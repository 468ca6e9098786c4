import math

import numpy as np
import pytest

from cyclewalk import (
    InvalidMessage,
    InvalidPosition,
    NotPositionEigenstate,
    ProtocolConfig,
    WalkerState,
    build_walk_unitary,
    decrypt,
    decryption_operator,
    encrypt,
    gen_public_key,
    instance_coins,
    measure_position,
    message_shift,
    recover_message,
    site_probability,
)


@pytest.fixture(params=[3, 4])
def cfg(request):
    return ProtocolConfig.for_cycle(request.param)


class TestPublicKey:
    def test_normalized_for_all_inputs(self, cfg):
        for l in range(cfg.k):
            for s in (0, 1):
                pk = gen_public_key(l, s, cfg)
                assert abs(pk.state.norm() - 1.0) < 1e-12
                assert pk.generator == "B^2"

    def test_never_a_position_eigenstate(self, cfg):
        # The chaotic B walk spreads every basis state within two steps.
        for l in range(cfg.k):
            for s in (0, 1):
                pk = gen_public_key(l, s, cfg)
                assert max(
                    site_probability(pk.state, site) for site in range(cfg.k)
                ) < 1.0 - 1e-6

    def test_rejects_bad_position_or_coin(self):
        cfg = ProtocolConfig.for_cycle(3)
        with pytest.raises(InvalidPosition):
            gen_public_key(3, 0, cfg)
        with pytest.raises(InvalidPosition):
            gen_public_key(0, 2, cfg)


class TestEncrypt:
    def test_zero_message_is_identity(self):
        cfg = ProtocolConfig.for_cycle(3)
        pk = gen_public_key(1, 1, cfg)
        ct = encrypt(pk, 0)
        np.testing.assert_array_equal(ct.amplitudes, pk.state.amplitudes)

    def test_rotates_position_eigenstate(self):
        shifted = message_shift(3, 1) @ WalkerState.basis(3, 2, 1).amplitudes
        np.testing.assert_array_equal(shifted, WalkerState.basis(3, 0, 1).amplitudes)

    def test_rejects_bad_message(self):
        cfg = ProtocolConfig.for_cycle(3)
        pk = gen_public_key(0, 0, cfg)
        with pytest.raises(InvalidMessage):
            encrypt(pk, 3)
        with pytest.raises(InvalidMessage):
            message_shift(3, -1)

    def test_message_shift_commutes_with_walk_operators(self, cfg):
        coins = instance_coins(cfg.k)
        for letter in ("A", "B", "C"):
            walk = build_walk_unitary(cfg.k, coins[letter])
            for m in range(cfg.k):
                rotation = message_shift(cfg.k, m)
                commutator = rotation @ walk - walk @ rotation
                assert np.max(np.abs(commutator)) < 1e-12


class TestDecrypt:
    def test_decryption_operator_inverts_key_generation(self, cfg):
        walk_b = build_walk_unitary(cfg.k, cfg.coin_b)
        product = decryption_operator(cfg) @ walk_b @ walk_b
        assert np.max(np.abs(product - np.eye(2 * cfg.k))) < 1e-9

    def test_plain_roundtrip_message_zero(self):
        cfg = ProtocolConfig.for_cycle(3)
        pk = gen_public_key(0, 1, cfg)
        plain = decrypt(encrypt(pk, 0), cfg)
        np.testing.assert_allclose(
            plain.amplitudes, WalkerState.basis(3, 0, 1).amplitudes, atol=1e-9
        )

    def test_roundtrip_lands_on_shifted_site(self):
        cfg = ProtocolConfig.for_cycle(3)
        pk = gen_public_key(1, 1, cfg)
        plain = decrypt(encrypt(pk, 2), cfg)
        assert site_probability(plain, 0) > 1.0 - 1e-9  # (1 + 2) mod 3


class TestMeasurement:
    def test_basis_state_site(self):
        assert measure_position(WalkerState.basis(3, 2, 0)) == 2

    def test_decrypted_ciphertext_site(self):
        cfg = ProtocolConfig.for_cycle(3)
        plain = decrypt(encrypt(gen_public_key(1, 0, cfg), 1), cfg)
        assert measure_position(plain) == 2

    def test_superposition_rejected(self):
        amp = np.full(6, 1.0 / math.sqrt(6.0), dtype=complex)
        with pytest.raises(NotPositionEigenstate):
            measure_position(WalkerState(3, amp))


class TestRecoverMessage:
    @pytest.mark.parametrize(
        "m_prime,l,k,expected", [(0, 1, 3, 2), (2, 2, 3, 0), (3, 0, 4, 3)]
    )
    def test_examples(self, m_prime, l, k, expected):
        assert recover_message(m_prime, l, k) == expected

    def test_rejects_out_of_range(self):
        with pytest.raises(InvalidPosition):
            recover_message(3, 0, 3)
        with pytest.raises(InvalidPosition):
            recover_message(0, 4, 4)


class TestEndToEnd:
    def test_exhaustive_roundtrip(self, cfg):
        for m in range(cfg.k):
            for l in range(cfg.k):
                for s in (0, 1):
                    pk = gen_public_key(l, s, cfg)
                    plain = decrypt(encrypt(pk, m), cfg)
                    assert recover_message(measure_position(plain), l, cfg.k) == m
                    # The coin register comes back intact too.
                    expected = WalkerState.basis(cfg.k, (l + m) % cfg.k, s)
                    assert (
                        np.max(np.abs(plain.amplitudes - expected.amplitudes)) < 1e-9
                    )
