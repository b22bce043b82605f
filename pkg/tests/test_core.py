"""Level-vector arithmetic and channel-configuration tests."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from macwiretap.core import (
    LevelVector,
    Regime,
    normalize_config,
    pad_bottom,
    shift_down,
    transmit,
    xor_add,
)

bit_lists = st.lists(st.integers(min_value=0, max_value=1), min_size=0, max_size=16)


class TestLevelVector:
    def test_rejects_non_bits(self):
        with pytest.raises(ValueError):
            LevelVector([0, 2, 1])

    def test_level_indexing_from_top(self):
        v = LevelVector([1, 0, 1])
        assert v.level(1) == 1
        assert v.level(2) == 0
        assert v.level(3) == 1
        with pytest.raises(IndexError):
            v.level(0)
        with pytest.raises(IndexError):
            v.level(4)

    def test_int_round_trip(self):
        v = LevelVector([1, 0, 1, 1])
        assert v.as_int() == 0b1011
        assert LevelVector.from_int(0b1011, 4) == v
        assert LevelVector.from_int(0, 3) == LevelVector.zeros(3)

    def test_pad_bottom_keeps_top_levels(self):
        assert pad_bottom(LevelVector([1, 1]), 4) == LevelVector([1, 1, 0, 0])
        with pytest.raises(ValueError):
            pad_bottom(LevelVector([1, 1]), 1)


class TestShiftDown:
    def test_zero_shift_is_identity(self):
        assert shift_down(LevelVector([1, 0, 1]), 0) == LevelVector([1, 0, 1])

    def test_single_shift(self):
        assert shift_down(LevelVector([1, 0, 1]), 1) == LevelVector([0, 1, 0])

    def test_shift_past_length_annihilates(self):
        assert shift_down(LevelVector([1, 1]), 5) == LevelVector([0, 0])

    def test_negative_shift_rejected(self):
        with pytest.raises(ValueError):
            shift_down(LevelVector([1]), -1)

    @given(bit_lists, st.integers(0, 20), st.integers(0, 20))
    def test_shift_composes_additively(self, bits, j, k):
        v = LevelVector(bits)
        assert shift_down(shift_down(v, j), k) == shift_down(v, j + k)


class TestXorAdd:
    def test_elementwise(self):
        assert xor_add(LevelVector([1, 0, 1]), LevelVector([1, 1, 0])) == LevelVector([0, 1, 1])

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            xor_add(LevelVector([1]), LevelVector([1, 0]))

    @given(bit_lists)
    def test_zero_is_identity(self, bits):
        v = LevelVector(bits)
        assert xor_add(v, LevelVector.zeros(len(v))) == v

    @given(bit_lists)
    def test_self_inverse(self, bits):
        v = LevelVector(bits)
        assert xor_add(v, v) == LevelVector.zeros(len(v))

    @given(bit_lists, bit_lists)
    def test_commutative(self, a_bits, b_bits):
        n = min(len(a_bits), len(b_bits))
        a, b = LevelVector(a_bits[:n]), LevelVector(b_bits[:n])
        assert xor_add(a, b) == xor_add(b, a)


class TestNormalizeConfig:
    def test_hand_evaluated_example(self):
        cfg = normalize_config(7, 6, 3, 3)
        assert (cfg.n1, cfg.n2, cfg.n_e, cfg.n_delta) == (7, 6, 3, 1)
        assert (cfg.q, cfg.n_c, cfg.n_p) == (7, 4, 3)
        assert cfg.regime is Regime.CASE1
        assert not cfg.swapped

    def test_equal_user_gains_are_singular(self):
        cfg = normalize_config(6, 6, 4, 4)
        assert cfg.regime is Regime.SINGULAR
        assert cfg.n_delta == 0

    def test_role_swap(self):
        cfg = normalize_config(5, 6, 3, 3)
        assert cfg.swapped
        assert (cfg.n1, cfg.n2) == (6, 5)
        assert (cfg.n11, cfg.n21) == (5, 6)  # raw gains preserved

    def test_asymmetric_eavesdropper_reduction(self):
        # the stronger-heard user's extra eavesdropper levels are unusable
        cfg = normalize_config(7, 6, 5, 3)
        assert cfg.n_e == 3
        assert cfg.q == 7
        cfg = normalize_config(7, 6, 3, 5)
        assert cfg.n_e == 3

    def test_q_is_max_of_raw_gains(self):
        assert normalize_config(2, 1, 9, 9).q == 9

    def test_case2_regime(self):
        assert normalize_config(6, 4, 5, 5).regime is Regime.CASE2

    def test_rejects_negative_and_non_integer(self):
        with pytest.raises(ValueError):
            normalize_config(-1, 0, 0, 0)
        with pytest.raises(ValueError):
            normalize_config(1.5, 0, 0, 0)

    @given(st.integers(0, 12), st.integers(0, 12), st.integers(0, 12), st.integers(0, 12))
    def test_idempotent(self, n11, n21, n22, n12):
        cfg = normalize_config(n11, n21, n22, n12)
        again = normalize_config(cfg.n1, cfg.n2, cfg.n_e, cfg.n_e)
        assert not again.swapped
        assert (again.n1, again.n2, again.n_e, again.n_delta) == (
            cfg.n1, cfg.n2, cfg.n_e, cfg.n_delta,
        )
        assert (again.n_c, again.n_p, again.regime) == (cfg.n_c, cfg.n_p, cfg.regime)

    @given(st.integers(0, 12), st.integers(0, 12), st.integers(0, 12), st.integers(0, 12))
    def test_derived_invariants(self, n11, n21, n22, n12):
        cfg = normalize_config(n11, n21, n22, n12)
        assert cfg.n1 >= cfg.n2
        assert cfg.q == max(n11, n21, n22, n12)
        assert cfg.n_c == cfg.n_e + cfg.n_delta
        assert cfg.n_p == max(cfg.n1 - cfg.n_c, 0)
        assert (cfg.regime is Regime.SINGULAR) == (cfg.n1 == cfg.n2)


def _random_inputs(cfg, rng):
    x1 = LevelVector(rng.getrandbits(1) for _ in range(cfg.span1))
    x2 = LevelVector(rng.getrandbits(1) for _ in range(cfg.span2))
    return x1, x2


class TestTransmit:
    def test_all_zero_inputs(self):
        cfg = normalize_config(3, 2, 2, 2)
        y1, y2 = transmit(cfg, LevelVector.zeros(cfg.span1), LevelVector.zeros(cfg.span2))
        assert y1 == LevelVector.zeros(cfg.q)
        assert y2 == LevelVector.zeros(cfg.q)

    def test_hand_evaluated_collision(self):
        # user 2's single bit lands on user 1's bottom receiver level and
        # cancels; at the eavesdropper the two top bits align and cancel.
        cfg = normalize_config(2, 1, 1, 1)
        y1, y2 = transmit(cfg, LevelVector([1, 1]), LevelVector([1]))
        assert y1 == LevelVector([1, 0])
        assert y2 == LevelVector([0, 0])

    def test_single_user_degeneration(self):
        cfg = normalize_config(4, 2, 2, 2)
        x1 = LevelVector([1, 0, 1, 1])
        y1, _ = transmit(cfg, x1, LevelVector.zeros(cfg.span2))
        assert y1 == shift_down(pad_bottom(x1, cfg.q), cfg.q - cfg.n1)

    def test_length_checks(self):
        cfg = normalize_config(3, 2, 2, 2)
        with pytest.raises(ValueError):
            transmit(cfg, LevelVector.zeros(2), LevelVector.zeros(cfg.span2))
        with pytest.raises(ValueError):
            transmit(cfg, LevelVector.zeros(cfg.span1), LevelVector.zeros(5))

    @given(
        st.integers(0, 8), st.integers(0, 8), st.integers(0, 8), st.integers(0, 8),
        st.randoms(use_true_random=False),
    )
    def test_linearity(self, n11, n21, n22, n12, rng):
        cfg = normalize_config(n11, n21, n22, n12)
        a1, a2 = _random_inputs(cfg, rng)
        b1, b2 = _random_inputs(cfg, rng)
        ya = transmit(cfg, a1, a2)
        yb = transmit(cfg, b1, b2)
        yab = transmit(cfg, xor_add(a1, b1), xor_add(a2, b2))
        assert yab == (xor_add(ya[0], yb[0]), xor_add(ya[1], yb[1]))

    @given(
        st.integers(0, 8), st.integers(0, 8), st.integers(0, 8), st.integers(0, 8),
        st.randoms(use_true_random=False),
    )
    def test_noise_floor_truncation(self, n11, n21, n22, n12, rng):
        cfg = normalize_config(n11, n21, n22, n12)
        x1, x2 = _random_inputs(cfg, rng)
        y1_solo, y2 = transmit(cfg, x1, LevelVector.zeros(cfg.span2))
        # user 1 contributes nothing above its shift at the receiver,
        # and nothing above the eavesdropper's shift there
        for i in range(1, cfg.q - cfg.n1 + 1):
            assert y1_solo.level(i) == 0
        for i in range(1, cfg.q - cfg.n_e + 1):
            assert y2.level(i) == 0
