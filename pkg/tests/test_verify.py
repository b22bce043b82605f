"""Enumeration oracle tests, cross-checked by a naive re-implementation."""

import itertools
from fractions import Fraction

import pytest

from macwiretap.core import normalize_config, transmit
from macwiretap.scheme import AllocationPlan, LevelRole, build_allocation, decode, encode
from macwiretap.verify import (
    EnumerationBudgetError,
    equivocation,
    error_probability,
    leakage,
    verify_config,
)


def naive_equivocation_and_error(plan):
    """Slow, direct evaluation of H(W | Y2) and the decoder error rate.

    Iterates states in plain binary order, evaluates the channel per
    state and computes entropies from Fraction-valued distributions.
    Exactness relies on every probability being dyadic, so log2 terms
    are taken on integer counts only.
    """
    m = plan.m1 + plan.m2
    j = plan.j1 + plan.j2
    joint = {}
    marginal = {}
    failures = 0
    total = 0
    for w1 in itertools.product((0, 1), repeat=plan.m1):
        for w2 in itertools.product((0, 1), repeat=plan.m2):
            for jam in itertools.product((0, 1), repeat=j):
                x1, x2 = encode(plan, w1, w2, jam)
                y1, y2 = transmit(plan.cfg, x1, x2)
                key = (w1, w2, y2.bits)
                joint[key] = joint.get(key, 0) + 1
                marginal[y2.bits] = marginal.get(y2.bits, 0) + 1
                failures += decode(plan, y1) != (w1, w2)
                total += 1

    def entropy(counts):
        h = Fraction(0)
        for c in counts:
            assert c & (c - 1) == 0, "non-dyadic count in the naive oracle"
            h += Fraction(c, total) * (total.bit_length() - c.bit_length())
        return h

    h_joint = entropy(joint.values())
    h_marg = entropy(marginal.values())
    return h_joint - h_marg, Fraction(failures, total)


def drop_one_jam(plan, which):
    """Plan with the ``which``-th jamming level replaced by silence."""
    seen = 0
    roles1, roles2 = list(plan.roles1), list(plan.roles2)
    for roles in (roles1, roles2):
        for i, role in enumerate(roles):
            if role in (LevelRole.JAM1, LevelRole.JAM2):
                if seen == which:
                    roles[i] = LevelRole.UNUSED
                    return AllocationPlan(plan.cfg, tuple(roles1), tuple(roles2))
                seen += 1
    raise IndexError(which)


class TestEquivocation:
    def test_perfect_secrecy_example(self):
        plan = build_allocation(normalize_config(6, 3, 3, 3))
        assert equivocation(plan) == 3 == plan.m1 + plan.m2
        assert leakage(plan) == 0

    def test_zero_message_plan(self):
        cfg = normalize_config(3, 2, 2, 2)
        empty = AllocationPlan(
            cfg,
            (LevelRole.UNUSED,) * cfg.span1,
            (LevelRole.UNUSED,) * cfg.span2,
        )
        assert equivocation(empty) == 0
        assert leakage(empty) == 0

    def test_broken_plan_leaks(self):
        plan = build_allocation(normalize_config(6, 3, 3, 3))
        assert leakage(drop_one_jam(plan, 0)) > 0

    def test_budget_error_names_requirement(self):
        plan = build_allocation(normalize_config(7, 6, 3, 3))
        with pytest.raises(EnumerationBudgetError) as err:
            equivocation(plan, budget_bits=4)
        assert err.value.required_bits == 8
        assert "8" in str(err.value)

    @pytest.mark.parametrize("gains", [(4, 3, 2, 2), (3, 1, 2, 2), (5, 2, 4, 4), (4, 2, 5, 5)])
    def test_matches_naive_oracle(self, gains):
        plan = build_allocation(normalize_config(*gains))
        naive_h, naive_err = naive_equivocation_and_error(plan)
        assert equivocation(plan) == naive_h
        assert error_probability(plan) == naive_err

    def test_matches_naive_oracle_on_broken_plan(self):
        plan = drop_one_jam(build_allocation(normalize_config(4, 3, 2, 2)), 0)
        naive_h, naive_err = naive_equivocation_and_error(plan)
        assert equivocation(plan) == naive_h
        assert error_probability(plan) == naive_err


class TestErrorProbability:
    @pytest.mark.parametrize("gains", [(7, 6, 3, 3), (6, 4, 5, 5), (6, 3, 3, 3)])
    def test_constructed_plans_are_zero_error(self, gains):
        plan = build_allocation(normalize_config(*gains))
        assert error_probability(plan) == 0

    def test_broken_decoder_reading_a_jammed_level(self):
        # turn a jamming level of user 1 into a message level: the
        # decoder then reads a level the other user's jamming corrupts
        plan = build_allocation(normalize_config(7, 6, 3, 3))
        roles1 = list(plan.roles1)
        roles1[roles1.index(LevelRole.JAM1)] = LevelRole.MESSAGE1
        broken = AllocationPlan(plan.cfg, tuple(roles1), plan.roles2)
        assert error_probability(broken) > 0

    def test_budget_error(self):
        plan = build_allocation(normalize_config(7, 6, 3, 3))
        with pytest.raises(EnumerationBudgetError):
            error_probability(plan, budget_bits=7)


class TestVerifyConfig:
    def test_anchor_config(self):
        rep = verify_config(normalize_config(7, 6, 3, 3))
        assert rep.message_bits == 6
        assert rep.leakage == 0
        assert rep.error_probability == 0
        assert rep.formula_match
        assert rep.enumerated_states == 2 ** 8
        assert rep.uniform_conditionals
        assert rep.entropy_exact

    def test_singularity_propagates(self):
        from macwiretap.core import SingularChannelError

        with pytest.raises(SingularChannelError):
            verify_config(normalize_config(6, 6, 3, 3))

    def test_case1_low_rate_config(self):
        rep = verify_config(normalize_config(6, 3, 3, 3))
        assert rep.message_bits == 3
        assert rep.leakage == 0
        assert rep.error_probability == 0
        assert rep.formula_match

    def test_equivocation_equals_message_entropy(self):
        rep = verify_config(normalize_config(6, 4, 5, 5))
        assert rep.equivocation == rep.message_bits

    def test_deterministic_reports(self):
        cfg = normalize_config(5, 3, 4, 4)
        assert verify_config(cfg) == verify_config(cfg)

    def test_json_dict_is_serializable(self):
        import json

        rep = verify_config(normalize_config(7, 6, 3, 3))
        data = json.loads(json.dumps(rep.to_json_dict()))
        assert data["leakage"] == "0"
        assert data["message_bits"] == 6

    def test_budget_propagates(self):
        with pytest.raises(EnumerationBudgetError):
            verify_config(normalize_config(7, 6, 3, 3), budget_bits=3)
