"""Exhaustive, exact verification of secrecy and decodability.

The oracle enumerates every message and jamming realization of a plan
(one channel use), builds the exact joint distribution of the messages
and the eavesdropper's observation, and computes equivocation, leakage
and the decoder's error probability with exact arithmetic.  The scheme
is memoryless, so one channel use settles the multi-use behaviour by
independence: a plan with zero single-use leakage leaks nothing over
any number of uses.

All state probabilities are dyadic by construction.  Entropies are
exact rationals whenever every joint and marginal count is a power of
two, which holds for every level-placement plan because the maps from
bits to observations are GF(2)-linear; if a count ever fails that test
the entropy falls back to a high-precision value with absolute error
below 2**-30 and the report says so.

Enumeration walks the state space in Gray-code order, updating the
observation incrementally one flipped bit at a time; every one of the
``2**(m1+m2+j1+j2)`` states is visited and the per-state values equal
direct evaluation, so reports are deterministic and independent of how
the walk is arranged.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import ChannelConfig, transmit
from .rates import achievable_rate
from .scheme import AllocationPlan, build_allocation, decode, encode

DEFAULT_BUDGET_BITS = 22


class EnumerationBudgetError(RuntimeError):
    """The state space is larger than the enumeration budget allows."""

    def __init__(self, required_bits: int, budget_bits: int):
        self.required_bits = required_bits
        self.budget_bits = budget_bits
        super().__init__(
            f"enumeration needs {required_bits} state bits "
            f"(2**{required_bits} states) but the budget is {budget_bits} bits; "
            f"raise the budget to at least {required_bits}"
        )


@dataclass(frozen=True)
class VerificationReport:
    """Exact enumeration results for one configuration's plan."""

    cfg: ChannelConfig
    message_bits: int
    jam_bits: int
    equivocation: Fraction
    leakage: Fraction
    error_probability: Fraction
    enumerated_states: int
    formula_match: bool
    uniform_conditionals: bool
    entropy_exact: bool

    def to_json_dict(self) -> dict:
        return {
            "n11": self.cfg.n11,
            "n21": self.cfg.n21,
            "n22": self.cfg.n22,
            "n12": self.cfg.n12,
            "regime": self.cfg.regime.value,
            "message_bits": self.message_bits,
            "jam_bits": self.jam_bits,
            "equivocation": str(self.equivocation),
            "leakage": str(self.leakage),
            "error_probability": str(self.error_probability),
            "enumerated_states": self.enumerated_states,
            "formula_match": self.formula_match,
            "uniform_conditionals": self.uniform_conditionals,
            "entropy_exact": self.entropy_exact,
        }


def _ctz(n: int) -> int:
    """Index of the lowest set bit."""
    return (n & -n).bit_length() - 1


def _coding_masks(plan: AllocationPlan):
    """Observation and decode contributions of every state bit.

    State bits are ordered as user 1's message bits, user 2's message
    bits, then all jamming bits.  Each mask is obtained by pushing a
    one-hot input through the real encoder, channel and decoder, so the
    enumeration exercises exactly the maps under test.
    """
    m1, m2 = plan.m1, plan.m2
    j = plan.j1 + plan.j2
    m = m1 + m2
    y2_masks, dec_masks = [], []
    for b in range(m + j):
        w1 = [0] * m1
        w2 = [0] * m2
        jam = [0] * j
        if b < m1:
            w1[b] = 1
        elif b < m:
            w2[b - m1] = 1
        else:
            jam[b - m] = 1
        x1, x2 = encode(plan, w1, w2, jam)
        y1, y2 = transmit(plan.cfg, x1, x2)
        y2_masks.append(y2.as_int())
        d1, d2 = decode(plan, y1)
        packed = 0
        for i, bit in enumerate(d1 + d2):
            packed |= bit << i
        dec_masks.append(packed)
    return m, j, y2_masks, dec_masks


def _entropy_bits(count_multiplicity: dict[int, int], total: int) -> tuple[Fraction, bool]:
    """Shannon entropy in bits of counts over ``total`` states.

    ``count_multiplicity`` maps a cell count ``c`` to how many cells
    carry it.  ``H = log2(total) - (sum of c*log2(c)) / total``; the
    result is exact when ``total`` and every count are powers of two.
    Otherwise ``log2(c)`` comes from the float log, whose accumulated
    absolute error stays below ``log2(total) * 2**-50 < 2**-30`` for
    any budget-sized enumeration.
    """
    if total <= 0 or (total & (total - 1)):
        raise ValueError("total must be a positive power of two")
    exact = True
    acc = Fraction(0)
    for c, mult in count_multiplicity.items():
        if c <= 0:
            continue
        if c & (c - 1) == 0:
            acc += mult * c * (c.bit_length() - 1)
        else:
            exact = False
            acc += Fraction(mult * c) * Fraction(math.log2(c))
    return total.bit_length() - 1 - acc / total, exact


@dataclass(frozen=True)
class _EavesdropperStats:
    equivocation: Fraction
    leakage: Fraction
    uniform_conditionals: bool
    entropy_exact: bool
    enumerated_states: int


def _eavesdropper_stats(plan: AllocationPlan, budget_bits: int) -> _EavesdropperStats:
    m, j, y2_masks, _ = _coding_masks(plan)
    bits = m + j
    if bits > budget_bits:
        raise EnumerationBudgetError(bits, budget_bits)
    w_masks, jam_masks = y2_masks[:m], y2_masks[m:]

    total = 1 << bits
    marginal: dict[int, int] = {}
    joint_mult: dict[int, int] = {}
    cond_first: dict[int, int] = {}
    uniform = True

    y2_w = 0
    for t in range(1 << m):
        if t:
            y2_w ^= w_masks[_ctz(t)]  # Gray step to the next message
        local: dict[int, int] = {y2_w: 1}
        y = y2_w
        for s in range(1, 1 << j):
            y ^= jam_masks[_ctz(s)]  # Gray step to the next jam pattern
            local[y] = local.get(y, 0) + 1
        for obs, count in local.items():
            marginal[obs] = marginal.get(obs, 0) + count
            joint_mult[count] = joint_mult.get(count, 0) + 1
            first = cond_first.setdefault(obs, count)
            if first != count:
                uniform = False

    marg_mult: dict[int, int] = {}
    for count in marginal.values():
        marg_mult[count] = marg_mult.get(count, 0) + 1

    h_joint, exact_j = _entropy_bits(joint_mult, total)
    h_marg, exact_m = _entropy_bits(marg_mult, total)
    equivocation = h_joint - h_marg
    leakage = Fraction(m) - equivocation
    return _EavesdropperStats(
        equivocation=equivocation,
        leakage=leakage,
        uniform_conditionals=uniform,
        entropy_exact=exact_j and exact_m,
        enumerated_states=total,
    )


def equivocation(plan: AllocationPlan, budget_bits: int = DEFAULT_BUDGET_BITS) -> Fraction:
    """Exact conditional entropy of both messages given the eavesdropper.

    Enumerates all ``2**(m1+m2+j1+j2)`` message/jam states (messages and
    jamming bits uniform and independent) and evaluates H(W | Y2) from
    the exact joint distribution.  Equals ``m1 + m2`` exactly iff the
    plan leaks nothing.
    """
    return _eavesdropper_stats(plan, budget_bits).equivocation


def leakage(plan: AllocationPlan, budget_bits: int = DEFAULT_BUDGET_BITS) -> Fraction:
    """Exact mutual information between the messages and the eavesdropper."""
    return _eavesdropper_stats(plan, budget_bits).leakage


def error_probability(plan: AllocationPlan, budget_bits: int = DEFAULT_BUDGET_BITS) -> Fraction:
    """Exact probability that the receiver misreads either message.

    Enumerates every message/jam state, runs the level-reading decoder
    on the receiver's observation and counts disagreements.  Expected to
    be exactly 0 for every constructed plan.
    """
    m, j, _, dec_masks = _coding_masks(plan)
    bits = m + j
    if bits > budget_bits:
        raise EnumerationBudgetError(bits, budget_bits)
    total = 1 << bits
    fails = 0
    w_hat = 0  # decoder output for the all-zero state is all-zero by linearity
    w_cur = 0
    for t in range(1, total):
        b = _ctz(t)
        w_hat ^= dec_masks[b]
        if b < m:
            w_cur ^= 1 << b
        if w_hat != w_cur:
            fails += 1
    return Fraction(fails, total)


def verify_config(
    cfg: ChannelConfig, budget_bits: int = DEFAULT_BUDGET_BITS
) -> VerificationReport:
    """Build the allocation for ``cfg`` and verify it exhaustively.

    Propagates the singularity error for equal user gains and the
    budget error when the state space is too large.  ``formula_match``
    records whether the plan's message count equals the closed-form
    achievable rate.
    """
    plan = build_allocation(cfg)
    stats = _eavesdropper_stats(plan, budget_bits)
    err = error_probability(plan, budget_bits)
    m = plan.m1 + plan.m2
    return VerificationReport(
        cfg=cfg,
        message_bits=m,
        jam_bits=plan.j1 + plan.j2,
        equivocation=stats.equivocation,
        leakage=stats.leakage,
        error_probability=err,
        enumerated_states=stats.enumerated_states,
        formula_match=(m == achievable_rate(cfg)),
        uniform_conditionals=stats.uniform_conditionals,
        entropy_exact=stats.entropy_exact,
    )
