"""Closed-form secrecy sum-rate and converse bound in exact arithmetic.

Everything here returns integers or :class:`fractions.Fraction`; the
upper bound carries thirds, and tightness checks (configurations where
the achievable rate meets the bound exactly) must not depend on float
rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .core import ChannelConfig, Regime, SingularChannelError


class RemainderShare(NamedTuple):
    """Secure-bit bookkeeping for the tail of the common part.

    span
        Common levels left over after whole ``3 * n_delta`` blocks.
    odd
        Levels of ``span`` left over after whole ``n_delta`` sub-blocks.
    message_bits
        Secure message levels the tail contributes: all of them while
        ``span < n_delta``; the first ``n_delta`` once a full message
        sub-block fits; plus the final ``odd`` levels once the jamming
        sub-block also fits, because those reuse jamming that is
        already in place.
    """

    span: int
    odd: int
    message_bits: int


def remainder_share(common_levels: int, n_delta: int) -> RemainderShare:
    """Split the common-part tail into its message contribution.

    ``n_delta`` must be positive; callers handle the singular regime
    before asking about block structure.
    """
    if n_delta <= 0:
        raise SingularChannelError("remainder split needs a positive gain difference")
    if common_levels < 0:
        raise ValueError("common_levels must be non-negative")
    span = common_levels % (3 * n_delta)
    odd = span % n_delta
    if span < n_delta:
        bits = odd  # == span
    elif span < 2 * n_delta:
        bits = n_delta
    else:
        bits = n_delta + odd
    return RemainderShare(span=span, odd=odd, message_bits=bits)


def achievable_rate(cfg: ChannelConfig) -> int:
    """Secure sum-rate of the constructed scheme, in bits per use.

    Every full ``3 * n_delta`` block of the common span carries
    ``2 * n_delta`` message bits (two message thirds, one jamming
    third), the tail contributes its :func:`remainder_share`, and user 1
    adds one bit per private level below the eavesdropper's reach.  The
    common span is the nominal ``n_c = n_e + n_delta`` capped at the
    ``n1`` levels the receiver physically has; the cap binds exactly
    when the eavesdropper outhears the weak user.

    Zero in the singular regime: with equal user gains the two patterns
    cannot interlock and no level offset is left to exploit.
    """
    if cfg.regime is Regime.SINGULAR:
        return 0
    common = cfg.common_span
    blocks = common - remainder_share(common, cfg.n_delta).span
    tail = remainder_share(common, cfg.n_delta).message_bits
    private = cfg.n1 - common
    return (2 * blocks) // 3 + tail + private


def upper_bound(cfg: ChannelConfig) -> Fraction:
    """Converse bound on the secrecy sum-rate, as an exact rational.

    Uses the nominal ``n_c = n_e + n_delta`` as stated; the bound may
    be loose when the eavesdropper is much stronger than both users.
    """
    base = Fraction(2 * cfg.n_c, 3) + Fraction(cfg.n_delta, 3)
    if cfg.n2 >= cfg.n_e:
        return base + cfg.n_p
    return base


@dataclass(frozen=True)
class RateReport:
    """Achievable rate, bound and normalizations for one configuration.

    ``alpha`` is the raw gain ratio ``n21 / n11`` (None when ``n11`` is
    zero), so mirrored configurations keep distinguishable ratios while
    their rates coincide.  Normalized values divide by the strongest
    user gain ``n_max``.  ``red_curve_norm`` is the reference curve
    two-thirds of the mean user gain, normalized, useful as a baseline
    when plotting rate curves.
    """

    cfg: ChannelConfig
    r_ach: int
    r_ub: Fraction
    remainder_span: int
    remainder_odd: int
    remainder_bits: int
    alpha: Optional[Fraction]
    r_ach_norm: Fraction
    r_ub_norm: Fraction
    red_curve_norm: Fraction

    def to_json_dict(self) -> dict:
        return {
            "n11": self.cfg.n11,
            "n21": self.cfg.n21,
            "n22": self.cfg.n22,
            "n12": self.cfg.n12,
            "n1": self.cfg.n1,
            "n2": self.cfg.n2,
            "nE": self.cfg.n_e,
            "n_delta": self.cfg.n_delta,
            "q": self.cfg.q,
            "regime": self.cfg.regime.value,
            "swapped": self.cfg.swapped,
            "alpha": None if self.alpha is None else str(self.alpha),
            "r_ach": self.r_ach,
            "r_ub": str(self.r_ub),
            "r_ach_norm": str(self.r_ach_norm),
            "r_ub_norm": str(self.r_ub_norm),
            "red_curve_norm": str(self.red_curve_norm),
        }


def rate_report(cfg: ChannelConfig) -> RateReport:
    """Assemble rates, remainder terms and normalized values."""
    r_ach = achievable_rate(cfg)
    r_ub = upper_bound(cfg)
    if cfg.regime is Regime.SINGULAR or cfg.n_delta == 0:
        share = RemainderShare(span=0, odd=0, message_bits=0)
    else:
        share = remainder_share(cfg.common_span, cfg.n_delta)
    n_max = cfg.n_max
    if n_max > 0:
        r_ach_norm = Fraction(r_ach, n_max)
        r_ub_norm = r_ub / n_max
        red = Fraction(cfg.n1 + cfg.n2, 3 * n_max)
    else:
        r_ach_norm = Fraction(0)
        r_ub_norm = Fraction(0)
        red = Fraction(0)
    alpha = Fraction(cfg.n21, cfg.n11) if cfg.n11 > 0 else None
    return RateReport(
        cfg=cfg,
        r_ach=r_ach,
        r_ub=r_ub,
        remainder_span=share.span,
        remainder_odd=share.odd,
        remainder_bits=share.message_bits,
        alpha=alpha,
        r_ach_norm=r_ach_norm,
        r_ub_norm=r_ub_norm,
        red_curve_norm=red,
    )
