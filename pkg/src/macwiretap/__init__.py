"""Deterministic bit-level model of the two-user uplink with an eavesdropper.

The package models both links as stacks of GF(2) bit-levels, builds the
cooperative-jamming level allocation that aligns jamming at the
legitimate receiver while masking every message level the eavesdropper
can see, evaluates the closed-form secure sum-rate and its converse
bound in exact arithmetic, and proves secrecy and decodability of the
constructed scheme by exhaustive enumeration on small instances.
"""

from .core import (
    ChannelConfig,
    LevelVector,
    Regime,
    SingularChannelError,
    normalize_config,
    pad_bottom,
    shift_down,
    transmit,
    xor_add,
)
from .rates import (
    RateReport,
    RemainderShare,
    achievable_rate,
    rate_report,
    remainder_share,
    upper_bound,
)
from .scheme import (
    AllocationPlan,
    LevelRole,
    build_allocation,
    decode,
    encode,
    encode_with_random_jam,
    format_level_map,
    level_map,
    level_map_json,
)
from .verify import (
    DEFAULT_BUDGET_BITS,
    EnumerationBudgetError,
    VerificationReport,
    equivocation,
    error_probability,
    leakage,
    verify_config,
)

__version__ = "0.1.0"

__all__ = [
    "ChannelConfig",
    "LevelVector",
    "Regime",
    "SingularChannelError",
    "normalize_config",
    "pad_bottom",
    "shift_down",
    "transmit",
    "xor_add",
    "RateReport",
    "RemainderShare",
    "achievable_rate",
    "rate_report",
    "remainder_share",
    "upper_bound",
    "AllocationPlan",
    "LevelRole",
    "build_allocation",
    "decode",
    "encode",
    "encode_with_random_jam",
    "format_level_map",
    "level_map",
    "level_map_json",
    "DEFAULT_BUDGET_BITS",
    "EnumerationBudgetError",
    "VerificationReport",
    "equivocation",
    "error_probability",
    "leakage",
    "verify_config",
    "__version__",
]
