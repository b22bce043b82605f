"""GF(2) bit-level vectors and the shifted-XOR deterministic channel.

The model replaces a real-valued two-transmitter channel with stacks of
binary signal levels.  A link gain of ``n`` levels means the receiver
sees the top ``n`` levels of the sender's bit column; everything below
falls under the noise floor.  Received columns live in a common ambient
length ``q`` (the largest gain in the system), each shifted down by
``q - gain`` so the weakest surviving level sits at the bottom, and
colliding levels add as XOR with no carries.

Levels are indexed from 1 at the top (most significant) downward, and
every operation here is a pure function over immutable values.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator


class SingularChannelError(ValueError):
    """Both users reach the legitimate receiver with the same gain.

    The alignment scheme needs a nonzero gain difference between the
    two users; callers are expected to handle the singular regime
    (zero scheme rate) before asking for a construction.
    """


class LevelVector:
    """Immutable fixed-length column of GF(2) bits, level 1 on top.

    The length is fixed at construction and preserved by every
    operation; elements are exactly 0 or 1.
    """

    __slots__ = ("_bits",)

    def __init__(self, bits: Iterable[int]):
        bits = tuple(bits)
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"bit levels must be 0 or 1, got {b!r}")
        object.__setattr__(self, "_bits", tuple(int(b) for b in bits))

    @classmethod
    def zeros(cls, length: int) -> "LevelVector":
        if length < 0:
            raise ValueError("length must be non-negative")
        return cls((0,) * length)

    @classmethod
    def from_int(cls, value: int, length: int) -> "LevelVector":
        """Unpack ``length`` bits of ``value``, level 1 = most significant."""
        if value < 0 or value >> length:
            raise ValueError("value does not fit in the given length")
        return cls((value >> (length - 1 - i)) & 1 for i in range(length))

    @property
    def bits(self) -> tuple[int, ...]:
        return self._bits

    @property
    def length(self) -> int:
        return len(self._bits)

    def level(self, i: int) -> int:
        """Bit at 1-based level ``i``, counted from the top."""
        if not 1 <= i <= len(self._bits):
            raise IndexError(f"level {i} outside 1..{len(self._bits)}")
        return self._bits[i - 1]

    def as_int(self) -> int:
        """Pack into an integer with level 1 as the most significant bit."""
        value = 0
        for b in self._bits:
            value = (value << 1) | b
        return value

    def __len__(self) -> int:
        return len(self._bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self._bits)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LevelVector):
            return self._bits == other._bits
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._bits)

    def __xor__(self, other: "LevelVector") -> "LevelVector":
        return xor_add(self, other)

    def __repr__(self) -> str:
        return f"LevelVector([{', '.join(str(b) for b in self._bits)}])"


def shift_down(v: LevelVector, k: int) -> LevelVector:
    """Shift a column down by ``k`` levels, zero-filling the top.

    Level ``i`` of the result equals level ``i - k`` of the input for
    ``i > k`` and 0 otherwise; shifting past the length annihilates the
    vector.  This is multiplication by the k-th power of the lower
    shift matrix.
    """
    if k < 0:
        raise ValueError("shift amount must be non-negative")
    n = len(v)
    k = min(k, n)
    return LevelVector((0,) * k + v.bits[: n - k])


def xor_add(a: LevelVector, b: LevelVector) -> LevelVector:
    """Levelwise GF(2) addition of two equal-length columns."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return LevelVector(x ^ y for x, y in zip(a.bits, b.bits))


def pad_bottom(v: LevelVector, length: int) -> LevelVector:
    """Extend with zero levels at the bottom; existing levels keep their index."""
    if length < len(v):
        raise ValueError("cannot pad to a shorter length")
    return LevelVector(v.bits + (0,) * (length - len(v)))


class Regime(str, enum.Enum):
    """Which branch of the rate formulas a configuration falls in."""

    CASE1 = "case1"  # eavesdropper no stronger than the weak user (n2 >= nE)
    CASE2 = "case2"  # eavesdropper stronger than the weak user (nE > n2)
    SINGULAR = "singular"  # equal user gains, no level offset to exploit


@dataclass(frozen=True)
class ChannelConfig:
    """Validated channel gains plus every derived quantity.

    Raw gains are kept exactly as given; the derived fields follow the
    normalized convention in which user 1 is the stronger user at the
    legitimate receiver (``n1 >= n2``) and the eavesdropper hears both
    users with the common effective gain ``n_e``.

    Fields
    ------
    n11, n21 : gains of user 1 / user 2 at the legitimate receiver.
    n22, n12 : gains of user 2 / user 1 at the eavesdropper.
    n1, n2   : user gains at the legitimate receiver after the role swap.
    n_e      : symmetric eavesdropper gain, ``min(n22, n12)``.  The top
               ``|n22 - n12|`` eavesdropper levels of the stronger-heard
               user cannot be masked by the other user and are declared
               unusable, which leaves a symmetric view.
    n_delta  : gain difference ``n1 - n2``.
    q        : ambient length, the maximum of the four raw gains.
    n_c      : nominal common-part size ``n_e + n_delta``.
    n_p      : private levels of user 1 below the eavesdropper's reach,
               ``max(n1 - n_c, 0)``.
    regime   : see :class:`Regime`.
    swapped  : True when the users' roles were exchanged so reports can
               mirror results back to the raw orientation.
    """

    n11: int
    n21: int
    n22: int
    n12: int
    n1: int
    n2: int
    n_e: int
    n_delta: int
    q: int
    n_c: int
    n_p: int
    regime: Regime
    swapped: bool

    @property
    def common_span(self) -> int:
        """Levels of receiver 1 that interact with the eavesdropper's view.

        The nominal common part has ``n_c`` levels but the receiver's
        stack physically ends after ``n1``; the span is the smaller of
        the two.
        """
        return min(self.n_c, self.n1)

    @property
    def span1(self) -> int:
        """Transmit levels user 1 can put energy on: ``max(n1, n_e)``.

        Levels past a receiver's gain drop off at that receiver, so a
        user may address any level some receiver can see.
        """
        return max(self.n1, self.n_e)

    @property
    def span2(self) -> int:
        """Transmit levels user 2 can put energy on: ``max(n2, n_e)``.

        When the eavesdropper hears user 2 more strongly than the
        legitimate receiver does, levels ``n2+1..n_e`` reach only the
        eavesdropper, which is exactly where free jamming lives.
        """
        return max(self.n2, self.n_e)

    @property
    def n_max(self) -> int:
        return max(self.n1, self.n2)


def normalize_config(n11: int, n21: int, n22: int, n12: int) -> ChannelConfig:
    """Validate raw gains and derive the normalized configuration.

    Applies the symmetric-eavesdropper reduction ``n_e = min(n22, n12)``
    and swaps user roles when user 2 is the stronger user at the
    legitimate receiver.  Equal user gains yield a valid configuration
    in the singular regime rather than an error.
    """
    for name, value in (("n11", n11), ("n21", n21), ("n22", n22), ("n12", n12)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValueError(f"{name} must be an integer, got {value!r}")
        if value < 0:
            raise ValueError(f"{name} must be non-negative, got {value}")

    n_e = min(n22, n12)
    swapped = n21 > n11
    n1, n2 = (n21, n11) if swapped else (n11, n21)
    q = max(n11, n21, n22, n12)
    n_delta = n1 - n2
    n_c = n_e + n_delta
    n_p = max(n1 - n_c, 0)
    if n1 == n2:
        regime = Regime.SINGULAR
    elif n2 >= n_e:
        regime = Regime.CASE1
    else:
        regime = Regime.CASE2
    return ChannelConfig(
        n11=n11, n21=n21, n22=n22, n12=n12,
        n1=n1, n2=n2, n_e=n_e, n_delta=n_delta, q=q,
        n_c=n_c, n_p=n_p, regime=regime, swapped=swapped,
    )


def transmit(
    cfg: ChannelConfig, x1: LevelVector, x2: LevelVector
) -> tuple[LevelVector, LevelVector]:
    """Push both users' columns through the channel.

    ``x1`` and ``x2`` must have lengths ``cfg.span1`` and ``cfg.span2``.
    Both outputs have the ambient length ``q``: the legitimate receiver
    sees each user shifted by ``q - n_i``, the eavesdropper sees both
    users shifted by the common ``q - n_e``, so their columns align
    level by level there.
    """
    if len(x1) != cfg.span1:
        raise ValueError(f"x1 must have length {cfg.span1}, got {len(x1)}")
    if len(x2) != cfg.span2:
        raise ValueError(f"x2 must have length {cfg.span2}, got {len(x2)}")
    x1q = pad_bottom(x1, cfg.q)
    x2q = pad_bottom(x2, cfg.q)
    y1 = xor_add(shift_down(x1q, cfg.q - cfg.n1), shift_down(x2q, cfg.q - cfg.n2))
    y2 = xor_add(shift_down(x1q, cfg.q - cfg.n_e), shift_down(x2q, cfg.q - cfg.n_e))
    return y1, y2
