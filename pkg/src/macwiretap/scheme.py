"""Cooperative-jamming level allocation, encoder and receiver decoder.

The construction works on the gain difference ``n_delta`` between the
two users.  Inside the common span both users repeat a period of
``3 * n_delta`` levels split into thirds: user 1 sends message bits on
the first third and user 2 on the second, each third backed by a
jamming third of the other user.  Because user 2 arrives ``n_delta``
levels lower at the legitimate receiver, the two patterns interlock
there: message levels stay clean and jamming piles on jamming.  At the
eavesdropper both users align exactly, so every visible message level
is covered by one uniform jamming bit of the other user, and the
covered levels reveal nothing.

Jam slots materialize only where the eavesdropper actually sees a
message of the other user; slots whose partner message fell outside the
other user's span stay unused.  When the eavesdropper hears user 2 more
strongly than the legitimate receiver does, user 2 additionally jams on
levels only the eavesdropper can see, which costs no receiver levels.
"""

from __future__ import annotations

import enum
import json
import random
from dataclasses import dataclass
from typing import Sequence

from .core import ChannelConfig, LevelVector, Regime, SingularChannelError

Bits = tuple[int, ...]


class LevelRole(str, enum.Enum):
    """Role of a single transmit level of a single user."""

    MESSAGE1 = "message1"
    MESSAGE2 = "message2"
    JAM1 = "jam1"
    JAM2 = "jam2"
    UNUSED = "unused"
    ZERO = "zero"


_MESSAGE = {LevelRole.MESSAGE1, LevelRole.MESSAGE2}
_JAM = {LevelRole.JAM1, LevelRole.JAM2}


@dataclass(frozen=True)
class AllocationPlan:
    """Per-level role assignment for both users under one configuration.

    ``roles1`` covers user 1's ``cfg.span1`` levels top first, ``roles2``
    user 2's ``cfg.span2`` levels.  Message and jam counts are derived
    from the roles, so a plan edited for a negative-control experiment
    stays internally consistent.
    """

    cfg: ChannelConfig
    roles1: tuple[LevelRole, ...]
    roles2: tuple[LevelRole, ...]

    def __post_init__(self) -> None:
        if len(self.roles1) != self.cfg.span1:
            raise ValueError(
                f"roles1 must cover {self.cfg.span1} levels, got {len(self.roles1)}"
            )
        if len(self.roles2) != self.cfg.span2:
            raise ValueError(
                f"roles2 must cover {self.cfg.span2} levels, got {len(self.roles2)}"
            )

    @property
    def m1(self) -> int:
        return sum(r is LevelRole.MESSAGE1 for r in self.roles1)

    @property
    def m2(self) -> int:
        return sum(r is LevelRole.MESSAGE2 for r in self.roles2)

    @property
    def j1(self) -> int:
        return sum(r is LevelRole.JAM1 for r in self.roles1)

    @property
    def j2(self) -> int:
        return sum(r is LevelRole.JAM2 for r in self.roles2)

    @property
    def message_levels1(self) -> tuple[int, ...]:
        """1-based levels of user 1 carrying message bits, top first."""
        return tuple(
            i for i, r in enumerate(self.roles1, start=1) if r is LevelRole.MESSAGE1
        )

    @property
    def message_levels2(self) -> tuple[int, ...]:
        return tuple(
            i for i, r in enumerate(self.roles2, start=1) if r is LevelRole.MESSAGE2
        )


def build_allocation(cfg: ChannelConfig) -> AllocationPlan:
    """Construct the jamming-aligned allocation for a configuration.

    Raises :class:`SingularChannelError` in the singular regime, where
    no level offset exists to separate jamming from messages.
    """
    if cfg.regime is Regime.SINGULAR:
        raise SingularChannelError(
            f"equal user gains n1 = n2 = {cfg.n1}: the scheme rate is zero"
        )
    nd = cfg.n_delta
    common1 = cfg.common_span       # user 1 levels inside the common part
    common2 = common1 - nd          # user 2 levels the legitimate receiver sees there

    roles1 = [LevelRole.UNUSED] * cfg.span1
    roles2 = [LevelRole.UNUSED] * cfg.span2

    # Message thirds of the periodic pattern, truncated at the span ends.
    for lv in range(1, common1 + 1):
        if ((lv - 1) // nd) % 3 == 0:
            roles1[lv - 1] = LevelRole.MESSAGE1
    # Private tail: levels of user 1 the eavesdropper cannot reach at all.
    for lv in range(common1 + 1, cfg.n1 + 1):
        roles1[lv - 1] = LevelRole.MESSAGE1

    for lv in range(1, common2 + 1):
        if ((lv - 1) // nd) % 3 == 1:
            roles2[lv - 1] = LevelRole.MESSAGE2
    # User 2 levels that would land under user 1's private tail stay silent.
    for lv in range(common2 + 1, cfg.n2 + 1):
        roles2[lv - 1] = LevelRole.ZERO

    # Jam exactly under every message level the eavesdropper can see.
    # Both users align level-for-level there, so the cover for a level
    # is the same level of the other user.
    for lv in range(1, cfg.n_e + 1):
        if lv <= cfg.span1 and roles1[lv - 1] is LevelRole.MESSAGE1:
            assert roles2[lv - 1] is LevelRole.UNUSED
            roles2[lv - 1] = LevelRole.JAM2
        if lv <= cfg.span2 and roles2[lv - 1] is LevelRole.MESSAGE2:
            assert roles1[lv - 1] is LevelRole.UNUSED
            roles1[lv - 1] = LevelRole.JAM1

    return AllocationPlan(cfg=cfg, roles1=tuple(roles1), roles2=tuple(roles2))


def _check_bits(name: str, bits: Sequence[int], expected: int) -> Bits:
    if len(bits) != expected:
        raise ValueError(f"{name} must have {expected} bits, got {len(bits)}")
    out = tuple(int(b) for b in bits)
    if any(b not in (0, 1) for b in out):
        raise ValueError(f"{name} must contain only 0/1 bits")
    return out


def encode(
    plan: AllocationPlan,
    w1: Sequence[int],
    w2: Sequence[int],
    jam: Sequence[int],
) -> tuple[LevelVector, LevelVector]:
    """Place message and jamming bits on their levels, top to bottom.

    ``jam`` holds user 1's jamming bits first, then user 2's.  Unused
    and silenced levels transmit 0.  Jamming bits are an explicit input
    so exhaustive verification can enumerate them; use
    :func:`encode_with_random_jam` for simulation.
    """
    w1 = _check_bits("w1", w1, plan.m1)
    w2 = _check_bits("w2", w2, plan.m2)
    jam = _check_bits("jam", jam, plan.j1 + plan.j2)
    jam1, jam2 = jam[: plan.j1], jam[plan.j1:]

    def fill(roles, message_role, jam_role, message_bits, jam_bits):
        m_it, j_it = iter(message_bits), iter(jam_bits)
        out = []
        for role in roles:
            if role is message_role:
                out.append(next(m_it))
            elif role is jam_role:
                out.append(next(j_it))
            else:
                out.append(0)
        return LevelVector(out)

    x1 = fill(plan.roles1, LevelRole.MESSAGE1, LevelRole.JAM1, w1, jam1)
    x2 = fill(plan.roles2, LevelRole.MESSAGE2, LevelRole.JAM2, w2, jam2)
    return x1, x2


def encode_with_random_jam(
    plan: AllocationPlan,
    w1: Sequence[int],
    w2: Sequence[int],
    rng: random.Random | None = None,
    seed: int | None = None,
) -> tuple[LevelVector, LevelVector, Bits]:
    """Encode with uniform jamming bits from a seeded source.

    Returns the transmit columns plus the sampled jamming bits so a run
    can be reproduced exactly.
    """
    if rng is None:
        rng = random.Random(seed)
    jam = tuple(rng.getrandbits(1) for _ in range(plan.j1 + plan.j2))
    x1, x2 = encode(plan, w1, w2, jam)
    return x1, x2, jam


def decode(plan: AllocationPlan, y1: LevelVector) -> tuple[Bits, Bits]:
    """Read both messages off their interference-free receiver levels.

    User i's message level ``lv`` arrives at receiver level
    ``(q - n_i) + lv``; the construction keeps those levels clean of
    both the other user's messages and all jamming, for every jamming
    realization.
    """
    cfg = plan.cfg
    if len(y1) != cfg.q:
        raise ValueError(f"y1 must have length {cfg.q}, got {len(y1)}")
    off1 = cfg.q - cfg.n1
    off2 = cfg.q - cfg.n2
    w1 = tuple(y1.level(off1 + lv) for lv in plan.message_levels1)
    w2 = tuple(y1.level(off2 + lv) for lv in plan.message_levels2)
    return w1, w2


def level_map(plan: AllocationPlan) -> list[dict]:
    """Machine-readable per-level role map (user, level, role)."""
    rows = []
    for user, roles in ((1, plan.roles1), (2, plan.roles2)):
        for lv, role in enumerate(roles, start=1):
            rows.append({"user": user, "level": lv, "role": role.value})
    return rows


def format_level_map(plan: AllocationPlan) -> str:
    """One line per user level, e.g. ``user1 L03 unused``."""
    return "\n".join(
        f"user{row['user']} L{row['level']:02d} {row['role']}"
        for row in level_map(plan)
    )


def level_map_json(plan: AllocationPlan) -> str:
    return json.dumps(level_map(plan), indent=2)
