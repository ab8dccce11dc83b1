"""Mod-2 framing obstruction of a framed link in the 3-sphere.

Each component contributes one bit: the class of its framing against
the standard one.  Writing t for the blackboard-framing twist count and
c for the component's self-crossing number, t + c + 1 and framing + 1
agree mod 2 because t is framing minus self-writhe and c matches the
self-writhe mod 2; the implementation keeps only the collapsed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .diagram import FramedLink
from .invariants import hopf_invariant


class ParityStatus(Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class ObstructionVector:
    """Bit per component; the dual class in meridian coordinates."""

    a: dict[int, int]

    @property
    def total_parity(self) -> int:
        return sum(self.a.values()) % 2

    def as_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.a.items())


@dataclass(frozen=True)
class FramingChange:
    """Effect of replacing one framing integer."""

    component: int
    old_framing: int
    new_framing: int
    delta: int
    vector: ObstructionVector
    hopf: int
    null_cobordant: bool
    note: str


def framing_parity(fl: FramedLink, comp: int) -> int:
    return (fl.framing(comp) + 1) % 2


def obstruction_vector(fl: FramedLink) -> ObstructionVector:
    return ObstructionVector({s: framing_parity(fl, s) for s in fl.diagram.labels})


def parity_identity_check(fl: FramedLink) -> ParityStatus:
    """Against a null-cobordant framed link, the obstruction bits must
    sum to the component count mod 2; anything else is an internal bug."""

    if hopf_invariant(fl) != 0:
        return ParityStatus.NOT_APPLICABLE
    vec = obstruction_vector(fl)
    n = len(fl.diagram.components)
    return ParityStatus.HOLDS if vec.total_parity == n % 2 else ParityStatus.VIOLATED


def framing_change_delta(fl: FramedLink, comp: int, new_framing: int) -> FramingChange:
    old = fl.framing(comp)
    changed = fl.with_framing(comp, new_framing)
    h = hopf_invariant(changed)
    return FramingChange(
        component=comp,
        old_framing=old,
        new_framing=new_framing,
        delta=(new_framing - old) % 2,
        vector=obstruction_vector(changed),
        hopf=h,
        null_cobordant=h == 0,
        note="changed link may not be framed null-cobordant any more; rechecked here",
    )
