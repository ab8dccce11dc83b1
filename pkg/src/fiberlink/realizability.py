"""Deciders: singular-set realizability over the 3-sphere, and the
linking-parity criterion for fibers of submersions of 3-space.

The singular-set question compares two mod-2 vectors over the fiber
components: the framing obstruction a_s and the linking class j_s of
the proposed singular link.  Over the plane target the fiber must in
addition be framed null-cobordant, and an empty singular set is never
accepted (a map of a closed 3-manifold to the plane has critical
points); over the sphere target neither restriction applies.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Literal, Sequence

from .diagram import DiagramError, FramedLink, LabeledScene, LinkDiagram, _Builder, _Node, sublink
from .invariants import hopf_invariant, linking_matrix
from .obstruction import ObstructionVector, obstruction_vector

Target = Literal["plane", "sphere"]


class Verdict(Enum):
    REALIZABLE = "realizable"
    NOT_REALIZABLE = "not-realizable"
    NOT_APPLICABLE = "not-applicable"


NOTE_FIBER_NOT_NULL_COBORDANT = "fiber-not-framed-null-cobordant"
NOTE_GROUP_NOT_NULL_COBORDANT = "group-not-framed-null-cobordant"
NOTE_EMPTY_SINGULAR_PLANE = "empty-singular-always-fails-for-plane"
NOTE_MISMATCH = "obstruction-mismatch"
NOTE_MATCH = "all-parities-match"
NOTE_FOLD_TYPES = "fold-types-prescribable"
NOTE_GROUPS_HYPOTHESIS = "multiple-fiber-groups-hypothesis-assumed"
NOTE_SPLIT_CERTIFICATE = "split-unknotted-singular-circle-realizable"


def _check_target(target: str) -> Target:
    if target not in ("plane", "sphere"):
        raise DiagramError(f"target must be 'plane' or 'sphere', got {target!r}")
    return target  # type: ignore[return-value]


@dataclass(frozen=True)
class RealizabilityReport:
    verdict: Verdict
    target: Target
    obstruction: ObstructionVector
    j_class: dict[int, int]
    mismatches: tuple[int, ...]
    notes: tuple[str, ...]


def realize_singular(
    scene: LabeledScene,
    target: Target = "plane",
    fiber_groups: Sequence[Iterable[int]] | None = None,
) -> RealizabilityReport:
    """Decide whether the scene's singular components can be the
    singular set of a generic map with the scene's fiber as a regular
    fiber over the given target surface.

    ``fiber_groups`` splits the fiber components into fibers of several
    regular values; the union is checked under the usual condition, and
    the report notes that the groups are assumed to bound disjoint
    framed surfaces, which no diagram-level check establishes.
    """

    target = _check_target(target)
    if not scene.fiber:
        raise DiagramError("scene has no fiber components")
    fiber_link = FramedLink(scene.diagram, dict(scene.framings))
    a = {s: (fiber_link.framing(s) + 1) % 2 for s in scene.fiber}
    vector = ObstructionVector(a)
    notes: list[str] = []

    grouping: list[tuple[int, ...]] = []
    if fiber_groups is not None:
        grouping = [tuple(sorted(set(g))) for g in fiber_groups]
        flat = sorted(label for g in grouping for label in g)
        if flat != sorted(scene.fiber):
            raise DiagramError("fiber_groups must partition the fiber components")
        if len(grouping) > 1:
            notes.append(NOTE_GROUPS_HYPOTHESIS)

    if target == "plane":
        groups = grouping if grouping else [tuple(sorted(scene.fiber))]
        bad_groups = []
        for group in groups:
            sub = sublink(scene.diagram, group)
            relabel = {new: scene.framings[old] for new, old in enumerate(sorted(group), start=1)}
            if hopf_invariant(FramedLink(sub, relabel)) != 0:
                bad_groups.append(group)
        if bad_groups:
            note = NOTE_GROUP_NOT_NULL_COBORDANT if len(groups) > 1 else NOTE_FIBER_NOT_NULL_COBORDANT
            return RealizabilityReport(
                verdict=Verdict.NOT_APPLICABLE,
                target=target,
                obstruction=vector,
                j_class={},
                mismatches=(),
                notes=tuple(notes + [note]),
            )
        if not scene.singular:
            return RealizabilityReport(
                verdict=Verdict.NOT_REALIZABLE,
                target=target,
                obstruction=vector,
                j_class={s: 0 for s in scene.fiber},
                mismatches=(),
                notes=tuple(notes + [NOTE_EMPTY_SINGULAR_PLANE]),
            )

    lm = linking_matrix(scene.diagram)
    j = {s: sum(lm.entry(c, s) for c in scene.singular) % 2 for s in scene.fiber}
    mismatches = tuple(s for s in scene.fiber if j[s] != a[s])
    if mismatches:
        notes.append(NOTE_MISMATCH)
        verdict = Verdict.NOT_REALIZABLE
    else:
        notes.append(NOTE_MATCH)
        verdict = Verdict.REALIZABLE
        if len(scene.singular) >= 2:
            notes.append(NOTE_FOLD_TYPES)
    return RealizabilityReport(
        verdict=verdict,
        target=target,
        obstruction=vector,
        j_class=j,
        mismatches=mismatches,
        notes=tuple(notes),
    )


@dataclass(frozen=True)
class SplitReport:
    possible: bool
    reason: str
    obstruction: ObstructionVector


def split_possible(fl: FramedLink, target: Target = "plane") -> SplitReport:
    """Can some link split from the fiber serve as the singular set?

    True exactly when every obstruction bit vanishes (a split link has
    zero linking with everything); the plane target additionally needs
    the fiber framed null-cobordant.
    """

    target = _check_target(target)
    vector = obstruction_vector(fl)
    if target == "plane" and hopf_invariant(fl) != 0:
        return SplitReport(False, NOTE_FIBER_NOT_NULL_COBORDANT, vector)
    if any(vector.a.values()):
        return SplitReport(False, NOTE_MISMATCH, vector)
    return SplitReport(True, NOTE_MATCH, vector)


@dataclass(frozen=True)
class WitnessLink:
    """Meridian recipe whose mod-2 linking vector equals the
    obstruction vector; a split unknot stands in when that vector is
    zero, so the plane target still gets a non-empty singular set."""

    meridians: tuple[int, ...]
    extra_split_unknot: bool


def witness_singular(fl: FramedLink) -> WitnessLink:
    if hopf_invariant(fl) != 0:
        raise DiagramError("fiber is not framed null-cobordant; no witness exists for the plane target")
    vector = obstruction_vector(fl)
    meridians = tuple(s for s, bit in sorted(vector.a.items()) if bit == 1)
    return WitnessLink(meridians=meridians, extra_split_unknot=not meridians)


def witness_scene(fl: FramedLink) -> LabeledScene:
    """Draw the witness into the diagram: one clasp meridian around
    each obstructed component, or one split unknot when none are."""

    witness = witness_singular(fl)
    builder, _ = _Builder.from_diagram(fl.diagram)
    n = len(builder.comps)
    for comp in witness.meridians:
        first = _Node(1)
        second = _Node(1)
        # Honest clasp: the meridian is over at one crossing and under
        # at the other, else the code would not be planar.
        builder.comps[comp - 1][0:0] = [(first, "under"), (second, "over")]
        builder.comps.append([(first, "over"), (second, "under")])
    if witness.extra_split_unknot:
        builder.comps.append([])
    diagram = builder.to_diagram()
    fiber = tuple(range(1, n + 1))
    singular = tuple(range(n + 1, len(diagram.components) + 1))
    return LabeledScene(diagram, fiber, singular, dict(fl.framings))


@dataclass(frozen=True)
class HpReport:
    """Row-sum parities of the linking matrix, one per component."""

    verdict: Verdict
    parities: dict[int, int]
    failing: tuple[int, ...]


def hp_submersion_check(d: LinkDiagram) -> HpReport:
    """A link is a regular fiber of a submersion of 3-space exactly
    when every component's total linking with the rest is odd."""

    if not d.components:
        return HpReport(Verdict.NOT_APPLICABLE, {}, ())
    lm = linking_matrix(d)
    parities = {i: lm.off_diagonal_row_sum(i) % 2 for i in d.labels}
    failing = tuple(i for i, p in sorted(parities.items()) if p == 0)
    verdict = Verdict.REALIZABLE if not failing else Verdict.NOT_REALIZABLE
    return HpReport(verdict, parities, failing)


@dataclass(frozen=True)
class ChillingworthReport:
    """Whether the link is a regular fiber of some generic map of
    3-space whose whole singular set is one split unknotted circle."""

    hp: HpReport
    certificate: bool
    notes: tuple[str, ...] = field(default_factory=tuple)


def chillingworth_report(d: LinkDiagram) -> ChillingworthReport:
    hp = hp_submersion_check(d)
    if hp.verdict is Verdict.REALIZABLE:
        return ChillingworthReport(hp, True, (NOTE_SPLIT_CERTIFICATE,))
    return ChillingworthReport(hp, False, ())
