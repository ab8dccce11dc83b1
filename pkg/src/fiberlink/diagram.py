"""Oriented link diagrams in a line-oriented planar-diagram text format.

Format (UTF-8, ``#`` starts a comment, ``/`` may stand in for a newline):

    X a b c d   one crossing: the four arc ids around the crossing,
                counterclockwise, starting from the incoming under-arc
    U k         crossingless split unknot component with arc id k
    F comp n    framing integer n for component ``comp``
    R comp fiber|singular
                role of component ``comp`` in a labeled scene

Arcs are the edges of the underlying 4-valent diagram graph: every
passage through a crossing, over or under, ends one arc and starts the
next.  A valid diagram therefore uses arc ids
{1, ..., 2 * crossings + unknot lines} exactly, and every crossing arc
id appears in exactly two crossing slots.  Within one component the
arcs are numbered ascending along the orientation, wrapping from the
largest id back to the smallest; that ascending rule is what makes the
orientation of each strand recoverable from the quadruples alone.
Components are labeled 1, 2, ... by their smallest arc id.

Sign convention: reading the quadruple (a, b, c, d) counterclockwise
from the incoming under-arc a, a crossing is positive exactly when the
over-strand runs d -> b.  Under this convention

    X 1 3 2 4 / X 3 1 4 2

is the positive Hopf link (both crossings +1, linking number +1).

One genuine gap in the quadruple encoding: a two-arc component that
passes over every crossing it touches occupies the same slots under
either orientation.  The parser breaks the tie deterministically (the
smaller of the two arcs enters the over-strand at whichever of its two
crossings is listed first), and the canonical renumbering emits such
components so that re-parsing reproduces the chosen orientation.

Planarity of the input is trusted, never verified: a combinatorially
consistent code that is not planar-realizable parses fine and only
surfaces downstream, e.g. as an odd inter-component crossing sum.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Literal

Role = Literal["fiber", "singular"]

_ROLES = ("fiber", "singular")


class ParseError(Exception):
    """Rejected input text, with a 1-based line/column when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class DiagramError(Exception):
    """A structurally valid request that the diagram cannot satisfy."""


@dataclass(frozen=True)
class Violation:
    """One failed diagram invariant, as data rather than an exception."""

    code: str
    message: str
    arcs: tuple[int, ...] = ()
    crossings: tuple[int, ...] = ()


@dataclass(frozen=True)
class Crossing:
    """Arc ids (a, b, c, d) counterclockwise from the incoming under-arc."""

    a: int
    b: int
    c: int
    d: int

    def quad(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def over_pair(self) -> tuple[int, int]:
        return (self.b, self.d)


@dataclass(frozen=True, eq=True)
class LinkDiagram:
    """A validated oriented link diagram.

    ``over_entries[i]`` is the arc on which the over-strand enters
    crossing ``i``; together with the quadruple it pins the over-strand
    direction, hence the sign.  ``components`` holds each component's
    arc cycle in successor order starting from its smallest arc, in
    label order.  Instances built by hand (rather than by
    ``parse_diagram``) may violate the invariants; ``validate`` checks
    the combinatorial data independently of the derived fields.
    """

    crossings: tuple[Crossing, ...]
    unknot_arcs: tuple[int, ...] = ()
    over_entries: tuple[int, ...] = ()
    components: tuple[tuple[int, ...], ...] = ()
    successor: dict[int, int] = field(default_factory=dict)
    component_of: dict[int, int] = field(default_factory=dict)

    @property
    def n_arcs(self) -> int:
        return 2 * len(self.crossings) + len(self.unknot_arcs)

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(range(1, len(self.components) + 1))

    def arcs(self) -> tuple[int, ...]:
        return tuple(range(1, self.n_arcs + 1))

    def arcs_of(self, label: int) -> tuple[int, ...]:
        self._check_label(label)
        return self.components[label - 1]

    def is_crossingless(self, label: int) -> bool:
        cycle = self.arcs_of(label)
        return len(cycle) == 1 and cycle[0] in self.unknot_arcs

    def sign(self, index: int) -> int:
        return 1 if self.over_entries[index] == self.crossings[index].d else -1

    def over_exit(self, index: int) -> int:
        x = self.crossings[index]
        return x.b if self.over_entries[index] == x.d else x.d

    def _check_label(self, label: int) -> None:
        if not 1 <= label <= len(self.components):
            raise DiagramError(f"unknown component {label}")


@dataclass(frozen=True)
class FramedLink:
    """A link diagram with a framing integer on every component."""

    diagram: LinkDiagram
    framings: dict[int, int] = field(default_factory=dict)

    def framing(self, label: int) -> int:
        self.diagram._check_label(label)
        if label not in self.framings:
            raise DiagramError(f"component {label} has no framing")
        return self.framings[label]

    def with_framing(self, label: int, n: int) -> "FramedLink":
        self.diagram._check_label(label)
        updated = dict(self.framings)
        updated[label] = n
        return FramedLink(self.diagram, updated)


@dataclass(frozen=True)
class LabeledScene:
    """A diagram whose components are split into fiber and singular roles.

    Framings are defined exactly on the fiber components; the singular
    components are treated as unoriented, unframed circles.
    """

    diagram: LinkDiagram
    fiber: tuple[int, ...] = ()
    singular: tuple[int, ...] = ()
    framings: dict[int, int] = field(default_factory=dict)

    def fiber_link(self) -> FramedLink:
        sub = sublink(self.diagram, self.fiber)
        relabeled = {new: self.framings[old] for new, old in enumerate(sorted(self.fiber), start=1)}
        return FramedLink(sub, relabeled)


# ---------------------------------------------------------------------------
# tokenizer
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Record:
    kind: str
    values: tuple[str, ...]
    line: int
    column: int
    token_columns: tuple[int, ...]


def _tokenize(text: str) -> list[_Record]:
    records: list[_Record] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        hash_at = raw.find("#")
        content = raw if hash_at < 0 else raw[:hash_at]
        offset = 0
        for piece in content.split("/"):
            tokens = [(m.group(), offset + m.start() + 1) for m in re.finditer(r"\S+", piece)]
            if tokens:
                head, head_col = tokens[0]
                records.append(
                    _Record(
                        kind=head,
                        values=tuple(t for t, _ in tokens[1:]),
                        line=line_no,
                        column=head_col,
                        token_columns=tuple(c for _, c in tokens[1:]),
                    )
                )
            offset += len(piece) + 1
    return records


def _int_field(rec: _Record, idx: int, what: str, minimum: int | None = None) -> int:
    token = rec.values[idx]
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}", rec.line, rec.token_columns[idx])
    if minimum is not None and value < minimum:
        raise ParseError(f"{what} must be >= {minimum}, got {value}", rec.line, rec.token_columns[idx])
    return value


# ---------------------------------------------------------------------------
# succession solver
# ---------------------------------------------------------------------------


def _solve(
    crossings: tuple[Crossing, ...], unknot_arcs: tuple[int, ...]
) -> tuple[tuple[int, ...], dict[int, int], tuple[tuple[int, ...], ...], list[Violation]]:
    """Recover over-strand directions, successors, and components.

    Under slots have fixed roles (a consumes its arc, c emits it); each
    over pair is a two-way choice propagated through the constraint
    that every arc is consumed exactly once and emitted exactly once.
    Components whose arcs only ever sit in over slots are resolved by
    the ascending-numbering rule, with the documented first-crossing
    tie-break for the two-arc case.
    """

    violations: list[Violation] = []
    slots: dict[int, list[tuple[int, str]]] = {}
    for i, x in enumerate(crossings):
        for letter, arc in zip("abcd", x.quad()):
            slots.setdefault(arc, []).append((i, letter))

    n_expected = 2 * len(crossings) + len(unknot_arcs)
    seen = set(slots) | set(unknot_arcs)
    expected = set(range(1, n_expected + 1))
    if seen != expected:
        missing = sorted(expected - seen)
        extra = sorted(seen - expected)
        violations.append(
            Violation(
                "arc-range",
                f"arc ids must be exactly 1..{n_expected} (missing {missing}, unexpected {extra})",
                arcs=tuple(missing + extra),
            )
        )
    for arc in unknot_arcs:
        if arc in slots:
            violations.append(
                Violation("arc-multiplicity", f"arc {arc} is declared U but appears at a crossing", arcs=(arc,))
            )
    if len(set(unknot_arcs)) != len(unknot_arcs):
        dupes = sorted({a for a in unknot_arcs if unknot_arcs.count(a) > 1})
        violations.append(Violation("arc-multiplicity", f"duplicate U declaration for arcs {dupes}", arcs=tuple(dupes)))
    for arc, occ in sorted(slots.items()):
        if len(occ) != 2:
            violations.append(
                Violation(
                    "arc-multiplicity",
                    f"arc {arc} appears {len(occ)} time(s) in crossings, expected exactly 2",
                    arcs=(arc,),
                    crossings=tuple(i for i, _ in occ),
                )
            )
    if violations:
        return (), {}, (), violations

    # over_state[i]: which over slot the over-strand enters at crossing i.
    over_state: list[str | None] = [None] * len(crossings)

    def slot_role(i: int, letter: str) -> str | None:
        if letter == "a":
            return "consume"
        if letter == "c":
            return "emit"
        state = over_state[i]
        if state is None:
            return None
        return "consume" if letter == state else "emit"

    queue: deque[int] = deque(sorted(slots))
    queued = set(queue)
    while queue:
        arc = queue.popleft()
        queued.discard(arc)
        occ = slots[arc]
        roles = [slot_role(i, letter) for i, letter in occ]
        if roles[0] is not None and roles[1] is not None:
            if roles[0] == roles[1]:
                violations.append(
                    Violation(
                        "role-conflict",
                        f"arc {arc} is {roles[0]}d at both of its crossings",
                        arcs=(arc,),
                        crossings=tuple(i for i, _ in occ),
                    )
                )
            continue
        for known, unknown in ((0, 1), (1, 0)):
            if roles[known] is None or roles[unknown] is not None:
                continue
            i, letter = occ[unknown]
            want_role = "emit" if roles[known] == "consume" else "consume"
            over_state[i] = letter if want_role == "consume" else ("d" if letter == "b" else "b")
            for touched in crossings[i].over_pair():
                if touched not in queued:
                    queue.append(touched)
                    queued.add(touched)
    if violations:
        return (), {}, (), violations

    # Components made only of over slots: resolve via ascending numbering.
    undecided = [i for i, state in enumerate(over_state) if state is None]
    if undecided:
        parent: dict[int, int] = {}

        def find(a: int) -> int:
            while parent.setdefault(a, a) != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for i in undecided:
            b, d = crossings[i].over_pair()
            parent[find(b)] = find(d)
        groups: dict[int, list[int]] = {}
        for i in undecided:
            groups.setdefault(find(crossings[i].b), []).append(i)
        for members in groups.values():
            arcs = sorted({arc for i in members for arc in crossings[i].over_pair()})
            nxt = {arc: arcs[(j + 1) % len(arcs)] for j, arc in enumerate(arcs)}
            if len(arcs) == 2:
                first_crossing = min(slots[arcs[0]], key=lambda occ: occ)
                i, letter = first_crossing
                over_state[i] = letter
                j, other_letter = next(occ for occ in slots[arcs[0]] if occ != first_crossing)
                over_state[j] = "d" if other_letter == "b" else "b"
                continue
            for i in members:
                b, d = crossings[i].over_pair()
                if b == d:
                    over_state[i] = "d"
                elif nxt[b] == d:
                    over_state[i] = "b"
                elif nxt[d] == b:
                    over_state[i] = "d"
                else:
                    violations.append(
                        Violation(
                            "succession",
                            f"over pair ({b}, {d}) at crossing {i + 1} is not adjacent in its component",
                            arcs=(b, d),
                            crossings=(i,),
                        )
                    )
        if violations:
            return (), {}, (), violations

    successor: dict[int, int] = {arc: arc for arc in unknot_arcs}
    emitted_from: dict[int, int] = {}
    for i, x in enumerate(crossings):
        entry = x.b if over_state[i] == "b" else x.d
        exit_ = x.d if over_state[i] == "b" else x.b
        for src, dst in ((x.a, x.c), (entry, exit_)):
            if src in successor:
                violations.append(
                    Violation("role-conflict", f"arc {src} is consumed more than once", arcs=(src,), crossings=(i,))
                )
            else:
                successor[src] = dst
            emitted_from[dst] = emitted_from.get(dst, 0) + 1
    for arc, count in sorted(emitted_from.items()):
        if count > 1:
            violations.append(Violation("role-conflict", f"arc {arc} is emitted more than once", arcs=(arc,)))
    if violations:
        return (), {}, (), violations

    components: list[tuple[int, ...]] = []
    remaining = set(successor)
    while remaining:
        start = min(remaining)
        cycle = [start]
        cur = successor[start]
        while cur != start:
            if cur not in remaining or len(cycle) > len(successor):
                violations.append(Violation("succession", f"successor walk from arc {start} does not close up"))
                return (), {}, (), violations
            cycle.append(cur)
            cur = successor[cur]
        if cycle != sorted(cycle):
            violations.append(
                Violation(
                    "succession",
                    f"component containing arc {start} does not follow ascending arc numbering",
                    arcs=tuple(sorted(cycle)),
                )
            )
        remaining.difference_update(cycle)
        components.append(tuple(cycle))
    if violations:
        return (), {}, (), violations

    components.sort(key=lambda cyc: cyc[0])
    over_entries = tuple(
        crossings[i].b if over_state[i] == "b" else crossings[i].d for i in range(len(crossings))
    )
    return over_entries, successor, tuple(components), []


def validate(d: LinkDiagram) -> list[Violation]:
    """Check the diagram invariants from the combinatorial data alone."""

    _, _, _, violations = _solve(d.crossings, d.unknot_arcs)
    return violations


def _build_diagram(crossings: tuple[Crossing, ...], unknot_arcs: tuple[int, ...]) -> LinkDiagram:
    over_entries, successor, components, violations = _solve(crossings, unknot_arcs)
    if violations:
        first = violations[0]
        raise ParseError("; ".join(v.message for v in violations)) from None
    component_of = {}
    for label, cycle in enumerate(components, start=1):
        for arc in cycle:
            component_of[arc] = label
    return LinkDiagram(
        crossings=crossings,
        unknot_arcs=tuple(sorted(unknot_arcs)),
        over_entries=over_entries,
        components=components,
        successor=successor,
        component_of=component_of,
    )


# ---------------------------------------------------------------------------
# file parsing
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ParsedFile:
    diagram: LinkDiagram
    framings: dict[int, int]
    roles: dict[int, Role]


def parse_file(text: str) -> ParsedFile:
    """Parse a full input file: diagram plus any framing and role lines."""

    crossings: list[Crossing] = []
    unknots: list[int] = []
    framing_records: list[tuple[_Record, int, int]] = []
    role_records: list[tuple[_Record, int, str]] = []
    for rec in _tokenize(text):
        if rec.kind == "X":
            if len(rec.values) != 4:
                raise ParseError(f"X record needs 4 arc ids, got {len(rec.values)}", rec.line, rec.column)
            quad = tuple(_int_field(rec, i, "arc id", minimum=1) for i in range(4))
            crossings.append(Crossing(*quad))
        elif rec.kind == "U":
            if len(rec.values) != 1:
                raise ParseError(f"U record needs 1 arc id, got {len(rec.values)}", rec.line, rec.column)
            unknots.append(_int_field(rec, 0, "arc id", minimum=1))
        elif rec.kind == "F":
            if len(rec.values) != 2:
                raise ParseError(f"F record needs component and framing, got {len(rec.values)}", rec.line, rec.column)
            comp = _int_field(rec, 0, "component label", minimum=1)
            framing_records.append((rec, comp, _int_field(rec, 1, "framing")))
        elif rec.kind == "R":
            if len(rec.values) != 2:
                raise ParseError(f"R record needs component and role, got {len(rec.values)}", rec.line, rec.column)
            comp = _int_field(rec, 0, "component label", minimum=1)
            role = rec.values[1]
            if role not in _ROLES:
                raise ParseError(f"role must be one of {_ROLES}, got {role!r}", rec.line, rec.token_columns[1])
            role_records.append((rec, comp, role))
        else:
            raise ParseError(f"unknown record kind {rec.kind!r}", rec.line, rec.column)

    diagram = _build_diagram(tuple(crossings), tuple(unknots))
    n = len(diagram.components)
    framings: dict[int, int] = {}
    for rec, comp, n_framing in framing_records:
        if comp > n:
            raise ParseError(f"framing for unknown component {comp} (diagram has {n})", rec.line, rec.column)
        if comp in framings:
            raise ParseError(f"duplicate framing line for component {comp}", rec.line, rec.column)
        framings[comp] = n_framing
    roles: dict[int, Role] = {}
    for rec, comp, role in role_records:
        if comp > n:
            raise ParseError(f"role for unknown component {comp} (diagram has {n})", rec.line, rec.column)
        if comp in roles:
            raise ParseError(f"duplicate role line for component {comp}", rec.line, rec.column)
        roles[comp] = role  # type: ignore[assignment]
    return ParsedFile(diagram, framings, roles)


def parse_diagram(text: str) -> LinkDiagram:
    """Parse the diagram, tolerating (but checking) framing/role lines."""

    return parse_file(text).diagram


def parse_framed_link(text: str) -> FramedLink:
    parsed = parse_file(text)
    missing = [label for label in parsed.diagram.labels if label not in parsed.framings]
    if missing:
        raise ParseError(f"missing framing for component(s) {missing}")
    return FramedLink(parsed.diagram, parsed.framings)


def parse_scene(text: str) -> LabeledScene:
    parsed = parse_file(text)
    missing_roles = [label for label in parsed.diagram.labels if label not in parsed.roles]
    if missing_roles:
        raise ParseError(f"missing role for component(s) {missing_roles}")
    fiber = tuple(label for label in parsed.diagram.labels if parsed.roles[label] == "fiber")
    singular = tuple(label for label in parsed.diagram.labels if parsed.roles[label] == "singular")
    unframed = [label for label in fiber if label not in parsed.framings]
    if unframed:
        raise ParseError(f"missing framing for fiber component(s) {unframed}")
    framed_singular = [label for label in singular if label in parsed.framings]
    if framed_singular:
        raise ParseError(f"framing given for singular component(s) {framed_singular}")
    return LabeledScene(parsed.diagram, fiber, singular, parsed.framings)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def serialize(d: LinkDiagram) -> str:
    lines = [f"X {x.a} {x.b} {x.c} {x.d}" for x in d.crossings]
    lines.extend(f"U {arc}" for arc in sorted(d.unknot_arcs))
    return "\n".join(lines) + ("\n" if lines else "")


def serialize_framed_link(fl: FramedLink) -> str:
    body = serialize(fl.diagram)
    lines = [f"F {comp} {fl.framings[comp]}" for comp in sorted(fl.framings)]
    return body + "\n".join(lines) + ("\n" if lines else "")


def serialize_scene(scene: LabeledScene) -> str:
    body = serialize(scene.diagram)
    lines = [f"F {comp} {scene.framings[comp]}" for comp in sorted(scene.framings)]
    roles = {**{c: "fiber" for c in scene.fiber}, **{c: "singular" for c in scene.singular}}
    lines.extend(f"R {comp} {roles[comp]}" for comp in sorted(roles))
    return body + "\n".join(lines) + ("\n" if lines else "")


# ---------------------------------------------------------------------------
# rebuilding / canonical renumbering
# ---------------------------------------------------------------------------


class _Node:
    """Mutable stand-in for one crossing while a diagram is being edited."""

    __slots__ = ("sign",)

    def __init__(self, sign: int):
        self.sign = sign


_Passage = tuple[_Node, str]


class _Builder:
    """Diagram as per-component passage lists; arcs exist only on emit.

    Each component is the cyclic list of its crossing passages in
    orientation order; the arc ids are regenerated canonically when the
    edited diagram is emitted, so structural surgery never has to
    maintain arc numbering by hand.
    """

    def __init__(self, comps: list[list[_Passage]]):
        self.comps = comps

    @classmethod
    def from_diagram(cls, d: LinkDiagram) -> tuple["_Builder", list[_Node]]:
        nodes = [_Node(d.sign(i)) for i in range(len(d.crossings))]
        consumer: dict[int, _Passage] = {}
        for i, x in enumerate(d.crossings):
            consumer[x.a] = (nodes[i], "under")
            consumer[d.over_entries[i]] = (nodes[i], "over")
        comps: list[list[_Passage]] = []
        for cycle in d.components:
            if len(cycle) == 1 and cycle[0] in d.unknot_arcs:
                comps.append([])
            else:
                comps.append([consumer[arc] for arc in cycle])
        return cls(comps), nodes

    def locate(self, d: LinkDiagram, arc: int) -> tuple[int, int]:
        if arc not in d.component_of:
            raise DiagramError(f"unknown arc {arc}")
        label = d.component_of[arc]
        return label - 1, d.components[label - 1].index(arc)

    def to_diagram(self) -> LinkDiagram:
        sizes = [max(len(lst), 1) for lst in self.comps]
        bases: list[int] = []
        total = 1
        for size in sizes:
            bases.append(total)
            total += size
        arc_of: dict[tuple[int, int], int] = {}
        for ci, lst in enumerate(self.comps):
            for j in range(sizes[ci]):
                arc_of[(ci, j)] = bases[ci] + j

        u_in: dict[_Node, int] = {}
        u_out: dict[_Node, int] = {}
        o_in: dict[_Node, int] = {}
        o_out: dict[_Node, int] = {}

        def fill(ci: int) -> None:
            lst = self.comps[ci]
            k = len(lst)
            for j, (node, role) in enumerate(lst):
                a_in = arc_of[(ci, j)]
                a_out = arc_of[(ci, (j + 1) % k)]
                if role == "under":
                    u_in[node] = a_in
                    u_out[node] = a_out
                else:
                    o_in[node] = a_in
                    o_out[node] = a_out

        for ci in range(len(self.comps)):
            fill(ci)
        nodes = sorted(u_in, key=lambda node: u_in[node])
        position = {node: p for p, node in enumerate(nodes)}

        # Components that never go under carry no under-arc anchor, so
        # their rotation is pinned to the earliest crossing instead;
        # that keeps serialization and the parser's tie-break aligned.
        for ci, lst in enumerate(self.comps):
            if not lst or any(role == "under" for _, role in lst):
                continue
            k = len(lst)
            best = min(range(k), key=lambda j: position[lst[j][0]])
            if best:
                for j in range(k):
                    arc_of[(ci, (best + j) % k)] = bases[ci] + j
                fill(ci)

        crossings = []
        over_entries = []
        for node in nodes:
            if node.sign > 0:
                crossings.append(Crossing(u_in[node], o_out[node], u_out[node], o_in[node]))
            else:
                crossings.append(Crossing(u_in[node], o_in[node], u_out[node], o_out[node]))
            over_entries.append(o_in[node])
        unknots = tuple(bases[ci] for ci, lst in enumerate(self.comps) if not lst)
        components = tuple(tuple(range(bases[ci], bases[ci] + sizes[ci])) for ci in range(len(self.comps)))
        successor: dict[int, int] = {}
        component_of: dict[int, int] = {}
        for label, cycle in enumerate(components, start=1):
            for j, arc in enumerate(cycle):
                successor[arc] = cycle[(j + 1) % len(cycle)]
                component_of[arc] = label
        return LinkDiagram(
            crossings=tuple(crossings),
            unknot_arcs=unknots,
            over_entries=tuple(over_entries),
            components=components,
            successor=successor,
            component_of=component_of,
        )


def canonical_form(d: LinkDiagram) -> LinkDiagram:
    """Renumber arcs canonically; component labels are preserved."""

    builder, _ = _Builder.from_diagram(d)
    return builder.to_diagram()


# ---------------------------------------------------------------------------
# structural operations
# ---------------------------------------------------------------------------


def crossing_sign(d: LinkDiagram, x: Crossing | int) -> int:
    """+1 when the over-strand runs d -> b, -1 when it runs b -> d."""

    if isinstance(x, Crossing):
        try:
            index = d.crossings.index(x)
        except ValueError:
            raise DiagramError(f"crossing {x.quad()} is not part of the diagram") from None
    else:
        if not 0 <= x < len(d.crossings):
            raise DiagramError(f"crossing index {x} out of range")
        index = x
    return d.sign(index)


def reverse_component(d: LinkDiagram, label: int) -> LinkDiagram:
    """Reverse one component's orientation.

    Signs flip at every crossing where the component meets another
    strand exactly once; self-crossings keep their sign.
    """

    d._check_label(label)
    builder, _ = _Builder.from_diagram(d)
    lst = builder.comps[label - 1]
    counts: dict[_Node, int] = {}
    for node, _ in lst:
        counts[node] = counts.get(node, 0) + 1
    for node, count in counts.items():
        if count == 1:
            node.sign = -node.sign
    builder.comps[label - 1] = list(reversed(lst))
    return builder.to_diagram()


def mirror(d: LinkDiagram) -> LinkDiagram:
    """Mirror image: every crossing sign flips, orientations stay."""

    builder, nodes = _Builder.from_diagram(d)
    for i, node in enumerate(nodes):
        node.sign = -d.sign(i)
    return builder.to_diagram()


def sublink(d: LinkDiagram, labels: Iterable[int]) -> LinkDiagram:
    """Keep the selected components; crossings with deleted strands are
    smoothed away by concatenating the surviving strand."""

    wanted = sorted(set(labels))
    for label in wanted:
        d._check_label(label)
    builder, nodes = _Builder.from_diagram(d)
    keep = set(wanted)
    node_comps: dict[_Node, list[int]] = {}
    for ci, lst in enumerate(builder.comps):
        for node, _ in lst:
            node_comps.setdefault(node, []).append(ci + 1)
    surviving = {node for node, comps in node_comps.items() if all(c in keep for c in comps)}
    new_comps = []
    for label in wanted:
        lst = builder.comps[label - 1]
        new_comps.append([p for p in lst if p[0] in surviving])
    return _Builder(new_comps).to_diagram()


def disjoint_union(d1: LinkDiagram, d2: LinkDiagram) -> LinkDiagram:
    """Split union; d2's components are relabeled after d1's."""

    b1, _ = _Builder.from_diagram(d1)
    b2, _ = _Builder.from_diagram(d2)
    return _Builder(b1.comps + b2.comps).to_diagram()


def permute_components(d: LinkDiagram, order: Iterable[int]) -> LinkDiagram:
    """Renumber arcs so the components take labels in the given order.

    ``order`` lists the current labels; the component listed first
    becomes component 1 in the result, and so on.
    """

    seq = list(order)
    if sorted(seq) != list(d.labels):
        raise DiagramError(f"order must be a permutation of {list(d.labels)}")
    builder, _ = _Builder.from_diagram(d)
    return _Builder([builder.comps[label - 1] for label in seq]).to_diagram()
