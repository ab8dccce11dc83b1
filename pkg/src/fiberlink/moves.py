"""Reidemeister moves as surgery on per-component passage lists.

Every move edits the passage lists of a ``_Builder`` and re-emits the
diagram, so arc ids always come out canonically renumbered and the
component count and labels are preserved by construction.  Site
legality is purely combinatorial: a kink is a crossing whose two
passages are consecutive on one strand, a cancelable bigon is a pair of
opposite-sign crossings whose over passages are consecutive and whose
under passages are consecutive, and a slide triangle is a strand
passing over two crossings consecutively whose two under-partners meet
each other at a third crossing adjacent along both partner strands.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import DiagramError, LinkDiagram, _Builder, _Node, _Passage


@dataclass(frozen=True)
class R1Plus:
    """Add a kink on ``arc`` with the given crossing sign.

    ``over_first`` picks which passage of the new crossing comes first
    along the strand; together with the sign it covers all four kink
    shapes.
    """

    arc: int
    sign: int = 1
    over_first: bool = False


@dataclass(frozen=True)
class R1Minus:
    """Remove the kink at crossing index ``crossing``."""

    crossing: int


@dataclass(frozen=True)
class R2Plus:
    """Push the strand at ``over_arc`` across the strand at ``under_arc``.

    The first created crossing along the over-strand gets ``lead_sign``,
    the second the opposite sign.  ``antiparallel`` reverses the order
    in which the under-strand meets the two new crossings.
    """

    over_arc: int
    under_arc: int
    lead_sign: int = 1
    antiparallel: bool = False


@dataclass(frozen=True)
class R2Minus:
    """Cancel the bigon formed by the two crossings (by index)."""

    crossing_1: int
    crossing_2: int


@dataclass(frozen=True)
class R3:
    """Slide the strand passing over crossings ``top_1`` then ``top_2``
    across the crossing ``lower`` between its two under-partners."""

    top_1: int
    top_2: int
    lower: int


Move = R1Plus | R1Minus | R2Plus | R2Minus | R3


def _check_sign(sign: int) -> int:
    if sign not in (1, -1):
        raise DiagramError(f"crossing sign must be +1 or -1, got {sign}")
    return sign


def _check_index(d: LinkDiagram, index: int) -> int:
    if not 0 <= index < len(d.crossings):
        raise DiagramError(f"crossing index {index} out of range 0..{len(d.crossings) - 1}")
    return index


def _find_passage(comps: list[list[_Passage]], passage: _Passage) -> tuple[int, int]:
    for ci, lst in enumerate(comps):
        for pos, entry in enumerate(lst):
            if entry == passage:
                return ci, pos
    raise DiagramError("passage not found")


def _adjacent(comps: list[list[_Passage]], p: _Passage, q: _Passage) -> tuple[int, int, int] | None:
    """Positions of p and q when they are cyclically consecutive, else None."""

    ci1, p1 = _find_passage(comps, p)
    ci2, p2 = _find_passage(comps, q)
    if ci1 != ci2:
        return None
    k = len(comps[ci1])
    if (p1 + 1) % k == p2 or (p2 + 1) % k == p1:
        return ci1, p1, p2
    return None


def _delete(comps: list[list[_Passage]], positions: list[tuple[int, int]]) -> None:
    for ci, pos in sorted(positions, reverse=True):
        del comps[ci][pos]


def apply_reidemeister(d: LinkDiagram, move: Move) -> LinkDiagram:
    """Apply one move at the given site; raises DiagramError when the
    site parameters do not identify a legal location."""

    builder, nodes = _Builder.from_diagram(d)
    comps = builder.comps

    if isinstance(move, R1Plus):
        _check_sign(move.sign)
        ci, pos = builder.locate(d, move.arc)
        node = _Node(move.sign)
        pair = [(node, "over"), (node, "under")] if move.over_first else [(node, "under"), (node, "over")]
        comps[ci][pos:pos] = pair

    elif isinstance(move, R1Minus):
        node = nodes[_check_index(d, move.crossing)]
        hit = _adjacent(comps, (node, "under"), (node, "over"))
        if hit is None:
            raise DiagramError(f"crossing {move.crossing} is not a kink")
        ci, p1, p2 = hit
        _delete(comps, [(ci, p1), (ci, p2)])

    elif isinstance(move, R2Plus):
        _check_sign(move.lead_sign)
        if move.over_arc == move.under_arc:
            raise DiagramError("cannot push an arc across itself")
        ci_o, pos_o = builder.locate(d, move.over_arc)
        ci_u, pos_u = builder.locate(d, move.under_arc)
        first = _Node(move.lead_sign)
        second = _Node(-move.lead_sign)
        over_pair = [(first, "over"), (second, "over")]
        under_pair = [(first, "under"), (second, "under")]
        if move.antiparallel:
            under_pair.reverse()
        inserts = [(ci_o, pos_o, over_pair), (ci_u, pos_u, under_pair)]
        for ci, pos, pair in sorted(inserts, key=lambda t: (t[0], t[1]), reverse=True):
            comps[ci][pos:pos] = pair

    elif isinstance(move, R2Minus):
        n1 = nodes[_check_index(d, move.crossing_1)]
        n2 = nodes[_check_index(d, move.crossing_2)]
        if n1 is n2:
            raise DiagramError("a bigon needs two distinct crossings")
        if n1.sign == n2.sign:
            raise DiagramError("bigon crossings have equal signs, not cancelable")
        over = _adjacent(comps, (n1, "over"), (n2, "over"))
        under = _adjacent(comps, (n1, "under"), (n2, "under"))
        if over is None or under is None:
            raise DiagramError("crossings do not bound a cancelable bigon")
        oc, op1, op2 = over
        uc, up1, up2 = under
        _delete(comps, [(oc, op1), (oc, op2), (uc, up1), (uc, up2)])

    elif isinstance(move, R3):
        ix, iy, iz = (_check_index(d, i) for i in (move.top_1, move.top_2, move.lower))
        if len({ix, iy, iz}) != 3:
            raise DiagramError("a slide triangle needs three distinct crossings")
        nx, ny, nz = nodes[ix], nodes[iy], nodes[iz]
        top = _adjacent(comps, (nx, "over"), (ny, "over"))
        if top is None:
            raise DiagramError("top strand does not pass over the two crossings consecutively")
        for z_at_x, z_at_y in (("over", "under"), ("under", "over")):
            side_x = _adjacent(comps, (nx, "under"), (nz, z_at_x))
            side_y = _adjacent(comps, (ny, "under"), (nz, z_at_y))
            if side_x is not None and side_y is not None:
                break
        else:
            raise DiagramError("lower crossing is not adjacent to both under-partners")
        for ci, p1, p2 in (top, side_x, side_y):
            comps[ci][p1], comps[ci][p2] = comps[ci][p2], comps[ci][p1]

    else:
        raise DiagramError(f"unknown move {move!r}")

    return builder.to_diagram()


# ---------------------------------------------------------------------------
# site detection
# ---------------------------------------------------------------------------


def find_kinks(d: LinkDiagram) -> list[int]:
    """Crossing indices usable as R1Minus sites."""

    builder, nodes = _Builder.from_diagram(d)
    index_of = {node: i for i, node in enumerate(nodes)}
    out = set()
    for lst in builder.comps:
        k = len(lst)
        for pos in range(k):
            node, _ = lst[pos]
            nxt, _ = lst[(pos + 1) % k]
            if node is nxt:
                out.add(index_of[node])
    return sorted(out)


def find_bigons(d: LinkDiagram) -> list[tuple[int, int]]:
    """Crossing index pairs usable as R2Minus sites."""

    builder, nodes = _Builder.from_diagram(d)
    comps = builder.comps
    index_of = {node: i for i, node in enumerate(nodes)}
    out = set()
    for lst in comps:
        k = len(lst)
        for pos in range(k):
            n1, r1 = lst[pos]
            n2, r2 = lst[(pos + 1) % k]
            if n1 is n2 or r1 != "over" or r2 != "over" or n1.sign == n2.sign:
                continue
            if _adjacent(comps, (n1, "under"), (n2, "under")) is not None:
                out.add(tuple(sorted((index_of[n1], index_of[n2]))))
    return sorted(out)


def find_triangles(d: LinkDiagram) -> list[tuple[int, int, int]]:
    """(top_1, top_2, lower) triples usable as R3 sites."""

    builder, nodes = _Builder.from_diagram(d)
    comps = builder.comps
    index_of = {node: i for i, node in enumerate(nodes)}

    def neighbors(passage: _Passage) -> list[_Passage]:
        ci, pos = _find_passage(comps, passage)
        lst = comps[ci]
        k = len(lst)
        if k == 1:
            return []
        return [lst[(pos - 1) % k], lst[(pos + 1) % k]]

    out = set()
    for lst in comps:
        k = len(lst)
        for pos in range(k):
            nx, r1 = lst[pos]
            ny, r2 = lst[(pos + 1) % k]
            if nx is ny or r1 != "over" or r2 != "over":
                continue
            for nz, z_at_x in neighbors((nx, "under")):
                if nz is nx or nz is ny:
                    continue
                z_at_y = "under" if z_at_x == "over" else "over"
                if any(p == (nz, z_at_y) for p in neighbors((ny, "under"))):
                    out.add((index_of[nx], index_of[ny], index_of[nz]))
    return sorted(out)
