"""Diagram invariants: linking matrix, Seifert data, Hopf invariant."""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import DiagramError, FramedLink, LinkDiagram, sublink


@dataclass(frozen=True)
class LinkingMatrix:
    """Symmetric integer matrix over component labels.

    Off-diagonal (i, j) is the linking number of components i and j;
    diagonal (i, i) is the self-writhe of component i in this diagram.
    """

    labels: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        return self.rows[self.labels.index(i)][self.labels.index(j)]

    def off_diagonal_row_sum(self, i: int) -> int:
        r = self.labels.index(i)
        return sum(v for c, v in enumerate(self.rows[r]) if c != r)

    def off_diagonal_total(self) -> int:
        # Ordered pairs: every unordered pair counted twice.
        return sum(self.off_diagonal_row_sum(i) for i in self.labels)


@dataclass(frozen=True)
class SeifertData:
    circle_count: int
    crossing_count: int
    euler_characteristic: int


def linking_matrix(d: LinkDiagram) -> LinkingMatrix:
    """Signed crossing sums: halved between distinct components.

    An odd inter-component sum cannot come from a planar diagram; the
    input format trusts planarity, so this is where a non-realizable
    code finally surfaces, as a DiagramError.
    """

    n = len(d.components)
    acc = [[0] * n for _ in range(n)]
    for i in range(len(d.crossings)):
        under = d.component_of[d.crossings[i].a]
        over = d.component_of[d.over_entries[i]]
        acc[under - 1][over - 1] += d.sign(i)
        if under != over:
            acc[over - 1][under - 1] += d.sign(i)
    rows = []
    for r in range(n):
        row = []
        for c in range(n):
            if r == c:
                row.append(acc[r][c])
            else:
                if acc[r][c] % 2:
                    raise DiagramError(
                        f"odd signed crossing sum between components {r + 1} and {c + 1}; "
                        "the code is not planar-realizable"
                    )
                row.append(acc[r][c] // 2)
        rows.append(tuple(row))
    return LinkingMatrix(d.labels, tuple(rows))


def self_crossing_count(d: LinkDiagram, comp: int) -> int:
    return len(sublink(d, {comp}).crossings)


def seifert(d: LinkDiagram) -> SeifertData:
    """Orientation-respecting smoothing of every crossing.

    Each crossing reroutes the incoming under-arc to the over-exit and
    the incoming over-arc to the under-exit; the resulting cycles are
    the Seifert circles.  A crossingless component is one circle.
    """

    succ: dict[int, int] = {arc: arc for arc in d.unknot_arcs}
    for i, x in enumerate(d.crossings):
        succ[x.a] = d.over_exit(i)
        succ[d.over_entries[i]] = x.c
    circles = 0
    remaining = set(succ)
    while remaining:
        start = remaining.pop()
        cur = succ[start]
        while cur != start:
            remaining.remove(cur)
            cur = succ[cur]
        circles += 1
    c = len(d.crossings)
    return SeifertData(circle_count=circles, crossing_count=c, euler_characteristic=circles - c)


def hopf_invariant(fl: FramedLink) -> int:
    """Framed cobordism class in the 3-sphere: framings plus all
    ordered pairwise linking numbers."""

    lm = linking_matrix(fl.diagram)
    return sum(fl.framing(s) for s in fl.diagram.labels) + lm.off_diagonal_total()


def is_framed_null_cobordant(fl: FramedLink) -> bool:
    return hopf_invariant(fl) == 0
