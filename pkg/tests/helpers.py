"""Shared test machinery: fixture access, an independent linking-number
oracle, and a seeded random Reidemeister-move walker."""

from __future__ import annotations

import random
from pathlib import Path

from fiberlink import (
    LinkDiagram,
    R1Minus,
    R1Plus,
    R2Minus,
    R2Plus,
    R3,
    apply_reidemeister,
    find_bigons,
    find_kinks,
    find_triangles,
    parse_diagram,
)

FIXTURES = Path(__file__).resolve().parents[1] / "src" / "fiberlink" / "fixtures"


def fixture_text(name: str) -> str:
    return (FIXTURES / name).read_text(encoding="utf-8")


def fixture_diagram(name: str) -> LinkDiagram:
    return parse_diagram(fixture_text(name))


def lk_oracle(d: LinkDiagram, i: int, j: int) -> int:
    """Linking number of components i and j counted the other way:
    signed crossings where i passes over j, not halved."""

    total = 0
    for index, x in enumerate(d.crossings):
        over = d.component_of[d.over_entries[index]]
        under = d.component_of[x.a]
        if over == i and under == j:
            total += d.sign(index)
    return total


def random_move(d: LinkDiagram, rng: random.Random, max_crossings: int = 60):
    """Pick one legal move, biased to shrink near the crossing cap."""

    n = len(d.crossings)
    kinds = []
    if n + 1 <= max_crossings:
        kinds += ["r1+"] * 2
    if n + 2 <= max_crossings:
        kinds += ["r2+"] * 2
    kinks = find_kinks(d)
    if kinks:
        kinds += ["r1-"] * (2 if n * 2 > max_crossings else 1)
    bigons = find_bigons(d)
    if bigons:
        kinds += ["r2-"] * (2 if n * 2 > max_crossings else 1)
    triangles = find_triangles(d)
    if triangles:
        kinds += ["r3"] * 3
    kind = rng.choice(kinds)
    arcs = d.arcs()
    if kind == "r1+":
        return R1Plus(arc=rng.choice(arcs), sign=rng.choice((1, -1)), over_first=rng.random() < 0.5)
    if kind == "r1-":
        return R1Minus(crossing=rng.choice(kinks))
    if kind == "r2+":
        over = rng.choice(arcs)
        under = rng.choice([a for a in arcs if a != over] or [over])
        if over == under:
            return R1Plus(arc=over, sign=1)
        return R2Plus(
            over_arc=over,
            under_arc=under,
            lead_sign=rng.choice((1, -1)),
            antiparallel=rng.random() < 0.5,
        )
    if kind == "r2-":
        return R2Minus(*rng.choice(bigons))
    return R3(*rng.choice(triangles))


def move_orbit(seed_name: str, rng: random.Random, steps: int, max_crossings: int = 60):
    """Yield (diagram, move_count_from_seed) along a random move walk,
    restarting the count every 50 moves so every yielded diagram is
    between 1 and 50 moves away from the seed."""

    d = fixture_diagram(seed_name)
    base = d
    for step in range(steps):
        if step and step % 50 == 0:
            base = d
        d = apply_reidemeister(d, random_move(d, rng, max_crossings))
        yield d, (step % 50) + 1


SEEDS = ("hopf.pd", "trefoil.pd", "chain.pd", "unknot.pd", "hopf_fibers.pd", "unknot_split_scene.pd")


def build_corpus(total: int, seed: int = 20260818, max_crossings: int = 60) -> list[LinkDiagram]:
    """Deterministic corpus of diagrams reachable from the seed corpus
    by 1 to 50 random moves each."""

    rng = random.Random(seed)
    per_seed = total // len(SEEDS) + 1
    corpus: list[LinkDiagram] = []
    for name in SEEDS:
        for d, _ in move_orbit(name, rng, per_seed, max_crossings):
            corpus.append(d)
            if len(corpus) >= total:
                return corpus
    return corpus
