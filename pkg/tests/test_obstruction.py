"""Framing obstruction bits and the component-count parity identity."""

from __future__ import annotations

import random

import pytest

from fiberlink import (
    DiagramError,
    FramedLink,
    ParityStatus,
    framing_change_delta,
    framing_parity,
    hopf_invariant,
    linking_matrix,
    obstruction_vector,
    parse_diagram,
    parse_framed_link,
    parity_identity_check,
)

from helpers import build_corpus, fixture_text


def _balanced_framings(d, rng):
    """Random framings summing to minus the pairwise linking total."""

    lm = linking_matrix(d)
    labels = list(d.labels)
    framings = {i: rng.randint(-5, 5) for i in labels}
    gap = -lm.off_diagonal_total() - sum(framings.values())
    framings[labels[0]] += gap
    return framings


def test_zero_framed_unknot_is_obstructed():
    fl = parse_framed_link(fixture_text("unknot0.pd"))
    vec = obstruction_vector(fl)
    assert vec.a == {1: 1}
    assert vec.total_parity == 1
    assert vec.as_pairs() == [(1, 1)]


def test_hopf_fiber_pair_unobstructed():
    fl = parse_framed_link(fixture_text("hopf_fibers.pd"))
    vec = obstruction_vector(fl)
    assert vec.a == {1: 0, 2: 0}
    assert vec.total_parity == 0


def test_framing_parity_depends_on_framing_only():
    # Two positive kinks on an unknot: the curl count must not leak
    # into the obstruction bit.
    d = parse_diagram("X 1 3 2 2 / X 3 1 4 4")
    assert len(d.components) == 1
    assert linking_matrix(d).entry(1, 1) == 2
    for f, bit in ((2, 1), (1, 0), (0, 1), (-1, 0), (-4, 1)):
        assert framing_parity(FramedLink(d, {1: f}), 1) == bit


def test_parity_identity_on_fixtures():
    fibers = parse_framed_link(fixture_text("hopf_fibers.pd"))
    assert parity_identity_check(fibers) == ParityStatus.HOLDS
    unknot = parse_framed_link(fixture_text("unknot0.pd"))
    assert parity_identity_check(unknot) == ParityStatus.HOLDS
    shifted = fibers.with_framing(1, 2)
    assert hopf_invariant(shifted) == 1
    assert parity_identity_check(shifted) == ParityStatus.NOT_APPLICABLE


def test_parity_identity_on_random_null_cobordant_links():
    rng = random.Random(51)
    held = 0
    for d in build_corpus(150, seed=52):
        fl = FramedLink(d, _balanced_framings(d, rng))
        assert hopf_invariant(fl) == 0
        assert parity_identity_check(fl) == ParityStatus.HOLDS
        held += 1
    assert held == 150


def test_framing_change_odd_shift_flips_bit():
    fl = parse_framed_link(fixture_text("hopf_fibers.pd"))
    change = framing_change_delta(fl, 1, 2)
    assert change.delta == 1
    assert change.vector.a == {1: 1, 2: 0}
    assert change.hopf == 1
    assert not change.null_cobordant
    assert change.old_framing == 1
    assert "rechecked" in change.note


def test_framing_change_even_shift_keeps_bit():
    fl = parse_framed_link(fixture_text("hopf_fibers.pd"))
    change = framing_change_delta(fl, 1, 3)
    assert change.delta == 0
    assert change.vector.a == {1: 0, 2: 0}
    assert change.hopf == 2
    assert not change.null_cobordant


def test_framing_change_unknown_component():
    fl = parse_framed_link(fixture_text("unknot0.pd"))
    with pytest.raises(DiagramError):
        framing_change_delta(fl, 2, 0)


def test_obstruction_restriction_consistency():
    # Bits are per-component, so restricting the link restricts the
    # vector untouched.
    fl = parse_framed_link(fixture_text("hopf_fibers.pd"))
    full = obstruction_vector(fl)
    for comp in (1, 2):
        assert framing_parity(fl, comp) == full.a[comp]
