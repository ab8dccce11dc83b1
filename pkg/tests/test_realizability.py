"""Singular-set realizability, witnesses, and the submersion criterion."""

from __future__ import annotations

import pytest

from fiberlink import (
    DiagramError,
    FramedLink,
    Verdict,
    chillingworth_report,
    hp_submersion_check,
    hopf_invariant,
    mirror,
    parse_diagram,
    parse_framed_link,
    parse_scene,
    realize_singular,
    reverse_component,
    serialize_scene,
    split_possible,
    witness_scene,
    witness_singular,
)
from fiberlink.realizability import (
    NOTE_EMPTY_SINGULAR_PLANE,
    NOTE_FIBER_NOT_NULL_COBORDANT,
    NOTE_FOLD_TYPES,
    NOTE_GROUP_NOT_NULL_COBORDANT,
    NOTE_GROUPS_HYPOTHESIS,
    NOTE_MATCH,
    NOTE_MISMATCH,
    NOTE_SPLIT_CERTIFICATE,
)

from helpers import build_corpus, fixture_diagram, fixture_text


def _scene(text: str):
    return parse_scene(text)


def test_meridian_scene_realizable():
    report = realize_singular(_scene(fixture_text("meridian_scene.pd")))
    assert report.verdict is Verdict.REALIZABLE
    assert report.obstruction.a == {1: 1}
    assert report.j_class == {1: 1}
    assert report.mismatches == ()
    assert report.notes == (NOTE_MATCH,)


def test_split_unknot_cannot_kill_the_obstruction():
    report = realize_singular(_scene(fixture_text("unknot_split_scene.pd")))
    assert report.verdict is Verdict.NOT_REALIZABLE
    assert report.obstruction.a == {1: 1}
    assert report.j_class == {1: 0}
    assert report.mismatches == (1,)
    assert NOTE_MISMATCH in report.notes


def test_hopf_pair_with_split_unknot_realizable():
    report = realize_singular(_scene(fixture_text("hopf_pair_scene.pd")))
    assert report.verdict is Verdict.REALIZABLE
    assert report.obstruction.a == {1: 0, 2: 0}
    assert report.j_class == {1: 0, 2: 0}
    assert report.notes == (NOTE_MATCH,)


def test_plane_needs_null_cobordant_fiber():
    text = "X 1 3 2 4 / X 4 2 3 1 / U 5 / F 1 2 / F 2 1 / R 1 fiber / R 2 fiber / R 3 singular"
    report = realize_singular(_scene(text))
    assert report.verdict is Verdict.NOT_APPLICABLE
    assert report.notes == (NOTE_FIBER_NOT_NULL_COBORDANT,)
    assert report.j_class == {}


def test_sphere_skips_null_cobordism_check():
    text = "X 1 3 2 4 / X 4 2 3 1 / U 5 / F 1 2 / F 2 1 / R 1 fiber / R 2 fiber / R 3 singular"
    report = realize_singular(_scene(text), target="sphere")
    assert report.verdict is Verdict.NOT_REALIZABLE
    assert report.obstruction.a == {1: 1, 2: 0}
    assert report.j_class == {1: 0, 2: 0}
    assert report.mismatches == (1,)


def test_empty_singular_set_fails_for_plane():
    text = "X 1 3 2 4 / X 4 2 3 1 / F 1 1 / F 2 1 / R 1 fiber / R 2 fiber"
    report = realize_singular(_scene(text))
    assert report.verdict is Verdict.NOT_REALIZABLE
    assert report.notes == (NOTE_EMPTY_SINGULAR_PLANE,)
    assert report.j_class == {1: 0, 2: 0}


def test_empty_singular_set_may_pass_for_sphere():
    text = "X 1 3 2 4 / X 4 2 3 1 / F 1 1 / F 2 1 / R 1 fiber / R 2 fiber"
    report = realize_singular(_scene(text), target="sphere")
    assert report.verdict is Verdict.REALIZABLE
    # The standard fibration fiber: +1-framed unknot, no singular set.
    hopf_fiber = realize_singular(_scene("U 1 / F 1 1 / R 1 fiber"), target="sphere")
    assert hopf_fiber.verdict is Verdict.REALIZABLE
    obstructed = realize_singular(_scene("U 1 / F 1 0 / R 1 fiber"), target="sphere")
    assert obstructed.verdict is Verdict.NOT_REALIZABLE


def test_fiber_groups_must_partition():
    scene = _scene(fixture_text("hopf_pair_scene.pd"))
    with pytest.raises(DiagramError):
        realize_singular(scene, fiber_groups=[[1]])
    with pytest.raises(DiagramError):
        realize_singular(scene, fiber_groups=[[1, 2], [2]])


def test_fiber_groups_checked_separately():
    scene = _scene(fixture_text("hopf_pair_scene.pd"))
    joint = realize_singular(scene, fiber_groups=[[1, 2]])
    assert joint.verdict is Verdict.REALIZABLE
    assert NOTE_GROUPS_HYPOTHESIS not in joint.notes
    split = realize_singular(scene, fiber_groups=[[1], [2]])
    assert split.verdict is Verdict.NOT_APPLICABLE
    assert NOTE_GROUPS_HYPOTHESIS in split.notes
    assert NOTE_GROUP_NOT_NULL_COBORDANT in split.notes


def test_bad_target_and_empty_fiber():
    scene = _scene(fixture_text("meridian_scene.pd"))
    with pytest.raises(DiagramError):
        realize_singular(scene, target="torus")
    with pytest.raises(DiagramError):
        realize_singular(parse_scene("U 1 / R 1 singular"))


def test_split_possible_fixtures():
    fibers = parse_framed_link(fixture_text("hopf_fibers.pd"))
    report = split_possible(fibers)
    assert report.possible
    assert report.reason == NOTE_MATCH
    unknot = parse_framed_link(fixture_text("unknot0.pd"))
    report = split_possible(unknot)
    assert not report.possible
    assert report.reason == NOTE_MISMATCH
    shifted = fibers.with_framing(1, 2)
    assert split_possible(shifted).reason == NOTE_FIBER_NOT_NULL_COBORDANT
    assert split_possible(shifted, target="sphere").possible is False
    hopf = FramedLink(fixture_diagram("hopf.pd"), {1: 1, 2: 1})
    assert split_possible(hopf, target="sphere").possible
    assert not split_possible(hopf, target="plane").possible


def test_split_never_possible_for_odd_null_cobordant_links():
    # Parity forces an obstructed component whenever the component
    # count is odd and the whole fiber is framed null-cobordant.
    unknot = parse_framed_link(fixture_text("unknot0.pd"))
    assert hopf_invariant(unknot) == 0
    assert not split_possible(unknot).possible


def test_witness_recipe():
    fibers = parse_framed_link(fixture_text("hopf_fibers.pd"))
    w = witness_singular(fibers)
    assert w.meridians == ()
    assert w.extra_split_unknot
    unknot = parse_framed_link(fixture_text("unknot0.pd"))
    w = witness_singular(unknot)
    assert w.meridians == (1,)
    assert not w.extra_split_unknot
    with pytest.raises(DiagramError):
        witness_singular(fibers.with_framing(1, 2))


def test_witness_scene_for_unknot_is_the_meridian_fixture():
    fl = parse_framed_link(fixture_text("unknot0.pd"))
    scene = witness_scene(fl)
    body = "".join(
        line + "\n"
        for line in fixture_text("meridian_scene.pd").splitlines()
        if line and not line.startswith("#")
    )
    assert serialize_scene(scene) == body


def test_witness_scene_for_hopf_pair_is_the_split_fixture():
    fl = parse_framed_link(fixture_text("hopf_fibers.pd"))
    scene = witness_scene(fl)
    body = "".join(
        line + "\n"
        for line in fixture_text("hopf_pair_scene.pd").splitlines()
        if line and not line.startswith("#")
    )
    assert serialize_scene(scene) == body


def test_witness_scene_realizes():
    chain = fixture_diagram("chain.pd")
    for framings, meridians in (
        ({1: -1, 2: -2, 3: -1}, (2,)),
        ({1: -2, 2: -1, 3: -1}, (1,)),
        ({1: 0, 2: -2, 3: -2}, (1, 2, 3)),
    ):
        fl = FramedLink(chain, framings)
        assert hopf_invariant(fl) == 0
        assert witness_singular(fl).meridians == meridians
        scene = witness_scene(fl)
        report = realize_singular(scene)
        assert report.verdict is Verdict.REALIZABLE
        assert report.j_class == report.obstruction.a
        if len(scene.singular) >= 2:
            assert NOTE_FOLD_TYPES in report.notes


def test_hp_fixtures():
    hopf = hp_submersion_check(fixture_diagram("hopf.pd"))
    assert hopf.verdict is Verdict.REALIZABLE
    assert hopf.parities == {1: 1, 2: 1}
    assert hopf.failing == ()
    unknot = hp_submersion_check(fixture_diagram("unknot.pd"))
    assert unknot.verdict is Verdict.NOT_REALIZABLE
    assert unknot.failing == (1,)
    chain = hp_submersion_check(fixture_diagram("chain.pd"))
    assert chain.verdict is Verdict.NOT_REALIZABLE
    assert chain.parities == {1: 1, 2: 0, 3: 1}
    assert chain.failing == (2,)


def test_hp_empty_diagram():
    report = hp_submersion_check(parse_diagram(""))
    assert report.verdict is Verdict.NOT_APPLICABLE
    assert report.parities == {}


def test_hp_invariant_under_mirror_and_reversal():
    for d in build_corpus(40, seed=61):
        base = hp_submersion_check(d).verdict
        assert hp_submersion_check(mirror(d)).verdict is base
        for label in d.labels:
            assert hp_submersion_check(reverse_component(d, label)).verdict is base


def test_chillingworth_report():
    good = chillingworth_report(fixture_diagram("hopf.pd"))
    assert good.certificate
    assert good.notes == (NOTE_SPLIT_CERTIFICATE,)
    bad = chillingworth_report(fixture_diagram("chain.pd"))
    assert not bad.certificate
    assert bad.notes == ()
