from __future__ import annotations

import pytest

from tangle3 import engine
from tangle3.dehn import standardize
from tangle3.detector import (BrSite, apply_br, br_site_at,
                              density_violation, detect_infinity_tangle,
                              find_br_site, find_br_sites, has_wave, is_dense,
                              is_straight_collection, make_dense, replay_trace)
from tangle3.errors import InputError, StepBudgetExceeded
from tangle3.mapping import (apply_word, reduce_waves_by_twists,
                             total_boundary_intersections)
from tangle3.surface import pair_circle, straight_bridge_arcs

from _support import epsilon_images

# frozen fixtures: words whose images exhibit one specific feature each
WITNESS_DISK2 = "D1*D2^-1"                  # one adjacency, on boundary 2
WITNESS_DISK1 = "H3^-1 * (D1*D2^-1)^-1"     # one adjacency, on boundary 1
BOTH_DIRECTIONS = "H3 * D1*D2^-1 * H3 * H3 * H2 * (D1*D2^-1)^-1"
WAVE_WORD = "(D1*D2^-1)^-1 * H2^-1"         # standardized image has a wave
CLASP = "D1^2"                              # correct pairing, knotted
EPSILON_WORD = "H1^3 * D3 * (D1*D2^-1)^2"


# ---------------------------------------------------------------- density

def test_density_of_straight_arcs(base):
    assert is_dense(base)
    assert density_violation(base) is None
    assert find_br_site(base) is None


def test_density_violation_witness(base):
    img = apply_word(base, WITNESS_DISK2)
    assert not is_dense(img)
    assert density_violation(img) == (2, 0, 1, 1)
    # the offending component is the one labeled b1, which the move
    # carried onto punctures 3 and 4
    sub = engine.extract_component(img, 1)
    assert set(sub.end_label.values()) == {"b1"}
    assert engine.geometric_intersection(img, "dE2") == 2

    img = apply_word(base, WITNESS_DISK1)
    assert density_violation(img) == (1, 0, 1, 0)


# --------------------------------------------------------------- BR sites

def test_br_site_on_the_disk2_witness(base):
    site = find_br_site(apply_word(base, WITNESS_DISK2))
    assert site == BrSite(disk=2, pos=0, pos2=1, comp=1, label="b1",
                          direction="same", c1=(("p", 3),), c2=(("p", 4),))


def test_br_sites_of_both_directions(base):
    img = apply_word(base, BOTH_DIRECTIONS)
    sites = find_br_sites(img)
    seen = {(s.disk, s.pos, s.pos2): s.direction for s in sites}
    assert seen[(1, 0, 2)] == "opposite"
    assert seen[(1, 1, 3)] == "same"
    assert br_site_at(img, 1, 0) == sites[0]


def test_apply_br_postconditions(base):
    for text in (WITNESS_DISK2, WITNESS_DISK1, BOTH_DIRECTIONS):
        s = apply_word(base, text)
        for site in find_br_sites(s):
            out = apply_br(s, site)
            out.validate()
            assert (total_boundary_intersections(out)
                    <= total_boundary_intersections(s) - 2), text
            assert out.puncture_pairing() == s.puncture_pairing()
            assert len(out.components()) == 3


def test_apply_br_rejects_stale_sites(base):
    s = apply_word(base, WITNESS_DISK2)
    site = find_br_site(s)
    out = apply_br(s, site)
    with pytest.raises(InputError):
        apply_br(out, site)


def test_make_dense(base):
    assert make_dense(base).canonical_form() == base.canonical_form()
    assert make_dense(apply_word(base, "H1^3")).canonical_form() == \
        base.canonical_form()
    for text, img in epsilon_images(seed=53, count=15, max_len=8):
        out = make_dense(img)
        assert is_dense(out), text
        assert out.puncture_pairing() == img.puncture_pairing(), text
        # idempotent, and the verdict is already settled by then
        assert make_dense(out).canonical_form() == out.canonical_form()
        assert (detect_infinity_tangle(out).decision
                == detect_infinity_tangle(img).decision), text


# ------------------------------------------------------------------ waves

def test_has_wave_fixtures(base):
    for which in (None, 0, 1, 2, "b1", "b2", "b3"):
        assert not has_wave(base, component=which)
    img = standardize(apply_word(base, WAVE_WORD).reduce())
    assert has_wave(img)
    assert [has_wave(img, component=i) for i in range(3)] == [True, False, False]
    assert has_wave(img, component="b2")
    assert not has_wave(img, component="b1")
    circle = standardize(apply_word(pair_circle(1), "D1*D2^-1").reduce())
    assert has_wave(circle)


def test_wave_reduction_terminals_have_no_waves():
    for text, img in epsilon_images(seed=59, count=20, max_len=10):
        out, _ = reduce_waves_by_twists(standardize(img))
        comps = out.components()
        assert not has_wave(out), text
        assert all(not has_wave(out, component=k)
                   for k in range(len(comps))), text


def test_no_dense_trivial_system_has_waves_everywhere():
    """Falsification probe: among dense standardized images of the
    trivial system, no case has a wave on all three components."""
    for text, img in epsilon_images(seed=61, count=40, max_len=12):
        s = standardize(make_dense(img))
        if not is_dense(s):
            continue
        comps = range(len(s.components()))
        assert not all(has_wave(s, component=k) for k in comps), text


# ----------------------------------------------------------- straightness

def test_straight_collection_predicate(base):
    assert is_straight_collection(base)
    assert is_straight_collection(apply_word(base, "H1"))
    # D3 moves material around the first two disks yet puts the straight
    # arcs back exactly where they were
    assert is_straight_collection(apply_word(base, "D3"))
    assert not is_straight_collection(apply_word(base, WITNESS_DISK2))
    assert not is_straight_collection(apply_word(base, CLASP))
    with pytest.raises(InputError):
        is_straight_collection(pair_circle(1))


# -------------------------------------------------------------- decisions

def test_detect_straight(base):
    v = detect_infinity_tangle(base)
    assert (v.decision, v.reason) == ("Trivial", "StraightArcs")
    assert v.trivial


def test_detect_pairing_mismatch(mismatch_system):
    v = detect_infinity_tangle(mismatch_system)
    assert (v.decision, v.reason) == ("NonTrivial", "PairingMismatch")
    assert tuple(v.trace) == (("reduce",),)


def test_detect_epsilon_word(base):
    v = detect_infinity_tangle(apply_word(base, EPSILON_WORD))
    assert v.trivial


def test_detect_clasp(base):
    img = apply_word(base, CLASP)
    assert is_dense(img)
    assert not engine.presents_trivial_tangle(img)
    v = detect_infinity_tangle(img)
    assert (v.decision, v.reason) == ("NonTrivial", "DenseNotStraight")


def test_detect_rejects_non_bridge_input():
    with pytest.raises(InputError):
        detect_infinity_tangle(pair_circle(1))


def test_detect_budget(base):
    heavy = apply_word(base, "(H1 * D1*D2^-1 * D3^-1 * H2)^4").reduce()
    with pytest.raises(StepBudgetExceeded):
        detect_infinity_tangle(heavy, max_steps=1)
    assert detect_infinity_tangle(heavy, max_steps=5).trivial


def test_detect_decision_is_order_independent(base):
    """Densifying and twist-normalizing commute at the decision level."""
    for text, img in epsilon_images(seed=67, count=10, max_len=8):
        a = detect_infinity_tangle(standardize(make_dense(img)))
        b = detect_infinity_tangle(make_dense(standardize(img)))
        assert a.decision == b.decision == "Trivial", text


def test_dense_corpus_decision_matches_straightness(base):
    dense = [base, make_dense(apply_word(base, CLASP)),
             make_dense(apply_word(base, "D1^-2"))]
    for _, img in epsilon_images(seed=71, count=15, max_len=8):
        dense.append(make_dense(img))
    for s in dense:
        assert is_dense(s)
        v = detect_infinity_tangle(s)
        assert v.trivial == is_straight_collection(s)


# ----------------------------------------------------------------- traces

def test_replay_reproduces_the_terminal_form(base):
    inputs = [base, apply_word(base, EPSILON_WORD),
              apply_word(base, WAVE_WORD), apply_word(base, CLASP)]
    for s in inputs:
        v = detect_infinity_tangle(s)
        first = replay_trace(s, v.trace)
        second = replay_trace(s, v.trace)
        assert first.canonical_form() == second.canonical_form()
        assert is_straight_collection(first) == v.trivial


def test_density_moves_measured(base):
    """The composite move can break density (it does so on the straight
    arcs); D3 kept it on every dense system in the corpus."""
    assert not is_dense(apply_word(base, "D1*D2^-1"))
    dense = [base, make_dense(apply_word(base, CLASP))]
    for _, img in epsilon_images(seed=73, count=8, max_len=8):
        dense.append(make_dense(img))
    for s in dense:
        for move in ("D3", "D3^-1"):
            assert is_dense(apply_word(s, move))
