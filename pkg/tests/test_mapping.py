from __future__ import annotations

import random

import pytest

from tangle3.detector import detect_infinity_tangle, has_wave
from tangle3.errors import InputError
from tangle3.mapping import (TwistWord, apply_generator, apply_word,
                             epsilon_preserving_generators,
                             generator_full_twist, reduce_waves_by_twists,
                             total_boundary_intersections, word)
from tangle3.dehn import standardize
from tangle3.surface import straight_bridge_arcs

from _support import SIGNED_ATOMS, epsilon_images, random_word_image


# ------------------------------------------------------------ word syntax

ROUND_TRIP_TEXTS = [
    "H1",
    "H1^3 * D3 * (D1 * D2^-1)^2",
    "D1 * D2^-1",
    "(H1 * H2)^-1",
    "H2^-1 * (D3^2 * H3)^-3",
]


def test_words_reserialize_losslessly():
    for text in ROUND_TRIP_TEXTS:
        w = word(text)
        assert str(w) == text
        assert word(str(w)) == w


def test_word_parsing_normalizes_spacing():
    assert word("D1*D2^-1") == word("D1 * D2^-1")
    assert str(word("(D1*D2^-1)^-1")) == "(D1 * D2^-1)^-1"


def test_word_inverse():
    w = word("H1 * D3^2")
    assert str(w.inverse()) == "D3^-2 * H1^-1"
    assert w.inverse().inverse() == w


def test_empty_word(base):
    empty = TwistWord(())
    assert str(empty) == ""
    assert len(empty) == 0
    assert apply_word(base, empty).canonical_form() == base.canonical_form()


def test_word_parse_errors():
    for bad in ("H4", "H1 ** 2", "(H1", "", "H1 ^", "2 * H1"):
        with pytest.raises(InputError):
            word(bad)


def test_word_application_order(base):
    """The leftmost atom acts first."""
    composite = apply_word(base, "D1 * H2^-1")
    stepwise = apply_generator(apply_generator(base, "D1", 1), "H2", -1)
    assert composite.canonical_form() == stepwise.canonical_form()


# -------------------------------------------------------------- the moves

def test_plain_half_twists_fix_the_straight_arcs(base):
    for text in ("H1", "H2", "H3", "D3", "H1^3"):
        img = apply_word(base, text)
        assert img.puncture_pairing() == [(1, 2), (3, 4), (5, 6)]
        assert img.canonical_form() == base.canonical_form()


def test_words_invert(base):
    rng = random.Random(41)
    for _ in range(30):
        text, _ = random_word_image(rng, max_len=10)
        if not text:
            continue
        w = word(text)
        img = apply_word(apply_word(base, w), w.inverse())
        assert img.canonical_form() == base.canonical_form(), text


def test_generator_squared_is_full_twist(base):
    probe = apply_word(base, "D1*D2^-1 * H3")
    for g in ("H1", "H2", "H3", "D1", "D2", "D3"):
        assert (apply_generator(probe, g, 2).canonical_form()
                == generator_full_twist(probe, g).canonical_form())
        assert (apply_generator(probe, g, -2).canonical_form()
                == generator_full_twist(probe, g, clockwise=False).canonical_form())


def test_epsilon_generator_set():
    gens = epsilon_preserving_generators()
    assert len(gens) == 10
    texts = {str(g) for g in gens}
    assert texts == {
        "H1", "H2", "H3", "D1 * D2^-1", "D3",
        "H1^-1", "H2^-1", "H3^-1", "(D1 * D2^-1)^-1", "D3^-1",
    }
    assert {str(g.inverse()) for g in gens} == texts
    assert word("D1") not in gens
    assert word("D2") not in gens


def test_epsilon_moves_keep_the_verdict(base):
    corpus = [img for _, img in epsilon_images(seed=43, count=5, max_len=6)]
    for s in corpus:
        for g in epsilon_preserving_generators():
            assert detect_infinity_tangle(apply_word(s, g)).trivial


# ------------------------------------------------------- wave reduction

def test_wave_reduction_leaves_straight_alone(base):
    out, trace = reduce_waves_by_twists(base)
    assert tuple(trace) == ()
    assert out.canonical_form() == base.canonical_form()


def test_wave_reduction_on_a_twist_image(base):
    out, trace = reduce_waves_by_twists(apply_word(base, "D3"))
    assert tuple(trace) == ()
    assert out.canonical_form() == base.canonical_form()


def test_wave_reduction_clears_a_known_wave(base):
    img = standardize(apply_word(base, "(D1*D2^-1)^-1 * H2^-1").reduce())
    assert has_wave(img)
    assert total_boundary_intersections(img) == 2
    out, trace = reduce_waves_by_twists(img)
    assert tuple(trace) == (("H1^1", "D1*D2^-1", 2, 0),)
    assert not has_wave(out)
    assert out.canonical_form() == base.canonical_form()


def test_wave_reduction_is_strictly_monotone():
    for text, img in epsilon_images(seed=47, count=25, max_len=10):
        out, trace = reduce_waves_by_twists(standardize(img))
        for _, _, before, after in trace:
            assert after < before, text
        assert not has_wave(out), text
