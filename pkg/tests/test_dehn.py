from __future__ import annotations

import random

import pytest

from tangle3 import engine
from tangle3.catalog import PIECE_CATALOG
from tangle3.dehn import (DehnParams, curve_from_arc, dehn_params_from_system,
                          is_standard_position, measured_pants_weights,
                          piece_shapes, standardize, standardize_with_word,
                          system_from_dehn_params, weights_from_intersections)
from tangle3.detector import is_dense, make_dense
from tangle3.diagram import Diagram
from tangle3.errors import InputError, NotRealizableError
from tangle3.mapping import apply_generator, apply_word
from tangle3.surface import build_standard_surface, pair_circle, straight_bridge_arcs

from _support import epsilon_images


# ---------------------------------------------------------------- weights

def test_weights_zero():
    w = weights_from_intersections(0, 0, 0)
    assert (w.x11, w.x22, w.x33, w.x12, w.x13, w.x23) == (0,) * 6


def test_weights_triangle_case():
    w = weights_from_intersections(2, 2, 2)
    assert (w.x12, w.x13, w.x23) == (1, 1, 1)
    assert (w.x11, w.x22, w.x33) == (0, 0, 0)


def test_weights_return_case():
    w = weights_from_intersections(6, 2, 2)
    assert (w.x11, w.x12, w.x13) == (1, 2, 2)
    assert (w.x22, w.x33, w.x23) == (0, 0, 0)


def test_weights_reject_bad_input():
    with pytest.raises(InputError):
        weights_from_intersections(1, 0, 0)   # odd total
    with pytest.raises(InputError):
        weights_from_intersections(-2, 0, 0)


def test_weights_round_trip():
    """weights -> window counts -> weights is the identity, and at most
    one return family is ever populated."""
    rng = random.Random(3)
    for _ in range(200):
        x = [0, 0, 0]
        i = rng.randrange(3)
        if rng.random() < 0.5:
            x[i] = rng.randint(1, 5)
        pairs = [rng.randint(0, 5) for _ in range(3)]   # x12, x13, x23
        if x[0] or x[1] or x[2]:
            # arcs returning to one boundary exclude arcs joining the
            # other two boundaries
            pairs[{0: 2, 1: 1, 2: 0}[i]] = 0
        x12, x13, x23 = pairs
        i1 = 2 * x[0] + x12 + x13
        i2 = 2 * x[1] + x12 + x23
        i3 = 2 * x[2] + x13 + x23
        w = weights_from_intersections(i1, i2, i3)
        assert (w.x11, w.x22, w.x33) == tuple(x)
        assert (w.x12, w.x13, w.x23) == (x12, x13, x23)
        assert sum(1 for v in (w.x11, w.x22, w.x33) if v) <= 1


def test_weights_match_measured_counts():
    rng = random.Random(7)
    for _ in range(25):
        s = _random_multicurve(rng)
        counts = [engine.geometric_intersection(s, "omega%d" % i)
                  for i in (1, 2, 3)]
        assert weights_from_intersections(*counts) == measured_pants_weights(s)


def _random_multicurve(rng):
    if rng.random() < 0.5:
        return system_from_dehn_params(_random_params(rng, 4, 4))
    curve = pair_circle(rng.randint(1, 3))
    moves = ["H1", "H2", "H3", "D1", "D2", "D3", "D1*D2^-1"]
    for _ in range(rng.randint(0, 5)):
        curve = apply_word(curve, rng.choice(moves)).reduce()
    return curve


def _random_params(rng, pmax, tmax):
    nine = []
    for _ in range(3):
        p = rng.randint(0, pmax)
        if p == 0:
            nine += [0, 0, rng.randint(0, tmax)]
        else:
            nine += [p, p, rng.randint(-tmax, tmax)]
    return DehnParams(*nine)


# ----------------------------------------------------------- parameters

def test_params_of_knowns():
    assert dehn_params_from_system(Diagram()).as_tuple() == (0,) * 9
    assert dehn_params_from_system(pair_circle(1)).as_tuple() == (
        0, 0, 1, 0, 0, 0, 0, 0, 0)
    surf = build_standard_surface()
    assert dehn_params_from_system(surf.boundary_system()).as_tuple() == (
        0, 0, 1, 0, 0, 1, 0, 0, 1)


def test_params_to_systems_of_knowns():
    assert (system_from_dehn_params(DehnParams.zeros()).canonical_form()
            == Diagram().canonical_form())
    e1 = system_from_dehn_params(DehnParams(0, 0, 1, 0, 0, 0, 0, 0, 0))
    assert engine.systems_equal(e1, pair_circle(1), labeled=False)


def test_params_tuple_round_trip():
    prm = DehnParams(2, 2, -3, 0, 0, 1, 5, 5, 0)
    assert DehnParams.from_tuple(prm.as_tuple()) == prm
    assert prm.disk(3) == (5, 5, 0)


def test_params_reject_off_chart():
    with pytest.raises(NotRealizableError):
        DehnParams(1, 2, 0, 0, 0, 0, 0, 0, 0)
    with pytest.raises(NotRealizableError):
        DehnParams(0, 0, -1, 0, 0, 0, 0, 0, 0)


def test_params_reject_arcs(base):
    with pytest.raises(InputError):
        dehn_params_from_system(base)


def test_twisted_circle_off_chart():
    curve = apply_word(pair_circle(1), "D1*D2^-1")
    with pytest.raises(NotRealizableError):
        dehn_params_from_system(curve)


def test_params_round_trip_randomized():
    rng = random.Random(11)
    for _ in range(60):
        prm = _random_params(rng, 5, 5)
        s = system_from_dehn_params(prm)
        assert dehn_params_from_system(s) == prm
        again = system_from_dehn_params(dehn_params_from_system(s))
        assert again.canonical_form() == s.canonical_form()


def test_twisted_circle_coordinates_round_trip():
    curve = apply_word(pair_circle(1), "D1")
    prm = dehn_params_from_system(curve)
    assert prm.as_tuple() == (1, 1, -1, 1, 1, 0, 0, 0, 0)
    rebuilt = system_from_dehn_params(prm)
    assert engine.systems_equal(rebuilt, curve, labeled=False)


# ---------------------------------------------------------- standardize

def test_standardize_fixes_straight(base):
    assert standardize(base).canonical_form() == base.canonical_form()
    out = standardize(apply_word(base, "H1"))
    assert out.canonical_form() == base.canonical_form()


def test_standardize_output_is_standard():
    for text, img in epsilon_images(seed=13, count=12, max_len=8):
        out = standardize(img)
        assert is_standard_position(out), text
        assert set(piece_shapes(out)) <= PIECE_CATALOG, text


def test_standardize_keeps_pq():
    rng = random.Random(19)
    for _ in range(30):
        prm = _random_params(rng, 4, 4)
        out = dehn_params_from_system(standardize(system_from_dehn_params(prm)))
        for i in (1, 2, 3):
            assert out.disk(i)[:2] == prm.disk(i)[:2]


def test_standardize_keeps_density_of_dense_systems(base):
    dense = [base, make_dense(apply_word(base, "D1^2"))]
    for _, img in epsilon_images(seed=37, count=6, max_len=8):
        dense.append(make_dense(img))
    for s in dense:
        assert is_dense(s)
        assert is_dense(standardize(s))


def test_standardize_word_replays(base):
    img = apply_word(base, "(D1*D2^-1)^-1 * H2^-1").reduce()
    std, moves = standardize_with_word(img)
    assert moves == [("H1", -1)]
    replay = img
    for name, power in moves:
        replay = apply_generator(replay, name, power)
    assert replay.reduce().canonical_form() == std.canonical_form()


def test_curve_from_arc_is_the_doubling(base):
    assert (curve_from_arc(base, "b2").canonical_form()
            == engine.double_arc(base, "b2").canonical_form())
