"""Mapping/views/engine smoke checks (dev scratch, not shipped)."""
import random
import sys

sys.path.insert(0, "src")

from tangle3.diagram import Diagram
from tangle3.surface import straight_bridge_arcs, pair_circle, span_circle
from tangle3 import engine, views
from tangle3.mapping import (apply_generator, generator_full_twist,
                             GENERATOR_ATOMS, GENERATOR_SWAPS, TwistWord,
                             apply_word, epsilon_preserving_generators)

s = straight_bridge_arcs()
c1 = span_circle("m1", "m2")          # around punctures 2,3

# 1. permutations on labels
for g, (a, b) in GENERATOR_SWAPS.items():
    img = apply_generator(s, g)
    # the end pairing as a set of sets after the swap
    def swap(p):
        return b if p == a else a if p == b else p
    want = sorted(tuple(sorted((swap(x), swap(y)))) for x, y in
                  [(1, 2), (3, 4), (5, 6)])
    assert img.puncture_pairing() == want, (g, img.puncture_pairing(), want)
print("generator swaps ok")

# 2. inverses
rng = random.Random(11)
cases = [s, c1, pair_circle(1), pair_circle(2)]
for i in range(6):
    d = s
    for _ in range(5):
        d = apply_generator(d, rng.choice(GENERATOR_ATOMS),
                            rng.choice([1, -1]))
    cases.append(d)
for d in cases:
    for g in GENERATOR_ATOMS:
        back = apply_generator(apply_generator(d, g, 1), g, -1)
        assert back.canonical_form() == d.reduce().canonical_form(), g
print("inverses ok")

# 3. squares equal independent full twists
for d in cases:
    for g in GENERATOR_ATOMS:
        sq = apply_generator(d, g, 2)
        ft = generator_full_twist(d, g, clockwise=True)
        assert sq.canonical_form() == ft.canonical_form(), (g, "sq/ft")
        sqi = apply_generator(d, g, -2)
        fti = generator_full_twist(d, g, clockwise=False)
        assert sqi.canonical_form() == fti.canonical_form(), (g, "sq/ft inv")
print("generator squares == full twists ok")

# 4. intersection numbers
assert [engine.geometric_intersection(s, f"dE{i}") for i in (1, 2, 3)] == [0, 0, 0]
assert [engine.geometric_intersection(c1, f"dE{i}") for i in (1, 2, 3)] == [2, 2, 0]
assert [engine.geometric_intersection(c1, f"e{i}") for i in (1, 2, 3)] == [1, 1, 0]
assert [engine.geometric_intersection(c1, f"omega{i}") for i in (1, 2, 3)] == [2, 2, 0]
for i in (1, 2, 3):
    assert engine.geometric_intersection(pair_circle(i), f"dE{i}") == 0
print("intersections ok")

# 5. doubled straight arcs give the disk boundaries
for i, lbl in enumerate(["b1", "b2", "b3"], start=1):
    g = engine.double_arc(s, lbl)
    assert g.canonical_form(labeled=False) == \
        pair_circle(i).canonical_form(labeled=False), lbl
print("double of straight arcs ok")

# 6. doubling commutes with homeomorphisms
rng = random.Random(5)
for trial in range(40):
    d = s
    atoms = [(rng.choice(GENERATOR_ATOMS), rng.choice([1, -1]))
             for _ in range(rng.randrange(1, 6))]
    for g, sg in atoms:
        d = apply_generator(d, g, sg)
    lbl = rng.choice(["b1", "b2", "b3"])
    ga = engine.double_arc(d, lbl)
    gb = engine.double_arc(s, lbl)
    for g, sg in atoms:
        gb = apply_generator(gb, g, sg)
    assert ga.canonical_form(labeled=False) == gb.canonical_form(labeled=False), \
        (trial, atoms, lbl)
print("double_arc equivariance ok")

# 7. pants pieces / waves
assert not views.has_wave(s.reduce())
assert not views.has_wave(c1.reduce())
assert views.pants_connection_counts(c1.reduce()) == {
    (1, 1): 0, (1, 2): 2, (1, 3): 0, (2, 2): 0, (2, 3): 0, (3, 3): 0}
print("pants counts ok")

# 8. word grammar
w = TwistWord.parse("H1^3 * D3 * (D1*D2^-1)^2")
assert TwistWord.parse(str(w)).atoms() == w.atoms(), str(w)
assert w.atoms() == [("H1", 1)] * 3 + [("D3", 1)] + \
    [("D1", 1), ("D2", -1)] * 2
wi = w.inverse()
d = apply_word(s, w)
d = apply_word(d, wi)
assert d.canonical_form() == s.reduce().canonical_form()
eps = epsilon_preserving_generators()
assert len(eps) == 10
for w in eps:
    img = apply_word(s, w)
    assert img.puncture_pairing() == [(1, 2), (3, 4), (5, 6)], str(w)
print("twist words ok")
print("ALL SMOKE2 OK")
