"""Kernel + surgery smoke checks (dev scratch, not shipped)."""
import random
import sys

sys.path.insert(0, "src")

from tangle3.diagram import Diagram, EDGES
from tangle3.twists import half_twist, full_twist


def straight():
    links = {"N": {}, "S": {}}
    d = Diagram(links=links)
    d._link("N", ("p", 1), ("p", 2))
    d._link("N", ("p", 3), ("p", 4))
    d._link("N", ("p", 5), ("p", 6))
    d.end_label = {1: "b1", 2: "b1", 3: "b2", 4: "b2", 5: "b3", 6: "b3"}
    d.validate()
    return d


def circle_pair(west_edge, east_edge):
    # round circle crossing west_edge at its east end, east_edge at its west end
    d = Diagram()
    a, b = d.new_id(), d.new_id()
    d.edges[west_edge].append(a)
    d.edges[east_edge].insert(0, b)
    d._link("N", ("x", a), ("x", b))
    d._link("S", ("x", a), ("x", b))
    d.validate()
    return d


def show(name, d):
    print(f"{name}: {d!r} closed={d.is_closed()}")


s = straight()
show("straight", s)
assert s.reduce().canonical_form() == s.canonical_form()
assert s.puncture_pairing() == [(1, 2), (3, 4), (5, 6)]
comps = s.components()
assert len(comps) == 3 and all(k == "arc" for k, _, _ in comps)

c23 = circle_pair("m1", "m2")  # round circle around punctures 2,3
show("around{2,3}", c23)
assert c23.is_closed()
assert len(c23.components()) == 1
assert c23.reduce().canonical_form() == c23.canonical_form(), "already reduced"

# bigon: push a finger of the circle across the axis and back
c = c23.copy()
u, v = c.new_id(), c.new_id()
c.edges["g1"].extend([u, v])
old = c._unlink("N", ("x", c.edges["m1"][0]))
c._link("N", ("x", c.edges["m1"][0]), ("x", u))
c._link("S", ("x", u), ("x", v))
c._link("N", ("x", v), old)
c.validate()
assert c.crossing_count() == 4
assert c.reduce().canonical_form() == c23.canonical_form(), "bigon removal"
print("bigon removal ok")

# trivial circle: standalone bigon circle on one edge
t = Diagram()
a, b = t.new_id(), t.new_id()
t.edges["g2"].extend([a, b])
t._link("N", ("x", a), ("x", b))
t._link("S", ("x", a), ("x", b))
t.validate()
tr = t.reduce()
assert tr.crossing_count() == 0 and tr.trivial_circles == 1
print("trivial circle counting ok")

# confluence under randomized move order
rng = random.Random(7)
base = c.canonical_form()
for i in range(20):
    assert c.reduce(rng).canonical_form() == base
print("confluence ok (perturbed circle)")

# reflect is an involution
assert s.reflect().reflect().canonical_form() == s.canonical_form()
assert c23.reflect().canonical_form() == c23.canonical_form()  # symmetric curve

# --- half twist checks ---------------------------------------------------
# H1 = half twist on slit m1 swaps punctures 1,2.
h = half_twist(s, "m1")
show("H1(straight)", h)
hr = h.reduce()
show("H1(straight) reduced", hr)
# arc b1 between 1,2 flips face; ends swap labels but pairing is unchanged
assert hr.puncture_pairing() == [(1, 2), (3, 4), (5, 6)]

# inverse: h- after h+ is identity
rt = half_twist(half_twist(s, "m1", True), "m1", False).reduce()
assert rt.canonical_form() == s.canonical_form(), "h-∘h+ = id on straight"

# H1 applied to around{2,3}: expect around{1,3} (4 crossings after reduce)
img = half_twist(c23, "m1").reduce()
show("H1(around{2,3})", img)
w = img.edge_weights()
print("weights:", w)

# full twist vs half twist squared, on a batch of cases
cases = {
    "straight": s,
    "c23": c23,
    "c12": circle_pair("g3", "g1"),
    "c34": circle_pair("g1", "g2"),
    "H1c23": half_twist(c23, "m1").reduce(),
    "H2c23": half_twist(c23, "m2").reduce(),
    "perturbed": c,
}
for name, d in cases.items():
    for e in EDGES:
        for cw in (True, False):
            sq = half_twist(half_twist(d, e, cw), e, cw).reduce()
            ft = full_twist(d, e, cw).reduce()
            assert sq.canonical_form() == ft.canonical_form(), \
                f"h² != T on {name}/{e}/cw={cw}"
print("half² == full twist ok on", len(cases), "cases x 6 edges x 2 dirs")

# invertibility of both surgeries on the same batch
for name, d in cases.items():
    for e in EDGES:
        a = half_twist(half_twist(d, e, True), e, False).reduce()
        assert a.canonical_form() == d.reduce().canonical_form(), \
            f"half inv fails {name}/{e}"
        b = full_twist(full_twist(d, e, True), e, False).reduce()
        assert b.canonical_form() == d.reduce().canonical_form(), \
            f"full inv fails {name}/{e}"
print("invertibility ok")

# random word round trip: w then w^-1 reversed
rng = random.Random(3)
d0 = s
for trial in range(30):
    word = [(rng.choice(EDGES), rng.random() < 0.5) for _ in range(rng.randrange(1, 9))]
    d = d0
    for e, cw in word:
        d = half_twist(d, e, cw).reduce()
    for e, cw in reversed(word):
        d = half_twist(d, e, not cw).reduce()
    assert d.canonical_form() == d0.canonical_form(), f"word rt fail {word}"
print("random word round trips ok")
print("ALL SMOKE OK")
