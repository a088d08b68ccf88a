"""Dev experiments for the coordinate module. Not part of the package."""
import itertools
import random
import sys
import time

from tangle3 import dehn
from tangle3.errors import InputError, NotRealizableError, PaperViolation
from tangle3.engine import canonical_form
from tangle3.surface import pair_circle, straight_bridge_arcs
from tangle3.mapping import word, apply_word, epsilon_preserving_generators
from tangle3.views import intersection_with_disk
from tangle3.dehn import (DehnParams, PantsWeights, weights_from_intersections,
                          measured_pants_weights, _standard_layout, standardize,
                          _twist_normalize, dehn_params_from_system,
                          system_from_dehn_params, piece_shapes)

FAILS = []

def check(name, cond, detail=""):
    if not cond:
        FAILS.append((name, detail))
        print("FAIL", name, detail)
    # silent on pass


t0 = time.time()

# --- 1. weight formula examples ---
check("w000", weights_from_intersections(0, 0, 0) == PantsWeights(0, 0, 0, 0, 0, 0))
w = weights_from_intersections(2, 2, 2)
check("w222", (w.x12, w.x13, w.x23, w.x11, w.x22, w.x33) == (1, 1, 1, 0, 0, 0), w)
w = weights_from_intersections(6, 2, 2)
check("w622", (w.x11, w.x12, w.x13, w.x23) == (1, 2, 2, 0), w)
try:
    weights_from_intersections(1, 0, 0)
    check("w100", False, "no parity error")
except InputError:
    pass
try:
    weights_from_intersections(-2, 0, 0)
    check("wneg", False, "no negative error")
except InputError:
    pass
print("[1] weight formulas done", round(time.time() - t0, 1))

# --- 2. layout sanity across a p-grid (with copies on empty disks) ---
for p1, p2, p3 in itertools.product(range(5), repeat=3):
    w = weights_from_intersections(2 * p1, 2 * p2, 2 * p3)
    copies = [1 if p1 == 0 else 0, 2 if p2 == 0 else 0, 1 if p3 == 0 else 0]
    try:
        d = _standard_layout(w, copies)
    except Exception as e:
        check("layout(%d,%d,%d)" % (p1, p2, p3), False, repr(e))
        continue
    ii = tuple(intersection_with_disk(d, i) for i in (1, 2, 3))
    check("layoutI(%d,%d,%d)" % (p1, p2, p3), ii == (2 * p1, 2 * p2, 2 * p3),
          ii)
    mw = measured_pants_weights(d)
    check("layoutW(%d,%d,%d)" % (p1, p2, p3), mw == w, (mw, w))
print("[2] layout grid done", round(time.time() - t0, 1))

# --- 3. normalization idempotence on layouts ---
for p1, p2, p3 in itertools.product(range(4), repeat=3):
    w = weights_from_intersections(2 * p1, 2 * p2, 2 * p3)
    d = _standard_layout(w, [0, 0, 0])
    n1, ks1 = _twist_normalize(d)
    n2, ks2 = _twist_normalize(n1)
    check("fix(%d,%d,%d)" % (p1, p2, p3),
          ks2 == [0, 0, 0] and canonical_form(n1) == canonical_form(n2),
          (ks1, ks2))
print("[3] normalization fixpoint done", round(time.time() - t0, 1))

# --- 4. round trips on random realizable params ---
rng = random.Random(11)
trips = 0
for trial in range(300):
    vals = []
    for i in range(3):
        p = rng.randint(0, 6)
        if p == 0:
            vals += [0, 0, rng.randint(0, 3)]
        else:
            vals += [p, p, rng.randint(-6, 6)]
    params = DehnParams(*vals)
    try:
        d = system_from_dehn_params(params)
        back = dehn_params_from_system(d, check=True)
    except Exception as e:
        check("trip%r" % (tuple(vals),), False, repr(e))
        continue
    check("trip%r" % (tuple(vals),), back == params, back.as_tuple())
    trips += 1
print("[4] round trips done:", trips, round(time.time() - t0, 1))

# --- 5. extraction on twisted images of closed systems (q == p probe,
#        T1 weights on arbitrary reduced multicurves) ---
ATOMS = ["H1", "H2", "H3", "D1", "D2", "D3"]
rng = random.Random(23)
qp_breaks = []
in_chart = off_chart = skipped = 0
for trial in range(160):
    base = rng.choice([
        pair_circle(rng.randint(1, 3)),
        system_from_dehn_params(DehnParams(
            *(lambda p: [p[0], p[0], rng.randint(-2, 2),
                         p[1], p[1], rng.randint(-2, 2),
                         p[2], p[2], rng.randint(-2, 2)])(
                [rng.randint(1, 3) for _ in range(3)]))),
    ])
    n = rng.randint(1, 4)
    text = "*".join(
        "%s^%d" % (a, rng.choice([-1, 1] if a.startswith("D") else [-2, -1, 1, 2]))
        for a in (rng.choice(ATOMS) for _ in range(n)))
    img = apply_word(base, word(text)).reduce()
    ii = tuple(intersection_with_disk(img, i) for i in (1, 2, 3))
    try:
        mw = measured_pants_weights(img)
        fw = weights_from_intersections(*ii)
        check("T1-%d" % trial, mw == fw, (text, ii, mw, fw))
    except Exception as e:
        check("T1-%d" % trial, False, (text, repr(e)))
    if img.crossing_count() > 150:
        skipped += 1
        continue
    try:
        params = dehn_params_from_system(img, check=True)
        in_chart += 1
        for i in (1, 2, 3):
            p, q, t = params.disk(i)
            if q != p:
                qp_breaks.append((text, params.as_tuple()))
    except NotRealizableError:
        off_chart += 1
    except Exception as e:
        check("ext-%d" % trial, False, (text, ii, repr(e)))
print("[5] twisted-image extraction done", round(time.time() - t0, 1))
print("    in-chart:", in_chart, "off-chart:", off_chart, "skipped:", skipped)
print("    q!=p cases:", len(qp_breaks), qp_breaks[:5])

# --- 6. plateau width stats on normalized forms ---
from tangle3.twists import half_twist
widths = {}
rng = random.Random(5)
for trial in range(60):
    vals = []
    for i in range(3):
        p = rng.randint(0, 4)
        vals += [p, p, 0] if p else [0, 0, rng.randint(0, 2)]
    d = system_from_dehn_params(DehnParams(*vals))
    for i in (1, 2, 3):
        c0 = d.crossing_count()
        up = half_twist(d, "m%d" % i, clockwise=True).reduce()
        dn = half_twist(d, "m%d" % i, clockwise=False).reduce()
        key = (int(up.crossing_count() == c0), int(dn.crossing_count() == c0))
        widths[key] = widths.get(key, 0) + 1
        check("min-%d-%d" % (trial, i),
              up.crossing_count() >= c0 and dn.crossing_count() >= c0,
              (vals, i, c0, up.crossing_count(), dn.crossing_count()))
print("[6] plateau-neighbor stats:", widths, round(time.time() - t0, 1))

# --- 7. catalog collection over standardized systems ---
shapes = set()
rng = random.Random(77)
straight = straight_bridge_arcs()
shapes.update(piece_shapes(straight))
eps = [str(w_) for w_ in epsilon_preserving_generators()]
for combo in itertools.chain(((e,) for e in eps), itertools.product(eps, eps)):
    img = apply_word(straight, word("*".join(combo)))
    shapes.update(piece_shapes(standardize(img)))
for trial in range(120):
    n = rng.randint(3, 5)
    text = "*".join(rng.choice(eps) for _ in range(n))
    img = apply_word(straight, word(text))
    std = standardize(img)
    shapes.update(piece_shapes(std))
for trial in range(80):
    vals = []
    for i in range(3):
        p = rng.randint(0, 4)
        vals += [p, p, rng.randint(-3, 3)] if p else [0, 0, rng.randint(0, 2)]
    d = system_from_dehn_params(DehnParams(*vals))
    shapes.update(piece_shapes(standardize(d)))
    n = rng.randint(1, 3)
    text = "*".join("%s^%d" % (rng.choice(ATOMS), rng.choice([-1, 1]))
                    for _ in range(n))
    img = apply_word(d, word(text))
    shapes.update(piece_shapes(standardize(img)))
print("[7] catalog shapes collected:", len(shapes), round(time.time() - t0, 1))
for sh in sorted(shapes):
    print("   ", sh)

print()
print("TOTAL FAILURES:", len(FAILS))
for name, detail in FAILS[:30]:
    print("  -", name, detail)
