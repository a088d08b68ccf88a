"""Half and full Dehn twist surgery on the chord-diagram kernel.

A twist is supported on a small disk neighbourhood of one closed axis
edge (the "slit"): the disk contains the slit, its two end punctures,
and short stubs of the two neighbouring edges, and meets the rest of
the diagram only in strands crossing the slit or ending at its
punctures.  The clockwise half twist rotates the core of the disk by
180 degrees (material north of the slit flows east) and shears the
collar, so the two punctures swap and every strand through the disk is
rerouted.  The full twist rotates by 360 degrees: the core returns to
its place and each boundary-crossing germ wraps once around the disk.

The rewirings below were derived once from that collar picture and are
frozen; the non-crossing validity check run after every surgery would
catch any ordering mistake, and the test suite compares the square of
the half twist against the independently built full twist.

Half twist, slit crossings x_0..x_{c-1} west to east, west puncture A,
east puncture B.  A transversal strand's north germ is dragged east
around B and its south germ west around A:

    north-of-x_t -- e_t -- m_t -- w_t -- south-of-x_t

with e_t a new crossing east of the slit, m_t the rotated core crossing
(slit position c-1-t), and w_t a new crossing west of the slit.  Chords
joining two slit crossings rotate with the core (no side crossings),
and arc ends at A or B travel to the opposite puncture, crossing one
neighbouring edge when their chord leaves the disk.  New-crossing order
on the neighbouring edges (west to east):

    east side:  [eA?, e_0, e_1, ..., e_{c-1}, eB?]   (prepended)
    west side:  [wA?, w_0, w_1, ..., w_{c-1}, wB?]   (appended)

where eA/wA come from an arc end at A and eB/wB from one at B.

Full twist: chords lying inside the disk are untouched; every germ
leaving the disk northward is rerouted

    outside -- e_k -- w_k -- (original inner node)

(one wrap east-about-B then west-about-A) and every southward germ
symmetrically through w_k then e_k.  Writing ipos = -1, t, c for inner
node A, x_t, B, the nesting of the wrap chords forces the order

    east side:  [south germs by ipos descending][north germs ascending]
    west side:  [south germs by ipos ascending][north germs descending]

both read west to east, prepended/appended as for the half twist.
"""

from __future__ import annotations

from .diagram import Diagram, EDGES, WEST, EAST, PREV, NEXT, other_face
from .errors import InputError


def _capture_support(d: Diagram, slit: str):
    """Remove and return every chord touching the slit's support disk.

    Returns (xs, old) where old maps (face, node) -> former partner for
    each slit crossing node and each slit puncture that had a chord.
    Both directions of a chord are recorded before anything is deleted.
    """
    xs = list(d.edges[slit])
    pA, pB = ("p", WEST[slit]), ("p", EAST[slit])
    affected = [("x", x) for x in xs] + [pA, pB]
    old = {}
    for f in ("N", "S"):
        lk = d.links[f]
        for node in affected:
            if node in lk:
                old[(f, node)] = lk[node]
        for node in affected:
            partner = lk.pop(node, None)
            if partner is not None and partner in lk:
                del lk[partner]
    return xs, old


def half_twist(d: Diagram, slit: str, clockwise: bool = True) -> Diagram:
    """Image of the system under the half twist about the given slit edge.

    The result is not reduced; callers normally reduce afterwards.
    """
    if slit not in EDGES:
        raise InputError(f"unknown slit edge {slit!r}")
    if not clockwise:
        return half_twist(d.reflect(), slit, True).reflect()

    out = d.copy()
    xs, old = _capture_support(out, slit)
    c = len(xs)
    slit_set = set(xs)
    A, B = WEST[slit], EAST[slit]
    pA, pB = ("p", A), ("p", B)
    w_edge, e_edge = PREV[slit], NEXT[slit]
    nid = out.new_id
    m = {x: nid() for x in xs}
    e_block, w_block = [], []

    endA = next(((f, old[(f, pA)]) for f in ("N", "S") if (f, pA) in old),
                None)
    endB = next(((f, old[(f, pB)]) for f in ("N", "S") if (f, pB) in old),
                None)

    if endA and endA[1] == pB:
        # straight arc between the slit punctures: flips to the other face
        out._link(other_face(endA[0]), pA, pB)
        endA = endB = None
    if endA and endA[1][0] == "x" and endA[1][1] in slit_set:
        # end chord staying inside the disk: rides the core rotation
        out._link(other_face(endA[0]), pB, ("x", m[endA[1][1]]))
        endA = None
    if endB and endB[1][0] == "x" and endB[1][1] in slit_set:
        out._link(other_face(endB[0]), pA, ("x", m[endB[1][1]]))
        endB = None

    if endA and endA[0] == "N":
        eA = nid()
        e_block.append(eA)
        out._link("N", endA[1], ("x", eA))
        out._link("S", ("x", eA), pB)
    for t, x in enumerate(xs):
        nN = old[("N", ("x", x))]
        if nN[0] == "x" and nN[1] in slit_set:
            if xs.index(nN[1]) > t:           # hump over the slit: rotates
                out._link("S", ("x", m[x]), ("x", m[nN[1]]))
        elif nN in (pA, pB):
            pass                              # handled from the end side
        else:
            e_t = nid()
            e_block.append(e_t)
            out._link("N", nN, ("x", e_t))
            out._link("S", ("x", e_t), ("x", m[x]))
    if endB and endB[0] == "N":
        eB = nid()
        e_block.append(eB)
        out._link("N", endB[1], ("x", eB))
        out._link("S", ("x", eB), pA)

    if endA and endA[0] == "S":
        wA = nid()
        w_block.append(wA)
        out._link("S", endA[1], ("x", wA))
        out._link("N", ("x", wA), pB)
    for t, x in enumerate(xs):
        nS = old[("S", ("x", x))]
        if nS[0] == "x" and nS[1] in slit_set:
            if xs.index(nS[1]) > t:
                out._link("N", ("x", m[x]), ("x", m[nS[1]]))
        elif nS in (pA, pB):
            pass
        else:
            w_t = nid()
            w_block.append(w_t)
            out._link("N", ("x", m[x]), ("x", w_t))
            out._link("S", ("x", w_t), nS)
    if endB and endB[0] == "S":
        wB = nid()
        w_block.append(wB)
        out._link("S", endB[1], ("x", wB))
        out._link("N", ("x", wB), pA)

    out.edges[slit] = [m[x] for x in reversed(xs)]
    out.edges[e_edge] = e_block + out.edges[e_edge]
    out.edges[w_edge] = out.edges[w_edge] + w_block

    if A in out.end_label or B in out.end_label:
        la, lb = out.end_label.pop(A, None), out.end_label.pop(B, None)
        if la is not None:
            out.end_label[B] = la
        if lb is not None:
            out.end_label[A] = lb

    out.validate()
    return out


def full_twist(d: Diagram, slit: str, clockwise: bool = True) -> Diagram:
    """Full Dehn twist about the boundary of the slit's support disk.

    Built directly from the one-wrap collar rewiring, not as a square of
    half twists; the test suite checks half_twist**2 against this.
    """
    if slit not in EDGES:
        raise InputError(f"unknown slit edge {slit!r}")
    if not clockwise:
        return full_twist(d.reflect(), slit, True).reflect()

    out = d.copy()
    xs, old = _capture_support(out, slit)
    slit_set = set(xs)
    A, B = WEST[slit], EAST[slit]
    pA, pB = ("p", A), ("p", B)
    w_edge, e_edge = PREV[slit], NEXT[slit]
    nid = out.new_id

    def inside(node):
        return node in (pA, pB) or (node[0] == "x" and node[1] in slit_set)

    def ipos(node):
        if node == pA:
            return -1
        if node == pB:
            return len(xs)
        return xs.index(node[1])

    wraps = []                 # (face, inner, outer), one per leaving germ
    for (f, node), partner in old.items():
        if inside(partner):
            if (f, partner) not in old or ipos(node) <= ipos(partner):
                out._link(f, node, partner)    # interior chord: untouched
        else:
            wraps.append((f, node, partner))

    new_on = {e_edge: [], w_edge: []}
    for f, inner, outer in wraps:
        e_k, w_k = nid(), nid()
        new_on[e_edge].append((f, inner, e_k))
        new_on[w_edge].append((f, inner, w_k))
        if f == "N":
            out._link("N", outer, ("x", e_k))
            out._link("S", ("x", e_k), ("x", w_k))
            out._link("N", ("x", w_k), inner)
        else:
            out._link("S", outer, ("x", w_k))
            out._link("N", ("x", w_k), ("x", e_k))
            out._link("S", ("x", e_k), inner)

    def block(entries, east_side):
        south = [x for x in entries if x[0] == "S"]
        north = [x for x in entries if x[0] == "N"]
        south.sort(key=lambda x: ipos(x[1]), reverse=east_side)
        north.sort(key=lambda x: ipos(x[1]), reverse=not east_side)
        return [cid for _, _, cid in south + north]

    out.edges[e_edge] = block(new_on[e_edge], True) + out.edges[e_edge]
    out.edges[w_edge] = out.edges[w_edge] + block(new_on[w_edge], False)

    out.validate()
    return out
