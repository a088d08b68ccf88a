"""Coordinates for curve systems: pants weights and per-disk twist data.

The pants region supports six arc families: three through-families
joining distinct windows (routed over the gap edge between the two
disks, north or south) and three return families that leave and
re-enter the same window around the next disk.  Window intersection
counts determine the family multiplicities (weights_from_intersections).

Inside a disk the residual freedom is an integer twisting number per
disk.  Twist normalization picks, within the half-twist orbit of each
disk, the representative of least crossing number, breaking plateau
ties by canonical form.  The winner depends only on the orbit, never on
the input's position in it, which is what makes the extraction and the
builder agree.

The chart covers every system reachable from a standard layout by disk
half twists.  A half twist rotates a window's 2p attachment points by p
positions, but a closed curve can be glued to a window with any offset,
so for p >= 2 there are systems sitting between half-twist positions
(their normal forms route strands around a puncture, visible as gap
crossings hugging a disk).  Those have no coordinates here and both
directions report them as not realizable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import EDGES, Diagram
from .engine import canonical_form, double_arc, extract_component
from .errors import InputError, NotRealizableError, PaperViolation, StepBudgetExceeded
from .surface import pair_circle, puncture_circle
from .twists import half_twist
from .views import intersection_with_disk, place_all_disks, split_pieces

_DISKS = (1, 2, 3)
_MIDDLE = {1: "m1", 2: "m2", 3: "m3"}

# pair k joins windows k and k%3+1 across the gap edge g_k
_PAIR_WEST = {1: 1, 2: 2, 3: 3}
_PAIR_EAST = {1: 2, 2: 3, 3: 1}
_PAIR_GAP = {1: "g1", 2: "g2", 3: "g3"}

# the return family on window i loops around disk i%3+1
_RETURN_GAP = {1: "g2", 2: "g3", 3: "g1"}

_DESCENT_BUDGET = 10_000


@dataclass(frozen=True)
class PantsWeights:
    """Multiplicities of the six pants arc families."""

    x11: int
    x22: int
    x33: int
    x12: int
    x13: int
    x23: int

    def __post_init__(self):
        vals = (self.x11, self.x22, self.x33, self.x12, self.x13, self.x23)
        if any(v < 0 for v in vals):
            raise InputError("negative arc weight")
        if sum(1 for v in (self.x11, self.x22, self.x33) if v > 0) > 1:
            raise InputError("two return families cannot coexist")

    def pair(self, i: int, j: int) -> int:
        i, j = min(i, j), max(i, j)
        return getattr(self, "x%d%d" % (i, j))

    def window_count(self, i: int) -> int:
        j, k = [d for d in _DISKS if d != i]
        return 2 * self.pair(i, i) + self.pair(i, j) + self.pair(i, k)


def weights_from_intersections(i1: int, i2: int, i3: int) -> PantsWeights:
    """Arc weights realizing the given window intersection counts."""
    counts = (i1, i2, i3)
    if any(v < 0 for v in counts):
        raise InputError("negative intersection count")
    if sum(counts) % 2:
        raise InputError("intersection counts of a closed system have even sum")
    x = {(1, 1): 0, (2, 2): 0, (3, 3): 0}
    big = [i for i in _DISKS if 2 * counts[i - 1] > sum(counts)]
    if big:
        i = big[0]
        j, k = [d for d in _DISKS if d != i]
        x[(i, i)] = (counts[i - 1] - counts[j - 1] - counts[k - 1]) // 2
        x[tuple(sorted((i, j)))] = counts[j - 1]
        x[tuple(sorted((i, k)))] = counts[k - 1]
        x[tuple(sorted((j, k)))] = 0
    else:
        for i, j in ((1, 2), (1, 3), (2, 3)):
            k = 6 - i - j
            v = (counts[i - 1] + counts[j - 1] - counts[k - 1])
            if v % 2:
                raise InputError("intersection counts violate pair parity")
            x[(i, j)] = v // 2
    return PantsWeights(x11=x[(1, 1)], x22=x[(2, 2)], x33=x[(3, 3)],
                        x12=x[(1, 2)], x13=x[(1, 3)], x23=x[(2, 3)])


def measured_pants_weights(s: Diagram) -> PantsWeights:
    """Direct pants-piece counts of a reduced system, as weights."""
    from .views import pants_connection_counts
    c = pants_connection_counts(s.reduce())
    return PantsWeights(x11=c[(1, 1)], x22=c[(2, 2)], x33=c[(3, 3)],
                        x12=c[(1, 2)], x13=c[(1, 3)], x23=c[(2, 3)])


@dataclass(frozen=True)
class DehnParams:
    """Per-disk triple (p, q, t); p counts half the window intersections,
    q the middle-edge crossings of the normalized form, t the twisting.
    A disk avoided by the system (p = q = 0) uses t >= 0 for the number
    of parallel copies of its boundary circle."""

    p1: int
    q1: int
    t1: int
    p2: int
    q2: int
    t2: int
    p3: int
    q3: int
    t3: int

    def __post_init__(self):
        for i in _DISKS:
            p, q, t = self.disk(i)
            if p < 0 or q < 0:
                raise NotRealizableError("negative coordinate on disk %d" % i)
            if p == 0 and (q != 0 or t < 0):
                raise NotRealizableError(
                    "disk %d carries no strands; expected q = 0, t >= 0" % i)
            if p > 0 and q != p:
                raise NotRealizableError(
                    "disk %d: a twist-normal strand bundle crosses the middle "
                    "edge once per strand, so q must equal p" % i)

    def disk(self, i: int):
        return (getattr(self, "p%d" % i), getattr(self, "q%d" % i),
                getattr(self, "t%d" % i))

    def as_tuple(self):
        return (self.p1, self.q1, self.t1, self.p2, self.q2, self.t2,
                self.p3, self.q3, self.t3)

    @classmethod
    def from_tuple(cls, values) -> "DehnParams":
        vals = tuple(int(v) for v in values)
        if len(vals) != 9:
            raise InputError("expected nine coordinates")
        return cls(*vals)

    @classmethod
    def zeros(cls) -> "DehnParams":
        return cls(0, 0, 0, 0, 0, 0, 0, 0, 0)


def curve_from_arc(s: Diagram, component: str) -> Diagram:
    """Closed curve bounding a regular neighbourhood of one arc."""
    return double_arc(s, component)


# ---------------------------------------------------------------------------
# twist normalization

def _twist_once(s: Diagram, i: int, clockwise: bool) -> Diagram:
    return half_twist(s, _MIDDLE[i], clockwise=clockwise).reduce()


def _twist_normalize(s: Diagram):
    """Normal form of s under the commuting disk half-twists.

    The three twists act as a Z^3; the twist part of the cost does not
    split per disk (neighbouring twists trade crossings across the gap
    edges), so the normal form is chosen on the whole lattice orbit:
    coordinate descent on the crossing count, then a sweep of the
    connected equal-cost region, won by least canonical form.  On an
    axis carrying strands the stabilizer is trivial (cost grows without
    bound both ways), so the winner also fixes the twist offsets.

    Returns (system, offsets): the winner and the net power of each
    twist taking the input to it.
    """
    cur = s.reduce()
    active = [i for i in _DISKS if intersection_with_disk(cur, i) > 0]
    if not active:
        return cur, [0, 0, 0]
    off = {i: 0 for i in _DISKS}
    budget = _DESCENT_BUDGET

    def neighbors(d):
        for i in active:
            for step in (1, -1):
                yield i, step, _twist_once(d, i, step > 0)

    while budget > 0:
        # descend to a lattice-local minimum
        while True:
            budget -= 1
            if budget <= 0:
                raise StepBudgetExceeded(_DESCENT_BUDGET,
                                         "twist descent did not settle")
            for i, step, cand in neighbors(cur):
                if cand.crossing_count() < cur.crossing_count():
                    cur = cand
                    off[i] += step
                    break
            else:
                break
        # sweep its equal-cost component, watching for a way further down
        cost = cur.crossing_count()
        start = (0, 0, 0)
        plateau = {start: cur}
        canons = {canonical_form(cur): start}
        queue = [start]
        deeper = None
        while queue and deeper is None:
            pt = queue.pop()
            budget -= 1
            if budget <= 0:
                raise StepBudgetExceeded(_DESCENT_BUDGET,
                                         "twist plateau did not close")
            for i, step, cand in neighbors(plateau[pt]):
                npt = tuple(v + (step if k == i else 0)
                            for k, v in zip(_DISKS, pt))
                if npt in plateau:
                    continue
                cc = cand.crossing_count()
                if cc < cost:
                    deeper = (npt, cand)
                    break
                if cc == cost:
                    c = canonical_form(cand)
                    if c in canons:
                        continue
                    plateau[npt] = cand
                    canons[c] = npt
                    queue.append(npt)
        if deeper is None:
            break
        npt, cur = deeper
        for i, v in zip(_DISKS, npt):
            off[i] += v
    else:
        raise StepBudgetExceeded(_DESCENT_BUDGET, "twist descent did not settle")

    best = min(canons)
    pt = canons[best]
    for i, v in zip(_DISKS, pt):
        off[i] += v
    return plateau[pt], [off[1], off[2], off[3]]


def standardize(s: Diagram) -> Diagram:
    """Least-crossing representative within the disk twist orbit."""
    return _twist_normalize(s)[0]


def standardize_with_word(s: Diagram):
    """standardize, also reporting the applied powers as atom pairs."""
    sys_, powers = _twist_normalize(s)
    word = [("H%d" % i, k) for i, k in zip(_DISKS, powers) if k != 0]
    return sys_, word


# ---------------------------------------------------------------------------
# piece shapes and the standard-position test

def piece_shapes(s: Diagram):
    """Sorted shape descriptors of the pants pieces of a reduced system.

    A shape is (end, end, crossed-edge-names) with slot ends tagged by
    their disk and arc ends by their puncture, oriented to the smaller
    reading.
    """
    d = s.reduce()
    placements = place_all_disks(d)
    pieces, _ = split_pieces(d, placements)
    eo = d.edge_of()
    shapes = []
    for pc in pieces:
        if pc.region != ("pants",):
            continue
        ends = []
        for e in (pc.start, pc.end):
            if e[0] == "slot":
                ends.append(("w", e[1]))
            else:
                ends.append(("p", e[1]))
        edges = tuple(eo[n[1]] for n in pc.nodes if n[0] == "x")
        fwd = (ends[0], ends[1], edges)
        rev = (ends[1], ends[0], tuple(reversed(edges)))
        shapes.append(min(fwd, rev))
    return tuple(sorted(shapes))


def is_standard_position(s: Diagram) -> bool:
    """True when twist-normal and every pants piece is a catalog type."""
    from .catalog import PIECE_CATALOG
    d = s.reduce()
    if canonical_form(d) != canonical_form(standardize(d)):
        return False
    return all(shape in PIECE_CATALOG for shape in piece_shapes(d))


# ---------------------------------------------------------------------------
# extraction

def _subsystem(d: Diagram, comps, keep) -> Diagram:
    nodes = set()
    for idx in keep:
        nodes.update(comps[idx][1])
    edges = {e: [c for c in d.edges[e] if ("x", c) in nodes] for e in EDGES}
    links = {f: {n: p for n, p in d.links[f].items() if n in nodes}
             for f in ("N", "S")}
    return Diagram(edges, links, {}, 0)


def _component_canons():
    pairs = {}
    for i in _DISKS:
        pairs[canonical_form(pair_circle(i).reduce(), labeled=False)] = i
    punctures = {canonical_form(puncture_circle(k).reduce(), labeled=False)
                 for k in range(1, 7)}
    return pairs, punctures


_PAIR_CANONS, _PUNCTURE_CANONS = None, None


def _classify_circles(d: Diagram, comps):
    """Split component indices into boundary-parallel copies and the rest."""
    global _PAIR_CANONS, _PUNCTURE_CANONS
    if _PAIR_CANONS is None:
        _PAIR_CANONS, _PUNCTURE_CANONS = _component_canons()
    copies = {1: 0, 2: 0, 3: 0}
    through = []
    for idx, (kind, _path, _label) in enumerate(comps):
        if kind != "circle":
            raise InputError("coordinates are for closed systems; "
                             "component %d is an arc" % idx)
        alone = extract_component(d, idx).reduce()
        if alone.trivial_circles:
            raise NotRealizableError("null component")
        c = canonical_form(alone, labeled=False)
        if c in _PUNCTURE_CANONS:
            raise NotRealizableError("component parallel to a single puncture")
        if c in _PAIR_CANONS:
            copies[_PAIR_CANONS[c]] += 1
        else:
            through.append(idx)
    return copies, through


def dehn_params_from_system(s: Diagram, check: bool = True) -> DehnParams:
    """Read the nine coordinates off a closed system."""
    d = s.reduce()
    if d.trivial_circles:
        raise NotRealizableError("null components carry no coordinates")
    comps = d.components()
    copies, through = _classify_circles(d, comps)
    vals = {}
    if through:
        rest = _subsystem(d, comps, through)
        normal, powers = _twist_normalize(rest)
        for i, k in zip(_DISKS, powers):
            ii = intersection_with_disk(normal, i)
            if ii % 2:
                raise PaperViolation("odd window count %d on disk %d" % (ii, i))
            p = ii // 2
            q = len(normal.edges[_MIDDLE[i]])
            if p > 0 and copies[i] > 0:
                raise PaperViolation(
                    "disk %d carries strands and parallel copies" % i)
            if p > 0 and q != p:
                raise NotRealizableError(
                    "disk %d sits between half-twist positions (middle count "
                    "%d for %d strands); no coordinates in this chart" % (i, q, p))
            t = copies[i] if p == 0 else -k
            vals[i] = (p, q if p else 0, t)
    else:
        for i in _DISKS:
            vals[i] = (0, 0, copies[i])
    params = DehnParams(*(v for i in _DISKS for v in vals[i]))
    if check:
        rebuilt = system_from_dehn_params(params)
        if canonical_form(rebuilt, labeled=False) != canonical_form(d, labeled=False):
            raise NotRealizableError(
                "system sits between half-twist positions of the standard "
                "layout; no coordinates in this chart")
    return params


# ---------------------------------------------------------------------------
# construction

def _rainbow(first, second):
    """Chord endpoint pairs for a nested parallel family."""
    return list(zip(first, reversed(second)))


def _standard_layout(w: PantsWeights, copies) -> Diagram:
    """Reduced diagram of the untwisted through-system plus copies."""
    edges = {e: [] for e in EDGES}
    links = {"N": {}, "S": {}}
    serial = [0]

    def new_node():
        serial[0] += 1
        return ("x", serial[0])

    def chord(face, a, b):
        links[face][a] = b
        links[face][b] = a

    odd = w.x12 % 2
    if (w.x13 % 2 != odd) or (w.x23 % 2 != odd):
        raise NotRealizableError("pair weights of mixed parity")
    aN = {1: w.x12 // 2, 2: w.x23 // 2, 3: (w.x13 + 1) // 2}
    aS = {1: (w.x12 + 1) // 2, 2: w.x23 // 2, 3: w.x13 // 2}
    ret = [i for i in _DISKS if w.pair(i, i) > 0]
    ret_disk = ret[0] if ret else 0
    ret_n = w.pair(ret_disk, ret_disk) if ret_disk else 0

    # window slot lists, west to east, one entry per future middle
    # crossing; keys carry (family, pair, window, rank) so the two ends
    # of one family stay distinct
    west_pair = {1: 3, 2: 1, 3: 2}
    slotsN, slotsS = {}, {}
    for i in _DISKS:
        wp = west_pair[i]
        n = [("pairN", wp, i, j) for j in range(aN[wp])]
        s_ = [("pairS", wp, i, j) for j in range(aS[wp])]
        if odd and i == 3:
            s_.insert(0, ("bentS", 0, 0, 0))
        if ret_disk == i:
            n += [("retN", i, i, j) for j in range(ret_n)]
            s_ += [("retS", i, i, j) for j in range(ret_n)]
        n += [("pairN", i, i, j) for j in range(aN[i])]
        s_ += [("pairS", i, i, j) for j in range(aS[i])]
        if odd and i == 2:
            n.append(("bentN", 0, 0, 0))
        if len(n) != len(s_):
            raise PaperViolation("window %d sides disagree: %d vs %d"
                                 % (i, len(n), len(s_)))
        slotsN[i], slotsS[i] = n, s_

    # middle crossings realize the slots; remember each slot's node
    at = {}
    for i in _DISKS:
        for nslot, sslot in zip(slotsN[i], slotsS[i]):
            node = new_node()
            edges[_MIDDLE[i]].append(node[1])
            at[nslot] = node
            at[sslot] = node

    # gap tenants: copies hug their disk, return loops sit between
    gap_nodes = {}
    for k in _DISKS:
        here = []
        wdisk, edisk = k, k % 3 + 1
        inner_w = [new_node() for _ in range(copies[wdisk - 1])]
        loops = []
        if ret_disk and _RETURN_GAP[ret_disk] == _PAIR_GAP[k]:
            loops = [new_node() for _ in range(ret_n)]
        inner_e = [new_node() for _ in range(copies[edisk - 1])]
        bent = []
        if odd and k == 2:
            bent = [new_node()]
        here = inner_w + loops + bent + list(reversed(inner_e))
        edges[_PAIR_GAP[k]] = [n[1] for n in here]
        gap_nodes[k] = {"copies_w": inner_w, "loops": loops, "bent": bent,
                        "copies_e": inner_e}

    # through families: east block of window k to west block of window k+1
    for k in _DISKS:
        j = _PAIR_EAST[k]
        for face, count, tag in (("N", aN[k], "pairN"), ("S", aS[k], "pairS")):
            first = [at[(tag, k, k, r)] for r in range(count)]
            second = [at[(tag, k, j, r)] for r in range(count)]
            for a, b in _rainbow(first, second):
                chord(face, a, b)

    # return loops around the next disk
    if ret_disk:
        i = ret_disk
        gk = [k for k in _DISKS if _RETURN_GAP[i] == _PAIR_GAP[k]][0]
        loops = gap_nodes[gk]["loops"]
        headsN = [at[("retN", i, i, j)] for j in range(ret_n)]
        headsS = [at[("retS", i, i, j)] for j in range(ret_n)]
        for a, z in _rainbow(headsN, loops):
            chord("N", a, z)
        for z, b in zip(loops, list(reversed(headsS))):
            chord("S", z, b)

    # the parity-fixing arc crosses its gap once
    if odd:
        z = gap_nodes[2]["bent"][0]
        chord("N", at[("bentN", 0, 0, 0)], z)
        chord("S", z, at[("bentS", 0, 0, 0)])

    # boundary-parallel copies, innermost first
    for i in _DISKS:
        gw = [k for k in _DISKS if _PAIR_EAST[k] == i][0]
        ge = i
        wn = gap_nodes[gw]["copies_e"]
        en = gap_nodes[ge]["copies_w"]
        for a, b in zip(wn, en):
            chord("N", a, b)
            chord("S", a, b)

    out = Diagram(edges, links, {}, 0)
    if out.reduce().crossing_count() != out.crossing_count():
        raise PaperViolation("standard layout is not reduced")
    return out


def system_from_dehn_params(d: DehnParams) -> Diagram:
    """Build the closed system with the given coordinates."""
    copies = []
    twists = {}
    counts = []
    for i in _DISKS:
        p, q, t = d.disk(i)
        if p == 0:
            copies.append(t)
        else:
            copies.append(0)
            twists[i] = t
        counts.append(2 * p)
    w = weights_from_intersections(*counts)
    base = _standard_layout(w, copies)
    if any(twists.values()) or base.crossing_count():
        base, _ = _twist_normalize(base)
    out = base
    for i, t in twists.items():
        for _ in range(abs(t)):
            out = _twist_once(out, i, t > 0)
    return out.reduce()
