"""Placing reference circles against a system and reading off structure.

A reference circle (a disk boundary, or any round circle around a
contiguous run of punctures) crosses the axis twice, once on the edge
west of the run and once on the edge east of it.  Inserting those two
crossing points into chosen gaps of the system's edge lists draws the
circle as one north chord plus one south chord; the number of system
chords it then crosses is exact, and minimising over the two gap
choices gives the geometric intersection number.  Everything else in
this module (slots, pieces, waves) is read off a minimising placement.

Orders are combinatorial throughout: the system chords crossing one
template chord do so in the order of their enclosed endpoints, read
west to east along the axis, because disjoint chords that each cross
the template once cannot invert that order without crossing each other.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .diagram import Diagram, EAST, NEXT, other_face
from .errors import PaperViolation

# (west edge, east edge) of the round circle around each disk's punctures
DISK_EDGES = {1: ("g3", "g1"), 2: ("g1", "g2"), 3: ("g2", "g3")}

# axis edge lying between the other two disks, used for the parity test
_FAR_EDGE = {1: "g2", 2: "g3", 3: "g1"}


def _between_edges(west_edge: str, east_edge: str):
    """Edges and punctures strictly between the two circle edges,
    walking east; the punctures listed are the enclosed ones."""
    edges, punct = [], []
    e = west_edge
    while True:
        punct.append(EAST[e])
        e = NEXT[e]
        if e == east_edge:
            break
        edges.append(e)
    return edges, punct


def _chord_list(d: Diagram):
    chords = []
    for f in ("N", "S"):
        for a, b in d.links[f].items():
            if a < b:
                chords.append((a, b))
    return chords


def _scan_counts(d: Diagram, west_edge: str, east_edge: str):
    """Crossing count for every gap pair, O(grid) after a linear setup.

    counts[i][j] is the number of system chords crossed by the circle
    placed at gap i on the west edge and gap j on the east edge.
    """
    mid_edges, mid_punct = _between_edges(west_edge, east_edge)
    mid = {("p", p) for p in mid_punct}
    for e in mid_edges:
        mid.update(("x", c) for c in d.edges[e])
    wlist = [("x", c) for c in d.edges[west_edge]]
    elist = [("x", c) for c in d.edges[east_edge]]
    chords = _chord_list(d)

    incident = {}
    for a, b in chords:
        incident.setdefault(a, []).append(b)
        incident.setdefault(b, []).append(a)

    enclosed = set(mid)
    enclosed.update(wlist)                 # gap 0 encloses the whole west tail
    base = sum(1 for a, b in chords if (a in enclosed) != (b in enclosed))

    def toggle(node, count):
        inside = node in enclosed
        for p in incident.get(node, ()):
            crossed = (p in enclosed) != inside
            count += -1 if crossed else 1
        if inside:
            enclosed.discard(node)
        else:
            enclosed.add(node)
        return count

    nW, nE = len(wlist), len(elist)
    counts = [[0] * (nE + 1) for _ in range(nW + 1)]
    row = base
    for i in range(nW + 1):
        if i > 0:
            row = toggle(wlist[i - 1], row)
        c = row
        counts[i][0] = c
        for j in range(nE):
            c = toggle(elist[j], c)
            counts[i][j + 1] = c
        for j in range(nE - 1, -1, -1):
            c = toggle(elist[j], c)
    return counts


@dataclass
class Slot:
    """One crossing of the system with a placed circle."""
    template: int           # disk index 1..3, or 0 for ad-hoc circles
    pos: int                # cyclic position, counted from the west point
    face: str
    inside: tuple           # system node enclosed by the circle
    outside: tuple
    comp: int = -1          # component index, filled by piece splitting


@dataclass
class Placement:
    template: int
    west_edge: str
    east_edge: str
    gaps: tuple             # (west gap, east gap)
    count: int
    enclosed: frozenset
    slots: list = field(default_factory=list)
    slot_at: dict = field(default_factory=dict)   # (face, inside node) -> pos


def _build_placement(d: Diagram, template: int, west_edge: str,
                     east_edge: str, gaps: tuple, count: int) -> Placement:
    i, j = gaps
    mid_edges, _ = _between_edges(west_edge, east_edge)
    inside_order = [("x", c) for c in d.edges[west_edge][i:]]
    inside_order.append(("p", EAST[west_edge]))
    for e in mid_edges:
        inside_order.extend(("x", c) for c in d.edges[e])
        inside_order.append(("p", EAST[e]))
    inside_order.extend(("x", c) for c in d.edges[east_edge][:j])
    enclosed = frozenset(inside_order)
    rank = {n: k for k, n in enumerate(inside_order)}

    pl = Placement(template, west_edge, east_edge, (i, j), count, enclosed)
    per_face = {}
    for f in ("N", "S"):
        crossing = []
        for a, b in d.links[f].items():
            if a in enclosed and b not in enclosed:
                crossing.append((rank[a], a, b))
        crossing.sort()
        per_face[f] = crossing
    cyc = [("N", a, b) for _, a, b in per_face["N"]]
    cyc += [("S", a, b) for _, a, b in reversed(per_face["S"])]
    for pos, (f, a, b) in enumerate(cyc):
        pl.slots.append(Slot(template, pos, f, a, b))
        pl.slot_at[(f, a)] = pos
    if len(pl.slots) != count:
        raise PaperViolation(
            f"slot bookkeeping does not match the crossing count on "
            f"template {template}: {len(pl.slots)} != {count}")
    return pl


def _grid_min(counts) -> int:
    return min(min(row) for row in counts)


def place_circle(d: Diagram, west_edge: str, east_edge: str,
                 template: int = 0) -> Placement:
    """Innermost minimal placement of the round circle between the edges
    (largest west gap, then smallest east gap, among minimisers)."""
    counts = _scan_counts(d, west_edge, east_edge)
    best = None
    for i, row in enumerate(counts):
        for j, c in enumerate(row):
            key = (c, -i, j)
            if best is None or key < best:
                best = key
    count, i, j = best[0], -best[1], best[2]
    return _build_placement(d, template, west_edge, east_edge, (i, j), count)


def intersection_with_disk(d: Diagram, disk: int) -> int:
    """|s ∩ disk boundary| for reduced s."""
    return _grid_min(_scan_counts(d, *DISK_EDGES[disk]))


def equator_crossings(d: Diagram, disk: int) -> int:
    """Crossings of s with the disk's equator (the axis piece inside the
    disk), counted at the innermost minimal boundary placement."""
    pl = place_circle(d, *DISK_EDGES[disk], template=disk)
    return sum(1 for node in pl.enclosed if node[0] == "x")


def place_all_disks(d: Diagram) -> dict:
    """Disjoint minimal placements of all three disk boundaries.

    Each boundary must individually achieve its unconstrained minimum;
    disjointness ties the placements on the shared edges (the east
    point of disk i sits west of the west point of the next disk).  All
    insertion orders are tried before giving up.
    """
    grids = {t: _scan_counts(d, *DISK_EDGES[t]) for t in (1, 2, 3)}
    minima = {t: _grid_min(grids[t]) for t in (1, 2, 3)}

    for order in itertools.permutations((1, 2, 3)):
        chosen, ok = {}, True
        for t in order:
            counts = grids[t]
            nW, nE = len(counts) - 1, len(counts[0]) - 1
            prev, nxt = (t - 2) % 3 + 1, t % 3 + 1
            lo_i = chosen[prev][1] if prev in chosen else 0
            hi_j = chosen[nxt][0] if nxt in chosen else nE
            best = None
            for i in range(lo_i, nW + 1):
                for j in range(0, hi_j + 1):
                    key = (counts[i][j], -i, j)
                    if best is None or key < best:
                        best = key
            if best is None or best[0] != minima[t]:
                ok = False
                break
            chosen[t] = (-best[1], best[2])
        if ok:
            return {t: _build_placement(d, t, *DISK_EDGES[t], chosen[t],
                                        minima[t]) for t in (1, 2, 3)}
    raise PaperViolation(
        "no disjoint placement realises all three boundary minima")


@dataclass
class Piece:
    """Maximal run of a component inside one region."""
    comp: int
    region: tuple            # ("disk", i) | ("pants",) | ("closed", region...)
    start: tuple             # ("slot", disk, pos) | ("end", puncture) | ("none",)
    end: tuple
    nodes: list              # interior axis crossings, in walk order

    def far_edge_parity(self, d: Diagram, disk: int) -> int:
        far = {("x", c) for c in d.edges[_FAR_EDGE[disk]]}
        return sum(1 for n in self.nodes if n in far) % 2

    def is_wave(self, d: Diagram) -> bool:
        """True for an essential pants return to a single disk boundary:
        the piece, closed up along the boundary circle, separates the
        other two disks (odd crossing count on the axis edge between
        them)."""
        if self.region != ("pants",):
            return False
        if self.start[0] != "slot" or self.end[0] != "slot":
            return False
        if self.start[1] != self.end[1]:
            return False
        return self.far_edge_parity(d, self.start[1]) == 1


def _component_walk(d: Diagram, kind: str, path: list):
    """Directed chord steps (u, v, face) along a component path."""
    steps = []
    if kind == "arc":
        f = "N" if path[0] in d.links["N"] else "S"
        for u, v in zip(path, path[1:]):
            steps.append((u, v, f))
            f = other_face(f)
    else:
        f = "N"
        cyc = path + [path[0]]
        for u, v in zip(cyc, cyc[1:]):
            steps.append((u, v, f))
            f = other_face(f)
    return steps


def split_pieces(d: Diagram, placements: dict):
    """Cut every component at its template crossings.

    Returns (pieces, comps); comps is the component list piece indices
    refer to.  Slots in the placements get their comp field filled.
    """
    comps = d.components()
    pieces = []
    encl = {t: placements[t].enclosed for t in placements}

    def region_of(node):
        for t, E in encl.items():
            if node in E:
                return ("disk", t)
        return ("pants",)

    for ci, (kind, path, _label) in enumerate(comps):
        steps = _component_walk(d, kind, path)
        events = []          # (step index, disk, slot pos), in walk order
        for si, (u, v, f) in enumerate(steps):
            hit = []
            for t in placements:
                inu, inv = u in encl[t], v in encl[t]
                if inu != inv:
                    inside = u if inu else v
                    pos = placements[t].slot_at[(f, inside)]
                    placements[t].slots[pos].comp = ci
                    hit.append((0 if inu else 1, t, pos))
            hit.sort()       # leave the old region before entering the new
            events.extend((si, t, pos) for _, t, pos in hit)

        if not events:
            region = region_of(path[0])
            if kind == "arc":
                pieces.append(Piece(ci, region, ("end", path[0][1]),
                                    ("end", path[-1][1]), list(path[1:-1])))
            else:
                pieces.append(Piece(ci, ("closed",) + region,
                                    ("none",), ("none",), list(path)))
            continue

        if kind == "arc":
            s0, t0, p0 = events[0]
            pieces.append(Piece(ci, region_of(path[0]), ("end", path[0][1]),
                                ("slot", t0, p0),
                                [path[k] for k in range(1, s0 + 1)]))
            for (s1, t1, p1), (s2, t2, p2) in zip(events, events[1:]):
                mid = [path[k] for k in range(s1 + 1, s2 + 1)]
                region = region_of(mid[0]) if mid else ("pants",)
                pieces.append(Piece(ci, region, ("slot", t1, p1),
                                    ("slot", t2, p2), mid))
            sl, tl, pl_ = events[-1]
            pieces.append(Piece(ci, region_of(path[-1]), ("slot", tl, pl_),
                                ("end", path[-1][1]),
                                [path[k] for k in range(sl + 1, len(path) - 1)]))
        else:
            n = len(path)
            ev = events + [(events[0][0] + n, events[0][1], events[0][2])]
            for (s1, t1, p1), (s2, t2, p2) in zip(ev, ev[1:]):
                mid = [path[k % n] for k in range(s1 + 1, s2 + 1)]
                region = region_of(mid[0]) if mid else ("pants",)
                pieces.append(Piece(ci, region, ("slot", t1, p1),
                                    ("slot", t2, p2), mid))
    return pieces, comps


def has_wave(d: Diagram, comp_index=None) -> bool:
    placements = place_all_disks(d)
    pieces, _ = split_pieces(d, placements)
    return any(pc.is_wave(d) for pc in pieces
               if comp_index is None or pc.comp == comp_index)


def pants_connection_counts(d: Diagram) -> dict:
    """Count pants pieces by the pair of disk boundaries they join.

    Keys (i, j) with i <= j; a return to the same boundary counts under
    (i, i).  In-disk pieces and arc-end pieces never enter the count.
    """
    placements = place_all_disks(d)
    pieces, _ = split_pieces(d, placements)
    out = {(1, 1): 0, (1, 2): 0, (1, 3): 0, (2, 2): 0, (2, 3): 0, (3, 3): 0}
    for pc in pieces:
        if pc.region != ("pants",):
            continue
        if pc.start[0] == "slot" and pc.end[0] == "slot":
            a, b = sorted((pc.start[1], pc.end[1]))
            out[(a, b)] += 1
    return out
