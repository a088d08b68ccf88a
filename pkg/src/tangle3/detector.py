"""Density, bridge arc replacement, and the triviality decision.

The intersection points of the arcs with the three placed disk
boundaries are the system's boundary endpoints.  A system is dense
when no two endpoints adjacent along one boundary circle belong to
the same arc.  A violating pair is a replacement site: the arc is cut
at the two adjacent points, the subarc between them is discarded, and
the outer parts are rejoined by a band hugging the boundary arc
between the points.  The band picks up one axis crossing for each
axis point of the circle it passes, so the surgery stays inside the
chord-diagram calculus.  Every replacement strictly lowers the
endpoint count, which bounds the densification loop.

The decision pipeline reduces, gates on the end pairing, and then
alternates two reductions of the same measure, the total boundary
intersection count: densification by arc replacement, and the fixed
twist moves (searched over count-neutral half-twist re-positionings)
once the system is dense.  A twist move may break density, so the
loop re-densifies after each one.  Every step strictly lowers the
count, so the loop stops, either at count zero or at a dense system
none of the moves improves.  After a final twist-normalization the
verdict is Trivial exactly when the terminal system is the straight
collection (each doubled arc parallel to a distinct disk boundary).
Closed components never take part in density or replacement; arcs end
at punctures, circles do not.

Detection promises its input presents some rational 3-tangle by three
disjoint bridge arcs.  A NonTrivial verdict makes no claim about
which tangle the input presents.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dehn import standardize_with_word
from .diagram import EDGES, Diagram
from .engine import canonical_form, double_arc
from .errors import InputError, PaperViolation, StepBudgetExceeded
from .mapping import (apply_word, descent_step,
                      total_boundary_intersections, word)
from .surface import pair_circle
from . import views

_PAIRING = [(1, 2), (3, 4), (5, 6)]

DEFAULT_STEP_BUDGET = 10_000


@dataclass(frozen=True)
class BrSite:
    """One adjacency of two boundary endpoints of the same arc.

    ``pos`` and ``pos2`` are consecutive cyclic positions on the
    disk's boundary circle.  ``c1`` and ``c2`` are the kept subarcs
    in walk order (``c1`` from its puncture to the first cut, ``c2``
    from the second cut to the other puncture); each reaches its
    puncture without meeting the adjacency again.  ``direction`` says
    whether the kept ends leave the adjacency on the same side of the
    boundary circle or on opposite sides.
    """
    disk: int
    pos: int
    pos2: int
    comp: int
    label: object
    direction: str
    c1: tuple
    c2: tuple


def _tokens_between(pl, k):
    """Axis points of the circle passed between slots k and k+1."""
    n = len(pl.slots)
    n_north = sum(1 for sl in pl.slots if sl.face == "N")
    if k == n - 1:
        if n_north == n:
            return ("E", "W")
        if n_north == 0:
            return ("W", "E")
        return ("W",)
    if k == n_north - 1:
        return ("E",)
    return ()


def _locate(d: Diagram, placements: dict, comps: list, disk: int, pos: int):
    """Site record for the adjacency (pos, pos+1) on one disk boundary.

    Returns (site, cut1, cut2, path, steps, tokens); the cut indices
    are walk-step positions of the owning arc.
    """
    pl = placements[disk]
    n = len(pl.slots)
    if n < 2 or pos < 0 or pos >= n:
        raise InputError("no adjacency at boundary %d position %d" % (disk, pos))
    pos2 = (pos + 1) % n
    s1, s2 = pl.slots[pos], pl.slots[pos2]
    if s1.comp < 0 or s1.comp != s2.comp:
        raise InputError(
            "endpoints %d and %d of boundary %d belong to different "
            "components" % (pos, pos2, disk))
    kind, path, label = comps[s1.comp]
    if kind != "arc":
        raise InputError("component at boundary %d position %d is closed"
                         % (disk, pos))
    steps = views._component_walk(d, kind, path)
    cuts = {}
    for si, (u, v, f) in enumerate(steps):
        for sl in (s1, s2):
            if f == sl.face and {u, v} == {sl.inside, sl.outside}:
                cuts[sl.pos] = si
    if len(cuts) != 2:
        raise PaperViolation(
            "adjacency on boundary %d does not cut its arc twice" % disk)
    i1, i2 = sorted(cuts.values())
    side1 = path[i1] in pl.enclosed
    side2 = path[i2 + 1] in pl.enclosed
    site = BrSite(disk, pos, pos2, s1.comp, label,
                  "same" if side1 == side2 else "opposite",
                  tuple(path[:i1 + 1]), tuple(path[i2 + 1:]))
    return site, i1, i2, path, steps, _tokens_between(pl, pos)


def _scan(s: Diagram):
    d = s.reduce()
    placements = views.place_all_disks(d)
    _, comps = views.split_pieces(d, placements)
    return d, placements, comps


def density_violation(s: Diagram):
    """First adjacent same-arc endpoint pair, as (disk, pos, pos2,
    component index), or None when the system is dense."""
    d, placements, comps = _scan(s)
    for disk in (1, 2, 3):
        slots = placements[disk].slots
        n = len(slots)
        if n < 2:
            continue
        for k in range(n):
            a, b = slots[k], slots[(k + 1) % n]
            if a.comp == b.comp and a.comp >= 0 and comps[a.comp][0] == "arc":
                return (disk, k, (k + 1) % n, a.comp)
    return None


def is_dense(s: Diagram) -> bool:
    return density_violation(s) is None


def find_br_sites(s: Diagram) -> tuple:
    """All replacement sites, ordered by (boundary index, position)."""
    d, placements, comps = _scan(s)
    out = []
    for disk in (1, 2, 3):
        slots = placements[disk].slots
        n = len(slots)
        if n < 2:
            continue
        for k in range(n):
            a, b = slots[k], slots[(k + 1) % n]
            if a.comp == b.comp and a.comp >= 0 and comps[a.comp][0] == "arc":
                out.append(_locate(d, placements, comps, disk, k)[0])
    return tuple(out)


def find_br_site(s: Diagram):
    sites = find_br_sites(s)
    return sites[0] if sites else None


def br_site_at(s: Diagram, disk: int, pos: int) -> BrSite:
    """The site at a recorded location, for trace replay."""
    d, placements, comps = _scan(s)
    return _locate(d, placements, comps, disk, pos)[0]


def apply_br(s: Diagram, site: BrSite) -> Diagram:
    """Replace the site's arc by its banded shortcut; reduced result.

    The subarc between the two cuts is removed, and the kept pieces
    are rejoined by a band parallel to the boundary arc between the
    adjacent endpoints.  Raises InputError when the site no longer
    matches the system, PaperViolation when the endpoint count fails
    to drop.
    """
    d, placements, comps = _scan(s)
    try:
        cur, i1, i2, path, steps, tokens = _locate(
            d, placements, comps, site.disk, site.pos)
    except (InputError, PaperViolation):
        raise InputError("stale BR site: the system has changed since "
                         "the site was found")
    if cur != site:
        raise InputError("stale BR site: the system has changed since "
                         "the site was found")
    pl = placements[site.disk]
    f_start = steps[i1][2]
    f_end = steps[i2][2]
    if (len(tokens) % 2 == 0) != (f_start == f_end):
        raise PaperViolation("band face parity is off at boundary %d"
                             % site.disk)

    removed = {node[1] for node in path[i1 + 1:i2 + 1]}
    links = {f: dict(d.links[f]) for f in ("N", "S")}
    for si in range(i1, i2 + 1):
        u, v, f = steps[si]
        del links[f][u]
        del links[f][v]

    edges = {e: [c for c in d.edges[e] if c not in removed] for e in EDGES}
    nid = max((c for lst in edges.values() for c in lst), default=-1) + 1
    band = []
    for tok in tokens:
        edge = pl.west_edge if tok == "W" else pl.east_edge
        gap = pl.gaps[0] if tok == "W" else pl.gaps[1]
        keep_west = sum(1 for c in d.edges[edge][:gap] if c not in removed)
        edges[edge].insert(keep_west, nid)
        band.append(("x", nid))
        nid += 1

    chain = [path[i1], *band, path[i2 + 1]]
    f = f_start
    for a, b in zip(chain, chain[1:]):
        links[f][a] = b
        links[f][b] = a
        f = "S" if f == "N" else "N"
    out = Diagram(edges, links, d.end_label, d.trivial_circles).reduce()
    if total_boundary_intersections(out) >= total_boundary_intersections(d):
        raise PaperViolation(
            "bridge arc replacement did not lower the endpoint count")
    return out


def make_dense(s: Diagram, max_steps: int = DEFAULT_STEP_BUDGET,
               trace: list = None) -> Diagram:
    """Apply replacements until dense; same punctures stay paired."""
    d = s.reduce()
    steps = 0
    while True:
        site = find_br_site(d)
        if site is None:
            return d
        if steps >= max_steps:
            raise StepBudgetExceeded(max_steps, "densification budget")
        d = apply_br(d, site)
        if trace is not None:
            trace.append(("br", site.disk, site.pos))
        steps += 1


def has_wave(s: Diagram, component=None) -> bool:
    """Whether some pants piece (of one component, or any) returns to
    the boundary it left and is essential."""
    d = s.reduce()
    if component is None:
        return views.has_wave(d)
    comps = d.components()
    if isinstance(component, str):
        hits = [i for i, c in enumerate(comps) if c[2] == component]
        if len(hits) != 1:
            raise InputError("label %r matches %d components"
                             % (component, len(hits)))
        component = hits[0]
    return views.has_wave(d, component)


def is_straight_collection(s: Diagram) -> bool:
    """Each doubled arc parallel to a distinct disk boundary."""
    d = s.reduce()
    comps = d.components()
    if len(comps) != 3 or any(kind != "arc" for kind, _, _ in comps):
        raise InputError("expected exactly three arc components")
    targets = {canonical_form(pair_circle(j), labeled=False): j
               for j in (1, 2, 3)}
    seen = set()
    for i in range(3):
        j = targets.get(canonical_form(double_arc(d, i), labeled=False))
        if j is None:
            return False
        seen.add(j)
    return seen == {1, 2, 3}


@dataclass(frozen=True)
class Verdict:
    decision: str   # "Trivial" | "NonTrivial"
    reason: str     # "StraightArcs" | "PairingMismatch" | "DenseNotStraight"
    trace: tuple

    @property
    def trivial(self) -> bool:
        return self.decision == "Trivial"


def replay_trace(s: Diagram, trace) -> Diagram:
    """Re-run a verdict's trace; reproduces the terminal system."""
    d = s.reduce()
    for step in trace:
        op = step[0]
        if op == "reduce":
            d = d.reduce()
        elif op == "br":
            d = apply_br(d, br_site_at(d, step[1], step[2]))
        elif op == "word":
            d = apply_word(d, word(step[1])).reduce()
        else:
            raise InputError("unknown trace step %r" % (step,))
    return d


def detect_infinity_tangle(s: Diagram,
                           max_steps: int = DEFAULT_STEP_BUDGET) -> Verdict:
    """Decide whether three bridge arcs present the trivial tangle.

    The input must be three disjoint arcs.  A pairing other than
    (1,2)(3,4)(5,6) is NonTrivial outright.  Otherwise the loop
    densifies by arc replacement, then lowers the boundary
    intersection count by the fixed twist moves, re-densifying
    whenever a move breaks density.  Replacement and twist steps each
    strictly lower the count, so the loop stops, at count zero or at
    a dense system none of the moves improves.  After a final
    twist-normalization the verdict is Trivial exactly when the
    terminal system is the straight collection.  The trace replays
    deterministically.
    """
    d = s.reduce()
    comps = d.components()
    if len(comps) != 3 or any(kind != "arc" for kind, _, _ in comps):
        raise InputError("expected exactly three disjoint arcs")
    trace = [("reduce",)]
    if d.puncture_pairing() != _PAIRING:
        return Verdict("NonTrivial", "PairingMismatch", tuple(trace))

    steps = 0
    while True:
        while (site := find_br_site(d)) is not None:
            if steps >= max_steps:
                raise StepBudgetExceeded(max_steps, "densification budget")
            d = apply_br(d, site)
            trace.append(("br", site.disk, site.pos))
            steps += 1
        if total_boundary_intersections(d) == 0:
            break
        if steps >= max_steps:
            raise StepBudgetExceeded(max_steps, "twist descent budget")
        hit = descent_step(d)
        if hit is None:
            break
        d, pre, move, _, _ = hit
        if pre:
            trace.append(("word", pre))
        trace.append(("word", move))
        steps += 1

    d, offsets = standardize_with_word(d)
    if offsets:
        text = "*".join("%s^%d" % (a, k) for a, k in offsets)
        trace.append(("word", text))

    if is_straight_collection(d):
        return Verdict("Trivial", "StraightArcs", tuple(trace))
    return Verdict("NonTrivial", "DenseNotStraight", tuple(trace))
