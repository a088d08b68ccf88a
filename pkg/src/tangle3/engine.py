"""Exact operations on arc systems: reduction, intersection numbers,
homeomorphism application, canonical forms.

An arc system is a :class:`~tangle3.diagram.Diagram`; this module is the
facade the rest of the package (and tests) go through.
"""

from __future__ import annotations

import random
from typing import Optional

from .diagram import Diagram, EDGES, WEST, EAST, other_face
from .errors import InputError
from . import views

ArcSystem = Diagram

_CURVE_NAMES = {
    **{f"dE{i}": ("disk", i) for i in (1, 2, 3)},
    **{f"omega{i}": ("disk", i) for i in (1, 2, 3)},
    **{f"e{i}": ("equator", i) for i in (1, 2, 3)},
}


def reduce_to_minimal_position(s: ArcSystem,
                               rng: Optional[random.Random] = None) -> ArcSystem:
    """Remove all bigons; the result is the canonical minimal representative."""
    return s.reduce(rng)


def canonical_form(s: ArcSystem, labeled: bool = True):
    return s.canonical_form(labeled=labeled)


def systems_equal(a: ArcSystem, b: ArcSystem, labeled: bool = True) -> bool:
    return a.canonical_form(labeled) == b.canonical_form(labeled)


def geometric_intersection(s: ArcSystem, name: str) -> int:
    """Crossing count of s with a named reference curve or arc.

    Names: dE1..dE3 (disk boundaries), omega1..omega3 (windows; every
    minimal-position crossing passes through the window, so these agree
    with the boundary counts), e1..e3 (equators, counted at the
    innermost minimal placement of the disk boundary).
    """
    if name not in _CURVE_NAMES:
        raise InputError(f"unknown reference curve {name!r}")
    kind, i = _CURVE_NAMES[name]
    d = s.reduce()
    if kind == "disk":
        return views.intersection_with_disk(d, i)
    return views.equator_crossings(d, i)


def apply_homeomorphism(s: ArcSystem, g: str, power: int = 1) -> ArcSystem:
    """Image of s under a generator power; reduces the result."""
    from .mapping import apply_generator
    return apply_generator(s, g, power)


def extract_component(s: ArcSystem, which) -> ArcSystem:
    """One component as its own system, edge positions preserved.

    ``which`` is a component label or an index into ``s.components()``.
    """
    comps = s.components()
    if isinstance(which, str):
        matches = [c for c in comps if c[2] == which]
        if len(matches) != 1:
            raise InputError(f"label {which!r} matches {len(matches)} components")
        kind, path, label = matches[0]
    else:
        kind, path, label = comps[which]
    keep = set(path)
    out = Diagram()
    out.edges = {e: [c for c in s.edges[e] if ("x", c) in keep] for e in s.edges}
    for f in ("N", "S"):
        for a, b in s.links[f].items():
            if a in keep and a < b:
                out._link(f, a, b)
    if kind == "arc" and label is not None:
        out.end_label = {path[0][1]: label, path[-1][1]: label}
    out._next_id = max((c for lst in out.edges.values() for c in lst),
                       default=-1) + 1
    out.validate()
    return out


def double_arc(s: ArcSystem, label: str) -> ArcSystem:
    """Boundary curve of a thin neighbourhood of one arc component.

    The arc is extracted first, so the result is the closed curve alone,
    reduced.  Each axis crossing splits into a west/east pair (which
    flank goes east flips with the crossing direction), and each end is
    closed off by a cap hugging its puncture, crossing both incident
    edges at the innermost positions.
    """
    arc = extract_component(s, label)
    comps = arc.components()
    if len(comps) != 1 or comps[0][0] != "arc":
        raise InputError(f"component {label!r} is not an arc")
    _, path, _ = comps[0]

    out = Diagram()
    nid = out.new_id
    # flanks are tracked as "A" (left of travel) and "B" (right); which
    # of them passes east at a crossing flips with crossing direction
    copyA, copyB = {}, {}
    replacement = {}
    cap_edges = []
    faces = []
    f = "N" if path[0] in arc.links["N"] else "S"
    for _ in range(len(path) - 1):
        faces.append(f)
        f = other_face(f)

    for k, node in enumerate(path[1:-1], start=1):
        a, b = nid(), nid()
        copyA[node], copyB[node] = ("x", a), ("x", b)
        # entering chord in the north face means the arc crosses north
        # to south here; travelling south, left of travel is east
        if faces[k - 1] == "N":
            replacement[node[1]] = [b, a]      # west to east: B then A
        else:
            replacement[node[1]] = [a, b]

    def cap(puncture, approach_face):
        """Cap crossings (west, east) around an end puncture; the cap
        chord runs in the face opposite the approach."""
        w_edge = next(e for e in EDGES if EAST[e] == puncture)
        e_edge = next(e for e in EDGES if WEST[e] == puncture)
        cw, ce = nid(), nid()
        cap_edges.append((w_edge, "append", cw))
        cap_edges.append((e_edge, "prepend", ce))
        out._link(other_face(approach_face), ("x", cw), ("x", ce))
        return ("x", cw), ("x", ce)
    p0, p1 = path[0], path[-1]
    c0w, c0e = cap(p0[1], faces[0])
    # leaving the start puncture into the north face, left of travel is
    # west; into the south face it is east
    if faces[0] == "N":
        copyA[p0], copyB[p0] = c0w, c0e
    else:
        copyA[p0], copyB[p0] = c0e, c0w
    c1w, c1e = cap(p1[1], faces[-1])
    # arriving at the end puncture from the north face, left of travel
    # is east; from the south face it is west
    if faces[-1] == "N":
        copyA[p1], copyB[p1] = c1e, c1w
    else:
        copyA[p1], copyB[p1] = c1w, c1e

    for (u, v), f in zip(zip(path, path[1:]), faces):
        out._link(f, copyA[u], copyA[v])
        out._link(f, copyB[u], copyB[v])

    out.edges = {e: [c for x in arc.edges[e]
                     for c in replacement.get(x, [])] for e in arc.edges}
    for e, where, cid in cap_edges:
        if where == "append":
            out.edges[e] = out.edges[e] + [cid]
        else:
            out.edges[e] = [cid] + out.edges[e]
    out._next_id = max((c for lst in out.edges.values() for c in lst),
                       default=-1) + 1
    out.validate()
    return out.reduce()


# Meridian bookkeeping for the complement of the pushed-in trivial
# tangle (a genus-3 handlebody; its fundamental group is free on one
# meridian per strand).  Each axis crossing contributes the "gate word"
# of its edge: the product of meridians around the punctures west of
# it, with the outer edge's gate empty because the product of all six
# meridians is a relation.  The two ends of one strand carry inverse
# meridians, encoded as signed strand indices 1..3.
_GATE_PREFIX = {"g3": 0, "m1": 1, "g1": 2, "m2": 3, "g2": 4, "m3": 5}
_MERIDIAN = {1: 1, 2: -1, 3: 2, 4: -2, 5: 3, 6: -3}


def _free_reduce(letters):
    out = []
    for l in letters:
        if out and out[-1] == -l:
            out.pop()
        else:
            out.append(l)
    return out


def closed_curve_classes(s: ArcSystem) -> tuple:
    """Class of each closed component in the trivial-tangle complement.

    Returns one tuple of signed strand indices per component, freely
    reduced, computed from the component's normalized traversal (so the
    value is deterministic, and well defined up to conjugation).  Axis
    avoiding circles bound disks away from the tangle and are skipped.
    A component walk alternates faces; only the chords on one side
    contribute, as the difference of the gate words at their ends.
    """
    d = s.reduce()
    edge_of = d.edge_of()
    out = []
    for kind, path, _ in d.components():
        if kind != "circle":
            raise InputError("closed_curve_classes expects closed curves")
        letters = []
        n = len(path)
        for j in range(0, n, 2):   # circle paths start with a north chord
            u = _GATE_PREFIX[edge_of[path[j][1]]]
            v = _GATE_PREFIX[edge_of[path[(j + 1) % n][1]]]
            ps = range(u + 1, v + 1) if u < v else range(v + 1, u + 1)
            step = [_MERIDIAN[p] for p in ps]
            letters.extend(step if u < v else [-l for l in reversed(step)])
        out.append(tuple(_free_reduce(letters)))
    return tuple(out)


def compresses_in_complement(s: ArcSystem) -> bool:
    """True when every closed component bounds a disk in the complement
    of the pushed-in trivial tangle (trivial class, by the loop theorem)."""
    return all(not cls for cls in closed_curve_classes(s))


def presents_trivial_tangle(s: ArcSystem) -> bool:
    """Audit: do the three arcs, pushed into the ball, form the trivial
    tangle?  Checks that each arc's doubled boundary curve compresses in
    the trivial-tangle complement; that makes every arc a bridge arc of
    the trivial tangle, and the three together a bridge presentation of
    it.  Independent of the detector's search, so tests use it to
    certify verdicts.  False when the system is not three disjoint arcs.
    """
    d = s.reduce()
    comps = d.components()
    if len(comps) != 3 or any(kind != "arc" for kind, _, _ in comps):
        return False
    return all(compresses_in_complement(double_arc(d, label))
               for _, _, label in comps)
