"""Exact chord-diagram kernel for curve systems on the six-punctured sphere.

The sphere is modelled as the plane plus a point at infinity.  The six
punctures sit on the horizontal axis, numbered 1..6 from west to east.
The axis is divided into six edges:

    m1 = [1,2]   g1 = [2,3]   m2 = [3,4]   g2 = [4,5]   m3 = [5,6]
    g3 = [6, .., 1]   (running east from puncture 6 through infinity
                       and back to puncture 1; infinity is an interior
                       point of g3, not a vertex)

Cutting the sphere along the axis leaves two ideal hexagon faces, "N"
(upper half plane) and "S" (lower half plane).  A system of disjoint
arcs and closed curves, transverse to the axis, is recorded as:

  * per-edge ordered lists of crossing ids (west to east along the edge),
  * for each face, an involution pairing the strand ends visible in that
    face ("links"): a crossing appears once in each face, an arc end at a
    puncture appears in exactly one face,
  * optional labels for arc ends, keyed by puncture,
  * a counter of closed components disjoint from the axis.

Every face is a disk, so embeddedness is exactly the condition that each
face's pairing is non-crossing with respect to the cyclic boundary order.
Bigon removal within this model is confluent, which makes reduced
diagrams canonical: two systems are isotopic (relative to the punctures)
iff their reduced, relabelled encodings are equal.
"""

from __future__ import annotations

import random
from typing import Iterable, Optional

from .errors import InvalidDiagramError

EDGES = ("m1", "g1", "m2", "g2", "m3", "g3")

# Punctures at the west/east ends of each edge.
WEST = {"m1": 1, "g1": 2, "m2": 3, "g2": 4, "m3": 5, "g3": 6}
EAST = {"m1": 2, "g1": 3, "m2": 4, "g2": 5, "m3": 6, "g3": 1}

PREV = {e: EDGES[(i - 1) % 6] for i, e in enumerate(EDGES)}
NEXT = {e: EDGES[(i + 1) % 6] for i, e in enumerate(EDGES)}

FACES = ("N", "S")

Node = tuple  # ("x", crossing_id) or ("p", puncture)


def other_face(face: str) -> str:
    return "S" if face == "N" else "N"


def _node_key(node: Node):
    # punctures sort before crossings; stable total order for output
    return (0, node[1]) if node[0] == "p" else (1, node[1])


class Diagram:
    """A curve/arc system on the six-punctured sphere.

    Parameters
    ----------
    edges : mapping edge-name -> iterable of crossing ids, optional
    links : mapping {"N": {node: node}, "S": {node: node}}, optional
    end_label : mapping puncture -> component label, optional
    trivial_circles : int
        Number of closed components disjoint from the axis.
    check : bool
        Validate invariants on construction.
    """

    __slots__ = ("edges", "links", "end_label", "trivial_circles", "_next_id")

    def __init__(self, edges=None, links=None, end_label=None,
                 trivial_circles=0, check=True):
        self.edges = {e: list(edges[e]) if edges and e in edges else []
                      for e in EDGES}
        self.links = {"N": dict(links["N"]) if links else {},
                      "S": dict(links["S"]) if links else {}}
        self.end_label = dict(end_label) if end_label else {}
        self.trivial_circles = int(trivial_circles)
        ids = [i for lst in self.edges.values() for i in lst]
        self._next_id = max(ids) + 1 if ids else 0
        if check:
            self.validate()

    # ----------------------------------------------------------- basics

    def copy(self) -> "Diagram":
        return Diagram(self.edges, self.links, self.end_label,
                       self.trivial_circles, check=False)

    def new_id(self) -> int:
        i = self._next_id
        self._next_id += 1
        return i

    def crossing_count(self) -> int:
        return sum(len(v) for v in self.edges.values())

    def edge_weights(self) -> dict:
        return {e: len(self.edges[e]) for e in EDGES}

    def edge_of(self) -> dict:
        out = {}
        for e in EDGES:
            for i in self.edges[e]:
                out[i] = e
        return out

    def face_cycle(self, face: str) -> list:
        """Boundary nodes of a face in cyclic order.

        The north cycle starts at puncture 1 and walks east; the south
        cycle is the same walk reversed (both faces share the axis as
        boundary, traversed with the face on the left).
        """
        cyc = []
        for e in EDGES:
            cyc.append(("p", WEST[e]))
            cyc.extend(("x", i) for i in self.edges[e])
        if face == "N":
            return cyc
        return [cyc[0]] + cyc[:0:-1]

    # ------------------------------------------------------- validation

    def validate(self) -> None:
        seen = set()
        for e in EDGES:
            for i in self.edges[e]:
                if not isinstance(i, int) or i in seen:
                    raise InvalidDiagramError(
                        f"crossing id {i!r} duplicated or not an int")
                seen.add(i)
        punct_nodes = []
        for f in FACES:
            lk = self.links[f]
            for a, b in lk.items():
                if lk.get(b) != a:
                    raise InvalidDiagramError(
                        f"links[{f}] is not an involution at {a!r}")
                if a == b:
                    raise InvalidDiagramError(f"self-paired node {a!r}")
            for node in lk:
                kind, val = node
                if kind == "x":
                    if val not in seen:
                        raise InvalidDiagramError(
                            f"linked crossing {val} not on any edge")
                elif kind == "p":
                    if val not in range(1, 7):
                        raise InvalidDiagramError(f"bad puncture {val}")
                    punct_nodes.append(node)
                else:
                    raise InvalidDiagramError(f"bad node {node!r}")
        if len(punct_nodes) != len(set(punct_nodes)):
            raise InvalidDiagramError("puncture carries two arc ends")
        for f in FACES:
            count = sum(1 for n in self.links[f] if n[0] == "x")
            if count != len(seen):
                raise InvalidDiagramError(
                    f"face {f} links {count} crossings, expected {len(seen)}")
        for p in self.end_label:
            if ("p", p) not in self.links["N"] and ("p", p) not in self.links["S"]:
                raise InvalidDiagramError(f"label on endless puncture {p}")
        for f in FACES:
            self._check_noncrossing(f)

    def _check_noncrossing(self, face: str) -> None:
        lk = self.links[face]
        stack = []
        opened = set()
        for node in self.face_cycle(face):
            if node not in lk:
                continue
            partner = lk[node]
            if partner in opened:
                if not stack or stack[-1] != partner:
                    raise InvalidDiagramError(
                        f"chords cross in face {face} near {node!r}")
                stack.pop()
            else:
                stack.append(node)
                opened.add(node)
        if stack:
            raise InvalidDiagramError(
                f"unclosed chord in face {face}: {stack[-1]!r}")

    # ------------------------------------------------------- components

    def components(self) -> list:
        """Split the system into components.

        Returns a list of (kind, path, label) with kind "arc" or
        "circle".  Arc paths run from the smaller-numbered end puncture
        to the other end; circle paths start at their smallest crossing
        id, traversed starting with its north chord.  The axis-avoiding
        circles counted by ``trivial_circles`` are not listed.
        """
        out = []
        seen = set()
        ends = sorted(p for f in FACES for (k, p) in self.links[f] if k == "p")
        for p in ends:
            node = ("p", p)
            face = "N" if node in self.links["N"] else "S"
            if node in seen:
                continue
            path = [node]
            seen.add(node)
            cur, f = node, face
            while True:
                nxt = self.links[f][cur]
                path.append(nxt)
                seen.add(nxt)
                if nxt[0] == "p":
                    break
                cur, f = nxt, other_face(f)
            label = self.end_label.get(p) or self.end_label.get(path[-1][1])
            out.append(("arc", path, label))
        for e in EDGES:
            for i in self.edges[e]:
                start = ("x", i)
                if start in seen:
                    continue
                path = [start]
                seen.add(start)
                cur, f = start, "N"
                while True:
                    nxt = self.links[f][cur]
                    if nxt == start:
                        break
                    path.append(nxt)
                    seen.add(nxt)
                    cur, f = nxt, other_face(f)
                out.append(("circle", path, None))
        return out

    def is_closed(self) -> bool:
        return not any(n[0] == "p" for f in FACES for n in self.links[f])

    def puncture_pairing(self) -> list:
        """Sorted list of (a, b) puncture pairs joined by arcs."""
        pairs = []
        for kind, path, _ in self.components():
            if kind == "arc":
                pairs.append(tuple(sorted((path[0][1], path[-1][1]))))
        return sorted(pairs)

    # -------------------------------------------------------- reduction

    def _unlink(self, face: str, node: Node) -> Node:
        partner = self.links[face].pop(node)
        del self.links[face][partner]
        return partner

    def _link(self, face: str, a: Node, b: Node) -> None:
        self.links[face][a] = b
        self.links[face][b] = a

    def reduce(self, rng: Optional[random.Random] = None) -> "Diagram":
        """Remove all bigons and end corners; normalise edge-parallel arcs.

        A chord is removable exactly when its endpoints are neighbours
        along the axis (the cyclic order of all crossings and punctures;
        reversal makes neighbourhood the same relation in both faces).
        Crossing-crossing neighbours bound a bigon, puncture-crossing
        neighbours a corner at an arc end; both are removed.  A chord
        joining neighbouring punctures is an honest edge-parallel arc
        and is only normalised from the south to the north face.

        With ``rng`` the choice among available moves is randomised (the
        result must not depend on it; the test suite checks confluence).
        Returns a new diagram.
        """
        d = self.copy()
        # axis as a doubly linked cyclic list over punctures and crossings
        order = []
        for e in EDGES:
            order.append(("p", WEST[e]))
            order.extend(("x", i) for i in d.edges[e])
        east, west = {}, {}
        for a, b in zip(order, order[1:] + order[:1]):
            east[a], west[b] = b, a

        def neighbours(a, b):
            return east[a] == b or east[b] == a

        work, queued = [], set()

        def push(f, a, b):
            key = (f, a, b) if a < b else (f, b, a)
            if key not in queued:
                queued.add(key)
                work.append(key)

        for f in FACES:
            for a, b in d.links[f].items():
                if a < b:
                    push(f, a, b)

        def splice_out(node):
            w, e = west.pop(node), east.pop(node)
            east[w], west[e] = e, w
            for n in (w, e):
                for f in FACES:
                    if n in d.links[f]:
                        push(f, n, d.links[f][n])
            return w, e

        while work:
            if rng is None:
                key = work.pop()
            else:
                i = rng.randrange(len(work))
                work[i], work[-1] = work[-1], work[i]
                key = work.pop()
            queued.discard(key)
            f, a, b = key
            if d.links[f].get(a) != b or not neighbours(a, b):
                continue
            fo = other_face(f)
            if a[0] == "x" and b[0] == "x":
                # bigon between the chord and the axis
                d._unlink(f, a)
                if d.links[fo][a] == b:
                    d._unlink(fo, a)
                    d.trivial_circles += 1
                else:
                    pa = d._unlink(fo, a)
                    pb = d._unlink(fo, b)
                    d._link(fo, pa, pb)
                    push(fo, pa, pb)
                splice_out(a)
                splice_out(b)
            elif a[0] == "p" and b[0] == "p":
                if f == "S":
                    # edge-parallel arc, normalised to the north face
                    d._unlink(f, a)
                    d._link(fo, a, b)
            else:
                # corner at an arc end: pull the end across the axis
                pnode, xnode = (a, b) if a[0] == "p" else (b, a)
                d._unlink(f, pnode)
                tail = d._unlink(fo, xnode)
                d._link(fo, pnode, tail)
                push(fo, pnode, tail)
                splice_out(xnode)

        node = ("p", 1)
        edge_iter = iter(EDGES)
        cur = None
        new_edges = {e: [] for e in EDGES}
        while True:
            if node[0] == "p":
                cur = next(edge_iter, None)
                if cur is None:
                    break
            else:
                new_edges[cur].append(node[1])
            node = east[node]
        d.edges = new_edges
        return d

    # ---------------------------------------------------- canonical form

    def renumbered(self) -> "Diagram":
        """Relabel crossings 0,1,2,... in edge order, west to east."""
        mapping = {}
        nid = 0
        for e in EDGES:
            for i in self.edges[e]:
                mapping[i] = nid
                nid += 1

        def m(node):
            return ("x", mapping[node[1]]) if node[0] == "x" else node

        edges = {e: [mapping[i] for i in self.edges[e]] for e in EDGES}
        links = {f: {m(a): m(b) for a, b in self.links[f].items()}
                 for f in FACES}
        return Diagram(edges, links, self.end_label,
                       self.trivial_circles, check=False)

    def canonical_form(self, labeled: bool = True) -> tuple:
        """Hashable encoding equal for two systems iff they are isotopic.

        Labels are part of the form by default; pass ``labeled=False``
        to compare underlying unlabelled systems.
        """
        d = self.reduce().renumbered()
        weights = tuple(len(d.edges[e]) for e in EDGES)
        faces = []
        for f in FACES:
            pairs = set()
            for a, b in d.links[f].items():
                pairs.add(tuple(sorted((a, b), key=_node_key)))
            faces.append(tuple(sorted(pairs, key=lambda p: (_node_key(p[0]),
                                                            _node_key(p[1])))))
        ends = tuple(sorted(d.end_label.items())) if labeled else ()
        return ("tangle3.canon", 1, weights, faces[0], faces[1], ends,
                d.trivial_circles)

    # ----------------------------------------------------------- output

    def reflect(self) -> "Diagram":
        """Mirror image across the axis (swaps the two faces)."""
        return Diagram(self.edges,
                       {"N": self.links["S"], "S": self.links["N"]},
                       self.end_label, self.trivial_circles, check=False)

    def __repr__(self) -> str:
        w = ",".join(f"{e}:{len(self.edges[e])}" for e in EDGES
                     if self.edges[e])
        ends = ",".join(f"{p}:{l}" for p, l in sorted(self.end_label.items()))
        return (f"Diagram({w or 'empty'}"
                + (f" ends[{ends}]" if ends else "")
                + (f" +{self.trivial_circles}o" if self.trivial_circles else "")
                + ")")
