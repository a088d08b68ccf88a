"""Fixed combinatorial model of the six-punctured sphere.

Everything downstream references one static layout.  The six punctures
sit on a horizontal axis, paired into three twice-punctured disks:

    disk 1 holds punctures 1,2    disk 2 holds 3,4    disk 3 holds 5,6

Each disk is cut out by a round circle close to its puncture pair.  The
equator of a disk is the axis piece through its two punctures; the two
seams are the axis pieces between disk 1 and disk 2 and between disk 2
and disk 3 (the remaining axis piece, between disk 3 and disk 1, runs
through infinity and is not a cell edge).  Cutting along all of these
leaves seven disk regions: a north and a south half per disk, and the
outer pants opened up by the two seams.

Orientation convention, fixed once for the whole package: diagrams are
drawn from the north side, "clockwise" means material north of the axis
flows east.  This affects twist signs only, never decisions.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

from .diagram import Diagram, EDGES, WEST, EAST
from .errors import InputError

# axis edge west of each disk's puncture pair, keyed by disk index;
# the pair circle crosses it at its east end
_DISK_WEST_EDGE = {1: "g3", 2: "g1", 3: "g2"}
_DISK_EAST_EDGE = {1: "g1", 2: "g2", 3: "g3"}
_DISK_SLIT = {1: "m1", 2: "m2", 3: "m3"}


@dataclass(frozen=True)
class Puncture:
    """One marked point; ``disk`` is the twice-punctured disk owning it."""
    id: int
    disk: int

    def __post_init__(self):
        if not 1 <= self.id <= 6 or self.disk != (self.id + 1) // 2:
            raise InputError(f"bad puncture {self.id}/{self.disk}")


@dataclass(frozen=True)
class Window:
    """Distinguished subarc of a disk boundary circle.

    The window is the whole circle minus a small gap at the west foot
    (where the equator leaves the disk westward); standard arcs cross
    the circle only inside the window.
    """
    owner: int
    gap_at: str = "west foot"


def span_circle(west_edge: str, east_edge: str) -> Diagram:
    """Round circle crossing ``west_edge`` at its east end and
    ``east_edge`` at its west end, enclosing the punctures between."""
    d = Diagram()
    a, b = d.new_id(), d.new_id()
    d.edges[west_edge].append(a)
    d.edges[east_edge].insert(0, b)
    d._link("N", ("x", a), ("x", b))
    d._link("S", ("x", a), ("x", b))
    d.validate()
    return d


def pair_circle(disk: int) -> Diagram:
    """Boundary circle of the given twice-punctured disk."""
    if disk not in (1, 2, 3):
        raise InputError(f"no disk {disk}")
    return span_circle(_DISK_WEST_EDGE[disk], _DISK_EAST_EDGE[disk])


def puncture_circle(k: int) -> Diagram:
    """Small circle around a single puncture (inessential for coordinates;
    used by tests that exercise rejection paths)."""
    if not 1 <= k <= 6:
        raise InputError(f"no puncture {k}")
    d = Diagram()
    a, b = d.new_id(), d.new_id()
    west = next(e for e in EDGES if EAST[e] == k)
    east = next(e for e in EDGES if WEST[e] == k)
    d.edges[west].append(a)
    d.edges[east].insert(0, b)
    d._link("N", ("x", a), ("x", b))
    d._link("S", ("x", a), ("x", b))
    d.validate()
    return d


def straight_bridge_arcs() -> Diagram:
    """The three straight arcs, one inside each disk, joining its two
    punctures north of the axis.  Labels are b1, b2, b3 by disk."""
    d = Diagram()
    for i in (1, 2, 3):
        d._link("N", ("p", 2 * i - 1), ("p", 2 * i))
        d.end_label[2 * i - 1] = d.end_label[2 * i] = f"b{i}"
    d.validate()
    return d


@dataclass(frozen=True)
class CellDecomposition:
    """The static cell structure; immutable and shared by value.

    Vertices are the six punctures plus the six feet (equator endpoints
    on the boundary circles).  Edges: per disk, three equator pieces
    (west stub, middle, east stub) and two boundary-circle halves; plus
    the two seams.  Faces: north and south half of each disk, and the
    pants region cut open along the seams.
    """
    punctures: tuple = tuple(Puncture(k, (k + 1) // 2) for k in range(1, 7))
    windows: tuple = (Window(1), Window(2), Window(3))
    vertices: tuple = tuple(f"p{k}" for k in range(1, 7)) + tuple(
        f"foot{i}{side}" for i in (1, 2, 3) for side in ("w", "e"))
    edges: tuple = tuple(
        f"{name}{i}" for i in (1, 2, 3)
        for name in ("stub_w", "equator_mid", "stub_e", "circle_n", "circle_s")
    ) + ("seam12", "seam23")
    faces: tuple = tuple(f"disk{i}{h}" for i in (1, 2, 3)
                         for h in ("N", "S")) + ("pants",)

    # boundary walk of each face, enough to certify every region is a disk
    face_walks: dict = field(default_factory=lambda: {
        **{f"disk{i}N": (f"stub_w{i}", f"equator_mid{i}", f"stub_e{i}",
                         f"circle_n{i}") for i in (1, 2, 3)},
        **{f"disk{i}S": (f"stub_w{i}", f"equator_mid{i}", f"stub_e{i}",
                         f"circle_s{i}") for i in (1, 2, 3)},
        "pants": ("circle_n1", "circle_s1", "seam12", "circle_n2",
                  "seam23", "circle_n3", "circle_s3", "seam23",
                  "circle_s2", "seam12"),
    })

    def euler_counts(self):
        v, e, f = len(self.vertices), len(self.edges), len(self.faces)
        return v, e, f

    def euler_characteristic(self, punctures_removed: bool = False) -> int:
        v, e, f = self.euler_counts()
        if punctures_removed:
            v -= len(self.punctures)
        return v - e + f

    def check(self) -> None:
        v, e, f = self.euler_counts()
        if (v, e, f) != (12, 17, 7):
            raise InputError(f"cell counts changed: {(v, e, f)}")
        if self.euler_characteristic() != 2:
            raise InputError("decomposition is not a sphere")
        if self.euler_characteristic(punctures_removed=True) != 2 - 6:
            raise InputError("wrong punctured Euler characteristic")
        for face, walk in self.face_walks.items():
            if not walk or any(x not in self.edges for x in walk):
                raise InputError(f"face {face} has a bad boundary walk")
        # every edge appears exactly twice among face boundaries (closed
        # surface) and each walk is one closed cycle, so faces are disks
        from collections import Counter
        uses = Counter(x for walk in self.face_walks.values() for x in walk)
        if set(uses) != set(self.edges) or set(uses.values()) != {2}:
            raise InputError("edges do not glue in pairs")

    def boundary_curve(self, disk: int) -> Diagram:
        """∂ of the twice-punctured disk; the inner and outer boundary
        circles of a disk are isotopic and the model identifies them."""
        return pair_circle(disk)

    def boundary_system(self) -> Diagram:
        """All three boundary circles as one (disjoint) system."""
        d = Diagram()
        for i in (1, 2, 3):
            a, b = d.new_id(), d.new_id()
            d.edges[_DISK_WEST_EDGE[i]].append(a)
            d.edges[_DISK_EAST_EDGE[i]].insert(0, b)
            d._link("N", ("x", a), ("x", b))
            d._link("S", ("x", a), ("x", b))
        d.validate()
        return d

    def slit_of_disk(self, disk: int) -> str:
        """Axis edge between a disk's punctures (its half-twist slit)."""
        if disk not in (1, 2, 3):
            raise InputError(f"no disk {disk}")
        return _DISK_SLIT[disk]

    def structural_hash(self) -> str:
        blob = repr((
            self.vertices, self.edges, self.faces,
            sorted(self.face_walks.items()),
            tuple((p.id, p.disk) for p in self.punctures),
            tuple((w.owner, w.gap_at) for w in self.windows),
            tuple(self.boundary_curve(i).canonical_form() for i in (1, 2, 3)),
        )).encode()
        return hashlib.sha256(blob).hexdigest()


_THE_SURFACE = None


def build_standard_surface() -> CellDecomposition:
    """The canonical decomposition; deterministic across runs."""
    global _THE_SURFACE
    if _THE_SURFACE is None:
        cd = CellDecomposition()
        cd.check()
        _THE_SURFACE = cd
    return _THE_SURFACE
