from __future__ import annotations

import pytest

from tangle3.diagram import Diagram
from tangle3.surface import straight_bridge_arcs


@pytest.fixture
def base():
    return straight_bridge_arcs()


@pytest.fixture
def mismatch_system():
    """Three disjoint arcs pairing 1-3, 2-4, 5-6; the 1-3 arc runs north
    of the axis, the 2-4 arc south, so nothing crosses."""
    d = Diagram()
    d._link("N", ("p", 1), ("p", 3))
    d._link("S", ("p", 2), ("p", 4))
    d._link("N", ("p", 5), ("p", 6))
    for k, lbl in ((1, "b1"), (3, "b1"), (2, "b2"), (4, "b2"),
                   (5, "b3"), (6, "b3")):
        d.end_label[k] = lbl
    d.validate()
    return d


@pytest.fixture
def bigon_system():
    """Straight arcs with the disk-2 arc pushed west across the axis
    edge between punctures 2 and 3 and straight back: two crossings
    forming one bigon, removable in one step."""
    d = Diagram()
    y, x = d.new_id(), d.new_id()
    d.edges["g1"] = [y, x]
    d._link("N", ("p", 1), ("p", 2))
    d._link("N", ("p", 3), ("x", x))
    d._link("S", ("x", x), ("x", y))
    d._link("N", ("x", y), ("p", 4))
    d._link("N", ("p", 5), ("p", 6))
    for k, lbl in ((1, "b1"), (2, "b1"), (3, "b2"), (4, "b2"),
                   (5, "b3"), (6, "b3")):
        d.end_label[k] = lbl
    d.validate()
    return d
