from __future__ import annotations

import pytest

from tangle3 import engine
from tangle3.diagram import Diagram
from tangle3.errors import InputError
from tangle3.surface import (CellDecomposition, Puncture, build_standard_surface,
                             pair_circle, puncture_circle, span_circle,
                             straight_bridge_arcs)

# layout fingerprint, frozen; update only on a deliberate layout change
LAYOUT_HASH = "1c01b2e4e7c87dfba81f3e24f0c84493619f419de6dbd3421fd7777f19d76c5a"


def test_decomposition_shape():
    cd = build_standard_surface()
    cd.check()
    assert len(cd.punctures) == 6
    assert [p.disk for p in cd.punctures] == [1, 1, 2, 2, 3, 3]
    assert len(cd.windows) == 3
    assert cd.euler_counts() == (12, 17, 7)
    assert cd.euler_characteristic() == 2
    assert cd.euler_characteristic(punctures_removed=True) == 2 - 6


def test_decomposition_is_static():
    a, b = build_standard_surface(), CellDecomposition()
    assert a.structural_hash() == b.structural_hash() == LAYOUT_HASH
    assert build_standard_surface() is a


def test_every_edge_glues_twice():
    cd = build_standard_surface()
    uses = {}
    for walk in cd.face_walks.values():
        for e in walk:
            uses[e] = uses.get(e, 0) + 1
    assert set(uses) == set(cd.edges)
    assert set(uses.values()) == {2}


def test_boundary_curves_disjoint_and_distinct():
    cd = build_standard_surface()
    sys3 = cd.boundary_system()
    sys3.validate()
    assert len(sys3.components()) == 3
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            same = engine.systems_equal(pair_circle(i), pair_circle(j),
                                        labeled=False)
            assert same == (i == j)


def test_bad_indices_rejected():
    with pytest.raises(InputError):
        pair_circle(0)
    with pytest.raises(InputError):
        puncture_circle(7)
    with pytest.raises(InputError):
        Puncture(2, 2)
    with pytest.raises(InputError):
        build_standard_surface().slit_of_disk(4)


def test_span_circle_is_a_single_curve():
    d = span_circle("g1", "g2")
    assert d.is_closed()
    assert len(d.components()) == 1


def test_straight_arcs():
    d = straight_bridge_arcs()
    comps = d.components()
    assert [kind for kind, _, _ in comps] == ["arc"] * 3
    assert sorted(lbl for _, _, lbl in comps) == ["b1", "b2", "b3"]
    assert d.puncture_pairing() == [(1, 2), (3, 4), (5, 6)]
    for i in (1, 2, 3):
        assert engine.geometric_intersection(d, "dE%d" % i) == 0


def test_straight_arcs_double_to_disk_boundaries():
    d = straight_bridge_arcs()
    for i in (1, 2, 3):
        curve = engine.double_arc(d, "b%d" % i)
        assert engine.systems_equal(curve, pair_circle(i), labeled=False)


def test_straight_arcs_are_dense():
    from tangle3.detector import is_dense
    assert is_dense(straight_bridge_arcs())


def test_empty_diagram_is_valid():
    d = Diagram()
    d.validate()
    assert d.components() == []
    assert d.is_closed()
