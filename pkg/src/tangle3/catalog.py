"""Frozen catalog of pants-piece shapes seen in twist-minimal position.

Generated by enumeration: standardized images of the bridge arcs under
words in the pairing-preserving moves (exhaustive to length 2, large
randomized samples beyond), plus standardized closed systems from the
coordinate builder and their twisted images, then closed under the
cyclic relabeling of the three disks.  A piece shape is
(end, end, crossed-edge-names) as produced by piece_shapes.
"""

PIECE_CATALOG = frozenset({
    (('w', 1), ('w', 1), ('g1', 'g2')),
    (('w', 1), ('w', 1), ('g1', 'g2', 'g3')),
    (('w', 1), ('w', 1), ('g2',)),
    (('w', 1), ('w', 1), ('g2', 'g3')),
    (('w', 1), ('w', 2), ()),
    (('w', 1), ('w', 2), ('g1',)),
    (('w', 1), ('w', 2), ('g2',)),
    (('w', 1), ('w', 2), ('g3',)),
    (('w', 1), ('w', 2), ('g3', 'g2')),
    (('w', 1), ('w', 3), ()),
    (('w', 1), ('w', 3), ('g1',)),
    (('w', 1), ('w', 3), ('g1', 'g2')),
    (('w', 1), ('w', 3), ('g2',)),
    (('w', 1), ('w', 3), ('g3',)),
    (('w', 2), ('w', 2), ('g1', 'g3')),
    (('w', 2), ('w', 2), ('g1', 'g3', 'g2')),
    (('w', 2), ('w', 2), ('g2', 'g3')),
    (('w', 2), ('w', 2), ('g3',)),
    (('w', 2), ('w', 3), ()),
    (('w', 2), ('w', 3), ('g1',)),
    (('w', 2), ('w', 3), ('g1', 'g3')),
    (('w', 2), ('w', 3), ('g2',)),
    (('w', 2), ('w', 3), ('g3',)),
    (('w', 3), ('w', 3), ('g1',)),
    (('w', 3), ('w', 3), ('g1', 'g2')),
    (('w', 3), ('w', 3), ('g1', 'g3')),
    (('w', 3), ('w', 3), ('g2', 'g1', 'g3')),
})
