"""Shared corpus builders for the test suite.

Every randomized test seeds its own ``random.Random`` so cases are
reproducible in isolation; nothing here touches global RNG state.
"""

from __future__ import annotations

import random

from tangle3.mapping import apply_word
from tangle3.surface import straight_bridge_arcs

# the ten moves that keep a bridge system of the trivial tangle trivial
SIGNED_ATOMS = (
    "H1", "H2", "H3", "D1*D2^-1", "D3",
    "H1^-1", "H2^-1", "H3^-1", "(D1*D2^-1)^-1", "D3^-1",
)


def random_word_image(rng: random.Random, max_len: int, base=None,
                      atoms=SIGNED_ATOMS, cap: int = 800):
    """Apply up to ``max_len`` random atoms, stopping before the image
    outgrows ``cap`` crossings.  Returns (word text, reduced image);
    the text is exactly the prefix that was applied."""
    d = base if base is not None else straight_bridge_arcs()
    parts = []
    for _ in range(rng.randint(0, max_len)):
        atom = rng.choice(atoms)
        cand = apply_word(d, atom).reduce()
        if cand.crossing_count() > cap:
            break
        d = cand
        parts.append(atom)
    return " * ".join(parts), d


def epsilon_images(seed: int, count: int, max_len: int, cap: int = 800):
    """A reproducible list of (word, image) pairs, images reduced."""
    rng = random.Random(seed)
    return [random_word_image(rng, max_len, cap=cap) for _ in range(count)]
