"""The fixed half-twist generators and words in them.

Generators, all acting on the six-punctured sphere:

    H1, H2, H3   clockwise half twists on the three twice-punctured
                 disks (slits m1, m2, m3); Hi swaps the punctures of
                 disk i.
    D1           clockwise half twist about the round circle enclosing
                 punctures 2 and 3 (slit g1); swaps 2 and 3.
    D2           clockwise half twist about the twisted circle
                 enclosing punctures 1 and 4 obtained by applying
                 D1, then H1, to disk 2's boundary; realised by
                 conjugation, and it swaps 1 and 4.
    D3           counter-clockwise half twist about the image of disk
                 2's boundary under the word D1 * D2^-1 (a twisted
                 disk enclosing punctures 1 and 2); swaps 1 and 2.

"Clockwise" is the package convention: material north of the axis
flows east.  Of the D generators only the combination D1*D2^-1 and the
single letter D3 preserve the trivial tangle: beyond acting evenly on
the pairs {1,2},{3,4},{5,6}, their images of the three disk
boundaries stay contractible in the tangle complement, so the twists
extend over the ball fixing the trivial tangle.  Bare D1 or D2 fails
that audit (a full twist about the circle through punctures 2 and 3
clasps two strands), which is why the pairing-preserving alphabet
below lists D1*D2^-1 as one move and never bare D1 or D2.  The
supporting circle classes for D2 and D3 are frozen by that extension
property together with the intersection-reduction behaviour of the
four composite moves.

Twist words use the grammar

    word := term ('*' term)*
    term := atom ('^' int)? | '(' word ')' ('^' int)?
    atom := H1|H2|H3|D1|D2|D3

and the leftmost atom acts first: "H1 * D3" means apply H1, then D3.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache

from .diagram import Diagram
from .errors import InputError, PaperViolation
from . import views
from .twists import half_twist, full_twist

GENERATOR_ATOMS = ("H1", "H2", "H3", "D1", "D2", "D3")

# slit edge of the directly realised twists
_DIRECT_SLIT = {"H1": "m1", "H2": "m2", "H3": "m3", "D1": "g1"}

# conjugated generators, stored as (tail, core, core sign): the atom
# program is inverse(tail), core, tail, so the generator is the core
# twist transported by the function the tail program computes
_CONJUGATED = {
    "D2": ((("D1", 1), ("H1", 1)), "H2", 1),
    "D3": ((("D1", 1), ("D2", -1)), "H2", -1),
}

# puncture transpositions, for quick sanity checks and tests
GENERATOR_SWAPS = {"H1": (1, 2), "H2": (3, 4), "H3": (5, 6),
                   "D1": (2, 3), "D2": (1, 4), "D3": (1, 2)}


def _apply_atom(d: Diagram, atom: str, sign: int) -> Diagram:
    if atom in _DIRECT_SLIT:
        return half_twist(d, _DIRECT_SLIT[atom], clockwise=sign > 0).reduce()
    conj, core, core_sign = _CONJUGATED[atom]
    for a, s in reversed(conj):
        d = _apply_atom(d, a, -s)
    d = _apply_atom(d, core, core_sign * sign)
    for a, s in conj:
        d = _apply_atom(d, a, s)
    return d


def apply_generator(s: Diagram, g: str, power: int = 1) -> Diagram:
    """Image of s under g**power, reduced."""
    if g not in GENERATOR_ATOMS:
        raise InputError(f"unknown generator {g!r}")
    d = s.reduce()
    sign = 1 if power > 0 else -1
    for _ in range(abs(power)):
        d = _apply_atom(d, g, sign)
    return d


def generator_full_twist(s: Diagram, g: str, clockwise: bool = True) -> Diagram:
    """Full twist about the generator's supporting circle.

    Built from the one-shot full-rotation surgery (conjugated for D2 and
    D3 exactly as the generator itself is), independent of the half
    twist implementation; apply_generator(s, g)**2 must agree with it.
    """
    if g in _DIRECT_SLIT:
        return full_twist(s.reduce(), _DIRECT_SLIT[g], clockwise).reduce()
    conj, core, core_sign = _CONJUGATED[g]
    d = s.reduce()
    for a, sg in reversed(conj):
        d = _apply_atom(d, a, -sg)
    d = generator_full_twist(d, core, clockwise if core_sign > 0 else not clockwise)
    for a, sg in conj:
        d = _apply_atom(d, a, sg)
    return d


# --------------------------------------------------------------- words

_TOKEN = re.compile(r"\s*(H[123]|D[123]|\^|\*|\(|\)|-?\d+)")


@dataclass(frozen=True)
class TwistWord:
    """A word in the generators; leftmost atom acts first."""
    terms: tuple    # of ("atom", name, power) or ("group", TwistWord, power)

    @staticmethod
    def parse(text: str) -> "TwistWord":
        tokens = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                if text[pos:].strip():
                    raise InputError(f"bad twist word near {text[pos:]!r}")
                break
            tokens.append(m.group(1))
            pos = m.end()
        word, rest = _parse_word(tokens, 0)
        if rest != len(tokens):
            raise InputError(f"unbalanced twist word {text!r}")
        return word

    def __str__(self) -> str:
        parts = []
        for kind, body, power in self.terms:
            if kind == "atom":
                parts.append(body if power == 1 else f"{body}^{power}")
            else:
                inner = str(body)
                parts.append(f"({inner})" if power == 1 else f"({inner})^{power}")
        return " * ".join(parts)

    def atoms(self):
        """Flat (atom, sign) sequence, leftmost first."""
        out = []
        for kind, body, power in self.terms:
            if kind == "atom":
                unit = [(body, 1 if power > 0 else -1)]
            else:
                unit = body.atoms() if power > 0 else body.inverse().atoms()
            for _ in range(abs(power)):
                out.extend(unit)
        return out

    def inverse(self) -> "TwistWord":
        inv = []
        for kind, body, power in reversed(self.terms):
            inv.append((kind, body, -power))
        return TwistWord(tuple(inv))

    def __len__(self) -> int:
        return len(self.atoms())


def _parse_word(tokens, i):
    terms = []
    while True:
        term, i = _parse_term(tokens, i)
        terms.append(term)
        if i < len(tokens) and tokens[i] == "*":
            i += 1
            continue
        return TwistWord(tuple(terms)), i


def _parse_term(tokens, i):
    if i >= len(tokens):
        raise InputError("twist word ends unexpectedly")
    tok = tokens[i]
    if tok == "(":
        word, i = _parse_word(tokens, i + 1)
        if i >= len(tokens) or tokens[i] != ")":
            raise InputError("missing ')' in twist word")
        body, kind = word, "group"
        i += 1
    elif tok in GENERATOR_ATOMS:
        body, kind = tok, "atom"
        i += 1
    else:
        raise InputError(f"unexpected token {tok!r} in twist word")
    power = 1
    if i < len(tokens) and tokens[i] == "^":
        i += 1
        if i >= len(tokens) or not re.fullmatch(r"-?\d+", tokens[i]):
            raise InputError("missing exponent in twist word")
        power = int(tokens[i])
        if power == 0:
            raise InputError("zero exponent in twist word")
        i += 1
    return (kind, body, power), i


def word(text: str) -> TwistWord:
    return TwistWord.parse(text)


def apply_word(s: Diagram, w) -> Diagram:
    """Apply a twist word (or its text form), leftmost atom first."""
    if isinstance(w, str):
        w = TwistWord.parse(w)
    d = s.reduce()
    for atom, sign in w.atoms():
        d = _apply_atom(d, atom, sign)
    return d


def epsilon_preserving_generators() -> tuple:
    """Moves that keep the end-pairing of the trivial tangle, with
    their inverses; images of bridge arc systems stay bridge arc
    systems under these."""
    texts = ("H1", "H2", "H3", "D1*D2^-1", "D3",
             "H1^-1", "H2^-1", "H3^-1", "(D1*D2^-1)^-1", "D3^-1")
    return tuple(TwistWord.parse(t) for t in texts)


_WAVE_MOVES = ("D1*D2^-1", "(D1*D2^-1)^-1", "D3", "D3^-1")

# Re-positioning search box for descent_step.  Half twists along the
# disk boundaries never change the intersection count, but they decide
# which of the four moves can act; offsets up to 2 per disk sufficed
# on the exhaustive small-word corpus with margin.
TWIST_WINDOW = 2


def total_boundary_intersections(s: Diagram) -> int:
    d = s.reduce()
    return sum(views.intersection_with_disk(d, i) for i in (1, 2, 3))


@lru_cache(maxsize=None)
def _offset_ladder(window: int):
    offs = itertools.product(range(-window, window + 1), repeat=3)
    return tuple(sorted(offs, key=lambda a: (sum(map(abs, a)), a)))


def _offset_text(offsets) -> str:
    return " * ".join("H%d^%d" % (i + 1, k)
                      for i, k in enumerate(offsets) if k)


def descent_step(s: Diagram, window: int = TWIST_WINDOW):
    """Find one strict reduction of the boundary intersection count.

    Walks half-twist offsets (smallest combined size first, then
    lexicographic; the zero offset leads) crossed with the four moves
    in their fixed priority order, and commits to the first candidate
    whose count strictly drops.  Returns (system, pre-twist text or
    "", move text, count before, count after), or None when no
    combination in the window reduces.
    """
    d = s.reduce()
    before = total_boundary_intersections(d)
    if before == 0:
        return None
    for offsets in _offset_ladder(window):
        pre = _offset_text(offsets)
        base = apply_word(d, pre).reduce() if pre else d
        for text in _WAVE_MOVES:
            cand = apply_word(base, text).reduce()
            after = total_boundary_intersections(cand)
            if after < before:
                return cand, pre, text, before, after
    return None


def reduce_waves_by_twists(s: Diagram, max_steps: int = 10_000):
    """Drive the disk-boundary intersection count down by the four
    fixed twist moves, strictly decreasing it at every step.

    Each step may first re-position the system by half twists along
    the disk boundaries (count-neutral) before one of D1*D2^-1, its
    inverse, D3, its inverse acts; the first reducing combination in
    the fixed search order wins, so traces are deterministic.  Stops
    at count zero or when no combination reduces.  Stopping with a
    wave still present contradicts the reduction guarantee for
    compressing-curve systems and raises PaperViolation rather than
    returning silently; StepBudgetExceeded past ``max_steps``.

    Returns (system, trace); trace rows are (re-positioning twist
    text or "", move text, count before, count after), enough to
    replay every step.
    """
    from .errors import StepBudgetExceeded
    from .dehn import standardize

    d = standardize(s.reduce())
    trace = []
    steps = 0
    while total_boundary_intersections(d) > 0:
        if steps >= max_steps:
            raise StepBudgetExceeded(max_steps, "wave reduction budget")
        hit = descent_step(d)
        if hit is None:
            if views.has_wave(d):
                raise PaperViolation(
                    "a wave persists but no listed twist move decreases "
                    "the boundary intersection count")
            break
        d, pre, text, before, after = hit
        trace.append((pre, text, before, after))
        steps += 1
    return d, trace
