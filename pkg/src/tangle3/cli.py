"""Command-line front end.

Inputs are either the straight bridge arcs (``--base straight``, the
default) or an arc-system document (``--system FILE``); ``--word`` then
applies a twist word to whatever was loaded.  Transform commands print
the resulting arc-system document on standard output, ``detect`` prints
a verdict document, ``coords`` a dehn-params document.  Output is a pure
function of the inputs, flags, and seed.

Exit codes: 0 trivial (or plain success), 1 non-trivial, 2 bad input,
3 step budget exceeded, 4 a runtime soundness check failed.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import engine, serialize
from .dehn import (DehnParams, dehn_params_from_system, standardize,
                   system_from_dehn_params)
from .detector import DEFAULT_STEP_BUDGET, detect_infinity_tangle, make_dense
from .errors import (InputError, InvalidDiagramError, NotRealizableError,
                     PaperViolation, StepBudgetExceeded, Tangle3Error)
from .mapping import apply_word, word
from .surface import straight_bridge_arcs

EXIT_TRIVIAL = 0
EXIT_NONTRIVIAL = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_VIOLATION = 4

EPSILON_ATOMS = ("H1", "H2", "H3", "D1*D2^-1", "D3")
ALL_ATOMS = ("H1", "H2", "H3", "D1", "D2", "D3")


def _load_input(args) -> "engine.ArcSystem":
    if args.system is not None:
        d = serialize.load_system(args.system)
    else:
        d = straight_bridge_arcs()
    if getattr(args, "word", None):
        d = apply_word(d, word(args.word))
    return d.reduce()


def _emit(obj: dict, out: str | None) -> None:
    text = serialize.dumps(obj)
    if out is None:
        sys.stdout.write(text)
    else:
        serialize.write_document(out, obj)


def _add_input_options(p, with_word=True):
    p.add_argument("--base", choices=["straight"], default="straight",
                   help="start from the straight bridge arcs (default)")
    p.add_argument("--system", metavar="FILE",
                   help="load an arc-system document instead of --base")
    if with_word:
        p.add_argument("--word", metavar="TEXT",
                       help="twist word to apply to the input")
    p.add_argument("--out", metavar="FILE",
                   help="write the report there instead of standard output")


def cmd_detect(args) -> int:
    d = _load_input(args)
    v = detect_infinity_tangle(d, max_steps=args.max_steps)
    _emit(serialize.verdict_to_obj(v), args.out)
    if args.trace is not None:
        serialize.write_document(args.trace, serialize.verdict_to_obj(v))
    return EXIT_TRIVIAL if v.trivial else EXIT_NONTRIVIAL


def cmd_reduce(args) -> int:
    _emit(serialize.system_to_obj(_load_input(args)), args.out)
    return 0


def cmd_make_dense(args) -> int:
    d = make_dense(_load_input(args), max_steps=args.max_steps)
    _emit(serialize.system_to_obj(d), args.out)
    return 0


def cmd_standardize(args) -> int:
    _emit(serialize.system_to_obj(standardize(_load_input(args))), args.out)
    return 0


def cmd_twist(args) -> int:
    if not args.word:
        raise InputError("twist requires --word")
    _emit(serialize.system_to_obj(_load_input(args)), args.out)
    return 0


def cmd_coords(args) -> int:
    if args.params is not None:
        try:
            values = [int(v) for v in args.params.replace(",", " ").split()]
        except ValueError:
            raise InputError("--params wants nine integers")
        d = system_from_dehn_params(DehnParams.from_tuple(values))
        _emit(serialize.system_to_obj(d), args.out)
        return 0
    params = dehn_params_from_system(_load_input(args))
    _emit(serialize.dehn_params_to_obj(params), args.out)
    return 0


def cmd_oracle_check(args) -> int:
    """Recompute invariants along independent routes and compare."""
    import random
    d = _load_input(args)
    rng = random.Random(args.seed)
    failures = []

    ref = d.canonical_form()
    for k in range(args.orders):
        if d.reduce(random.Random(rng.randrange(2 ** 30))).canonical_form() != ref:
            failures.append("canonical form depends on reduction order (%d)" % k)
            break

    if d.is_closed():
        from .dehn import measured_pants_weights, weights_from_intersections
        crossings = [engine.geometric_intersection(d, "dE%d" % i)
                     for i in (1, 2, 3)]
        if weights_from_intersections(*crossings) != measured_pants_weights(d):
            failures.append("pants weights disagree with boundary counts")
        classes = engine.closed_curve_classes(d)
        reduced_classes = engine.closed_curve_classes(d.reduce(rng))
        if classes != reduced_classes:
            failures.append("complement classes changed under reduction")

    comps = d.components()
    if len(comps) == 3 and all(kind == "arc" for kind, _, _ in comps):
        v = detect_infinity_tangle(d, max_steps=args.max_steps)
        audit = engine.presents_trivial_tangle(d)
        if v.trivial != audit:
            failures.append("verdict %s contradicts the complement audit"
                            % v.decision)
        from .detector import is_straight_collection, replay_trace
        if is_straight_collection(replay_trace(d, v.trace)) != v.trivial:
            failures.append("trace replay does not reproduce the verdict")

    for line in failures:
        print("FAIL", line)
    if not failures:
        print("ok: %d reduction orders, all cross-checks agree" % args.orders)
        return 0
    raise PaperViolation("; ".join(failures))


def _random_word(rng, atoms, max_len, base, cap):
    """Random word applied atom by atom; stops before the image outgrows
    ``cap``, so the returned text is exactly the applied word."""
    parts = []
    d = base
    for _ in range(rng.randint(1, max_len)):
        atom = rng.choice(atoms)
        sign = rng.choice((1, -1))
        text = atom if sign > 0 else (
            "(%s)^-1" % atom if "*" in atom else "%s^-1" % atom)
        cand = apply_word(d, text).reduce()
        if cand.crossing_count() > cap:
            break
        d = cand
        parts.append(text)
    return " * ".join(parts), d


def generate_corpus(seed: int, count: int, max_word_length: int,
                    out_dir: str, size_cap: int = 800) -> list:
    """Write ``count`` labeled case files; deterministic per seed.

    Case kinds rotate: two trivial-word instances, then a pairing
    mismatch, then a clasp product (trivial words around an odd pair of
    half twists on one disk boundary, which keeps the pairing but not
    the tangle).  Every label is certified at generation time by the
    complement audit before the file is written.
    """
    import random
    rng = random.Random(seed)
    base = straight_bridge_arcs()
    os.makedirs(out_dir, exist_ok=True)
    written = []
    for k in range(count):
        kind = k % 4
        if kind in (0, 1):
            text, d = _random_word(rng, EPSILON_ATOMS, max_word_length,
                                   base, size_cap)
            expected, provenance = "Trivial", "epsilon-word"
            certified = engine.presents_trivial_tangle(d)
        elif kind == 2:
            while True:
                text, d = _random_word(rng, ALL_ATOMS, max_word_length,
                                       base, size_cap)
                if d.puncture_pairing() != [(1, 2), (3, 4), (5, 6)]:
                    break
            expected, provenance = "NonTrivial", "pairing-mismatch"
            certified = not engine.presents_trivial_tangle(d)
        else:
            w1, d = _random_word(rng, EPSILON_ATOMS, max_word_length, base,
                                 size_cap)
            clasp = "D1^%d" % rng.choice((2, -2, 4))
            d = apply_word(d, clasp).reduce()
            w2, d = _random_word(rng, EPSILON_ATOMS, max_word_length, d,
                                 size_cap)
            text = " * ".join(p for p in (w1, clasp, w2) if p)
            expected, provenance = "NonTrivial", "clasp-product"
            certified = not engine.presents_trivial_tangle(d)
        if not certified:
            raise PaperViolation(
                "case %d (%s) failed its label audit" % (k, provenance))
        meta = {"expected": expected, "provenance": provenance, "word": text}
        path = os.path.join(out_dir, "case_%04d_%s.case"
                            % (k, expected.lower()))
        serialize.save_system(path, d, meta=meta)
        written.append(path)
    return written


def cmd_generate_corpus(args) -> int:
    paths = generate_corpus(args.seed, args.count, args.max_word_length,
                            args.out_dir)
    for p in paths:
        print(p)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="tangle3",
        description="Detect the trivial rational 3-tangle from bridge arcs "
                    "on the six-punctured sphere.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("detect", help="run the detector, report a verdict")
    _add_input_options(p)
    p.add_argument("--max-steps", type=int, default=DEFAULT_STEP_BUDGET)
    p.add_argument("--trace", metavar="FILE",
                   help="also write the verdict document there")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("reduce", help="remove bigons, print the system")
    _add_input_options(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("make-dense", help="densify by bridge arc replacement")
    _add_input_options(p)
    p.add_argument("--max-steps", type=int, default=DEFAULT_STEP_BUDGET)
    p.set_defaults(func=cmd_make_dense)

    p = sub.add_parser("standardize", help="twist-normalize the system")
    _add_input_options(p)
    p.set_defaults(func=cmd_standardize)

    p = sub.add_parser("twist", help="apply a twist word (requires --word)")
    _add_input_options(p)
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("coords", help="Dehn coordinates of a closed system, "
                                      "or a system from --params")
    _add_input_options(p)
    p.add_argument("--params", metavar="NINE_INTS",
                   help="build the system for p1,q1,t1,p2,q2,t2,p3,q3,t3")
    p.set_defaults(func=cmd_coords)

    p = sub.add_parser("oracle-check",
                       help="recompute invariants independently and compare")
    _add_input_options(p)
    p.add_argument("--max-steps", type=int, default=DEFAULT_STEP_BUDGET)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--orders", type=int, default=10,
                   help="randomized reduction orders to try")
    p.set_defaults(func=cmd_oracle_check)

    p = sub.add_parser("generate-corpus",
                       help="emit labeled case files for the test suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--max-word-length", type=int, default=8)
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=cmd_generate_corpus)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, InvalidDiagramError, NotRealizableError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except StepBudgetExceeded as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_BUDGET
    except PaperViolation as exc:
        print("soundness failure: %s" % exc, file=sys.stderr)
        return EXIT_VIOLATION
    except Tangle3Error as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
