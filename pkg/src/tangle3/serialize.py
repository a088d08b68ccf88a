"""Versioned JSON text format for arc systems, verdicts, and coordinates.

Every document is a JSON object carrying a ``format`` tag and an integer
``version``.  Current formats, all at version 1:

  tangle3.arc-system      a Diagram.  Fields: ``edges`` (per-edge list of
                          crossing ids, west to east), ``links`` (per-face
                          list of node pairs), ``end_label`` (list of
                          [puncture, label] pairs), ``trivial_circles``.
                          Nodes are ["x", id] or ["p", puncture].  The
                          optional ``meta`` object is carried verbatim and
                          ignored by the loader; corpus files use it for
                          the expected verdict and provenance.
  tangle3.verdict         a detection result: ``decision``, ``reason``,
                          ``trace`` (list of steps; each step a list whose
                          head names the operation).
  tangle3.canonical-form  output of Diagram.canonical_form, re-keyed by
                          field name so documents stay diffable.
  tangle3.dehn-params     ``coords``, the ordered nine-tuple
                          [p1, q1, t1, p2, q2, t2, p3, q3, t3].

Writers sort object keys and emit a trailing newline, so equal payloads
serialize byte-identically.  File writes go through a temporary file in
the target directory followed by os.replace, so a crash never leaves a
half-written document behind.
"""

from __future__ import annotations

import json
import os
import tempfile

from .diagram import EDGES, FACES, Diagram
from .dehn import DehnParams
from .detector import Verdict
from .errors import InputError, InvalidDiagramError

ARC_SYSTEM_FORMAT = "tangle3.arc-system"
VERDICT_FORMAT = "tangle3.verdict"
CANONICAL_FORMAT = "tangle3.canonical-form"
DEHN_PARAMS_FORMAT = "tangle3.dehn-params"
VERSION = 1


def _node_out(node):
    return [node[0], node[1]]


def _node_in(obj):
    try:
        kind, val = obj
    except (TypeError, ValueError):
        raise InputError("bad node %r" % (obj,))
    if kind not in ("x", "p") or not isinstance(val, int):
        raise InputError("bad node %r" % (obj,))
    return (kind, val)


def _require(obj, fmt):
    if not isinstance(obj, dict):
        raise InputError("expected a JSON object, got %s" % type(obj).__name__)
    if obj.get("format") != fmt:
        raise InputError("expected format %r, got %r" % (fmt, obj.get("format")))
    if obj.get("version") != VERSION:
        raise InputError("unsupported %s version %r" % (fmt, obj.get("version")))
    return obj


# ------------------------------------------------------------- arc systems

def system_to_obj(s: Diagram, meta: dict | None = None) -> dict:
    out = {
        "format": ARC_SYSTEM_FORMAT,
        "version": VERSION,
        "edges": {e: list(s.edges[e]) for e in EDGES},
        "links": {f: sorted([_node_out(a), _node_out(b)]
                            for a, b in s.links[f].items() if a < b)
                  for f in FACES},
        "end_label": [[p, lab] for p, lab in sorted(s.end_label.items())],
        "trivial_circles": s.trivial_circles,
    }
    if meta:
        out["meta"] = meta
    return out


def system_from_obj(obj) -> Diagram:
    _require(obj, ARC_SYSTEM_FORMAT)
    try:
        edges = {e: [int(i) for i in obj["edges"].get(e, [])] for e in EDGES}
        links = {}
        for f in FACES:
            lk = {}
            for pair in obj["links"].get(f, []):
                a, b = (_node_in(n) for n in pair)
                lk[a] = b
                lk[b] = a
            links[f] = lk
        end_label = {int(p): str(lab) for p, lab in obj.get("end_label", [])}
        circles = int(obj.get("trivial_circles", 0))
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise InputError("malformed arc-system document: %s" % exc)
    try:
        return Diagram(edges, links, end_label, circles)
    except InvalidDiagramError as exc:
        raise InputError("arc-system document fails validation: %s" % exc)


# ---------------------------------------------------------------- verdicts

def verdict_to_obj(v: Verdict) -> dict:
    return {
        "format": VERDICT_FORMAT,
        "version": VERSION,
        "decision": v.decision,
        "reason": v.reason,
        "trace": [list(step) for step in v.trace],
    }


def verdict_from_obj(obj) -> Verdict:
    _require(obj, VERDICT_FORMAT)
    try:
        decision = str(obj["decision"])
        reason = str(obj["reason"])
        trace = tuple(tuple(step) for step in obj["trace"])
    except (KeyError, TypeError) as exc:
        raise InputError("malformed verdict document: %s" % exc)
    if decision not in ("Trivial", "NonTrivial"):
        raise InputError("unknown decision %r" % decision)
    return Verdict(decision, reason, trace)


# --------------------------------------------------------- canonical forms

def canonical_to_obj(form: tuple) -> dict:
    tag, version, weights, north, south, ends, circles = form
    return {
        "format": CANONICAL_FORMAT,
        "version": VERSION,
        "weights": list(weights),
        "links": {"N": [[_node_out(a), _node_out(b)] for a, b in north],
                  "S": [[_node_out(a), _node_out(b)] for a, b in south]},
        "end_label": [[p, lab] for p, lab in ends],
        "trivial_circles": circles,
    }


def canonical_from_obj(obj) -> tuple:
    _require(obj, CANONICAL_FORMAT)
    try:
        weights = tuple(int(w) for w in obj["weights"])
        faces = tuple(tuple(tuple(_node_in(n) for n in pair)
                            for pair in obj["links"][f]) for f in FACES)
        ends = tuple((int(p), str(lab)) for p, lab in obj["end_label"])
        circles = int(obj["trivial_circles"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError("malformed canonical-form document: %s" % exc)
    if len(weights) != 6:
        raise InputError("expected six edge weights")
    return ("tangle3.canon", 1, weights, faces[0], faces[1], ends, circles)


# --------------------------------------------------------- Dehn parameters

def dehn_params_to_obj(d: DehnParams) -> dict:
    return {"format": DEHN_PARAMS_FORMAT, "version": VERSION,
            "coords": list(d.as_tuple())}


def dehn_params_from_obj(obj) -> DehnParams:
    _require(obj, DEHN_PARAMS_FORMAT)
    coords = obj.get("coords")
    if not isinstance(coords, list):
        raise InputError("dehn-params document lacks a coords list")
    return DehnParams.from_tuple(coords)


# ----------------------------------------------------------------- file IO

def dumps(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def loads(text: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("not valid JSON: %s" % exc)
    if not isinstance(obj, dict):
        raise InputError("expected a JSON object at top level")
    return obj


def write_document(path: str, obj: dict) -> None:
    """Serialize ``obj`` to ``path`` atomically."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(dumps(obj))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_document(path: str) -> dict:
    try:
        with open(path) as fh:
            return loads(fh.read())
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc))


def save_system(path: str, s: Diagram, meta: dict | None = None) -> None:
    write_document(path, system_to_obj(s, meta))


def load_system(path: str) -> Diagram:
    return system_from_obj(read_document(path))
