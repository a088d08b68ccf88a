from __future__ import annotations

import pytest

from tangle3 import serialize
from tangle3.dehn import DehnParams
from tangle3.detector import detect_infinity_tangle
from tangle3.errors import InputError
from tangle3.mapping import apply_word
from tangle3.surface import pair_circle, straight_bridge_arcs


def test_system_document_round_trip(base):
    for s in (base, apply_word(base, "D1*D2^-1 * H3"), pair_circle(2)):
        obj = serialize.system_to_obj(s)
        back = serialize.system_from_obj(obj)
        assert back.canonical_form() == s.canonical_form()


def test_system_document_keeps_meta(base):
    obj = serialize.system_to_obj(base, meta={"expected": "Trivial"})
    text = serialize.dumps(obj)
    again = serialize.loads(text)
    assert again["meta"] == {"expected": "Trivial"}
    assert serialize.system_from_obj(again).canonical_form() == \
        base.canonical_form()


def test_dumps_is_deterministic(base):
    obj = serialize.system_to_obj(base)
    text = serialize.dumps(obj)
    assert text == serialize.dumps(serialize.loads(text))
    assert text.endswith("\n")


def test_verdict_round_trip(base, mismatch_system):
    for s in (base, mismatch_system):
        v = detect_infinity_tangle(s)
        again = serialize.verdict_from_obj(serialize.loads(
            serialize.dumps(serialize.verdict_to_obj(v))))
        assert again == v


def test_canonical_round_trip(base):
    form = apply_word(base, "D1 * H2").canonical_form()
    obj = serialize.canonical_to_obj(form)
    assert serialize.canonical_from_obj(obj) == form


def test_dehn_params_round_trip():
    prm = DehnParams(3, 3, -2, 0, 0, 4, 1, 1, 0)
    obj = serialize.dehn_params_to_obj(prm)
    assert serialize.dehn_params_from_obj(obj) == prm


def test_format_tags_are_checked(base):
    obj = serialize.system_to_obj(base)
    wrong = dict(obj, format="tangle3.verdict")
    with pytest.raises(InputError):
        serialize.system_from_obj(wrong)
    stale = dict(obj, version=99)
    with pytest.raises(InputError):
        serialize.system_from_obj(stale)


def test_file_round_trip(tmp_path, base):
    path = tmp_path / "sys.case"
    serialize.save_system(str(path), base, meta={"k": 1})
    loaded = serialize.load_system(str(path))
    assert loaded.canonical_form() == base.canonical_form()
    doc = serialize.read_document(str(path))
    assert doc["meta"] == {"k": 1}
