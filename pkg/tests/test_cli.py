from __future__ import annotations

import filecmp
import os

from tangle3 import engine, serialize
from tangle3.cli import main
from tangle3.detector import detect_infinity_tangle
from tangle3.mapping import apply_word
from tangle3.surface import pair_circle, straight_bridge_arcs


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_detect_straight(capsys):
    code, out = _run(capsys, "detect", "--base", "straight")
    assert code == 0
    doc = serialize.loads(out)
    assert doc["decision"] == "Trivial"
    assert doc["reason"] == "StraightArcs"


def test_detect_epsilon_word(capsys):
    code, _ = _run(capsys, "detect", "--base", "straight",
                   "--word", "H1^3 * D3 * (D1*D2^-1)^2")
    assert code == 0


def test_detect_mismatch_case(tmp_path, capsys, mismatch_system):
    case = tmp_path / "mismatch_pairing.case"
    serialize.save_system(str(case), mismatch_system)
    code, out = _run(capsys, "detect", "--system", str(case))
    assert code == 1
    assert serialize.loads(out)["reason"] == "PairingMismatch"


def test_detect_writes_a_replayable_trace(tmp_path, capsys, base):
    trace_file = tmp_path / "verdict.json"
    code, _ = _run(capsys, "detect", "--word", "(D1*D2^-1)^-1 * H2^-1",
                   "--trace", str(trace_file))
    assert code == 0
    v = serialize.verdict_from_obj(serialize.read_document(str(trace_file)))
    from tangle3.detector import is_straight_collection, replay_trace
    start = apply_word(base, "(D1*D2^-1)^-1 * H2^-1").reduce()
    assert is_straight_collection(replay_trace(start, v.trace))


def test_bad_inputs_exit_two(capsys):
    assert _run(capsys, "detect", "--word", "H9")[0] == 2
    assert _run(capsys, "detect", "--system", "/no/such/file.case")[0] == 2
    assert _run(capsys, "coords", "--params", "1 2 3")[0] == 2
    assert _run(capsys, "twist")[0] == 2


def test_budget_exit_three(capsys):
    code, _ = _run(capsys, "detect", "--word",
                   "(H1 * D1*D2^-1 * D3^-1 * H2)^4", "--max-steps", "1")
    assert code == 3


def test_reduce_and_twist_commands(capsys, base):
    code, out = _run(capsys, "twist", "--word", "D1*D2^-1")
    assert code == 0
    got = serialize.system_from_obj(serialize.loads(out))
    want = apply_word(base, "D1*D2^-1").reduce()
    assert got.canonical_form() == want.canonical_form()

    code, out = _run(capsys, "reduce", "--base", "straight")
    assert code == 0
    assert serialize.system_from_obj(serialize.loads(out)).canonical_form() \
        == base.canonical_form()


def test_make_dense_and_standardize_commands(capsys, base):
    code, out = _run(capsys, "make-dense", "--word", "D1*D2^-1")
    assert code == 0
    from tangle3.detector import is_dense
    assert is_dense(serialize.system_from_obj(serialize.loads(out)))

    code, out = _run(capsys, "standardize", "--word", "H1")
    assert code == 0
    assert serialize.system_from_obj(serialize.loads(out)).canonical_form() \
        == base.canonical_form()


def test_coords_both_directions(tmp_path, capsys):
    code, out = _run(capsys, "coords", "--params", "0 0 1 0 0 0 0 0 0")
    assert code == 0
    built = serialize.system_from_obj(serialize.loads(out))
    assert engine.systems_equal(built, pair_circle(1), labeled=False)

    case = tmp_path / "circle.case"
    serialize.save_system(str(case), pair_circle(1))
    code, out = _run(capsys, "coords", "--system", str(case))
    assert code == 0
    doc = serialize.loads(out)
    assert serialize.dehn_params_from_obj(doc).as_tuple() == (
        0, 0, 1, 0, 0, 0, 0, 0, 0)


def test_output_file_option(tmp_path, capsys):
    out_file = tmp_path / "report.json"
    code, out = _run(capsys, "detect", "--base", "straight",
                     "--out", str(out_file))
    assert code == 0
    assert out == ""
    assert serialize.read_document(str(out_file))["decision"] == "Trivial"


def test_oracle_check(capsys):
    code, out = _run(capsys, "oracle-check", "--base", "straight",
                     "--word", "D3 * D1*D2^-1", "--orders", "5")
    assert code == 0
    assert out.startswith("ok:")


def test_corpus_is_deterministic(tmp_path, capsys):
    a, b = str(tmp_path / "a"), str(tmp_path / "b")
    for out_dir in (a, b):
        code, _ = _run(capsys, "generate-corpus", "--seed", "1",
                       "--count", "10", "--out-dir", out_dir)
        assert code == 0
    names = sorted(os.listdir(a))
    assert names == sorted(os.listdir(b))
    match, mismatch, errors = filecmp.cmpfiles(a, b, names, shallow=False)
    assert (mismatch, errors) == ([], [])


def test_corpus_labels_are_honest(tmp_path, capsys):
    out_dir = str(tmp_path / "cases")
    code, _ = _run(capsys, "generate-corpus", "--seed", "2",
                   "--count", "8", "--out-dir", out_dir)
    assert code == 0
    kinds = set()
    for name in sorted(os.listdir(out_dir)):
        doc = serialize.read_document(os.path.join(out_dir, name))
        s = serialize.system_from_obj(doc)
        expected = doc["meta"]["expected"]
        kinds.add(doc["meta"]["provenance"])
        assert detect_infinity_tangle(s).decision == expected, name
        assert engine.presents_trivial_tangle(s) == (expected == "Trivial")
    assert kinds == {"epsilon-word", "pairing-mismatch", "clasp-product"}
