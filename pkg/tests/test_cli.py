import json

import pytest

from twoparity.cli import cmd_derive, cmd_equal, cmd_fuzz, cmd_invariant, cmd_moves, main
from twoparity.fuzz import run_fuzz, run_trial, trial_seed


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, "--format", "json", *argv)
    return code, json.loads(out)


def test_invariant_long(capsys):
    code, out = run(capsys, "invariant", "long U1:a O1:a")
    assert code == 0
    assert "value: (r^0 s^1 | R^0 S^1)" in out
    assert "c_even=True" in out


def test_invariant_empty_and_after(capsys):
    assert cmd_invariant("long")[0]["value"] == "(r^0 s^0 | R^0 S^0)"
    rep, _ = cmd_invariant("long U1:a U2:c O1:a O2:c", after=True)
    assert rep["invariant"] == "w_after"
    assert rep["value"] == "(r^0 s^1 | R^2 S^1)"


def test_invariant_closed(capsys):
    code, rep = run_json(capsys, "invariant", "closed U1:a O1:a U2:a O2:a")
    assert code == 0 and rep["invariant"] == "orbit"
    assert rep["parity"] == {"count_a": 2, "count_b": 0, "count_c": 0,
                             "a_even": True, "b_even": True, "c_even": True}


def test_invariant_errors(capsys):
    code, out = run(capsys, "invariant", "closed U1:c O1:c")
    assert code == 2 and "c-odd" in out
    code, out = run(capsys, "invariant", "long U1:a O1:b")
    assert code == 2 and "index mismatch" in out
    code, out = run(capsys, "invariant", "--after", "closed")
    assert code == 2


def test_input_from_file_and_stdin(tmp_path, capsys, monkeypatch):
    f = tmp_path / "k.gauss"
    f.write_text("long U1:a U2:b O1:a O2:b\n")
    code, rep = run_json(capsys, "invariant", str(f))
    assert rep["value"] == "(r^1 s^0 | R^1 S^0)"
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO("long U1:a O1:a"))
    code, rep = run_json(capsys, "invariant", "-")
    assert rep["diagram"] == "long U1:a O1:a"


def test_equal(capsys):
    d = "long U1:a U2:b O1:a O2:b"
    code, rep = run_json(capsys, "equal", d, d)
    assert code == 0 and rep["result"] == "equal-invariant"
    code, rep = run_json(capsys, "equal", d, "long")
    assert code == 1 and rep["result"] == "distinguished"
    r3 = "long O1:a O2:b U1:a U3:c U2:b O3:c"
    moved = cmd_moves(r3, "R3 @(0,1)(2,3)(4,5)")[0]["result"]
    rep, code = cmd_equal(r3, moved)
    assert code == 0 and rep["result"] == "equal-invariant"


def test_equal_errors(capsys):
    assert main(["equal", "long", "closed"]) == 2
    assert main(["equal", "closed U1:c O1:c", "closed"]) == 2


def test_moves_list_and_apply(capsys):
    code, rep = run_json(capsys, "moves", "long U1:0 O1:0")
    assert "R1Remove 1" in rep["moves"]
    code, rep = run_json(capsys, "moves", "long U1:0 O1:0", "--apply", "R1Remove 1")
    assert code == 0 and rep["result"] == "long"
    assert rep["w_before"] == rep["w_after_move"]


def test_moves_rotate(capsys):
    code, rep = run_json(capsys, "moves", "closed U1:a O1:a", "--apply", "Rotate")
    assert rep["result"] == "closed O1:a U1:a"
    assert rep["rotation_effect"] == "conjugate by a"


def test_moves_invalid(capsys):
    code, out = run(capsys, "moves", "long U1:a O2:b U3:c O1:a U2:b O3:c",
                    "--apply", "R3 @(0,1)(2,3)(4,5)")
    assert code == 2 and "role pattern" in out
    assert main(["moves", "long", "--apply", "R9"]) == 2


def test_fuzz_zero_trials(capsys):
    code, rep = run_json(capsys, "fuzz", "--trials", "0")
    assert code == 0 and rep["failures"] == 0 and rep["trials"] == 0
    assert main(["fuzz", "--trials", "-1"]) == 2


def test_fuzz_small_runs():
    rep, code = cmd_fuzz(200, 10, seed=3, kind="long")
    assert code == 0 and rep["failures"] == 0 and rep["seed"] == 3
    rep, code = cmd_fuzz(100, 10, seed=4, kind="closed", c_even=True)
    assert code == 0 and rep["moves"]["Rotate"] > 0


def test_fuzz_parallel_matches_serial():
    a = run_fuzz(40, 8, seed=9, kind="closed", c_even=True)
    b = run_fuzz(40, 8, seed=9, kind="closed", c_even=True, jobs=2)
    assert a.as_dict() == b.as_dict()


def test_fuzz_reports_counterexample(monkeypatch):
    import twoparity.fuzz as fz
    from twoparity.coxeter import GEN
    real = fz.w
    # a fake "invariant" that R1 moves break
    monkeypatch.setattr(fz, "w", lambda d: real(d) * (GEN["a"] ** (d.n_chords % 2)))
    summary = run_fuzz(20, 6, seed=1, max_length=20)
    assert summary.failures > 0
    cx = summary.as_dict()["counterexample"]
    assert set(cx) == {"trial_seed", "diagram", "move", "step", "detail"}
    replay = run_trial(cx["trial_seed"], 6, "long", False, 20)
    assert not replay.ok and replay.move == cx["move"] and replay.diagram == cx["diagram"]
    code = cmd_fuzz(20, 6, seed=1)[1]
    assert code == 1


def test_trial_replay_is_deterministic():
    assert run_trial(trial_seed(5, 2)) == run_trial(trial_seed(5, 2))


@pytest.mark.parametrize("text, expected", [
    ("closed U1 [1,0] O1 [0,1]", "closed U1:a O1:a"),
    ("closed U1 [0,0] O1 [0,0]", "closed U1:0 O1:0"),
    ("closed U1 [1,1] O1 [0,0]", "closed U1:c O1:c"),
])
def test_derive(text, expected):
    rep, code = cmd_derive(text)
    assert code == 0 and rep["diagram"] == expected


def test_derive_mismatch(capsys):
    code, out = run(capsys, "derive", "closed U1 [1,0] O1")
    assert code == 2 and "arc windings" in out


def test_json_has_text_fields(capsys):
    _, text = run(capsys, "invariant", "long U1:a O1:a")
    _, rep = run_json(capsys, "invariant", "long U1:a O1:a")
    for key in rep:
        assert f"{key}:" in text
