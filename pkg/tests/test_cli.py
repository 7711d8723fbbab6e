import json

import numpy as np
import pytest

from weylkit import evaluate_word, load_builtin
from weylkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    return json.loads(out)


def test_roots(capsys):
    obj = run_json(capsys, "roots", "--type", "D5")
    assert obj["count"] == 40
    assert run_json(capsys, "roots", "--type", "A3", "--positive")["count"] == 6


def test_eval_json_round_trip(capsys):
    obj = run_json(capsys, "eval", "s0 s2 sigma12 (s3 s4)^-1")
    again = evaluate_word(obj["word"], load_builtin("D5~"))
    assert again.matrix.tolist() == obj["matrix"]
    assert obj["identity"] is False


def test_eval_markdown(capsys):
    code, out, _ = run(capsys, "eval", "s1 s3 s2", "--act-on", "a0")
    assert code == 0
    assert "image: a0123" in out


def test_eval_translation_and_coweight(capsys):
    obj = run_json(capsys, "eval", "pi s1", "--type", "A1~", "--act-on", "h1 + hd")
    assert obj["translation"] == "h1"
    assert obj["image"] == "2h1 + hd"


def test_eval_errors(capsys):
    code, _, err = run(capsys, "eval", "s9")
    assert code == 2 and "error" in err


def test_analyze(capsys):
    obj = run_json(capsys, "analyze", "s0145 sigma12 s232")
    assert obj["base_order"] == 4
    assert obj["induced_maps"]["beta"]["order"] == 4


def test_centralizer(capsys):
    obj = run_json(capsys, "centralizer", "--seeds", "a0")
    assert sorted(c["type"] for c in obj["components"]) == ["A1", "A3"]
    assert {c["affine_node"] for c in obj["components"]} == {"-a1 + d", "a01223"}


def test_stabilize(capsys):
    obj = run_json(capsys, "stabilize", "--targets", "a0123", "a2345", "--maxlen", "5")
    assert [h["word"] for h in obj["hits"]] == ["e", "s0 s1 s4 s5"]
    obj = run_json(capsys, "stabilize", "--targets", "gamma0", "gamma1", "--auts", "cyc4", "--maxlen", "2")
    assert obj["hits"][1]["word"] == "sigma12"


def test_normalizer(capsys):
    code, out, _ = run(capsys, "normalizer", "--subsystem", "gamma")
    assert code == 0
    assert "eta block" in out and "| element |" in out
    obj = run_json(capsys, "normalizer", "--subsystem", "beta")
    assert obj["diagram_group_order"] == 16


def test_fixtures(capsys):
    cat = run_json(capsys, "fixtures", "list")
    assert "os.T1" in cat
    obj = run_json(capsys, "fixtures", "show", "os.T4")
    assert obj["translation"] == "h2 - h3"
    code, _, _ = run(capsys, "fixtures", "show", "missing")
    assert code == 2
    code, _, _ = run(capsys, "fixtures", "show")
    assert code == 2


def test_reproduce(capsys):
    code, out, _ = run(capsys, "reproduce", "--suite", "os")
    assert code == 0
    assert "discrepancy" in out
    obj = run_json(capsys, "reproduce", "--suite", "examples")
    assert obj["summary"]["fail"] == 0


def test_cartan_file(tmp_path, capsys):
    f = tmp_path / "a2.json"
    f.write_text(json.dumps({"size": 3, "matrix": [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]}))
    obj = run_json(capsys, "roots", "--cartan-file", str(f))
    assert obj["count"] == 6
    m = np.array(run_json(capsys, "eval", "s0 s1 s2 s1 s0", "--cartan-file", str(f))["matrix"])
    assert m.shape == (3, 3)


def test_bad_arguments(capsys):
    with pytest.raises(SystemExit):
        main(["eval"])
