import json

import pytest

from weylkit import CartanData, TypeLabel, load_builtin
from weylkit.cartan import classify_components, compute_marks, validate
from weylkit.errors import InvalidCartan, UnrecognizedDiagram, UnsupportedType
from weylkit.lattice import RootVec


def test_d5_affine_layout():
    d = load_builtin("D5~")
    assert d.size == 6 and d.rank == 5 and d.affine
    assert d.marks == (1, 1, 2, 2, 1, 1)
    assert sorted(d.edges()) == [(0, 2), (1, 2), (2, 3), (3, 4), (3, 5)]
    assert not validate(d)


@pytest.mark.parametrize("label,marks", [
    ("A1~", (1, 1)), ("A3~", (1, 1, 1, 1)), ("D4~", (1, 1, 2, 1, 1)), ("D6~", (1, 1, 2, 2, 2, 1, 1)),
])
def test_builtin_marks(label, marks):
    assert load_builtin(label).marks == marks


def test_marks_from_kernel():
    assert compute_marks(load_builtin("D5~").matrix) == (1, 1, 2, 2, 1, 1)
    with pytest.raises(InvalidCartan):
        compute_marks(load_builtin("A3").matrix)


def test_a1_affine_bond_is_infinite():
    d = load_builtin("A1~")
    assert d.bond_orders[(0, 1)] == float("inf")


def test_label_parsing():
    assert TypeLabel.parse("D_5^(1)") == TypeLabel("D", 5, True)
    assert TypeLabel.parse("A3") == TypeLabel("A", 3, False)
    assert str(TypeLabel.parse("d5~")) == "D5^(1)"
    with pytest.raises(UnsupportedType):
        TypeLabel.parse("E6")
    with pytest.raises(UnsupportedType):
        TypeLabel("D", 3)


def test_validation_collects_failures():
    with pytest.raises(InvalidCartan) as exc:
        CartanData.from_matrix([[2, 1], [0, 3]], affine=False)
    msg = str(exc.value)
    assert "diagonal" in msg and "zero pattern" in msg


def test_bad_marks_rejected():
    with pytest.raises(InvalidCartan):
        CartanData.from_matrix(load_builtin("A3~").matrix, [1, 1, 1, 2])


def test_bad_automorphism_rejected():
    with pytest.raises(InvalidCartan):
        CartanData.from_matrix(load_builtin("D5~").matrix, automorphisms={"bad": [0, 2, 1, 3, 4, 5]})


def test_automorphisms_compose_rightmost_first():
    d = load_builtin("D5~")
    m = d.automorphism_map
    s1, s2 = m["sigma1"], m["sigma2"]
    assert m["sigma12"] == tuple(s1[s2[i]] for i in range(6))
    assert m["sigma21"] == tuple(s2[s1[i]] for i in range(6))
    assert d.aut_group_map["cyc4"] == ("sigma12",)


def test_gram_is_symmetric_and_matches_matrix():
    d = load_builtin("D5~")
    g = d.gram
    for i in range(6):
        for j in range(6):
            assert g[i][j] == g[j][i]
            assert 2 * g[i][j] / g[i][i] == d.matrix[j][i]


def test_json_round_trip():
    d = load_builtin("D5~")
    back = CartanData.from_json(json.dumps(d.to_json()))
    assert back == d
    assert back.automorphism_map == d.automorphism_map
    with pytest.raises(InvalidCartan):
        CartanData.from_json({"size": 3, "matrix": [[2, -1], [-1, 2]]})


def test_classify_a1_times_a3():
    d = load_builtin("D5~")
    roots = [RootVec.basis(i, 6) for i in (5, 1, 4, 3)]
    comps = classify_components(roots, d)
    assert sorted(str(t) for t, _ in comps) == ["A1", "A3"]
    a3 = next(r for t, r in comps if t.rank == 3)
    assert a3[1] == RootVec.basis(3, 6)


def test_classify_d4_and_cycles():
    d = load_builtin("D5~")
    comps = classify_components([RootVec.basis(i, 6) for i in (0, 1, 2, 3)], d)
    assert [str(t) for t, _ in comps] == ["D4"]
    cyc = load_builtin("A3~")
    with pytest.raises(UnrecognizedDiagram):
        classify_components([RootVec.basis(i, 4) for i in range(4)], cyc)
