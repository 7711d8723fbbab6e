from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylkit import CoweightVec, RootVec, load_builtin
from weylkit.errors import ParseError
from weylkit.notation import compressed, format_coweight, format_root, parse_coweight, parse_root

D5 = load_builtin("D5~")


@pytest.mark.parametrize("text,coords", [
    ("a0123", [1, 1, 1, 1, 0, 0]),
    ("a01223345", [1, 1, 2, 2, 1, 1]),
    ("-a345", [0, 0, 0, -1, -1, -1]),
    ("a0 + d", [2, 1, 2, 2, 1, 1]),
    ("2a1 - delta", [-1, 1, -2, -2, -1, -1]),
    ("alpha_3 + a_4", [0, 0, 0, 1, 1, 0]),
    ("[1,0,0,0,0,2]", [1, 0, 0, 0, 0, 2]),
])
def test_parse_root(text, coords):
    assert parse_root(text, D5) == RootVec(coords)


def test_parse_named_roots():
    names = {"gamma1": RootVec([0, 0, 1, 1, 1, 1])}
    assert parse_root("gamma1 - d", D5, names) == RootVec([-1, -1, -1, -1, 0, 0])


@pytest.mark.parametrize("bad", ["", "a0 a1", "a9", "zeta", "[1,2]", "1/2 a1", "a1 +"])
def test_parse_root_errors(bad):
    with pytest.raises(ParseError):
        parse_root(bad, D5)


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as exc:
        parse_root("a0 + a1 a2", D5)
    assert exc.value.position is not None


def test_format_root():
    assert format_root(RootVec([1, 1, 1, 1, 0, 0])) == "a0123"
    assert format_root(RootVec([0, 0, -1, -1, -1, 0])) == "-a234"
    assert format_root(RootVec([2, 1, 2, 2, 1, 1]), D5) == "a0 + d"
    assert format_root(RootVec([3, 2, 4, 4, 2, 2]), D5) == "a0 + 2d"
    assert format_root(RootVec([-1, 0, -2, -2, -1, -1]), D5) == "a1 - d"
    assert format_root(RootVec([2, 2, 4, 4, 2, 2]), D5) == "2d"
    assert format_root(RootVec([-1, -1, -2, -2, -1, -1]), D5) == "-d"
    assert format_root(RootVec([2, 1, 2, 2, 1, 1])) == "a001223345"
    assert format_root(RootVec([1, -1, 0, 0, 0, 0])) == "a0 - a1"
    assert compressed(RootVec([0] * 6)) == "0"
    assert parse_root("0", D5) == RootVec.zero(6)


def test_coweights():
    f = parse_coweight("h1 - h2 + 1/2 h5 + hd", D5)
    assert f == CoweightVec([1, -1, 0, 0, Fraction(1, 2), 1])
    assert format_coweight(f) == "h1 - h2 + 1/2 h5 + hd"
    assert format_coweight(CoweightVec.zero(6)) == "0"
    with pytest.raises(ParseError):
        parse_coweight("h7", D5)


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=6, max_size=6))
def test_root_text_round_trip(coords):
    v = RootVec(coords)
    assert parse_root(format_root(v, D5), D5) == v


@settings(max_examples=300, deadline=None)
@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4), min_size=6, max_size=6))
def test_coweight_text_round_trip(coords):
    f = CoweightVec(coords)
    assert parse_coweight(format_coweight(f), D5) == f
