import pytest
from hypothesis import given, settings, strategies as st

from twoparity.gauss import (
    Endpoint, GaussCodeError, GaussDiagram, Role, empty, parse, serialize, validate,
)
from twoparity.indexing import ChordIndex
from twoparity.moves import random_diagram


def test_parse_one_chord():
    d = parse("long U1:a O1:a")
    assert d.kind == "long"
    assert d.endpoints == (Endpoint(1, Role.UNDER), Endpoint(1, Role.OVER))
    assert d.indices == {1: ChordIndex.A}
    assert d.signs is None


def test_parse_two_chords():
    d = parse("long U1:a U2:c O1:a O2:c")
    assert d.n_chords == 2
    assert d.indices == {1: ChordIndex.A, 2: ChordIndex.C}


def test_parse_normalizes_ids():
    assert serialize(parse("long O7:c U3:b O3:b U7:c")) == "long O1:c U2:b O2:b U1:c"


@pytest.mark.parametrize("text, needle", [
    ("long U1:a O1:b", "index mismatch on chord 1"),
    ("long U1:a U1:a", "twice as U"),
    ("long U1:a", "occurs once"),
    ("long U1:a O1:a U1:a", "more than twice"),
    ("long U1+:a O1-:a", "sign mismatch"),
    ("long U1+:a O1+:a U2:0 O2:0", "every chord or none"),
    ("knot U1:a O1:a", "expected 'long' or 'closed'"),
    ("", "empty input"),
    ("long U1:a O1:d", "malformed token"),
    ("long U01:a O01:a", "malformed token"),
])
def test_parse_errors(text, needle):
    with pytest.raises(GaussCodeError, match=needle):
        parse(text)


def test_parse_error_reports_position():
    with pytest.raises(GaussCodeError) as info:
        parse("long U1:a U2:b X:a")
    assert info.value.position == 3


@pytest.mark.parametrize("d, text", [
    (empty("long"), "long"),
    (parse("long U1:a O1:a"), "long U1:a O1:a"),
    (parse("closed U1:0 O1:0"), "closed U1:0 O1:0"),
    (parse("closed O1+:b U1+:b"), "closed O1+:b U1+:b"),
])
def test_serialize(d, text):
    assert serialize(d) == text
    assert str(d) == text


def test_validate_clean():
    assert validate(parse("long U1:a U2:c O1:a O2:c")) == []


def test_validate_duplicate_role():
    d = GaussDiagram("long", (Endpoint(1, Role.OVER), Endpoint(1, Role.OVER)), {1: ChordIndex.A})
    assert [v.kind for v in validate(d)] == ["duplicate-role"]


def test_validate_missing_index():
    d = GaussDiagram("long", (Endpoint(1, Role.UNDER), Endpoint(1, Role.OVER)), {})
    assert [v.kind for v in validate(d)] == ["missing-index"]


def test_validate_odd_occurrence_and_missing_sign():
    d = GaussDiagram("closed", (Endpoint(1, Role.UNDER),), {1: ChordIndex.A}, {})
    kinds = {v.kind for v in validate(d)}
    assert kinds == {"odd-occurrence", "missing-sign"}


@settings(max_examples=300, deadline=None)
@given(seed=st.integers(0, 2**32), n=st.integers(0, 16),
       kind=st.sampled_from(["long", "closed"]), signed=st.booleans())
def test_roundtrip(seed, n, kind, signed):
    d = random_diagram(seed, n, kind, signed=signed)
    assert validate(d) == []
    assert parse(serialize(d)) == d


@settings(max_examples=200, deadline=None)
@given(s1=st.integers(0, 10**6), s2=st.integers(0, 10**6), n=st.integers(0, 6))
def test_serialize_injective(s1, s2, n):
    d1, d2 = random_diagram(s1, n), random_diagram(s2, n)
    assert (serialize(d1) == serialize(d2)) == (d1 == d2)


def test_diagrams_are_hashable():
    a, b = parse("long U1:a O1:a"), parse("long U5:a O5:a")
    assert a == b and len({a, b}) == 1
