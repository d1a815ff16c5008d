import itertools

import pytest

from twoparity.gauss import GaussCodeError
from twoparity.indexing import (
    ChordIndex, WindingCountError, WindingDecoratedDiagram, derive_indices, index_sum,
    parse_windings, r3_index_admissible,
)

T, A, B, C = ChordIndex.TRIVIAL, ChordIndex.A, ChordIndex.B, ChordIndex.C
ALL = list(ChordIndex)


def test_index_sum_examples():
    assert index_sum([A, B]) is C
    assert index_sum([]) is T
    assert index_sum([C, C]) is T


def test_group_laws_exhaustive():
    assert A + B + C is T
    for x in ALL:
        assert x + T is x
        assert x + x is T
        for y in ALL:
            assert x + y is y + x
            for z in ALL:
                assert (x + y) + z is x + (y + z)


def test_pairs():
    assert [i.pair for i in ALL] == [(0, 0), (1, 0), (0, 1), (1, 1)]
    assert ChordIndex.from_pair(3, -2) is A


def test_r3_admissible_examples():
    assert r3_index_admissible(A, B, C)
    assert r3_index_admissible(T, T, T)
    assert not r3_index_admissible(A, A, B)


def test_r3_admissible_is_zero_sum_all_64():
    for x, y, z in itertools.product(ALL, repeat=3):
        by_cases = ({x, y, z} == {A, B, C} or (x, y, z) == (T, T, T)
                    or sorted((x, y, z)) in ([T, i, i] for i in (A, B, C)))
        assert r3_index_admissible(x, y, z) == (index_sum([x, y, z]) is T) == by_cases


@pytest.mark.parametrize("text, expected", [
    ("closed U1 [1,0] O1 [0,1]", "closed U1:a O1:a"),
    ("closed U1 [1,1] O1 [0,0]", "closed U1:c O1:c"),
    ("closed U1 [0,0] U2 [0,0] O1 [0,0] O2 [0,0]", "closed U1:0 U2:0 O1:0 O2:0"),
    ("long [0,0] U1 [0,1] O1 [5,5]", "long U1:b O1:b"),
    ("long [1,0] O1 [0,1] U1 [0,0]", "long O1:a U1:a"),  # wraps through the leading arc
    ("closed O1 [1,0] U1 [0,1]", "closed O1:b U1:b"),
    ("long [3,3]", "long"),
])
def test_derive(text, expected):
    assert str(derive_indices(parse_windings(text))) == expected


def test_derive_keeps_signs():
    assert str(derive_indices(parse_windings("closed U1+ [1,0] O1+ [0,0]"))) == "closed U1+:a O1+:a"


@pytest.mark.parametrize("text", [
    "closed U1 [1,0] O1",
    "long U1 [1,0] O1 [0,0]",
    "closed [0,0] U1 [1,0] O1 [0,0]",
])
def test_winding_count_mismatch(text):
    with pytest.raises(WindingCountError):
        parse_windings(text)


def test_bad_winding_token():
    with pytest.raises(GaussCodeError):
        parse_windings("closed U1 [1,x] O1 [0,0]")


def test_derive_rejects_bad_length():
    base = parse_windings("closed U1 [1,0] O1 [0,1]").base
    with pytest.raises(WindingCountError):
        derive_indices(WindingDecoratedDiagram(base, ((1, 0),)))


def test_even_shifts_do_not_matter():
    w = parse_windings("closed U1 [1,0] U2 [0,1] O1 [1,1] O2 [0,3] U3 [2,1] O3 [1,0]")
    ref = derive_indices(w)
    for i in range(len(w.arc_windings)):
        for shift in ((2, 0), (0, 2), (-2, 4)):
            arcs = list(w.arc_windings)
            arcs[i] = (arcs[i][0] + shift[0], arcs[i][1] + shift[1])
            assert derive_indices(WindingDecoratedDiagram(w.base, tuple(arcs))) == ref
