import pytest
from hypothesis import given, strategies as st

from src.models import MultisegmentError
from src.multiseg.covering import (
    WINDOW,
    TildeDim,
    c_value,
    covering_arrows,
    exceptional_vectors,
    msm_max_tilde,
    projective_vector,
    projective_with_socle,
    psi,
)
from src.multiseg.multisegments import parse_multisegment


E5 = [[1, 2, 1], [2, 2, 1], [2, 1, 1], [3, 1, 2], [4, 1, 1], [4, 0, 1], [5, 0, 1], [5, -1, 1]]


def test_entries_are_merged_and_sorted():
    d = TildeDim(((2, 1, 1), (1, 0, 2), (2, 1, 3)))
    assert d.entries == ((1, 0, 2), (2, 1, 4))
    assert d.total == 6
    assert d.push_down() == (2, 4, 0, 0, 0)
    assert d.level(1) == (0, 4, 0, 0, 0)
    assert d.levels() == [0, 1]


def test_shift_classes():
    d = TildeDim.from_json(E5)
    assert d.shift(3) == d
    assert hash(d.shift(-2)) == hash(d)
    assert not d.shift(1).same_levels(d)
    assert d.canonical().levels()[0] == 0


def test_invalid_vectors():
    with pytest.raises(MultisegmentError):
        TildeDim(((6, 0, 1),))
    with pytest.raises(MultisegmentError):
        TildeDim.from_dict({(1, 0): -1})
    with pytest.raises(MultisegmentError):
        TildeDim.from_json([[1, 2]])
    with pytest.raises(MultisegmentError):
        TildeDim.from_window([1, 2, 3])


def test_from_window_reads_lattice_order():
    d = TildeDim.from_window([1, 0, 0, 0, 0, 0, 0, 0, 0, 2])
    assert d.as_dict() == {(2, 2): 1, (5, -1): 2}


def test_arrows_drop_c_by_one():
    arrows = covering_arrows(WINDOW)
    assert arrows
    assert all(c_value(s) - c_value(t) == 1 for s, t in arrows)


@pytest.mark.parametrize("top,size", [(1, 5), (2, 8), (3, 9), (4, 8), (5, 5)])
def test_projective_supports(top, size):
    p = projective_vector(top, 0)
    assert sum(p.values()) == size
    assert (top, 0) in p
    assert max(c_value(v) for v in p) == c_value((top, 0))


@given(vertex=st.tuples(st.integers(1, 5), st.integers(-4, 4)))
def test_projective_with_socle(vertex):
    top = projective_with_socle(vertex)
    support = projective_vector(*top)
    assert vertex in support
    assert min(c_value(v) for v in support) == c_value(vertex)


def test_psi_on_exceptional_vectors():
    names = [name for name, _, _ in exceptional_vectors()]
    assert names == ["e3_star", "e5"]
    e5 = TildeDim.from_json(E5)
    assert str(psi(e5)) == "[1,2]+[2,4]+[3,3]+[4,4]+2[5,5]"
    assert str(psi(e5.shift(-5))) == "[1,2]+[2,4]+[3,3]+[4,4]+2[5,5]"
    assert psi(e5) != msm_max_tilde(e5)
    for _, vector, value in exceptional_vectors():
        assert vector.total == sum(value.degree(5))


def test_psi_defaults_to_levelwise_max():
    d = TildeDim.from_json([[1, 2, 1], [2, 1, 2], [3, 1, 1], [3, 0, 1], [4, 0, 1], [4, -1, 1], [5, -1, 1]])
    assert psi(d) == parse_multisegment("[1,1]+[2,2]+[2,3]+[3,4]+[4,5]")
    assert psi(d) == msm_max_tilde(d)


def test_str_lists_top_rows_first():
    d = TildeDim.from_json([[5, -1, 1], [2, 2, 3]])
    assert str(d) == "3*2_2 + 5_-1"
    assert str(TildeDim()) == "0"
