from itertools import combinations

import pytest

from src.models import ToolkitError
from src.quiver.core import check_relations, is_nilpotent
from src.shuffle.flags import delta_expansion
from src.shuffle.tableaux import (
    SkewShape,
    is_zero_minor,
    laminated_module,
    minor_shape,
    standard_tableaux,
    syt_minor,
    tableau_word,
)
from src.shuffle.words import WordPoly, parse_wordpoly


def test_minor_shape():
    shape = minor_shape((1, 2), (2, 3))
    assert shape.lam == (3, 3) and shape.mu == (2, 2)
    assert shape.cells() == [(3, 1), (3, 2)]
    assert len(shape) == 2


def test_shape_validation():
    with pytest.raises(ToolkitError):
        SkewShape((1, 2), (0, 0))
    with pytest.raises(ToolkitError):
        SkewShape((2,), (3,))
    with pytest.raises(ToolkitError):
        minor_shape((1, 2), (3,))
    with pytest.raises(ToolkitError):
        minor_shape((2, 1), (3, 4))


def test_standard_tableaux_of_a_square():
    shape = SkewShape((2, 2), (0, 0))
    fillings = list(standard_tableaux(shape))
    assert len(fillings) == 2
    assert {tableau_word(f) for f in fillings} == {(0, 1, -1, 0), (0, -1, 1, 0)}


def test_hook_length_count():
    assert len(list(standard_tableaux(SkewShape((3, 2, 1), ())))) == 16


def test_single_row_minor():
    assert syt_minor((1,), (3,), 4) == WordPoly.word(2, 1)
    assert syt_minor((2,), (5,), 4) == WordPoly.word(4, 3, 2)
    assert syt_minor((3,), (3,), 4) == WordPoly.unit()


def test_two_row_minors():
    assert syt_minor((1, 2), (2, 3), 3) == WordPoly.word(1, 2)
    assert syt_minor((1, 2), (3, 4), 3) == parse_wordpoly("w[2,1,3,2] + w[2,3,1,2]")


def test_zero_minor():
    assert is_zero_minor((2,), (1,))
    assert syt_minor((2,), (1,), 3) == WordPoly()
    with pytest.raises(ToolkitError):
        laminated_module((2,), (1,), 3)
    with pytest.raises(ToolkitError):
        syt_minor((1,), (6,), 3)


@pytest.mark.parametrize("rows,cols,n", [
    ((1,), (3,), 3),
    ((1, 2), (2, 3), 3),
    ((1, 2), (3, 4), 3),
    ((1, 3), (3, 4), 3),
    ((1, 2), (2, 4), 4),
])
def test_laminated_module_realizes_the_minor(rows, cols, n):
    x = laminated_module(rows, cols, n)
    assert check_relations(x)
    assert is_nilpotent(x)
    assert delta_expansion(x) == syt_minor(rows, cols, n)


def small_minors(max_cells=6):
    for n in range(2, 6):
        letters = range(1, n + 2)
        for k in range(1, n + 2):
            for rows in combinations(letters, k):
                for cols in combinations(letters, k):
                    if not is_zero_minor(rows, cols) and 0 < len(minor_shape(rows, cols)) <= max_cells:
                        yield rows, cols, n


@pytest.mark.slow
def test_every_small_minor_matches_its_cell_module():
    checked = 0
    for rows, cols, n in small_minors():
        assert delta_expansion(laminated_module(rows, cols, n)) == syt_minor(rows, cols, n), (rows, cols, n)
        checked += 1
    assert checked > 100
