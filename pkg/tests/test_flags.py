import numpy as np
import pytest
from hypothesis import given, strategies as st

from src.models import ContentMismatchError, CountingMode, NotTreeBasisError, PointCountError, QuiverError
from src.quiver.core import Rep, check_relations, direct_sum, is_nilpotent, preprojective_quiver
from src.shuffle.flags import (
    coefficient_graph,
    delta_expansion,
    euler_characteristic,
    flag_count,
    flag_dimension_bound,
    is_tree_basis,
    random_string_module,
    random_tree_module,
    string_module,
)
from src.shuffle.words import WordPoly, reverse, shuffle


def test_worked_example(ex5):
    assert is_tree_basis(ex5)
    assert flag_count(ex5, (2, 1, 2, 1)) == 3
    assert euler_characteristic(ex5, (2, 1, 2, 1)) == 3
    assert flag_count(ex5, (1, 2, 1, 2)) == 1


def test_content_must_match(ex5):
    with pytest.raises(ContentMismatchError):
        flag_count(ex5, (2, 1, 2))
    with pytest.raises(ContentMismatchError):
        flag_count(ex5, (2, 1, 3, 1))


def test_fixture_modules_have_no_tree_basis(m31, m32):
    for x in (m31, m32):
        assert not is_tree_basis(x)
        with pytest.raises(NotTreeBasisError):
            flag_count(x, (2, 3, 1, 2, 3, 4))
        with pytest.raises(NotTreeBasisError):
            delta_expansion(x, CountingMode.COORDINATE)


def test_coefficient_graph(ex5):
    g = coefficient_graph(ex5)
    assert g.number_of_nodes() == 4
    assert g.number_of_edges() == 1


def test_simple_sums():
    q = preprojective_quiver(2)
    s1, s2 = Rep(q, [1, 0]), Rep(q, [0, 1])
    assert delta_expansion(direct_sum(s1, s2)) == WordPoly.word(1, 2) + WordPoly.word(2, 1)
    assert delta_expansion(direct_sum(s1, s1)) == 2 * WordPoly.word(1, 1)


def test_string_modules():
    x = string_module(2, 2, [(-1, True)])
    assert x.dims == (1, 1)
    assert delta_expansion(x) == WordPoly.word(2, 1)
    y = string_module(3, 1, [(1, True), (1, False)])
    assert y.dims == (1, 1, 1)
    assert is_tree_basis(y)
    with pytest.raises(QuiverError):
        string_module(2, 2, [(1, True)])


def test_delta_expansion_needs_nilpotent_module():
    x = Rep(preprojective_quiver(2), [1, 1], {"a1": [[1]], "a1*": [[1]]})
    with pytest.raises(QuiverError):
        delta_expansion(x)


def test_non_integral_module_cannot_be_point_counted():
    x = Rep(preprojective_quiver(2), [1, 1], {"a1": [["1/3"]]})
    with pytest.raises(PointCountError):
        euler_characteristic(x, (2, 1))


def test_dimension_bound():
    assert flag_dimension_bound((1, 2, 2, 1)) == 2
    assert flag_dimension_bound((3,)) == 3


@given(seed=st.integers(0, 10_000), n=st.sampled_from([2, 3]), size=st.integers(1, 3))
def test_point_count_matches_coordinate_count(seed, n, size):
    rng = np.random.default_rng(seed)
    x = random_tree_module(n, size, rng)
    coordinate = delta_expansion(x, CountingMode.COORDINATE)
    assert delta_expansion(x, CountingMode.POINT_COUNT) == coordinate
    assert sum(c for _, c in coordinate) > 0


@given(seed=st.integers(0, 10_000))
def test_string_module_expansion_is_a_single_flag_per_word(seed):
    x = random_string_module(3, 3, np.random.default_rng(seed))
    for word, coeff in delta_expansion(x):
        assert coeff == flag_count(x, word)


@pytest.mark.slow
def test_m32_expansion_is_the_printed_polynomial(m32, printed_polynomial):
    assert len(printed_polynomial) == 18
    assert delta_expansion(m32) == printed_polynomial


@pytest.mark.slow
def test_m31_expansion_is_the_reversed_polynomial(m31, m32, printed_polynomial):
    p31 = delta_expansion(m31)
    assert p31 == reverse(printed_polynomial)
    assert reverse(p31) == delta_expansion(m32)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_random_tree_modules_of_every_size(n):
    rng = np.random.default_rng(n)
    for size in range(1, 11):
        x = random_tree_module(n, size, rng)
        assert x.total_dim == size
        assert is_tree_basis(x)
        assert check_relations(x)
        assert is_nilpotent(x)


def test_strings_longer_than_the_quiver_do_not_exist():
    with pytest.raises(QuiverError):
        random_string_module(2, 3, np.random.default_rng(0), attempts=50)


@given(seed=st.integers(0, 10_000), n=st.sampled_from([2, 3, 4]), a=st.integers(1, 3), b=st.integers(1, 3))
def test_expansion_of_a_direct_sum_is_the_shuffle(seed, n, a, b):
    rng = np.random.default_rng(seed)
    x, y = random_tree_module(n, a, rng), random_tree_module(n, b, rng)
    assert delta_expansion(direct_sum(x, y)) == shuffle(delta_expansion(x), delta_expansion(y))


@pytest.mark.slow
def test_expansion_is_multiplicative_up_to_dimension_ten():
    rng = np.random.default_rng(50)
    for _ in range(50):
        n = int(rng.integers(2, 5))
        a = int(rng.integers(1, 6))
        b = int(rng.integers(1, 11 - a))
        x, y = random_tree_module(n, a, rng), random_tree_module(n, b, rng)
        assert delta_expansion(direct_sum(x, y)) == shuffle(delta_expansion(x), delta_expansion(y))
