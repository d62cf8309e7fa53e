import numpy as np
import pytest

from src.models import RootError
from src.roots.lattice import (
    H0,
    H_INF,
    QUOTIENT_DROP,
    coxeter,
    e8_gram,
    e8_norm,
    e8_quotient,
    matrix_order,
    quadratic_form,
    ringel_form,
    window_arrows,
    window_relations,
)
from src.multiseg.covering import WINDOW


def test_window_quiver():
    assert len(window_arrows()) == 12
    assert len(window_relations()) == 5


def test_coxeter_has_order_six(lattice):
    assert matrix_order(lattice.phi) == 6
    assert np.array_equal(lattice.apply(H0, 6), H0)


def test_radical_pairings(lattice):
    assert lattice.form(H0, H_INF) == 6
    assert lattice.form(H_INF, H0) == -6
    assert quadratic_form(H0) == 0
    assert quadratic_form(H_INF) == 0
    assert lattice.apply(H0) == H0
    assert lattice.apply(H_INF) == H_INF


def test_radical_is_orthogonal_for_the_symmetric_form(lattice):
    sym = lattice.e + lattice.e.T
    assert not np.any(sym @ np.array(H0))
    assert not np.any(sym @ np.array(H_INF))


def test_phi_inverse(lattice):
    d = (1, 0, 2, 3, 1, 3, 3, 1, 2, 1)
    assert lattice.apply(lattice.apply(d, 1), -1) == d
    assert lattice.form(lattice.apply(d), lattice.apply(H0)) == lattice.form(d, H0)


def test_h_ab(lattice):
    assert lattice.h_ab(1, 0) == H0
    assert lattice.h_ab(2, 1) == tuple(2 * a + b for a, b in zip(H0, H_INF))
    assert lattice.pairings(lattice.h_ab(1, 1)) == (6, 6)


def test_singular_form_rejected():
    with pytest.raises(RootError):
        coxeter(np.zeros((2, 2), dtype=np.int64))


def test_ringel_form_small():
    e = ringel_form(["x", "y"], [("x", "y")], [])
    assert e.tolist() == [[1, -1], [0, 1]]
    assert matrix_order(-np.eye(2, dtype=np.int64)) == 2


def test_e8_quotient_kills_radical():
    assert e8_quotient(H0) == (0,) * 8
    assert e8_quotient(H_INF) == (0,) * 8
    assert len(QUOTIENT_DROP) == 2
    assert WINDOW[QUOTIENT_DROP[0]] == (4, 1)
    assert e8_gram().shape == (8, 8)
    assert np.linalg.matrix_rank(e8_gram().astype(float)) == 8
    assert e8_norm(e8_quotient((1, 0, 0, 0, 0, 0, 0, 0, 0, 0))) == 2
