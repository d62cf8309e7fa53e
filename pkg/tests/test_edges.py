from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from src.config import config
from src.models import CriticalReading
from src.roots import classify as rc
from src.roots.edges import critical, edge
from src.roots.lattice import window_lattice


SLICE = rc.slice_roots(1, 1, 2)


def test_real_schur_root_has_a_loop():
    for r in rc.all_base_roots()[:20]:
        assert edge(r, r)


def test_negative_pairing_means_no_edge(lattice):
    roots = rc.schur_roots_of_slope(Fraction(0))
    checked = 0
    for d, e in product(roots, repeat=2):
        if lattice.form(d, e) < 0:
            assert not edge(d, e)
            checked += 1
    assert checked


def test_critical_needs_the_rank_six_tube():
    small = rc.construct_class(Fraction(1), 1, 2) + rc.construct_class(Fraction(1), 1, 3)
    for d, e in product(small, repeat=2):
        assert not critical(d, e, CriticalReading.RELAXED)


def test_literal_reading_is_stricter(lattice):
    threes = rc.construct_class(Fraction(0), 3, 6)
    fours = rc.construct_class(Fraction(0), 4, 6)
    for d, e in product(threes, fours):
        assert not critical(d, e, CriticalReading.LITERAL)
        if critical(d, e, CriticalReading.RELAXED):
            assert lattice.form(d, e) == 0 and lattice.form(e, d) == 0


def test_critical_needs_long_enough_roots():
    ones = rc.construct_class(Fraction(0), 1, 6)
    for d, e in product(ones, repeat=2):
        assert not critical(d, e, CriticalReading.RELAXED)


def test_default_reading_comes_from_config(monkeypatch):
    threes = rc.construct_class(Fraction(0), 3, 6)
    fours = rc.construct_class(Fraction(0), 4, 6)
    monkeypatch.setattr(config, "CRITICAL_READING", "relaxed")
    relaxed = [edge(d, e) for d, e in product(threes, fours)]
    assert relaxed == [edge(d, e, CriticalReading.RELAXED) for d, e in product(threes, fours)]
    monkeypatch.setattr(config, "CRITICAL_READING", "literal")
    literal = [edge(d, e) for d, e in product(threes, fours)]
    assert literal == [edge(d, e, CriticalReading.LITERAL) for d, e in product(threes, fours)]


@given(d=st.sampled_from(SLICE), e=st.sampled_from(SLICE), reading=st.sampled_from(list(CriticalReading)))
def test_edge_is_symmetric_and_coxeter_invariant(d, e, reading):
    lat = window_lattice()
    assert edge(d, e, reading) == edge(e, d, reading) == edge(lat.apply(d), lat.apply(e), reading)


@pytest.mark.slow
def test_edge_symmetry_over_the_slice():
    lat = window_lattice()
    roots = SLICE[:60]
    for d, e in product(roots, repeat=2):
        for reading in CriticalReading:
            assert edge(d, e, reading) == edge(e, d, reading) == edge(lat.apply(d), lat.apply(e), reading)
