import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from realsing.analysis import analyze
from realsing.errors import InvalidParameters
from realsing.milnor import (
    ALWAYS_ZERO,
    NEVER_ZERO,
    PROPOSITION_ZERO_SET,
    chi_fibre,
    chi_fibre_curve,
    closed_form_value,
    congruence,
    residue_table,
)
from realsing.seifert import family_params

from helpers import GRID

coprime_pairs = st.tuples(st.integers(2, 300), st.integers(2, 300)).filter(
    lambda t: math.gcd(*t) == 1
)


def test_chi_fibre_curve_examples():
    assert chi_fibre_curve(3, 4) == -5
    assert chi_fibre_curve(2, 3) == -1
    with pytest.raises(InvalidParameters, match="coprime"):
        chi_fibre_curve(2, 2)


def test_chi_fibre_examples():
    assert chi_fibre(3, 4, 10) == 55 == 5 * 11
    assert chi_fibre(3, 5, 2) == 2 + 15 - 3 - 5


@given(coprime_pairs)
def test_chi_fibre_a2_b1_family(pq):
    p, q = pq
    delta = p * q - p - q
    assert chi_fibre(p, q, 2 * delta) == delta * (2 * delta + 1)
    assert chi_fibre_curve(p, q) == -delta


def test_congruence_3410():
    rep = congruence(family_params(3, 4, 10), 5, -8, 55)
    assert (rep.value, rep.obstructed, rep.applicable) == (2, True, True)


def test_congruence_unobstructed_13_4():
    a = analyze(13, 4, 70)
    c = a.congruence
    assert (c.chi_resolution, c.k_squared, c.chi_fibre) == (5, -28, 35 * 71)
    assert c.value == 0 and not c.obstructed
    assert 11 - 34 - 35 * 71 == -209 * 12


@pytest.mark.parametrize("pqr", [(2, 3, 3), (3, 4, 5), (2, 5, 9)])
def test_congruence_not_applicable(pqr):
    a = analyze(*pqr)
    assert not a.congruence.applicable
    assert a.congruence.value is None and not a.congruence.obstructed


def test_congruence_rejects_fractional_k_squared():
    rep = congruence(family_params(3, 4, 10), 5, Fraction(-35, 3), 55)
    assert not rep.applicable


def test_closed_form_agreement_on_grid():
    hits = 0
    for p, q, r in GRID:
        fp = family_params(p, q, r)
        if fp.a != 2:
            continue
        c = analyze(p, q, r).congruence
        assert c.applicable
        assert c.value == (c.chi_resolution + c.k_squared - c.chi_fibre) % 12
        if fp.b == 1:
            assert c.value == closed_form_value(p, q)
            hits += 1
    assert hits > 0


def test_residue_table_matches_proposition():
    census = residue_table(200, 200)
    assert census.zero_set == PROPOSITION_ZERO_SET
    assert not census.has_mixed and census.matches_proposition()
    assert census.cells[(1, 4)] == ALWAYS_ZERO
    assert census.cells[(3, 4)] == NEVER_ZERO
    assert census.values[(3, 4)] == {2}
    assert closed_form_value(3, 4) == 2


@given(coprime_pairs)
def test_closed_form_depends_only_on_residues(pq):
    p, q = pq
    p0, q0 = p % 12 + 12, q % 12 + 12
    assert closed_form_value(p, q) == closed_form_value(p0, q0)


def test_residue_table_rejects_small_bounds():
    with pytest.raises(ValueError):
        residue_table(13, 200)
